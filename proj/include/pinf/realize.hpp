#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pinf/freealg.hpp"
#include "pinf/ratseries.hpp"
#include "pinf/skewring.hpp"

namespace pinf {

using Skew = SkewElem<LinRep>;
using SkewMatrix = std::vector<std::vector<Skew>>;

SkewMatrix skew_identity(const Domain& d, std::size_t size);
SkewMatrix skew_zero(const Domain& d, std::size_t size);
SkewMatrix operator*(const SkewMatrix& a, const SkewMatrix& b);
SkewMatrix operator+(const SkewMatrix& a, const SkewMatrix& b);

/// A homomorphism Z_n -> Z_m given by multiplication by `mult`. The tag 0
/// stands for Z; tag 1 is not allowed.
struct HomSpec {
  long n = 0;
  long m = 0;
  long mult = 0;

  /// Throws InputError unless the map is well defined and follows the
  /// conventions (1 <= mult <= m for m >= 2; mult = 0 for n >= 2, m = 0).
  void validate() const;
  /// Which of the four constructions applies (1..4).
  int construction() const;
  /// h with mult * n = h * m (first construction only).
  long h() const;
  std::string to_string() const;
};

/// mult reduced to the conventional representative for target m.
long canonical_multiplier(long mult, long m);

/// Generator matrices A_i, B_j realizing a HomSpec, with the unit E of the
/// corner they live in. Entries are skew elements over rational series.
struct GeneratorMatrices {
  HomSpec spec;
  int construction = 0;
  Domain domain;
  /// Identities are checked modulo the ideal generated by e_m (targets
  /// m >= 2) or exactly in the union of the S_n (target m = 0).
  bool quotient = false;
  std::size_t size = 0;
  /// Labels of the generators present: 0..n, or a finite sample 0..3 when the
  /// source is Z (an infinite family).
  std::vector<std::size_t> labels;
  std::vector<SkewMatrix> a;
  std::vector<SkewMatrix> b;
  SkewMatrix e;
};

/// Builds the matrices. `field` must contain the indeterminate `t_index`
/// when the first or fourth construction is used.
GeneratorMatrices build_generators(const HomSpec& spec, std::optional<Field> field = std::nullopt,
                                   int t_index = 1);
/// Swaps B_0 and B_1 (negative control).
GeneratorMatrices tampered(GeneratorMatrices g);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  bool applicable = true;
  std::string detail;
};

struct VerificationReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
  std::optional<std::string> first_failure() const;
};

/// A_i B_j = delta_ij E, sum_i B_i A_i = E (finite sources), E^2 = E and
/// E A_i E = A_i, E B_j E = B_j.
VerificationReport verify_generators(const GeneratorMatrices& g);

bool matrices_equal(const SkewMatrix& a, const SkewMatrix& b, bool quotient);

/// Certificate that I + p(A_0..A_n) is invertible, where p is an r x r
/// matrix of noncommutative polynomials in Z_0..Z_n without constant terms
/// (letter i of each polynomial stands for Z_i).
struct SigmaCertificate {
  std::size_t rows = 0;  // l * r
  SeriesMatrix matrix;
  SeriesMatrix inverse;
  bool right_identity = false;
  bool left_identity = false;
  bool ok() const { return right_identity && left_identity; }
};

SigmaCertificate spot_check_sigma_prime(const GeneratorMatrices& g,
                                        const std::vector<std::vector<FreeElem>>& p);

/// Finitely generated abelian group as a product of cyclic groups with a
/// distinguished element.
struct CyclicGroup {
  std::vector<long> cyclic;  // tags: 0 or >= 2
  std::vector<long> u;
};

struct ChainStep {
  std::size_t step = 0;
  std::string field;  // k(t1..t_{step+1})
  /// specs[j][i]: component i of G_t -> component j of G_{t+1}.
  std::vector<std::vector<HomSpec>> specs;
  /// Transition matrix rebuilt from the specs, reduced modulo the targets.
  std::vector<std::vector<long>> rebuilt;
  bool matches_transition = false;
  bool u_compatible = false;
};

struct ChainPlan {
  std::vector<CyclicGroup> groups;
  std::vector<ChainStep> steps;
  std::vector<std::string> notes;
};

/// maps[t][j][i] is the multiplier from component i of groups[t] to
/// component j of groups[t+1]. Throws InputError on illegal tags, malformed
/// maps, ill-defined components or when u is not carried to u.
ChainPlan plan_chain(const std::vector<CyclicGroup>& groups,
                     const std::vector<std::vector<std::vector<long>>>& maps);

}  // namespace pinf
