#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pinf {

using IntVector = std::vector<long>;

/// Finitely presented commutative monoid <g_1..g_k | a_r = b_r>.
struct MonoidPresentation {
  std::vector<std::string> generators;
  std::vector<std::pair<IntVector, IntVector>> relations;

  /// Parses "I | 3I = I" or "I, P | I = 2I + P; ..." (relations separated by
  /// ',' or ';'). Each side is a sum of terms like "3I", "3*I", "I" or "0".
  static MonoidPresentation parse(const std::string& text);

  /// Sorts relations (and each relation's sides) lexicographically.
  void canonicalize();
  std::string to_string() const;
};

/// Finitely generated abelian group Z/d_1 x ... x Z/d_r with d_i | d_{i+1};
/// free factors appear as d = 0 at the end. Generator images are given in
/// these coordinates, reduced modulo each d_i.
struct AbGroup {
  std::vector<mpz_class> invariant_factors;
  std::vector<std::vector<mpz_class>> images;  // one coordinate vector per generator

  bool is_finite() const;
  /// Order of the group; 0 for infinite groups.
  mpz_class order() const;
  /// Reduces a coordinate vector modulo the invariant factors.
  std::vector<mpz_class> reduce(std::vector<mpz_class> v) const;
  std::string to_string() const;
};

/// Invariant factors of Z^cols / (row lattice of `relations`), together with
/// the images of the standard basis vectors.
AbGroup abelian_quotient(const std::vector<IntVector>& relations, std::size_t cols);

/// K_0 of the monoid: Z^k modulo the differences of the relation sides.
AbGroup grothendieck_group(const MonoidPresentation& p);

/// Elements as normal forms under the oriented rewrite rules, with the
/// addition table. `overflow` is set once more than `bound` elements appear.
struct MonoidTable {
  std::vector<IntVector> elements;  // elements[0] is 0
  std::vector<std::vector<std::size_t>> add;
  bool overflow = false;
};

/// Enumerates a presentation whose rewrite system (larger side -> smaller side
/// by degree, then lexicographically) is confluent. That holds for a single
/// relation; several relations are refused unless `assert_confluent` is set.
MonoidTable monoid_enumerate(const MonoidPresentation& p, std::size_t bound, bool assert_confluent = false);

struct MonoidShapeReport {
  bool overflow = false;
  std::size_t elements = 0;
  std::optional<bool> conical;
  std::optional<bool> simple;
  std::optional<bool> nonzero_group;
  /// The nonzero part matches K_0 through the generator images.
  std::optional<bool> matches_k0;
  AbGroup k0;
  std::vector<std::string> notes;

  std::string shape() const;
};

MonoidShapeReport analyze_pisr_shape(const MonoidPresentation& p, std::size_t bound,
                                     bool assert_confluent = false);

}  // namespace pinf
