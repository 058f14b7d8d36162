#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "pinf/freealg.hpp"
#include "pinf/leavitt.hpp"
#include "pinf/ratseries.hpp"
#include "pinf/skewring.hpp"
#include "pinf/truncseries.hpp"

namespace pinf {

/// Seeded generators for property tests and the self-test suites.
class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

  /// Small scalars: a/b in Q, uniform in F_p, (a + b t_1)/(c + d t_1) in Q(t).
  Scalar scalar(const Field& f, bool nonzero = false);
  Word word(std::size_t letters, std::size_t max_len, std::size_t min_len = 0);
  FreeElem polynomial(const Domain& d, std::size_t max_terms, std::size_t max_len, bool zero_constant = false);
  /// Random (reduced) linear representation of dimension at most max_dim with
  /// sparse entries.
  LinRep series(const Domain& d, std::size_t max_dim, double density = 0.4);
  LinRep nonzero_series(const Domain& d, std::size_t max_dim, double density = 0.4);
  /// sum_I y_I r_I with |I| <= max_y_degree.
  SkewElem<LinRep> skew(const Domain& d, std::size_t max_terms, std::size_t max_y_degree, std::size_t max_dim);
  UElem uelem(const Field& f, std::size_t n, std::size_t max_terms, std::size_t max_degree, bool dynamic = false);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Random expression over series: leaves are letters and scalars, inner
/// nodes are +, *, inversion of 1 - (proper part) and transduction.
struct SeriesTree {
  enum class Kind { Letter, Scalar, Add, Mul, Invert, Transduce };
  Kind kind = Kind::Scalar;
  Letter letter = 0;
  Scalar value;
  std::vector<std::shared_ptr<SeriesTree>> kids;

  static std::shared_ptr<SeriesTree> random(Random& r, const Domain& d, int depth);
  LinRep exact(const Domain& d) const;
  /// Evaluates with enough precision that the result is known on every word
  /// shorter than `precision`.
  TruncSeries truncated(const Domain& d, int precision) const;
  std::string to_string() const;
};

}  // namespace pinf
