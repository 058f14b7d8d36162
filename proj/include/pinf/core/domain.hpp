#pragma once

#include <algorithm>
#include <cstddef>
#include <string>

#include "pinf/core/error.hpp"
#include "pinf/core/scalar.hpp"

namespace pinf {

/// Where series and skew elements live: the coefficient field and the
/// number of X letters (equal to the number of Y letters). A dynamic domain
/// grows on demand; elements of different sizes are then widened to the
/// larger alphabet. Letters are always indexed from 0 here.
struct Domain {
  Field field;
  std::size_t letters = 1;
  bool dynamic = false;
  /// Truncation precision used by approximate backends.
  int precision = 16;

  static Domain join(const Domain& a, const Domain& b) {
    if (!(a.field == b.field)) throw Mismatch("field mismatch: " + a.field.name() + " vs " + b.field.name());
    if (a.letters != b.letters && !a.dynamic && !b.dynamic)
      throw Mismatch("alphabet size mismatch: " + std::to_string(a.letters) + " vs " +
                     std::to_string(b.letters));
    Domain d = a;
    d.letters = std::max(a.letters, b.letters);
    d.dynamic = a.dynamic || b.dynamic;
    d.precision = std::min(a.precision, b.precision);
    return d;
  }

  /// Domain able to hold letter index l.
  Domain covering(std::size_t l) const {
    if (l < letters) return *this;
    if (!dynamic) throw InputError("letter index " + std::to_string(l) + " outside alphabet of size " +
                                   std::to_string(letters));
    Domain d = *this;
    d.letters = l + 1;
    return d;
  }

  bool operator==(const Domain& o) const {
    return field == o.field && letters == o.letters && dynamic == o.dynamic;
  }
};

/// Renders c*monomial as a summand; `first` suppresses the leading " + ".
/// A monomial of "1" stands for the empty word.
std::string format_term(const Scalar& c, const std::string& monomial, bool first);

}  // namespace pinf
