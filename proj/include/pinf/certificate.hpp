#pragma once

#include <string>

#include "pinf/json.hpp"

namespace pinf {

/// Certificates {kind, field, n, alpha, beta, gamma, product, check} state
/// that beta * alpha * gamma equals `check` in the algebra named by kind:
///   "T"     S_n / (e) over rational series, letters from 0
///   "V"     V_{1,n} = U_{1,n} / (e_n), letters from 1
///   "U_inf" the union of the U_{1,n}, exact equality
/// `product` is the class of the product as computed when the certificate
/// was issued. Terms are expression strings; T certificates may carry a
/// skew element object where a coefficient has no polynomial form.
Json t_certificate(const std::string& alpha, const Domain& d);
Json v_certificate(const std::string& alpha, const Field& f, std::size_t n);
Json uinf_certificate(const std::string& alpha, const Field& f, std::size_t n);

struct CertificateCheck {
  bool valid = false;
  std::string kind;
  std::string detail;
};

/// Recomputes the product from alpha, beta and gamma and compares it with
/// both `check` and `product`. Never throws for malformed input; reports it.
CertificateCheck verify_certificate(const Json& cert);

}  // namespace pinf
