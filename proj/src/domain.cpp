#include "pinf/core/domain.hpp"

namespace pinf {

std::string format_term(const Scalar& c, const std::string& monomial, bool first) {
  std::string s = c.to_string();
  bool negative = false;
  if (s.find(' ') == std::string::npos && !s.empty() && s[0] == '-') {
    negative = true;
    s = s.substr(1);
  } else if (s.find(' ') != std::string::npos) {
    s = "(" + s + ")";
  }
  std::string body;
  if (monomial == "1")
    body = s;
  else if (s == "1")
    body = monomial;
  else
    body = s + "*" + monomial;
  if (first) return (negative ? "-" : "") + body;
  return (negative ? " - " : " + ") + body;
}

}  // namespace pinf
