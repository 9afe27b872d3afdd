#pragma once

// Human-readable forms of field elements in √D coordinates:
//   text: "3+2√2", "(11+3√13)/2"
//   tex:  "3+2\sqrt{2}", "\frac{11+3\sqrt{13}}{2}"

#include <string>

#include "qpart/field.hpp"

namespace qpart {

namespace detail {

inline std::string surd_body(const Integer& A, const Integer& B, const std::string& root) {
  std::string s;
  if (sgn(A) != 0 || sgn(B) == 0) s = A.get_str();
  if (sgn(B) == 0) return s;
  if (sgn(B) < 0) {
    s += "-";
  } else if (!s.empty()) {
    s += "+";
  }
  const Integer absB = abs(B);
  if (absB != 1) s += absB.get_str();
  return s + root;
}

}  // namespace detail

enum class SurdStyle { text, tex };

inline std::string render(const QElement& e, const FieldId& f, SurdStyle style = SurdStyle::text) {
  SurdCoords c = surd_coords(e, f);
  if (c.den == 2 && mpz_even_p(c.A.get_mpz_t()) && mpz_even_p(c.B.get_mpz_t())) {
    c.A /= 2;
    c.B /= 2;
    c.den = 1;
  }
  const std::string d = std::to_string(f.D());
  if (style == SurdStyle::tex) {
    const std::string body = detail::surd_body(c.A, c.B, "\\sqrt{" + d + "}");
    return c.den == 1 ? body : "\\frac{" + body + "}{2}";
  }
  const std::string body = detail::surd_body(c.A, c.B, "√" + d);
  return c.den == 1 ? body : "(" + body + ")/2";
}

}  // namespace qpart
