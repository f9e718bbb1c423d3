#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grecip/rational.hpp"

namespace grecip {

// Univariate polynomial over the rationals, coefficients constant term first.
// Trailing zero coefficients are trimmed, so the zero polynomial has no
// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int k) const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;
  Rational operator()(std::int64_t x) const { return (*this)(Rational(x)); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human-readable form in the variable `var`, highest degree first,
  // e.g. "1/2*t^2 - 4*t + 10".
  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// The unique polynomial of degree < points.size() through the given nodes
// (exact Lagrange interpolation). Nodes must have distinct abscissae.
Polynomial lagrange_interpolate(
    std::span<const std::pair<Rational, Rational>> points);

}  // namespace grecip
