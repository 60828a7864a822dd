#pragma once

#include <string>
#include <vector>

#include "vmrank/gaussian_rational.hpp"

namespace vmrank {

/// Polynomial in one variable d over Q(i); coefficient i multiplies d^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coefficients);

  static Polynomial constant(GaussianRational c);
  static Polynomial monomial(GaussianRational c, int degree);
  // d - root
  static Polynomial linear_factor(const GaussianRational& root);

  const std::vector<GaussianRational>& coefficients() const { return coefficients_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  GaussianRational coefficient(int power) const;

  GaussianRational evaluate(const GaussianRational& d) const;

  // e.g. "d^3+3*d^2+2*d"; "0" for the zero polynomial.
  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<GaussianRational> coefficients_;
};

}  // namespace vmrank
