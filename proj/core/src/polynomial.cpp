#include "vmrank/polynomial.hpp"

namespace vmrank {

Polynomial::Polynomial(std::vector<GaussianRational> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(GaussianRational c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::monomial(GaussianRational c, int degree) {
  std::vector<GaussianRational> coefficients(static_cast<std::size_t>(degree) + 1);
  coefficients.back() = std::move(c);
  return Polynomial(std::move(coefficients));
}

Polynomial Polynomial::linear_factor(const GaussianRational& root) { return Polynomial({-root, 1}); }

GaussianRational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(power)];
}

GaussianRational Polynomial::evaluate(const GaussianRational& d) const {
  GaussianRational out;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    out *= d;
    out += coefficients_[i];
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const GaussianRational& c = coefficients_[i];
    if (c.is_zero()) continue;
    std::string term;
    const bool plain_real = c.is_real();
    if (i == 0) {
      term = plain_real ? c.to_string() : "(" + c.to_string() + ")";
    } else {
      if (c == GaussianRational(1)) {
        term = "";
      } else if (c == GaussianRational(-1)) {
        term = "-";
      } else {
        term = (plain_real ? c.to_string() : "(" + c.to_string() + ")") + "*";
      }
      term += i == 1 ? "d" : "d^" + std::to_string(i);
    }
    if (!out.empty() && term.front() != '-') out.push_back('+');
    out += term;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coefficients_.empty() || b.coefficients_.empty()) return {};
  std::vector<GaussianRational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return Polynomial(std::move(out));
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

}  // namespace vmrank
