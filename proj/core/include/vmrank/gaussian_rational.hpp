#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace vmrank {

/// Exact element a + b*i of the Gaussian rationals Q(i).
///
/// Gaussian integers whose parts fit in 64 bits are held inline and use
/// checked machine arithmetic; every other value lives in a pair of GMP
/// rationals in lowest terms. A value is inline whenever it can be, so
/// equality stays structural. Values serialize as "p/q+r/s*i" (parts
/// omitted when zero, "0" for zero).
class GaussianRational {
 public:
  GaussianRational() = default;

  template <std::integral T>
  GaussianRational(T value)  // NOLINT(google-explicit-constructor)
      : re_(static_cast<std::int64_t>(value)) {}

  GaussianRational(const mpq_class& re, const mpq_class& im = 0);  // NOLINT(google-explicit-constructor)

  GaussianRational(const GaussianRational& other);
  GaussianRational(GaussianRational&&) noexcept = default;
  GaussianRational& operator=(const GaussianRational& other);
  GaussianRational& operator=(GaussianRational&&) noexcept = default;
  ~GaussianRational() = default;

  static GaussianRational imaginary_unit() { return from_parts(0, 1); }

  // Accepts the serialized form plus the shorthands "i", "-i", "2+i".
  // Throws InputError on anything else.
  static GaussianRational parse(std::string_view text);

  mpq_class real() const;
  mpq_class imag() const;

  bool is_zero() const { return !big_ && re_ == 0 && im_ == 0; }
  bool is_one() const { return !big_ && re_ == 1 && im_ == 0; }
  bool is_real() const { return big_ ? sgn(big_->im) == 0 : im_ == 0; }
  // Real with denominator 1.
  bool is_integer() const;

  GaussianRational conj() const;

  // Throws std::domain_error for zero.
  GaussianRational inverse() const;

  // Negative exponents invert first (and so throw on zero).
  GaussianRational pow(long exponent) const;

  std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& other);
  GaussianRational& operator-=(const GaussianRational& other);
  GaussianRational& operator*=(const GaussianRational& other);
  GaussianRational& operator/=(const GaussianRational& other);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const;

  friend bool operator==(const GaussianRational& a, const GaussianRational& b);

 private:
  struct Big {
    mpq_class re;
    mpq_class im;
  };

  static GaussianRational from_parts(std::int64_t re, std::int64_t im) {
    GaussianRational out;
    out.re_ = re;
    out.im_ = im;
    return out;
  }

  Big as_big() const;
  void assign_big(mpq_class re, mpq_class im);
  // Switches to the GMP representation in place.
  Big& promote();
  // Returns to the inline representation when the value allows it.
  void settle();

  std::int64_t re_ = 0;
  std::int64_t im_ = 0;
  std::unique_ptr<Big> big_;  // set iff the value is not a 64-bit Gaussian integer
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

}  // namespace vmrank
