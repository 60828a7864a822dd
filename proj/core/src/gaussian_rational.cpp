#include "vmrank/gaussian_rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "vmrank/errors.hpp"

namespace vmrank {

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty()) throw InputError("empty rational in scalar '" + std::string(whole) + "'");
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') pos = 1;
  bool seen_digit = false;
  bool seen_slash = false;
  bool digit_after_slash = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
    } else {
      throw InputError("malformed rational '" + std::string(text) + "' in scalar '" +
                       std::string(whole) + "'");
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  mpq_class value;
  if (value.set_str(digits, 10) != 0) throw InputError("malformed rational '" + digits + "'");
  if (sgn(value.get_den()) == 0) throw InputError("zero denominator in '" + digits + "'");
  value.canonicalize();
  return value;
}

// Coefficient of i: "" -> 1, "-" -> -1, "+" -> 1, "p/q*" -> p/q.
mpq_class parse_imaginary(std::string_view coeff, std::string_view whole) {
  if (coeff.empty() || coeff == "+") return 1;
  if (coeff == "-") return -1;
  if (coeff.back() == '*') coeff.remove_suffix(1);
  return parse_rational(coeff, whole);
}

}  // namespace

namespace {

bool fits_int64(const mpq_class& q) { return q.get_den() == 1 && q.get_num().fits_slong_p(); }

mpq_class to_mpq(std::int64_t v) { return mpq_class(static_cast<long>(v)); }

}  // namespace

GaussianRational::GaussianRational(const mpq_class& re, const mpq_class& im) {
  mpq_class r = re;
  mpq_class i = im;
  r.canonicalize();
  i.canonicalize();
  assign_big(std::move(r), std::move(i));
}

GaussianRational::GaussianRational(const GaussianRational& other)
    : re_(other.re_), im_(other.im_), big_(other.big_ ? std::make_unique<Big>(*other.big_) : nullptr) {}

GaussianRational& GaussianRational::operator=(const GaussianRational& other) {
  if (this == &other) return *this;
  re_ = other.re_;
  im_ = other.im_;
  if (!other.big_) {
    big_.reset();
  } else if (big_) {
    *big_ = *other.big_;
  } else {
    big_ = std::make_unique<Big>(*other.big_);
  }
  return *this;
}

GaussianRational::Big GaussianRational::as_big() const {
  if (big_) return *big_;
  return {to_mpq(re_), to_mpq(im_)};
}

void GaussianRational::assign_big(mpq_class re, mpq_class im) {
  if (fits_int64(re) && fits_int64(im)) {
    re_ = re.get_num().get_si();
    im_ = im.get_num().get_si();
    big_.reset();
    return;
  }
  re_ = 0;
  im_ = 0;
  if (big_) {
    big_->re = std::move(re);
    big_->im = std::move(im);
  } else {
    big_ = std::make_unique<Big>(Big{std::move(re), std::move(im)});
  }
}

mpq_class GaussianRational::real() const { return big_ ? big_->re : to_mpq(re_); }

mpq_class GaussianRational::imag() const { return big_ ? big_->im : to_mpq(im_); }

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::string_view s = compact;
  if (s.empty()) throw InputError("empty scalar");
  if (s.back() != 'i') return {parse_rational(s, text), 0};

  s.remove_suffix(1);
  // The split between the parts is the last sign that is not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = s.size(); p-- > 1;) {
    if (s[p] == '+' || s[p] == '-') {
      split = p;
      break;
    }
  }
  if (split == std::string_view::npos) return {0, parse_imaginary(s, text)};
  return {parse_rational(s.substr(0, split), text), parse_imaginary(s.substr(split), text)};
}

bool GaussianRational::is_integer() const {
  if (!big_) return im_ == 0;
  return sgn(big_->im) == 0 && big_->re.get_den() == 1;
}

GaussianRational GaussianRational::conj() const {
  if (!big_ && im_ != std::numeric_limits<std::int64_t>::min()) return from_parts(re_, -im_);
  const Big b = as_big();
  return {b.re, -b.im};
}

GaussianRational GaussianRational::operator-() const {
  if (!big_ && re_ != std::numeric_limits<std::int64_t>::min() && im_ != std::numeric_limits<std::int64_t>::min()) {
    return from_parts(-re_, -im_);
  }
  const Big b = as_big();
  return {-b.re, -b.im};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(i)");
  if (!big_ && im_ == 0 && (re_ == 1 || re_ == -1)) return *this;
  const Big b = as_big();
  if (sgn(b.im) == 0) return {1 / b.re, 0};
  const mpq_class norm = b.re * b.re + b.im * b.im;
  return {b.re / norm, -b.im / norm};
}

GaussianRational GaussianRational::pow(long exponent) const {
  GaussianRational base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  GaussianRational result = 1;
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::string GaussianRational::to_string() const {
  const mpq_class re = real();
  const mpq_class im = imag();
  const bool has_re = sgn(re) != 0;
  const bool has_im = sgn(im) != 0;
  if (!has_im) return re.get_str();
  std::string out;
  if (has_re) {
    out = re.get_str();
    if (sgn(im) > 0) out.push_back('+');
  }
  out += im.get_str();
  out += "*i";
  return out;
}

GaussianRational::Big& GaussianRational::promote() {
  if (!big_) big_ = std::make_unique<Big>(Big{to_mpq(re_), to_mpq(im_)});
  re_ = 0;
  im_ = 0;
  return *big_;
}

void GaussianRational::settle() {
  if (big_ && fits_int64(big_->re) && fits_int64(big_->im)) {
    re_ = big_->re.get_num().get_si();
    im_ = big_->im.get_num().get_si();
    big_.reset();
  }
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& other) {
  if (!big_ && !other.big_) {
    std::int64_t re = 0;
    std::int64_t im = 0;
    if (!__builtin_add_overflow(re_, other.re_, &re) && !__builtin_add_overflow(im_, other.im_, &im)) {
      re_ = re;
      im_ = im;
      return *this;
    }
  }
  const std::int64_t ore = other.re_;
  const std::int64_t oim = other.im_;
  Big& a = promote();
  if (other.big_) {
    a.re += other.big_->re;
    a.im += other.big_->im;
  } else {
    a.re += to_mpq(ore);
    a.im += to_mpq(oim);
  }
  settle();
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& other) {
  if (!big_ && !other.big_) {
    std::int64_t re = 0;
    std::int64_t im = 0;
    if (!__builtin_sub_overflow(re_, other.re_, &re) && !__builtin_sub_overflow(im_, other.im_, &im)) {
      re_ = re;
      im_ = im;
      return *this;
    }
  }
  const std::int64_t ore = other.re_;
  const std::int64_t oim = other.im_;
  Big& a = promote();
  if (other.big_) {
    a.re -= other.big_->re;
    a.im -= other.big_->im;
  } else {
    a.re -= to_mpq(ore);
    a.im -= to_mpq(oim);
  }
  settle();
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& other) {
  if (!big_ && !other.big_) {
    std::int64_t ac = 0;
    std::int64_t bd = 0;
    std::int64_t ad = 0;
    std::int64_t bc = 0;
    std::int64_t re = 0;
    std::int64_t im = 0;
    if (!__builtin_mul_overflow(re_, other.re_, &ac) && !__builtin_mul_overflow(im_, other.im_, &bd) &&
        !__builtin_mul_overflow(re_, other.im_, &ad) && !__builtin_mul_overflow(im_, other.re_, &bc) &&
        !__builtin_sub_overflow(ac, bd, &re) && !__builtin_add_overflow(ad, bc, &im)) {
      re_ = re;
      im_ = im;
      return *this;
    }
  }
  if (this == &other) {
    const GaussianRational copy = other;
    return *this *= copy;
  }
  const mpq_class ore = other.big_ ? other.big_->re : to_mpq(other.re_);
  const mpq_class oim = other.big_ ? other.big_->im : to_mpq(other.im_);
  Big& a = promote();
  if (sgn(oim) == 0) {
    a.re *= ore;
    a.im *= ore;
  } else if (sgn(a.im) == 0) {
    a.im = a.re * oim;
    a.re *= ore;
  } else {
    mpq_class re = a.re * ore - a.im * oim;
    a.im = a.re * oim + a.im * ore;
    a.re = std::move(re);
  }
  settle();
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& other) {
  return *this *= other.inverse();
}

bool operator==(const GaussianRational& a, const GaussianRational& b) {
  if (!a.big_ && !b.big_) return a.re_ == b.re_ && a.im_ == b.im_;
  if (a.big_ && b.big_) return a.big_->re == b.big_->re && a.big_->im == b.big_->im;
  return false;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) {
  return os << value.to_string();
}

}  // namespace vmrank
