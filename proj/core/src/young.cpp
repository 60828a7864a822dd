#include "vmrank/young.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <gmpxx.h>

#include "vmrank/errors.hpp"

namespace vmrank {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be nonincreasing");
  }
}

int IntegerPartition::size() const {
  int n = 0;
  for (int p : parts_) n += p;
  return n;
}

std::string IntegerPartition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(parts_[i]);
  }
  out.push_back(')');
  return out;
}

IntegerPartition IntegerPartition::parse(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw InputError("malformed partition '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  if (body.empty()) return IntegerPartition(parts);
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("malformed partition '" + text + "'");
    }
    if (used != item.size()) throw InputError("malformed partition '" + text + "'");
    parts.push_back(value);
  }
  return IntegerPartition(std::move(parts));
}

std::vector<IntegerPartition> partitions_of(int n, int guard) {
  if (n < 0) throw InputError("partitions_of needs n >= 0");
  if (n > guard) throw GuardViolation("partitions of " + std::to_string(n) + " exceed guard " + std::to_string(guard));
  std::vector<IntegerPartition> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int largest) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, n, n);
  return out;
}

std::vector<std::vector<int>> hook_lengths(const IntegerPartition& lambda) {
  const auto& rows = lambda.parts();
  std::vector<std::vector<int>> hooks(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      int below = 0;
      for (std::size_t r = i + 1; r < rows.size() && rows[r] > j; ++r) ++below;
      hooks[i].push_back(rows[i] - j - 1 + below + 1);
    }
  }
  return hooks;
}

namespace {

mpz_class factorial(int n) {
  mpz_class out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

std::uint64_t to_u64(const mpz_class& value) {
  if (!value.fits_ulong_p()) throw GuardViolation("value does not fit in 64 bits");
  return value.get_ui();
}

}  // namespace

std::uint64_t dimension(const IntegerPartition& lambda, int guard) {
  const int n = lambda.size();
  if (n > guard) throw GuardViolation("dimension of a partition of " + std::to_string(n) + " exceeds guard");
  mpz_class hooks = 1;
  for (const auto& row : hook_lengths(lambda)) {
    for (int h : row) hooks *= h;
  }
  return to_u64(factorial(n) / hooks);
}

std::uint64_t rectangular_dimension(int d, int m, int guard) {
  if (d < 1 || m < 1) throw InputError("rectangular_dimension needs d, m >= 1");
  if (d * m > guard) throw GuardViolation("rectangle with " + std::to_string(d * m) + " cells exceeds guard");
  mpz_class p = 1;
  for (int i = 0; i < d; ++i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + i), static_cast<unsigned long>(i));
    p *= binom;
  }
  mpz_class denominator = p;
  const mpz_class m_factorial = factorial(m);
  for (int i = 0; i < d; ++i) denominator *= m_factorial;
  return to_u64(factorial(d * m) / denominator);
}

namespace {

// Beta-set form of a shape with `length` slots: beta_i = lambda_i + length-1-i.
std::vector<int> beta_set(const std::vector<int>& parts, std::size_t length) {
  std::vector<int> beta(length);
  for (std::size_t i = 0; i < length; ++i) {
    const int part = i < parts.size() ? parts[i] : 0;
    beta[i] = part + static_cast<int>(length - 1 - i);
  }
  return beta;
}

std::vector<int> parts_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  std::vector<int> parts;
  const std::size_t length = beta.size();
  for (std::size_t i = 0; i < length; ++i) {
    const int part = beta[i] - static_cast<int>(length - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

class MurnaghanNakayama {
 public:
  explicit MurnaghanNakayama(std::vector<int> cycles) : cycles_(std::move(cycles)) {}

  // chi of `parts` on the cycles from position `next` onwards.
  long long evaluate(const std::vector<int>& parts, std::size_t next) {
    if (next == cycles_.size()) return parts.empty() ? 1 : 0;
    auto key = std::make_pair(parts, next);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Removing a rim hook of length r moves one bead of the beta set down by r
    // to an empty position; the sign counts the beads jumped over.
    const int r = cycles_[next];
    const std::vector<int> beta = beta_set(parts, parts.size());
    long long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int target = beta[i] - r;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int jumped = 0;
      for (int b : beta) jumped += (b > target && b < beta[i]);
      std::vector<int> moved = beta;
      moved[i] = target;
      const long long sub = evaluate(parts_from_beta(std::move(moved)), next + 1);
      total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::vector<int> cycles_;
  std::map<std::pair<std::vector<int>, std::size_t>, long long> memo_;
};

}  // namespace

long long character(const IntegerPartition& lambda, const IntegerPartition& cycle_type) {
  if (lambda.size() != cycle_type.size()) {
    throw InputError("character: shape " + lambda.to_string() + " and cycle type " + cycle_type.to_string() +
                     " have different sizes");
  }
  MurnaghanNakayama rule(cycle_type.parts());
  return rule.evaluate(lambda.parts(), 0);
}

IntegerPartition cycle_type(const Permutation& pi) { return IntegerPartition(pi.cycle_lengths()); }

std::uint64_t class_size(const IntegerPartition& cycle_type) {
  const int n = cycle_type.size();
  if (n > kDimensionGuard) throw GuardViolation("class size above the dimension guard");
  std::map<int, int> multiplicity;
  for (int part : cycle_type.parts()) ++multiplicity[part];
  mpz_class centralizer = 1;
  for (const auto& [length, count] : multiplicity) {
    for (int i = 0; i < count; ++i) centralizer *= length;
    centralizer *= factorial(count);
  }
  return to_u64(factorial(n) / centralizer);
}

int orbit_count(const Permutation& pi) { return pi.orbit_count(); }

int sign(const Permutation& pi) { return pi.sign(); }

}  // namespace vmrank
