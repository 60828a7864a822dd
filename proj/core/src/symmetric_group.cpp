#include "vmrank/symmetric_group.hpp"

#include <map>
#include <string>

#include "vmrank/errors.hpp"

namespace vmrank {

namespace {

void check_guard(int n, int guard, const char* what) {
  if (n < 0) throw InputError(std::string(what) + " needs a nonnegative degree");
  if (n > guard) {
    throw GuardViolation(std::string(what) + ": degree " + std::to_string(n) + " exceeds guard " +
                         std::to_string(guard));
  }
}

}  // namespace

Polynomial char_sum_lhs(const IntegerPartition& lambda, int guard) {
  const int n = lambda.size();
  check_guard(n, guard, "char_sum_lhs");
  Polynomial total;
  for (const IntegerPartition& mu : partitions_of(n, guard)) {
    const long long chi = character(lambda, mu);
    if (chi == 0) continue;
    const GaussianRational weight = GaussianRational(mpz_class(std::to_string(class_size(mu)))) * GaussianRational(chi);
    total += Polynomial::monomial(weight, mu.height());
  }
  return total;
}

Polynomial char_sum_lhs_enumerated(const IntegerPartition& lambda, int guard) {
  const int n = lambda.size();
  check_guard(n, guard, "char_sum_lhs_enumerated");
  std::map<IntegerPartition, long long> chi_of_type;
  std::vector<GaussianRational> coefficients(static_cast<std::size_t>(n) + 1);
  for (const Permutation& pi : all_permutations(n)) {
    const IntegerPartition type = cycle_type(pi);
    auto it = chi_of_type.find(type);
    if (it == chi_of_type.end()) it = chi_of_type.emplace(type, character(lambda, type)).first;
    coefficients[static_cast<std::size_t>(pi.orbit_count())] += GaussianRational(it->second);
  }
  return Polynomial(std::move(coefficients));
}

Polynomial char_sum_rhs(const IntegerPartition& lambda) {
  Polynomial product = Polynomial::constant(GaussianRational(mpz_class(std::to_string(dimension(lambda)))));
  const auto& rows = lambda.parts();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      // Cell (i+1, j+1) contributes d + (j+1) - (i+1).
      product = product * Polynomial::linear_factor(GaussianRational(static_cast<long>(i) - j));
    }
  }
  return product;
}

ExactMatrix m_matrix(int n, const GaussianRational& d, int guard) {
  check_guard(n, guard, "m_matrix");
  const auto perms = all_permutations(n);
  std::vector<GaussianRational> powers(static_cast<std::size_t>(n) + 1);
  powers[0] = 1;
  for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = powers[i - 1] * d;

  std::vector<Permutation> inverses;
  inverses.reserve(perms.size());
  for (const auto& p : perms) inverses.push_back(p.inverse());

  ExactMatrix m(perms.size(), perms.size());
  for (std::size_t r = 0; r < perms.size(); ++r) {
    for (std::size_t c = 0; c < perms.size(); ++c) {
      m(r, c) = powers[static_cast<std::size_t>((perms[r] * inverses[c]).orbit_count())];
    }
  }
  return m;
}

ExactMatrix sign_diagonal(int n, int guard) {
  check_guard(n, guard, "sign_diagonal");
  const auto perms = all_permutations(n);
  ExactMatrix m(perms.size(), perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) m(i, i) = perms[i].sign();
  return m;
}

std::size_t m_rank_formula(int n, const GaussianRational& d) {
  if (!d.is_real()) throw InputError("rank formula is only decided for real d, got " + d.to_string());
  if (n < 0) throw InputError("m_rank_formula needs n >= 0");
  const auto partitions = partitions_of(n, kDimensionGuard);
  if (!d.is_integer()) {
    std::size_t factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= static_cast<std::size_t>(i);
    return factorial;
  }
  const mpz_class magnitude = abs(d.real().get_num());
  std::size_t total = 0;
  for (const IntegerPartition& lambda : partitions) {
    if (lambda.height() > magnitude) continue;
    const std::size_t f = dimension(lambda);
    total += f * f;
  }
  return total;
}

Polynomial signed_orbit_polynomial(int k, int guard) {
  check_guard(k, guard, "signed_orbit_sum");
  std::vector<GaussianRational> coefficients(static_cast<std::size_t>(k) + 1);
  for (const Permutation& pi : all_permutations(k)) {
    coefficients[static_cast<std::size_t>(pi.orbit_count())] += GaussianRational(pi.sign());
  }
  return Polynomial(std::move(coefficients));
}

GaussianRational signed_orbit_sum(int k, const GaussianRational& d, int guard) {
  check_guard(k, guard, "signed_orbit_sum");
  std::vector<GaussianRational> powers(static_cast<std::size_t>(k) + 1);
  powers[0] = 1;
  for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = powers[i - 1] * d;
  GaussianRational total;
  for (const Permutation& pi : all_permutations(k)) {
    const GaussianRational& term = powers[static_cast<std::size_t>(pi.orbit_count())];
    if (pi.sign() > 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace vmrank
