#pragma once

#include <cstddef>

#include "vmrank/exact_matrix.hpp"
#include "vmrank/gaussian_rational.hpp"
#include "vmrank/polynomial.hpp"
#include "vmrank/young.hpp"

namespace vmrank {

inline constexpr int kCharSumGuard = 7;
inline constexpr int kMatrixGuard = 5;
inline constexpr int kSignedSumGuard = 8;

// sum over pi in S_n of chi_lambda(pi) d^{o(pi)}, grouped by cycle type.
Polynomial char_sum_lhs(const IntegerPartition& lambda, int guard = kCharSumGuard);
// The same sum by walking every permutation of S_n.
Polynomial char_sum_lhs_enumerated(const IntegerPartition& lambda, int guard = kCharSumGuard);
// f^lambda times the product over cells (i, j) of (d + j - i).
Polynomial char_sum_rhs(const IntegerPartition& lambda);

// M_n(d)[rho, sigma] = d^{o(rho sigma^-1)}, rows and columns in
// all_permutations(n) order. GuardViolation for n above the guard.
ExactMatrix m_matrix(int n, const GaussianRational& d, int guard = kMatrixGuard);

// Diagonal matrix of permutation signs in all_permutations(n) order.
ExactMatrix sign_diagonal(int n, int guard = kMatrixGuard);

// Predicted rank of M_n(d): n! for non-integer d, otherwise the sum of
// (f^lambda)^2 over lambda |- n with height <= |d|. Throws InputError for
// non-real d.
std::size_t m_rank_formula(int n, const GaussianRational& d);

// sum over pi in S_k of sgn(pi) d^{o(pi)}.
GaussianRational signed_orbit_sum(int k, const GaussianRational& d, int guard = kSignedSumGuard);
// The same sum as a polynomial in d.
Polynomial signed_orbit_polynomial(int k, int guard = kSignedSumGuard);

}  // namespace vmrank
