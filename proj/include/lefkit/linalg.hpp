#pragma once

#include "lefkit/matrix.hpp"

#include <cstdint>
#include <vector>

namespace lefkit {

/// Outcome of fraction-free (Bareiss) elimination on a row-scaled integer copy
/// of a rational matrix.
struct Elimination {
    std::size_t rank = 0;
    /// Original row index chosen as pivot at each step; these rows form a
    /// basis of the row space.
    std::vector<std::size_t> pivot_rows;
    std::vector<std::size_t> pivot_cols;
    /// Bareiss pivots (leading minors of the permuted integer matrix).
    std::vector<Integer> pivots;
};

/// Bareiss elimination. Pivot: shortest nonzero entry of the current column
/// among unused rows, ties to the lowest row index.
Elimination fraction_free_eliminate(const RatMatrix& m);

/// Exact rank. A modular probe at `default_probe_prime()` settles the
/// full-rank case; anything else is decided by fraction-free elimination.
std::size_t mat_rank(const RatMatrix& m);

/// Exact rank when the caller knows rank(m) <= upper_bound: a probe that
/// reaches the bound settles it, otherwise elimination decides.
std::size_t mat_rank(const RatMatrix& m, std::size_t upper_bound);

/// Exact rank by elimination only, with no probe.
std::size_t exact_rank(const RatMatrix& m);

/// Rank of `m` reduced modulo `prime`. A lower bound for the exact rank.
/// Throws Error{BadPrime} if `prime` is not prime or divides a denominator.
std::size_t mat_rank_modular_probe(const RatMatrix& m, std::uint64_t prime);

/// Basis of the right kernel, one vector per free column in increasing
/// column order; the free coordinate is 1.
std::vector<std::vector<Rational>> mat_kernel(const RatMatrix& m);

/// Determinant of a square matrix. Throws Error{InvalidInput} otherwise.
Rational mat_det(const RatMatrix& m);

/// Largest prime below 2^62.
std::uint64_t default_probe_prime();

bool is_prime_u64(std::uint64_t n);

} // namespace lefkit
