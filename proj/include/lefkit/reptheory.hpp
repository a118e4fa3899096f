#pragma once

#include "lefkit/macaulay.hpp"
#include "lefkit/rational.hpp"

#include <cstddef>
#include <vector>

namespace lefkit {

/// Highest weight of gl_n: a weakly decreasing integer tuple.
struct Weight {
    std::vector<long> entries;

    bool dominant() const;
    Weight shifted(long by) const;
};

/// Exponents (k_1, ..., k_r) of the highest weight k_1 λ_1 + ... + k_r λ_r.
struct ExponentTuple {
    std::vector<unsigned> k;

    unsigned total() const;
    /// k_1 + 2 k_2 + ... + r k_r: the polynomial degree of the summand.
    unsigned graded_degree() const;
};

/// Weyl dimension formula: prod_{i<j} (λ_i - λ_j + j - i) / (j - i).
/// Error{NotDominant} unless weakly decreasing.
Integer weyl_dim_gl(const Weight& lambda);

/// N(n, k) = C(n, k) C(n, k-1) / n, for 1 <= k <= n (Error{OutOfRange} otherwise).
Integer narayana(unsigned n, unsigned k);

/// (N(n+1, 1), ..., N(n+1, n+1)), the Hilbert function of R/Ann(det Sym_n).
HilbertFn narayana_hilbert(unsigned n);

/// prod_{i=0}^{r-1} prod_{l=0}^{k_{i+1}+...+k_r - 1} (i d / 2 + s - l).
/// Empty products are 1.
Rational q_mu(const ExponentTuple& k, const Rational& s, const Rational& d);

/// Type C weight of sum k_i λ_i with λ_i = (0, ..., 0, -2, ..., -2) (i trailing
/// -2's): entry p is -2 (k_{n-p+1} + ... + k_n).
Weight typeC_weight(const ExponentTuple& k);

/// Hilbert function of R/Ann(det Sym_n ^ s) predicted from the summands
/// with k_1 + ... + k_n <= s. Error{TooLarge} past `max_tuples` summands.
HilbertFn predicted_hilbert_typeC(unsigned n, unsigned s, std::size_t max_tuples = 10'000'000);

/// Every tuple of length r with entries summing to at most `bound`, in
/// lexicographic order.
std::vector<ExponentTuple> exponent_tuples(unsigned r, unsigned bound);

} // namespace lefkit
