#pragma once

#include "lefkit/matrix.hpp"
#include "lefkit/poly.hpp"

#include <cstddef>
#include <vector>

namespace lefkit {

/// Matrix of the degree-i apolarity pairing R_i x Q_{c-i} for a form F of
/// degree c. Row r is the operator row_labels[r]; entry (r, k) is the
/// coefficient of col_labels[k] in contract(row_labels[r], F).
struct CatMatrix {
    unsigned degree = 0;
    std::vector<Monomial> row_labels;
    std::vector<Monomial> col_labels;
    RatMatrix matrix;
};

struct HilbertFn {
    unsigned socle_degree = 0;
    std::vector<std::size_t> values;

    bool symmetric() const;
    friend bool operator==(const HilbertFn&, const HilbertFn&) = default;
};

/// One row of a Hilbert-function report.
struct DegreeRow {
    unsigned degree = 0;
    std::size_t dim_R = 0;
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
};

/// Error{ZeroPolynomial} for F = 0, Error{InvalidInput} for inhomogeneous F,
/// Error{OutOfRange} for i > deg F.
CatMatrix catalecticant(const Poly& f, unsigned i, const ApolarityWeights& weights = {});

/// Catalecticant of `f` using arbitrary row operators (each homogeneous of
/// degree i). Columns are the degree (deg f - i) monomials.
RatMatrix contraction_matrix(const std::vector<Poly>& operators, const Poly& f, unsigned i,
                             const ApolarityWeights& weights = {});

/// h_i = rank Cat_i(F), i = 0..c.
HilbertFn hilbert_function(const Poly& f, const ApolarityWeights& weights = {});

std::vector<DegreeRow> hilbert_rows(const Poly& f, const ApolarityWeights& weights = {});

/// Basis of Ann_R(F)_i from the kernel of the transposed pairing: every
/// returned operator P satisfies contract(P, F) == 0.
std::vector<Poly> annihilator_basis(const Poly& f, unsigned i, const ApolarityWeights& weights = {});

/// Gorenstein check: h_0 = h_c = 1 and h symmetric.
bool socle_check(const Poly& f, const ApolarityWeights& weights = {});

/// Degree-i monomials whose catalecticant rows are the pivots of the
/// deterministic elimination; a basis of A_i.
std::vector<Monomial> quotient_basis(const Poly& f, unsigned i, const ApolarityWeights& weights = {});

/// Largest rows * cols over all catalecticants of a degree-c form in nvars
/// variables; saturates at SIZE_MAX.
std::size_t max_catalecticant_cells(std::size_t nvars, unsigned c);

/// Validates F and returns its degree.
unsigned form_degree(const Poly& f);

} // namespace lefkit
