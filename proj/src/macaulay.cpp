#include "lefkit/macaulay.hpp"

#include "lefkit/error.hpp"
#include "lefkit/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace lefkit {

bool HilbertFn::symmetric() const {
    for (std::size_t i = 0, j = values.size(); i < j; ++i, --j)
        if (values[i] != values[j - 1]) return false;
    return true;
}

unsigned form_degree(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "F must be nonzero");
    const auto c = f.homogeneous_degree();
    if (!c) throw Error(ErrorKind::InvalidInput, "F must be homogeneous");
    return *c;
}

namespace {

std::map<Monomial, std::size_t, GradedLex> column_index(const std::vector<Monomial>& cols) {
    std::map<Monomial, std::size_t, GradedLex> index;
    for (std::size_t k = 0; k < cols.size(); ++k) index.emplace(cols[k], k);
    return index;
}

} // namespace

RatMatrix contraction_matrix(const std::vector<Poly>& operators, const Poly& f, unsigned i,
                             const ApolarityWeights& weights) {
    const unsigned c = form_degree(f);
    if (i > c) throw Error(ErrorKind::OutOfRange, "degree " + std::to_string(i) + " exceeds socle degree " + std::to_string(c));
    validate_weights(weights, f.nvars());
    const auto cols = monomials_of_degree(f.nvars(), c - i);
    const auto index = column_index(cols);
    std::vector<Rational> data(operators.size() * cols.size());
    for (std::size_t r = 0; r < operators.size(); ++r) {
        const Poly image = contract(operators[r], f, weights);
        for (const auto& [m, coeff] : image.terms()) {
            const auto it = index.find(m);
            if (it == index.end()) throw Error(ErrorKind::InvalidInput, "operator is not homogeneous of degree " + std::to_string(i));
            data[r * cols.size() + it->second] = coeff;
        }
    }
    return RatMatrix(operators.size(), cols.size(), std::move(data));
}

CatMatrix catalecticant(const Poly& f, unsigned i, const ApolarityWeights& weights) {
    const unsigned c = form_degree(f);
    if (i > c) throw Error(ErrorKind::OutOfRange, "degree " + std::to_string(i) + " exceeds socle degree " + std::to_string(c));
    validate_weights(weights, f.nvars());
    CatMatrix out;
    out.degree = i;
    out.row_labels = monomials_of_degree(f.nvars(), i);
    out.col_labels = monomials_of_degree(f.nvars(), c - i);
    const auto index = column_index(out.col_labels);
    std::vector<Rational> data(out.row_labels.size() * out.col_labels.size());
    for (std::size_t r = 0; r < out.row_labels.size(); ++r) {
        const Monomial& op = out.row_labels[r];
        for (const auto& [m, coeff] : f.terms()) {
            if (auto hit = contract_monomial(op, m, weights))
                data[r * out.col_labels.size() + index.at(hit->first)] += hit->second * coeff;
        }
    }
    out.matrix = RatMatrix(out.row_labels.size(), out.col_labels.size(), std::move(data));
    return out;
}

HilbertFn hilbert_function(const Poly& f, const ApolarityWeights& weights) {
    HilbertFn h;
    h.socle_degree = form_degree(f);
    for (unsigned i = 0; i <= h.socle_degree; ++i) h.values.push_back(mat_rank(catalecticant(f, i, weights).matrix));
    return h;
}

std::vector<DegreeRow> hilbert_rows(const Poly& f, const ApolarityWeights& weights) {
    const unsigned c = form_degree(f);
    std::vector<DegreeRow> rows;
    for (unsigned i = 0; i <= c; ++i) {
        const CatMatrix cat = catalecticant(f, i, weights);
        const std::size_t rank = mat_rank(cat.matrix);
        rows.push_back({i, cat.row_labels.size(), rank, cat.row_labels.size() - rank});
    }
    return rows;
}

std::vector<Poly> annihilator_basis(const Poly& f, unsigned i, const ApolarityWeights& weights) {
    const CatMatrix cat = catalecticant(f, i, weights);
    // P = sum v_r row_r kills F iff v^T Cat = 0, i.e. v in ker(Cat^T).
    const auto kernel = mat_kernel(cat.matrix.transposed());
    std::vector<Poly> basis;
    basis.reserve(kernel.size());
    for (const auto& v : kernel) {
        Poly p(f.nvars());
        for (std::size_t r = 0; r < v.size(); ++r) p.add_term(cat.row_labels[r], v[r]);
        basis.push_back(std::move(p));
    }
    return basis;
}

bool socle_check(const Poly& f, const ApolarityWeights& weights) {
    const HilbertFn h = hilbert_function(f, weights);
    return h.values.front() == 1 && h.values.back() == 1 && h.symmetric();
}

std::vector<Monomial> quotient_basis(const Poly& f, unsigned i, const ApolarityWeights& weights) {
    const CatMatrix cat = catalecticant(f, i, weights);
    Elimination e = fraction_free_eliminate(cat.matrix);
    std::sort(e.pivot_rows.begin(), e.pivot_rows.end());
    std::vector<Monomial> basis;
    for (std::size_t r : e.pivot_rows) basis.push_back(cat.row_labels[r]);
    return basis;
}

std::size_t max_catalecticant_cells(std::size_t nvars, unsigned c) {
    constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
    std::size_t best = 0;
    for (unsigned i = 0; i <= c; ++i) {
        const std::size_t r = monomial_count(nvars, i);
        const std::size_t k = monomial_count(nvars, c - i);
        if (r != 0 && k > kMax / r) return kMax;
        best = std::max(best, r * k);
    }
    return best;
}

} // namespace lefkit
