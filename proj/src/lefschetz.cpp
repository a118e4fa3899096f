#include "lefkit/lefschetz.hpp"

#include "lefkit/error.hpp"
#include "lefkit/linalg.hpp"

#include <random>

namespace lefkit {

namespace {

void require_linear(const Poly& f, const Poly& linear) {
    if (linear.nvars() != f.nvars())
        throw Error(ErrorKind::VarMismatch, "L has " + std::to_string(linear.nvars()) + " variables, F has " +
                                                std::to_string(f.nvars()));
    if (linear.homogeneous_degree() != 1u)
        throw Error(ErrorKind::NotLinear, "L must be a nonzero homogeneous linear form");
}

std::vector<Poly> monomial_operators(const std::vector<Monomial>& monomials) {
    std::vector<Poly> ops;
    ops.reserve(monomials.size());
    for (const auto& m : monomials) ops.push_back(Poly::monomial(m));
    return ops;
}

} // namespace

SlpReport slp_check(const Poly& f, const Poly& linear, const ApolarityWeights& weights) {
    form_degree(f);
    require_linear(f, linear);
    return slp_check(f, hilbert_function(f, weights), linear, weights);
}

SlpReport slp_check(const Poly& f, const HilbertFn& hilbert, const Poly& linear, const ApolarityWeights& weights) {
    const unsigned c = form_degree(f);
    require_linear(f, linear);
    validate_weights(weights, f.nvars());
    if (hilbert.socle_degree != c || hilbert.values.size() != c + 1)
        throw Error(ErrorKind::InvalidInput, "Hilbert function does not belong to F");

    SlpReport report;
    report.lefschetz = linear;
    report.socle_degree = c;
    report.verdict = true;
    for (unsigned i = 0; 2 * i <= c; ++i) {
        SlpRow row;
        row.i = i;
        row.required = hilbert.values[i];
        // contract(L^{c-2i} m, F) = contract(m, G) with G = contract(L^{c-2i}, F) of degree 2i.
        // The map factors through A_i, so its rank is at most h_i.
        const Poly g = contract(poly_pow(linear, c - 2 * i), f, weights);
        row.achieved = g.is_zero() ? 0 : mat_rank(catalecticant(g, i, weights).matrix, row.required);
        if (row.achieved > row.required) throw std::logic_error("Lefschetz map rank exceeds dim A_i");
        row.pass = row.achieved == row.required;
        report.verdict = report.verdict && row.pass;
        report.rows.push_back(row);
    }
    return report;
}

PolyMatrix higher_hessian(const Poly& f, unsigned i, const std::vector<Poly>& basis, const ApolarityWeights& weights) {
    const unsigned c = form_degree(f);
    if (2 * i > c) throw Error(ErrorKind::OutOfRange, "higher Hessians are defined for i <= c/2");
    for (const auto& b : basis) {
        if (b.nvars() != f.nvars()) throw Error(ErrorKind::VarMismatch, "basis element lives in another ring");
        if (b.homogeneous_degree() != i) throw Error(ErrorKind::BadBasis, "basis elements must be nonzero of degree i");
    }
    const std::size_t h = mat_rank(catalecticant(f, i, weights).matrix);
    if (basis.size() != h || mat_rank(contraction_matrix(basis, f, i, weights)) != h)
        throw Error(ErrorKind::BadBasis, "representatives do not form a basis of A_" + std::to_string(i));

    PolyMatrix out(basis.size(), std::vector<Poly>(basis.size(), Poly(f.nvars())));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t k = j; k < basis.size(); ++k) {
            out[j][k] = contract(poly_mul(basis[j], basis[k]), f, weights);
            out[k][j] = out[j][k];
        }
    }
    return out;
}

PolyMatrix higher_hessian(const Poly& f, unsigned i, const ApolarityWeights& weights) {
    return higher_hessian(f, i, monomial_operators(quotient_basis(f, i, weights)), weights);
}

std::vector<Rational> dual_point(const Poly& linear, const ApolarityWeights& weights) {
    std::vector<Rational> point(linear.nvars());
    for (const auto& [m, c] : linear.terms()) {
        for (std::size_t v = 0; v < m.nvars(); ++v)
            if (m[v] == 1) point[v] = weights.empty() ? c : c * weights[v];
    }
    return point;
}

std::vector<Rational> hessian_determinants_at(const Poly& f, const Poly& linear, const ApolarityWeights& weights) {
    const unsigned c = form_degree(f);
    require_linear(f, linear);
    validate_weights(weights, f.nvars());
    const std::vector<Rational> point = dual_point(linear, weights);
    std::vector<Rational> dets;
    for (unsigned i = 0; 2 * i <= c; ++i) {
        const PolyMatrix hess = higher_hessian(f, i, weights);
        const std::size_t n = hess.size();
        std::vector<Rational> values(n * n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) values[j * n + k] = hess[j][k].evaluate(point);
        dets.push_back(mat_det(RatMatrix(n, n, std::move(values))));
    }
    return dets;
}

bool hessian_criterion_at(const Poly& f, const Poly& linear, const ApolarityWeights& weights) {
    for (const auto& d : hessian_determinants_at(f, linear, weights))
        if (d == 0) return false;
    return true;
}

std::vector<Poly> random_linear_forms(const FamilySpec& spec, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<Poly> out;
    out.reserve(count);
    while (out.size() < count) {
        Poly l(spec.nvars());
        for (std::size_t v = 0; v < spec.nvars(); ++v) l.add_term(Monomial::variable(spec.nvars(), v), coeff(rng));
        if (!l.is_zero()) out.push_back(std::move(l));
    }
    return out;
}

std::vector<Poly> rank_deficient_candidates(const FamilySpec& spec) {
    std::vector<Poly> out;
    if (spec.kind() == FamilyKind::Quadric) return out;
    const unsigned n = spec.size();
    const std::size_t nv = spec.nvars();
    const Poly canonical = canonical_lefschetz(spec);
    for (unsigned k = 1; k < n; ++k) {
        // Only variables inside the leading k x k block survive.
        Poly truncated(nv);
        Poly dense(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            const Variable& var = spec.layout()[v];
            if (var.row >= k || var.col >= k) continue;
            const Monomial x = Monomial::variable(nv, v);
            truncated.add_term(x, canonical.coeff(x));
            dense.add_term(x, static_cast<int>((var.row * 7 + var.col * 3) % 5) - 2);
        }
        if (!truncated.is_zero()) out.push_back(std::move(truncated));
        if (!dense.is_zero()) out.push_back(std::move(dense));
    }
    return out;
}

TheoremSummary verify_theorem(const FamilySpec& spec, std::size_t samples, std::uint64_t seed, std::size_t cell_budget,
                              const ApolarityWeights& weights) {
    const std::size_t cells = max_catalecticant_cells(spec.nvars(), spec.socle_degree());
    if (cells > cell_budget)
        throw Error(ErrorKind::TooLarge, "largest catalecticant has " + std::to_string(cells) + " cells, budget is " +
                                             std::to_string(cell_budget));
    validate_weights(weights, spec.nvars());
    const Poly f = make_invariant(spec);
    const HilbertFn hilbert = hilbert_function(f, weights);

    TheoremSummary summary{spec, seed, {}, 0, 0, std::nullopt};
    auto run = [&](const Poly& l, bool boundary) {
        TheoremSample s;
        s.lefschetz = l;
        s.boundary = boundary;
        // With weights, L differentiates along (w_i a_i); that direction is what must lie in the orbit.
        Poly direction(spec.nvars());
        const auto point = dual_point(l, weights);
        for (std::size_t v = 0; v < point.size(); ++v) direction.add_term(Monomial::variable(spec.nvars(), v), point[v]);
        s.in_open_orbit = orbit_test(spec, direction);
        s.slp_verdict = slp_check(f, hilbert, l, weights).verdict;
        if (s.slp_verdict) ++summary.lefschetz_count;
        if (!s.agree()) {
            ++summary.mismatch_count;
            if (!summary.counterexample) summary.counterexample = s;
        }
        summary.samples.push_back(std::move(s));
    };
    for (const auto& l : random_linear_forms(spec, samples, seed)) run(l, false);
    for (const auto& l : rank_deficient_candidates(spec)) run(l, true);
    return summary;
}

Poly act_on_linear(const FamilySpec& spec, const Poly& linear, const RatMatrix& g) {
    const RatMatrix m = coeffs_to_matrix(spec, linear);
    const std::size_t n = spec.size();
    if (g.rows() != n || g.cols() != n) throw Error(ErrorKind::InvalidInput, "group element has the wrong size");
    auto product = [](const RatMatrix& a, const RatMatrix& b) {
        std::vector<Rational> data(a.rows() * b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols(); ++j) data[i * b.cols() + j] += a(i, k) * b(k, j);
            }
        return RatMatrix(a.rows(), b.cols(), std::move(data));
    };
    if (spec.kind() == FamilyKind::Quadric) return matrix_to_linear(spec, product(m, g));
    if (spec.kind() == FamilyKind::GenericDet) return matrix_to_linear(spec, product(g.transposed(), m));
    return matrix_to_linear(spec, product(product(g.transposed(), m), g));
}

} // namespace lefkit
