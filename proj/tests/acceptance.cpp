// Acceptance suite: one pass/fail line per criterion. All comparisons are
// exact equality of integers or rationals.

#include "lefkit/error.hpp"
#include "lefkit/families.hpp"
#include "lefkit/lefschetz.hpp"
#include "lefkit/linalg.hpp"
#include "lefkit/macaulay.hpp"
#include "lefkit/reptheory.hpp"

#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace lefkit;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (condition) return;
        if (ok) detail << what;
        ok = false;
    }
};

struct Case {
    FamilyKind kind;
    unsigned n;
    unsigned s;
};

std::string label(const Case& c) {
    return std::string(family_name(c.kind)) + " n=" + std::to_string(c.n) + " s=" + std::to_string(c.s);
}

/// Families and sizes of the converse check.
std::vector<Case> converse_grid() {
    std::vector<Case> out;
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned s = 1; s <= 2; ++s) out.push_back({FamilyKind::SymDet, n, s});
    for (unsigned n = 1; n <= 2; ++n)
        for (unsigned s = 1; s <= 2; ++s) out.push_back({FamilyKind::GenericDet, n, s});
    out.push_back({FamilyKind::Pfaffian, 4, 1});
    out.push_back({FamilyKind::Pfaffian, 4, 2});
    out.push_back({FamilyKind::Pfaffian, 6, 1});
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned s = 1; s <= 2; ++s) out.push_back({FamilyKind::Quadric, n, s});
    return out;
}

std::vector<Case> typeC_grid() {
    std::vector<Case> out;
    for (unsigned n : {2u, 3u})
        for (unsigned s : {1u, 2u}) out.push_back({FamilyKind::SymDet, n, s});
    return out;
}

FamilySpec spec_of(const Case& c) { return FamilySpec::make(c.kind, c.n, c.s); }

void criterion_narayana(Outcome& o) {
    const std::vector<std::vector<std::size_t>> expected = {{1, 3, 1}, {1, 6, 6, 1}, {1, 10, 20, 10, 1}};
    for (unsigned n = 2; n <= 4; ++n) {
        const HilbertFn h = hilbert_function(make_invariant(FamilySpec::make(FamilyKind::SymDet, n)));
        std::vector<std::size_t> formula;
        for (unsigned k = 1; k <= n + 1; ++k) formula.push_back(narayana(n + 1, k).get_ui());
        o.require(h.values == formula && h.values == expected[n - 2], "n=" + std::to_string(n));
    }
}

void criterion_slp_typeC(Outcome& o) {
    for (auto [n, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
        const auto spec = FamilySpec::make(FamilyKind::SymDet, n, s);
        o.require(slp_check(make_invariant(spec), canonical_lefschetz(spec)).verdict,
                  "trace fails for n=" + std::to_string(n) + " s=" + std::to_string(s));
    }
}

std::vector<TheoremSummary> g_converse;

void criterion_converse(Outcome& o) {
    std::size_t total = 0, boundary = 0;
    for (const Case& c : converse_grid()) {
        const TheoremSummary summary = verify_theorem(spec_of(c), 50, kSeed);
        total += summary.samples.size();
        for (const auto& s : summary.samples) boundary += s.boundary;
        o.require(summary.mismatch_count == 0, label(c) + ": " + std::to_string(summary.mismatch_count) + " mismatches");
        g_converse.push_back(summary);
    }
    o.detail << (o.ok ? "" : "; ") << total << " samples, " << boundary << " boundary";
}

void criterion_independent_of_s(Outcome& o) {
    std::vector<Case> sizes;
    for (const Case& c : converse_grid())
        if (c.s == 1) sizes.push_back(c);
    std::size_t compared = 0, lefschetz = 0;
    for (const Case& c : sizes) {
        const auto spec1 = spec_of(c);
        const auto spec2 = spec1.with_power(2);
        const Poly f1 = make_invariant(spec1);
        const Poly f2 = make_invariant(spec2);
        const HilbertFn h1 = hilbert_function(f1);
        const HilbertFn h2 = hilbert_function(f2);
        auto forms = random_linear_forms(spec1, 20, kSeed + 1);
        for (const auto& l : rank_deficient_candidates(spec1)) forms.push_back(l);
        for (const Poly& l : forms) {
            const bool v1 = slp_check(f1, h1, l).verdict;
            const bool v2 = slp_check(f2, h2, l).verdict;
            ++compared;
            lefschetz += v1;
            o.require(v1 == v2, label(c) + ": verdicts differ between s=1 and s=2");
        }
    }
    o.detail << (o.ok ? "" : "; ") << compared << " forms, " << lefschetz << " Lefschetz";
}

void criterion_hessian(Outcome& o) {
    std::size_t compared = 0;
    for (const TheoremSummary& summary : g_converse) {
        const FamilySpec& spec = summary.family;
        const bool in_scope = (spec.kind() == FamilyKind::SymDet && spec.size() <= 3) ||
                              (spec.kind() == FamilyKind::Quadric && spec.size() <= 4);
        if (!in_scope) continue;
        const Poly f = make_invariant(spec);
        for (const auto& sample : summary.samples) {
            ++compared;
            o.require(hessian_criterion_at(f, sample.lefschetz) == sample.slp_verdict,
                      label({spec.kind(), spec.size(), spec.power()}) + ": Hessian criterion disagrees");
        }
    }
    o.require(compared > 0, "no samples from the converse check");
    o.detail << (o.ok ? "" : "; ") << compared << " samples";
}

void criterion_prediction(Outcome& o) {
    for (auto [n, s] : std::vector<std::pair<unsigned, unsigned>>{{1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
        const HilbertFn predicted = predicted_hilbert_typeC(n, s);
        const HilbertFn computed = hilbert_function(make_invariant(FamilySpec::make(FamilyKind::SymDet, n, s)));
        o.require(predicted == computed, "n=" + std::to_string(n) + " s=" + std::to_string(s));
    }
}

void criterion_qmu(Outcome& o) {
    std::size_t checked = 0, exceptions = 0;
    for (const Rational d : {Rational(1), Rational(2), Rational(4), Rational(3), Rational(2)}) {
        for (unsigned r = 1; r <= 4; ++r) {
            for (const ExponentTuple& k : exponent_tuples(r, 4 * r)) {
                bool small = true;
                for (unsigned x : k.k) small = small && x <= 4;
                if (!small) continue;
                for (unsigned s = 1; s <= 4; ++s) {
                    ++checked;
                    if ((q_mu(k, s, d) == 0) != (k.total() > s)) ++exceptions;
                }
            }
        }
    }
    o.require(exceptions == 0, std::to_string(exceptions) + " exceptions");
    o.detail << (o.ok ? "" : "; ") << checked << " cases";
}

void criterion_annihilator(Outcome& o) {
    for (const Case& c : typeC_grid()) {
        const auto spec = spec_of(c);
        const Poly f = make_invariant(spec);
        const Poly corner = Poly::variable(spec.nvars(), *spec.variable_at(c.n - 1, c.n - 1));
        o.require(contract(poly_pow(corner, c.s + 1), f).is_zero(), label(c) + ": corner^(s+1) does not annihilate");
        o.require(!contract(poly_pow(corner, c.s), f).is_zero(), label(c) + ": corner^s annihilates");
    }
    std::size_t elements = 0;
    for (const Case& c : converse_grid()) {
        const Poly f = make_invariant(spec_of(c));
        const unsigned deg = form_degree(f);
        for (unsigned i = 0; i <= deg; ++i) {
            for (const Poly& p : annihilator_basis(f, i)) {
                ++elements;
                o.require(contract(p, f).is_zero(), label(c) + ": basis element survives");
            }
        }
    }
    o.detail << (o.ok ? "" : "; ") << elements << " basis elements";
}

void criterion_structure(Outcome& o) {
    for (const Case& c : converse_grid()) {
        const Poly f = make_invariant(spec_of(c));
        const HilbertFn h = hilbert_function(f);
        o.require(h.symmetric(), label(c) + ": Hilbert function not symmetric");
        const unsigned deg = h.socle_degree;
        for (unsigned i = 0; i <= deg; ++i) {
            const RatMatrix cat = catalecticant(f, i).matrix;
            o.require(exact_rank(cat) == exact_rank(catalecticant(f, deg - i).matrix) &&
                          exact_rank(cat.transposed()) == h.values[i],
                      label(c) + ": transpose duality fails");
        }
    }
    for (unsigned n : {2u, 4u, 6u}) {
        const auto spec = FamilySpec::make(FamilyKind::Pfaffian, n);
        const Poly pf = pfaffian_poly(n);
        o.require(testing::naive_mul(pf, pf) == testing::leibniz_poly_det(generic_matrix(spec), spec.nvars()),
                  "Pf^2 != det for n=" + std::to_string(n));
    }
    std::mt19937_64 rng(kSeed);
    for (int t = 0; t < 100; ++t) {
        const Poly p = testing::random_poly(rng, 3, 2, 3);
        const Poly q = testing::random_poly(rng, 3, 2, 3);
        const Poly f = testing::random_poly(rng, 3, 6, 6);
        o.require(contract(p, contract(q, f)) == contract(testing::naive_mul(p, q), f), "composition law fails");
    }
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void(Outcome&)> body;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Narayana Hilbert functions of det Sym_n, n=2..4", 30, criterion_narayana},
        {2, "trace is Lefschetz for det Sym_n^s on the type C grid", 120, criterion_slp_typeC},
        {3, "Lefschetz verdict equals open-orbit membership", 300, criterion_converse},
        {4, "Lefschetz verdict independent of the power", 180, criterion_independent_of_s},
        {5, "higher-Hessian criterion equals Lefschetz verdict", 120, criterion_hessian},
        {6, "predicted Hilbert function equals catalecticant ranks", 120, criterion_prediction},
        {7, "q_mu vanishes exactly when the exponents exceed the power", 5, criterion_qmu},
        {8, "annihilator structure", 30, criterion_annihilator},
        {9, "Gorenstein symmetry, transpose duality, Pf^2 = det, composition law", 60, criterion_structure},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << "exception: " << e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = elapsed <= c.limit_s;
        const bool pass = o.ok && in_time;
        failures += !pass;
        std::printf("[%s] criterion %d: %s (%.2f s, limit %.0f s%s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, elapsed,
                    c.limit_s, in_time ? "" : ", exceeded", o.detail.str().empty() ? "" : ": ", o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
