#include "lefkit/error.hpp"
#include "lefkit/families.hpp"
#include "lefkit/lefschetz.hpp"
#include "lefkit/linalg.hpp"
#include "lefkit/macaulay.hpp"
#include "lefkit/poly_io.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace lefkit {
namespace {

Poly P(const FamilySpec& spec, std::string_view text) { return parse_poly(text, spec.variable_names()); }

const FamilySpec kSym2 = FamilySpec::make(FamilyKind::SymDet, 2);
const FamilySpec kSym3 = FamilySpec::make(FamilyKind::SymDet, 3);

RatMatrix hessian_value(const PolyMatrix& h, const std::vector<Rational>& point) {
    std::vector<Rational> data;
    for (const auto& row : h)
        for (const Poly& p : row) data.push_back(p.evaluate(point));
    return RatMatrix(h.size(), h.size(), std::move(data));
}

TEST(SlpCheck, TraceOfSymDet3) {
    const SlpReport r = slp_check(make_invariant(kSym3), canonical_lefschetz(kSym3));
    EXPECT_TRUE(r.verdict);
    EXPECT_EQ(r.socle_degree, 3u);
    ASSERT_EQ(r.rows.size(), 2u);
    EXPECT_EQ(r.rows[0], (SlpRow{0, 1, 1, true}));
    EXPECT_EQ(r.rows[1], (SlpRow{1, 6, 6, true}));
}

TEST(SlpCheck, RankOneFailsAtZero) {
    const SlpReport r = slp_check(make_invariant(kSym2), P(kSym2, "x11"));
    EXPECT_FALSE(r.verdict);
    EXPECT_EQ(r.rows[0], (SlpRow{0, 1, 0, false}));
    EXPECT_TRUE(contract(poly_pow(P(kSym2, "x11"), 2), make_invariant(kSym2)).is_zero());
}

TEST(SlpCheck, Quadric) {
    const auto q3 = FamilySpec::make(FamilyKind::Quadric, 3);
    const SlpReport r = slp_check(make_invariant(q3), P(q3, "x1"));
    EXPECT_TRUE(r.verdict);
    ASSERT_EQ(r.rows.size(), 2u);
    EXPECT_EQ(r.rows[1], (SlpRow{1, 3, 3, true}));
}

TEST(SlpCheck, Errors) {
    const Poly f = make_invariant(kSym2);
    for (const char* bad : {"x11^2", "x11 + 1", "0"}) {
        try {
            slp_check(f, P(kSym2, bad));
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::NotLinear) << bad;
        }
    }
    try {
        slp_check(f, Poly::variable(6, 0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::VarMismatch);
    }
}

TEST(SlpCheck, PrecomputedHilbertGivesSameReport) {
    const Poly f = make_invariant(kSym3.with_power(2));
    const HilbertFn h = hilbert_function(f);
    for (const Poly& l : random_linear_forms(kSym3, 4, 2)) EXPECT_EQ(slp_check(f, h, l).rows, slp_check(f, l).rows);
    const HilbertFn wrong = hilbert_function(make_invariant(kSym3));
    EXPECT_THROW(slp_check(f, wrong, canonical_lefschetz(kSym3)), Error);
}

TEST(SlpCheck, ScalingLeavesReportUnchanged) {
    std::mt19937_64 rng(11);
    for (FamilyKind kind : {FamilyKind::SymDet, FamilyKind::Pfaffian, FamilyKind::Quadric}) {
        const auto spec = FamilySpec::make(kind, 4 - (kind == FamilyKind::SymDet));
        const Poly f = make_invariant(spec);
        auto forms = random_linear_forms(spec, 5, 3);
        for (const auto& l : rank_deficient_candidates(spec)) forms.push_back(l);
        for (const Poly& l : forms) {
            for (const Rational& scale : {Rational(2), Rational(-3, 7)}) {
                const SlpReport a = slp_check(f, l);
                const SlpReport b = slp_check(f, l * scale);
                EXPECT_EQ(a.rows, b.rows);
                EXPECT_EQ(a.verdict, b.verdict);
            }
        }
    }
}

TEST(SlpCheck, EquivariantUnderCongruence) {
    std::mt19937_64 rng(5);
    for (unsigned n : {2u, 3u}) {
        const auto spec = FamilySpec::make(FamilyKind::SymDet, n);
        const Poly f = make_invariant(spec);
        auto forms = random_linear_forms(spec, 4, 17);
        for (const auto& l : rank_deficient_candidates(spec)) forms.push_back(l);
        for (const Poly& l : forms) {
            RatMatrix g = testing::random_int_matrix(rng, n, n, -2, 2);
            while (testing::leibniz_det(g) == 0) g = testing::random_int_matrix(rng, n, n, -2, 2);
            EXPECT_EQ(slp_check(f, act_on_linear(spec, l, g)).verdict, slp_check(f, l).verdict);
        }
    }
}

TEST(SlpCheck, VerdictIndependentOfPower) {
    for (FamilyKind kind : {FamilyKind::SymDet, FamilyKind::GenericDet, FamilyKind::Pfaffian, FamilyKind::Quadric}) {
        const auto spec = FamilySpec::make(kind, kind == FamilyKind::Pfaffian ? 4 : 2);
        const Poly f1 = make_invariant(spec);
        const Poly f2 = make_invariant(spec.with_power(2));
        auto forms = random_linear_forms(spec, 6, 23);
        for (const auto& l : rank_deficient_candidates(spec)) forms.push_back(l);
        for (const Poly& l : forms) EXPECT_EQ(slp_check(f1, l).verdict, slp_check(f2, l).verdict);
    }
}

TEST(SlpCheck, CanonicalIsLefschetz) {
    for (FamilyKind kind : {FamilyKind::SymDet, FamilyKind::GenericDet, FamilyKind::Pfaffian, FamilyKind::Quadric}) {
        for (unsigned n = 1; n <= 4; ++n) {
            if (kind == FamilyKind::Pfaffian && n % 2) continue;
            if (kind == FamilyKind::GenericDet && n > 2) continue;
            const auto spec = FamilySpec::make(kind, n);
            EXPECT_TRUE(slp_check(make_invariant(spec), canonical_lefschetz(spec)).verdict)
                << family_name(kind) << " " << n;
        }
    }
}

TEST(HigherHessian, Examples) {
    const std::vector<std::string> xy = {"x1", "x2"};
    const Poly quad = parse_poly("x1^2 + x2^2", xy);
    const PolyMatrix hq = higher_hessian(quad, 1);
    EXPECT_EQ(hessian_value(hq, {0, 0}), RatMatrix::from_rows({{2, 0}, {0, 2}}));

    const Poly det2 = make_invariant(kSym2);
    const PolyMatrix h = higher_hessian(det2, 1, {P(kSym2, "x11"), P(kSym2, "x12"), P(kSym2, "x22")});
    const RatMatrix value = hessian_value(h, {0, 0, 0});
    EXPECT_EQ(value, RatMatrix::from_rows({{0, 0, 1}, {0, -2, 0}, {1, 0, 0}}));
    EXPECT_EQ(testing::leibniz_det(value), 2);
}

TEST(HigherHessian, SymDet3AtTrace) {
    const Poly f = make_invariant(kSym3);
    const PolyMatrix h = higher_hessian(f, 1);
    ASSERT_EQ(h.size(), 6u);
    const auto point = dual_point(canonical_lefschetz(kSym3));
    EXPECT_NE(testing::leibniz_det(hessian_value(h, point)), 0);
}

TEST(HigherHessian, DegreeZeroIsF) {
    const Poly f = make_invariant(kSym3);
    const PolyMatrix h = higher_hessian(f, 0);
    ASSERT_EQ(h.size(), 1u);
    EXPECT_EQ(h[0][0], f);
}

TEST(HigherHessian, Errors) {
    const Poly det2 = make_invariant(kSym2);
    auto expect_kind = [](ErrorKind kind, const std::function<void()>& body) {
        try {
            body();
            ADD_FAILURE() << "no error";
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), kind);
        }
    };
    expect_kind(ErrorKind::BadBasis, [&] { higher_hessian(det2, 1, {P(kSym2, "x11"), P(kSym2, "x12")}); });
    expect_kind(ErrorKind::BadBasis, [&] {
        higher_hessian(det2, 1, {P(kSym2, "x11"), P(kSym2, "x12"), P(kSym2, "x11 + x12")});
    });
    expect_kind(ErrorKind::OutOfRange, [&] { higher_hessian(det2, 2); });
}

TEST(HessianCriterion, Examples) {
    const Poly det2 = make_invariant(kSym2);
    EXPECT_TRUE(hessian_criterion_at(det2, canonical_lefschetz(kSym2)));
    EXPECT_FALSE(hessian_criterion_at(det2, P(kSym2, "x11")));
    const auto q3 = FamilySpec::make(FamilyKind::Quadric, 3);
    EXPECT_TRUE(hessian_criterion_at(make_invariant(q3), P(q3, "x1")));
    const auto dets = hessian_determinants_at(det2, canonical_lefschetz(kSym2));
    ASSERT_EQ(dets.size(), 2u);
    EXPECT_EQ(dets[1], 2);
}

TEST(HessianCriterion, AgreesWithSlp) {
    for (unsigned n : {2u, 3u}) {
        for (unsigned s : {1u, 2u}) {
            if (n == 3 && s == 2) continue;
            const auto spec = FamilySpec::make(FamilyKind::SymDet, n, s);
            const Poly f = make_invariant(spec);
            auto forms = random_linear_forms(spec, 8, 29);
            for (const auto& l : rank_deficient_candidates(spec)) forms.push_back(l);
            for (const Poly& l : forms) EXPECT_EQ(hessian_criterion_at(f, l), slp_check(f, l).verdict);
        }
    }
}

TEST(HessianCriterion, WeightedPointScales) {
    const ApolarityWeights w = {1, 2, 1};
    EXPECT_EQ(dual_point(P(kSym2, "x11 + 3*x12"), w), (std::vector<Rational>{1, 6, 0}));
}

TEST(VerifyTheorem, SymDet2) {
    const TheoremSummary s = verify_theorem(kSym2, 50, 7);
    EXPECT_EQ(s.mismatch_count, 0u);
    EXPECT_FALSE(s.counterexample);
    EXPECT_EQ(s.samples.size(), 50u + rank_deficient_candidates(kSym2).size());
}

TEST(VerifyTheorem, BoundaryCandidatesFailBoth) {
    const auto spec = FamilySpec::make(FamilyKind::SymDet, 3, 2);
    const TheoremSummary s = verify_theorem(spec, 3, 7);
    EXPECT_EQ(s.mismatch_count, 0u);
    std::size_t boundary = 0;
    for (const auto& sample : s.samples) {
        if (!sample.boundary) continue;
        ++boundary;
        EXPECT_FALSE(sample.in_open_orbit);
        EXPECT_FALSE(sample.slp_verdict);
    }
    EXPECT_EQ(boundary, 4u);
}

TEST(VerifyTheorem, DegeneratePfaffianDirection) {
    const auto pf4 = FamilySpec::make(FamilyKind::Pfaffian, 4);
    const Poly l = P(pf4, "x12");
    EXPECT_FALSE(orbit_test(pf4, l));
    EXPECT_FALSE(slp_check(make_invariant(pf4), l).verdict);
    const auto candidates = rank_deficient_candidates(pf4);
    EXPECT_NE(std::find(candidates.begin(), candidates.end(), l), candidates.end());
    EXPECT_EQ(verify_theorem(pf4, 30, 7).mismatch_count, 0u);
}

TEST(VerifyTheorem, GenericDet2) { EXPECT_EQ(verify_theorem(FamilySpec::make(FamilyKind::GenericDet, 2), 50, 7).mismatch_count, 0u); }

TEST(VerifyTheorem, Deterministic) {
    const auto a = random_linear_forms(kSym3, 10, 99);
    const auto b = random_linear_forms(kSym3, 10, 99);
    EXPECT_EQ(a, b);
    for (const Poly& l : a) {
        EXPECT_FALSE(l.is_zero());
        EXPECT_EQ(l.homogeneous_degree(), 1u);
        for (const auto& [m, c] : l.terms()) {
            EXPECT_LE(abs(c), 5);
            EXPECT_EQ(c.get_den(), 1);
        }
    }
    EXPECT_NE(random_linear_forms(kSym3, 10, 100), a);
}

TEST(VerifyTheorem, Budget) {
    try {
        verify_theorem(FamilySpec::make(FamilyKind::SymDet, 3, 2), 1, 7, 1000);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    }
}

TEST(VerifyTheorem, QuadricHasNoBoundary) {
    EXPECT_TRUE(rank_deficient_candidates(FamilySpec::make(FamilyKind::Quadric, 4)).empty());
    EXPECT_EQ(verify_theorem(FamilySpec::make(FamilyKind::Quadric, 4, 2), 20, 7).mismatch_count, 0u);
}

} // namespace
} // namespace lefkit
