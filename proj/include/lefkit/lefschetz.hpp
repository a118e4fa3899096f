#pragma once

#include "lefkit/families.hpp"
#include "lefkit/macaulay.hpp"
#include "lefkit/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lefkit {

/// Degree i of a strong Lefschetz check: ×L^{c-2i}: A_i -> A_{c-i} is a
/// bijection iff achieved == required.
struct SlpRow {
    unsigned i = 0;
    std::size_t required = 0;
    std::size_t achieved = 0;
    bool pass = false;

    friend bool operator==(const SlpRow&, const SlpRow&) = default;
};

struct SlpReport {
    std::optional<FamilySpec> family;
    Poly lefschetz;
    unsigned socle_degree = 0;
    std::vector<SlpRow> rows;
    bool verdict = false;
};

/// Decides whether L is a Lefschetz element of R/Ann(F). For each i the map
/// m -> contract(L^{c-2i} m, F) on R_i is compared in rank with h_i.
SlpReport slp_check(const Poly& f, const Poly& linear, const ApolarityWeights& weights = {});

/// Same, reusing a Hilbert function already computed for (f, weights).
SlpReport slp_check(const Poly& f, const HilbertFn& hilbert, const Poly& linear, const ApolarityWeights& weights = {});

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Entry (j, k) = contract(b_j * b_k, F). Error{BadBasis} unless `basis`
/// holds exactly h_i operators that stay independent modulo Ann(F).
PolyMatrix higher_hessian(const Poly& f, unsigned i, const std::vector<Poly>& basis,
                          const ApolarityWeights& weights = {});

/// Higher Hessian over quotient_basis(f, i).
PolyMatrix higher_hessian(const Poly& f, unsigned i, const ApolarityWeights& weights = {});

/// det of the i-th higher Hessian at the point dual to L, for i = 0..floor(c/2).
std::vector<Rational> hessian_determinants_at(const Poly& f, const Poly& linear, const ApolarityWeights& weights = {});

/// True iff every higher-Hessian determinant is nonzero at the point dual to L.
bool hessian_criterion_at(const Poly& f, const Poly& linear, const ApolarityWeights& weights = {});

/// Point at which the Hessians are evaluated: coefficient i of L times weight i.
std::vector<Rational> dual_point(const Poly& linear, const ApolarityWeights& weights = {});

struct TheoremSample {
    Poly lefschetz;
    bool boundary = false; // deterministic rank-deficient candidate
    bool in_open_orbit = false;
    bool slp_verdict = false;
    bool agree() const { return in_open_orbit == slp_verdict; }
};

struct TheoremSummary {
    FamilySpec family;
    std::uint64_t seed = 0;
    std::vector<TheoremSample> samples;
    std::size_t lefschetz_count = 0;
    std::size_t mismatch_count = 0;
    std::optional<TheoremSample> counterexample;
};

/// Default catalecticant cell budget.
inline constexpr std::size_t kDefaultCellBudget = 4'000'000;

/// `samples` random linear forms with integer coefficients in [-5, 5] drawn
/// from a seeded generator (never zero), plus the boundary forms of
/// rank_deficient_candidates. Each is checked for slp verdict == orbit test.
/// Error{TooLarge} if a catalecticant exceeds `cell_budget`.
TheoremSummary verify_theorem(const FamilySpec& spec, std::size_t samples, std::uint64_t seed,
                              std::size_t cell_budget = kDefaultCellBudget, const ApolarityWeights& weights = {});

/// Seeded random nonzero linear form, coefficients uniform in [-5, 5].
std::vector<Poly> random_linear_forms(const FamilySpec& spec, std::size_t count, std::uint64_t seed);

/// Deterministic linear forms of every nonzero deficient rank: the canonical
/// candidate and one dense pattern, both with trailing rows/columns zeroed.
/// Empty for Quadric (every nonzero rational vector is non-isotropic).
std::vector<Poly> rank_deficient_candidates(const FamilySpec& spec);

/// The linear form whose direction matrix is g^T M(L) g (SymDet/Pfaffian),
/// g^T M(L) for GenericDet, or g^T v for Quadric with orthogonal g.
Poly act_on_linear(const FamilySpec& spec, const Poly& linear, const RatMatrix& g);

} // namespace lefkit
