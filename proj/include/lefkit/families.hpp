#pragma once

#include "lefkit/matrix.hpp"
#include "lefkit/poly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lefkit {

/// Regular prehomogeneous spaces of commutative parabolic type with an
/// implemented basic relative invariant. E7 is reserved: it has a d-table
/// entry but no invariant.
enum class FamilyKind {
    GenericDet, // (A_{2n-1}, n): det of an n x n matrix
    Quadric,    // (B_m, 1) / (D_m, 1): x1^2 + ... + xn^2
    SymDet,     // (C_n, n): det of a symmetric n x n matrix
    Pfaffian,   // (D_{2m}, 2m): Pfaffian of an alternating n x n matrix
    E7,
};

std::string_view family_name(FamilyKind kind);
/// Inverse of family_name for the four implemented kinds; Error{InvalidSpec} otherwise.
FamilyKind parse_family(std::string_view name);

/// A coordinate of the ambient space and the matrix slot it fills. Quadric
/// coordinates use row == col == index.
struct Variable {
    std::string name;
    unsigned row = 0;
    unsigned col = 0;
};

class FamilySpec {
public:
    /// Validates and builds. Error{InvalidSpec} for size < 1, power < 1 or odd
    /// Pfaffian size; Error{Unsupported} for E7.
    static FamilySpec make(FamilyKind kind, unsigned size, unsigned power = 1);

    FamilyKind kind() const noexcept { return kind_; }
    unsigned size() const noexcept { return size_; }
    unsigned power() const noexcept { return power_; }
    std::size_t nvars() const noexcept { return layout_.size(); }
    const std::vector<Variable>& layout() const noexcept { return layout_; }
    std::vector<std::string> variable_names() const;
    /// Index of the variable sitting at matrix slot (row, col), 0-based, with
    /// (row, col) normalized to the stored triangle. Empty for slots that
    /// carry no variable (alternating diagonal, off-diagonal quadric).
    std::optional<std::size_t> variable_at(unsigned row, unsigned col) const;

    /// Degree of the basic invariant: n, 2, n, n/2.
    unsigned basic_degree() const noexcept;
    /// Socle degree of R/Ann(F): power * basic_degree.
    unsigned socle_degree() const noexcept { return power_ * basic_degree(); }

    FamilySpec with_power(unsigned power) const { return make(kind_, size_, power); }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

private:
    FamilySpec() = default;

    FamilyKind kind_ = FamilyKind::SymDet;
    unsigned size_ = 0;
    unsigned power_ = 1;
    std::vector<Variable> layout_;
};

/// Rank r of the family (number of strongly orthogonal roots) and the
/// constant d of the maximal-submodule product formula.
struct DTable {
    unsigned rank = 0;
    Rational d;
};

/// GenericDet: (n, 2); SymDet: (n, 1); Pfaffian: (n/2, 4); E7: (3, 4);
/// Quadric of dimension n: (2, n - 2).
DTable d_table(FamilyKind kind, unsigned size);

/// (basic invariant)^power.
Poly make_invariant(const FamilySpec& spec);

/// Basic invariant only (power ignored).
Poly basic_invariant(const FamilySpec& spec);

/// Pfaffian of the generic alternating n x n matrix in the x_ij (i<j) layout,
/// by first-row expansion.
Poly pfaffian_poly(unsigned n);

/// Determinant of a square matrix of polynomials, by Laplace expansion along
/// rows with minors memoized on the column subset.
Poly poly_det(const std::vector<std::vector<Poly>>& m, std::size_t nvars);

/// The generic matrix of the family: entry (i, j) is the polynomial in slot
/// (i, j). Quadric returns the diagonal matrix diag(x1..xn).
std::vector<std::vector<Poly>> generic_matrix(const FamilySpec& spec);

/// Coefficients of a linear form placed into the family's matrix. SymDet puts
/// the coefficient of x_ij at (i,j) and (j,i); Pfaffian puts -c at (j,i);
/// Quadric returns a 1 x n row. Error{NotLinear} unless L is nonzero and
/// homogeneous of degree one.
RatMatrix coeffs_to_matrix(const FamilySpec& spec, const Poly& linear);

/// Inverse of coeffs_to_matrix: reads the stored triangle (or row for Quadric).
Poly matrix_to_linear(const FamilySpec& spec, const RatMatrix& m);

/// Open-orbit membership of the linear form: full rank for the determinant
/// families, nonsingular for Pfaffian, non-isotropic for Quadric.
bool orbit_test(const FamilySpec& spec, const Poly& linear);

/// Trace form for the determinant families, x12 + x34 + ... for Pfaffian,
/// x1 for Quadric.
Poly canonical_lefschetz(const FamilySpec& spec);

/// Determinant of the lower-right t x t corner of the generic symmetric
/// matrix (SymDet only).
Poly corner_minor(const FamilySpec& spec, unsigned t);

} // namespace lefkit
