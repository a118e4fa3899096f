#pragma once

#include "lefkit/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace lefkit {

/// Exponent vector of a monomial. Its length is the ambient variable count.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents);
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }
    static Monomial variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const noexcept { return exps_.size(); }
    std::uint32_t degree() const noexcept { return degree_; }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

    /// True when every exponent of `*this` is <= the matching one of `other`.
    bool divides(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

/// Graded lexicographic order: lower degree first, then the monomial with
/// the larger exponent at the first differing variable (x1^2, x1x2, x2^2).
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with rational coefficients. Zero
/// coefficients are never stored.
class Poly {
public:
    using Terms = std::map<Monomial, Rational, GradedLex>;

    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}
    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly variable(std::size_t nvars, std::size_t index, const Rational& c = 1);
    static Poly monomial(const Monomial& m, const Rational& c = 1);

    std::size_t nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Coefficient of `m`, zero when absent.
    Rational coeff(const Monomial& m) const;

    /// Common degree of all terms; empty for the zero polynomial or when
    /// degrees differ.
    std::optional<std::uint32_t> homogeneous_degree() const;
    /// Largest term degree; zero for the zero polynomial.
    std::uint32_t total_degree() const;

    /// Adds c*m in place.
    void add_term(const Monomial& m, const Rational& c);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

    /// Evaluates at `point` (one value per variable).
    Rational evaluate(const std::vector<Rational>& point) const;

private:
    void check_same_ring(const Poly& other) const;

    std::size_t nvars_ = 0;
    Terms terms_;
};

/// Per-variable scaling of the apolarity action; empty means all ones.
using ApolarityWeights = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b);

/// a^s by repeated squaring; a^0 = 1.
Poly poly_pow(const Poly& a, unsigned s);

/// P(d)F where variable i of P acts as weights[i] * d/dx_i. Bilinear, applied
/// term by term, so inhomogeneous inputs are fine.
Poly contract(const Poly& p, const Poly& f, const ApolarityWeights& weights = {});

/// Single-term contraction: returns the coefficient and monomial of
/// m(d) applied to the monomial `target`, or nothing when m does not divide it.
std::optional<std::pair<Monomial, Rational>> contract_monomial(const Monomial& m, const Monomial& target,
                                                               const ApolarityWeights& weights = {});

/// All monomials of degree d in nvars variables, graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

/// Number of monomials of degree d in nvars variables, C(nvars+d-1, d);
/// saturates at SIZE_MAX.
std::size_t monomial_count(std::size_t nvars, unsigned d);

/// Replaces variable i by images[i] (all images share one ring).
Poly substitute(const Poly& f, const std::vector<Poly>& images);

/// Throws Error{VarMismatch} unless weights are empty or hold nvars positive values.
void validate_weights(const ApolarityWeights& weights, std::size_t nvars);

} // namespace lefkit
