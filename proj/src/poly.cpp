#include "lefkit/poly.hpp"

#include "lefkit/error.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace lefkit {

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exps_(std::move(exponents)), degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0})) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
    std::vector<std::uint32_t> e(nvars, 0);
    e.at(index) = 1;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(a.exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
    return Monomial(std::move(e));
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea[i] != eb[i]) return ea[i] > eb[i];
    return false;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Monomial::one(nvars), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index, const Rational& c) {
    Poly p(nvars);
    p.add_term(Monomial::variable(nvars, index), c);
    return p;
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
    Poly p(m.nvars());
    p.add_term(m, c);
    return p;
}

Rational Poly::coeff(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::uint32_t> Poly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const std::uint32_t lo = terms_.begin()->first.degree();
    const std::uint32_t hi = terms_.rbegin()->first.degree();
    if (lo != hi) return std::nullopt;
    return lo;
}

std::uint32_t Poly::total_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_)
        throw Error(ErrorKind::VarMismatch, "monomial has " + std::to_string(m.nvars()) + " variables, ring has " +
                                                std::to_string(nvars_));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void Poly::check_same_ring(const Poly& other) const {
    if (nvars_ != other.nvars_)
        throw Error(ErrorKind::VarMismatch, "polynomials live in rings with " + std::to_string(nvars_) + " and " +
                                                std::to_string(other.nvars_) + " variables");
}

Poly& Poly::operator+=(const Poly& other) {
    check_same_ring(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    check_same_ring(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw Error(ErrorKind::VarMismatch, "evaluation point has wrong length");
    Rational total = 0;
    Rational term;
    for (const auto& [m, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < nvars_ && term != 0; ++i) {
            for (std::uint32_t e = 0; e < m[i]; ++e) term *= point[i];
        }
        total += term;
    }
    return total;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.nvars() != b.nvars())
        throw Error(ErrorKind::VarMismatch, "cannot multiply polynomials from different rings");
    Poly out(a.nvars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
    return out;
}

Poly poly_pow(const Poly& a, unsigned s) {
    Poly result = Poly::constant(a.nvars(), 1);
    Poly base = a;
    while (s) {
        if (s & 1u) result = poly_mul(result, base);
        s >>= 1u;
        if (s) base = poly_mul(base, base);
    }
    return result;
}

void validate_weights(const ApolarityWeights& weights, std::size_t nvars) {
    if (weights.empty()) return;
    if (weights.size() != nvars)
        throw Error(ErrorKind::VarMismatch, "expected " + std::to_string(nvars) + " apolarity weights, got " +
                                                std::to_string(weights.size()));
    for (const auto& w : weights)
        if (w <= 0) throw Error(ErrorKind::InvalidInput, "apolarity weights must be positive");
}

std::optional<std::pair<Monomial, Rational>> contract_monomial(const Monomial& m, const Monomial& target,
                                                               const ApolarityWeights& weights) {
    if (!m.divides(target)) return std::nullopt;
    std::vector<std::uint32_t> rest(target.exponents());
    Integer factor = 1;
    Rational scale = 1;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        // d^a/dx^a x^b = b!/(b-a)! x^(b-a)
        for (std::uint32_t k = 0; k < m[i]; ++k) factor *= rest[i] - k;
        rest[i] -= m[i];
        if (!weights.empty())
            for (std::uint32_t k = 0; k < m[i]; ++k) scale *= weights[i];
    }
    return std::make_pair(Monomial(std::move(rest)), Rational(factor) * scale);
}

Poly contract(const Poly& p, const Poly& f, const ApolarityWeights& weights) {
    if (p.nvars() != f.nvars()) throw Error(ErrorKind::VarMismatch, "operator and target live in different rings");
    validate_weights(weights, f.nvars());
    Poly out(f.nvars());
    for (const auto& [mp, cp] : p.terms()) {
        for (const auto& [mf, cf] : f.terms()) {
            if (mf.degree() < mp.degree()) continue;
            if (auto hit = contract_monomial(mp, mf, weights)) out.add_term(hit->first, hit->second * cp * cf);
        }
    }
    return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back(std::vector<std::uint32_t>{});
        return out;
    }
    std::vector<std::uint32_t> e(nvars, 0);
    // Lexicographically descending enumeration of compositions of d.
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == nvars) {
            e[i] = left;
            out.emplace_back(e);
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

std::size_t monomial_count(std::size_t nvars, unsigned d) {
    if (nvars == 0) return d == 0 ? 1 : 0;
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), nvars + d - 1, d);
    if (!c.fits_ulong_p()) return std::numeric_limits<std::size_t>::max();
    return c.get_ui();
}

Poly substitute(const Poly& f, const std::vector<Poly>& images) {
    if (images.size() != f.nvars()) throw Error(ErrorKind::VarMismatch, "need one image per variable");
    const std::size_t target = images.empty() ? 0 : images.front().nvars();
    Poly out(target);
    for (const auto& [m, c] : f.terms()) {
        Poly term = Poly::constant(target, c);
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m[i] > 0) term = poly_mul(term, poly_pow(images[i], m[i]));
        out += term;
    }
    return out;
}

} // namespace lefkit
