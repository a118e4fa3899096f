#include "lefkit/families.hpp"

#include "lefkit/error.hpp"
#include "lefkit/linalg.hpp"

#include <unordered_map>

namespace lefkit {

std::string_view family_name(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::GenericDet: return "generic-det";
    case FamilyKind::Quadric: return "quadric";
    case FamilyKind::SymDet: return "sym-det";
    case FamilyKind::Pfaffian: return "pfaffian";
    case FamilyKind::E7: return "e7";
    }
    return "unknown";
}

FamilyKind parse_family(std::string_view name) {
    for (FamilyKind k : {FamilyKind::GenericDet, FamilyKind::Quadric, FamilyKind::SymDet, FamilyKind::Pfaffian})
        if (family_name(k) == name) return k;
    if (name == "e7") throw Error(ErrorKind::Unsupported, "the E7 invariant is not implemented");
    throw Error(ErrorKind::InvalidSpec, "unknown family '" + std::string(name) + "'");
}

namespace {

std::string pair_name(unsigned i, unsigned j, unsigned n) {
    // 1-based; an underscore separates indices once they can have two digits.
    if (n <= 9) return "x" + std::to_string(i + 1) + std::to_string(j + 1);
    return "x" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

} // namespace

FamilySpec FamilySpec::make(FamilyKind kind, unsigned size, unsigned power) {
    if (kind == FamilyKind::E7) throw Error(ErrorKind::Unsupported, "the E7 invariant is not implemented");
    if (size < 1) throw Error(ErrorKind::InvalidSpec, "size must be at least 1");
    if (power < 1) throw Error(ErrorKind::InvalidSpec, "power must be at least 1");
    if (kind == FamilyKind::Pfaffian && (size % 2 != 0))
        throw Error(ErrorKind::InvalidSpec, "Pfaffian size must be even, got " + std::to_string(size));

    FamilySpec spec;
    spec.kind_ = kind;
    spec.size_ = size;
    spec.power_ = power;
    const unsigned n = size;
    switch (kind) {
    case FamilyKind::GenericDet:
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) spec.layout_.push_back({pair_name(i, j, n), i, j});
        break;
    case FamilyKind::SymDet:
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i; j < n; ++j) spec.layout_.push_back({pair_name(i, j, n), i, j});
        break;
    case FamilyKind::Pfaffian:
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j) spec.layout_.push_back({pair_name(i, j, n), i, j});
        break;
    case FamilyKind::Quadric:
        for (unsigned i = 0; i < n; ++i) spec.layout_.push_back({"x" + std::to_string(i + 1), i, i});
        break;
    case FamilyKind::E7: break;
    }
    return spec;
}

std::vector<std::string> FamilySpec::variable_names() const {
    std::vector<std::string> names;
    names.reserve(layout_.size());
    for (const auto& v : layout_) names.push_back(v.name);
    return names;
}

std::optional<std::size_t> FamilySpec::variable_at(unsigned row, unsigned col) const {
    const unsigned n = size_;
    if (row >= n || col >= n) return std::nullopt;
    switch (kind_) {
    case FamilyKind::GenericDet: return std::size_t{row} * n + col;
    case FamilyKind::SymDet: {
        const unsigned i = std::min(row, col);
        const unsigned j = std::max(row, col);
        return std::size_t{i} * n - std::size_t{i} * (i - 1) / 2 + (j - i);
    }
    case FamilyKind::Pfaffian: {
        if (row == col) return std::nullopt;
        const unsigned i = std::min(row, col);
        const unsigned j = std::max(row, col);
        return std::size_t{i} * (n - 1) - std::size_t{i} * (i - 1) / 2 + (j - i - 1);
    }
    case FamilyKind::Quadric:
        if (row != col) return std::nullopt;
        return row;
    case FamilyKind::E7: break;
    }
    return std::nullopt;
}

unsigned FamilySpec::basic_degree() const noexcept {
    switch (kind_) {
    case FamilyKind::GenericDet:
    case FamilyKind::SymDet: return size_;
    case FamilyKind::Quadric: return 2;
    case FamilyKind::Pfaffian: return size_ / 2;
    case FamilyKind::E7: return 3;
    }
    return 0;
}

DTable d_table(FamilyKind kind, unsigned size) {
    switch (kind) {
    case FamilyKind::GenericDet: return {size, Rational(2)};
    case FamilyKind::SymDet: return {size, Rational(1)};
    case FamilyKind::Pfaffian:
        if (size % 2 != 0) throw Error(ErrorKind::InvalidSpec, "Pfaffian size must be even");
        return {size / 2, Rational(4)};
    case FamilyKind::E7: return {3, Rational(4)};
    case FamilyKind::Quadric:
        // (B_m, 1) lives on C^{2m-1} with d = 2m - 3, (D_m, 1) on C^{2m-2} with d = 2m - 4.
        return {2, Rational(static_cast<long>(size) - 2)};
    }
    throw Error(ErrorKind::InvalidSpec, "unknown family");
}

std::vector<std::vector<Poly>> generic_matrix(const FamilySpec& spec) {
    const unsigned n = spec.size();
    const std::size_t nv = spec.nvars();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(nv)));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            const auto idx = spec.variable_at(i, j);
            if (!idx) continue;
            const Rational sign = (spec.kind() == FamilyKind::Pfaffian && i > j) ? -1 : 1;
            m[i][j] = Poly::variable(nv, *idx, sign);
        }
    }
    return m;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m, std::size_t nvars) {
    const std::size_t n = m.size();
    if (n == 0) return Poly::constant(nvars, 1);
    if (n > 20) throw Error(ErrorKind::TooLarge, "polynomial determinant limited to 20 x 20");
    std::unordered_map<std::uint32_t, Poly> memo;
    // det of rows [k, n) restricted to the columns whose bits are clear in `used`.
    auto rec = [&](auto&& self, std::size_t k, std::uint32_t used) -> Poly {
        if (k == n) return Poly::constant(nvars, 1);
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        Poly total(nvars);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (used & (1u << c)) continue;
            if (!m[k][c].is_zero()) {
                Poly term = poly_mul(m[k][c], self(self, k + 1, used | (1u << c)));
                if (sign < 0) term *= Rational(-1);
                total += term;
            }
            sign = -sign;
        }
        memo.emplace(used, total);
        return total;
    };
    return rec(rec, 0, 0);
}

Poly pfaffian_poly(unsigned n) {
    if (n < 2 || n % 2 != 0) throw Error(ErrorKind::InvalidSpec, "Pfaffian needs an even size >= 2");
    const FamilySpec spec = FamilySpec::make(FamilyKind::Pfaffian, n);
    const std::size_t nv = spec.nvars();
    std::unordered_map<std::uint32_t, Poly> memo;
    // Pf of the principal submatrix on the indices not in `removed`:
    // Pf = sum_{j > first} (-1)^{position of j} x_{first,j} Pf(without first, j).
    auto rec = [&](auto&& self, std::uint32_t removed) -> Poly {
        unsigned first = 0;
        while (first < n && (removed & (1u << first))) ++first;
        if (first == n) return Poly::constant(nv, 1);
        if (auto it = memo.find(removed); it != memo.end()) return it->second;
        Poly total(nv);
        int sign = 1;
        for (unsigned j = first + 1; j < n; ++j) {
            if (removed & (1u << j)) continue;
            Poly term = poly_mul(Poly::variable(nv, *spec.variable_at(first, j), sign),
                                 self(self, removed | (1u << first) | (1u << j)));
            total += term;
            sign = -sign;
        }
        memo.emplace(removed, total);
        return total;
    };
    return rec(rec, 0);
}

Poly basic_invariant(const FamilySpec& spec) {
    switch (spec.kind()) {
    case FamilyKind::GenericDet:
    case FamilyKind::SymDet: return poly_det(generic_matrix(spec), spec.nvars());
    case FamilyKind::Pfaffian: return pfaffian_poly(spec.size());
    case FamilyKind::Quadric: {
        Poly f(spec.nvars());
        for (std::size_t i = 0; i < spec.nvars(); ++i) {
            std::vector<std::uint32_t> e(spec.nvars(), 0);
            e[i] = 2;
            f.add_term(Monomial(std::move(e)), 1);
        }
        return f;
    }
    case FamilyKind::E7: break;
    }
    throw Error(ErrorKind::Unsupported, "the E7 invariant is not implemented");
}

Poly make_invariant(const FamilySpec& spec) { return poly_pow(basic_invariant(spec), spec.power()); }

namespace {

void require_linear(const FamilySpec& spec, const Poly& linear) {
    if (linear.nvars() != spec.nvars())
        throw Error(ErrorKind::VarMismatch, "linear form has " + std::to_string(linear.nvars()) +
                                                " variables, family has " + std::to_string(spec.nvars()));
    if (linear.homogeneous_degree() != 1u)
        throw Error(ErrorKind::NotLinear, "expected a nonzero homogeneous linear form");
}

std::size_t linear_index(const Monomial& m) {
    for (std::size_t i = 0; i < m.nvars(); ++i)
        if (m[i] == 1) return i;
    return m.nvars();
}

} // namespace

RatMatrix coeffs_to_matrix(const FamilySpec& spec, const Poly& linear) {
    require_linear(spec, linear);
    const unsigned n = spec.size();
    if (spec.kind() == FamilyKind::Quadric) {
        std::vector<Rational> row(n);
        for (const auto& [m, c] : linear.terms()) row[linear_index(m)] = c;
        return RatMatrix(1, n, std::move(row));
    }
    std::vector<Rational> data(std::size_t{n} * n);
    for (const auto& [m, c] : linear.terms()) {
        const Variable& v = spec.layout()[linear_index(m)];
        data[v.row * n + v.col] = c;
        if (spec.kind() == FamilyKind::SymDet) data[v.col * n + v.row] = c;
        if (spec.kind() == FamilyKind::Pfaffian) data[v.col * n + v.row] = -c;
    }
    return RatMatrix(n, n, std::move(data));
}

Poly matrix_to_linear(const FamilySpec& spec, const RatMatrix& m) {
    Poly out(spec.nvars());
    for (std::size_t i = 0; i < spec.nvars(); ++i) {
        const Variable& v = spec.layout()[i];
        const Rational& c = spec.kind() == FamilyKind::Quadric ? m(0, v.row) : m(v.row, v.col);
        out.add_term(Monomial::variable(spec.nvars(), i), c);
    }
    return out;
}

bool orbit_test(const FamilySpec& spec, const Poly& linear) {
    const RatMatrix m = coeffs_to_matrix(spec, linear);
    if (spec.kind() == FamilyKind::Quadric) {
        // Non-isotropic. Over Q this is just "nonzero"; complex isotropic
        // vectors cannot be expressed with rational coefficients.
        Rational q = 0;
        for (const auto& c : m.entries()) q += c * c;
        return q != 0;
    }
    return mat_rank(m) == spec.size();
}

Poly canonical_lefschetz(const FamilySpec& spec) {
    const std::size_t nv = spec.nvars();
    Poly l(nv);
    switch (spec.kind()) {
    case FamilyKind::GenericDet:
    case FamilyKind::SymDet:
        for (unsigned i = 0; i < spec.size(); ++i) l += Poly::variable(nv, *spec.variable_at(i, i));
        break;
    case FamilyKind::Pfaffian:
        for (unsigned i = 0; i + 1 < spec.size(); i += 2) l += Poly::variable(nv, *spec.variable_at(i, i + 1));
        break;
    case FamilyKind::Quadric: l = Poly::variable(nv, 0); break;
    case FamilyKind::E7: throw Error(ErrorKind::Unsupported, "the E7 invariant is not implemented");
    }
    return l;
}

Poly corner_minor(const FamilySpec& spec, unsigned t) {
    if (spec.kind() != FamilyKind::SymDet) throw Error(ErrorKind::InvalidSpec, "corner minors are defined for sym-det");
    const unsigned n = spec.size();
    if (t < 1 || t > n) throw Error(ErrorKind::OutOfRange, "corner size must lie in 1.." + std::to_string(n));
    const auto full = generic_matrix(spec);
    std::vector<std::vector<Poly>> corner;
    for (unsigned i = n - t; i < n; ++i) corner.emplace_back(full[i].begin() + (n - t), full[i].end());
    return poly_det(corner, spec.nvars());
}

} // namespace lefkit
