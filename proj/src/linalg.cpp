#include "lefkit/linalg.hpp"

#include "lefkit/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

namespace lefkit {

Rational parse_rational(std::string_view text) {
    auto digits_ok = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto strip_plus = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return std::string(s);
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den) || (slash != std::string_view::npos && (den.front() == '-' || den.front() == '+')))
        throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    Integer n(strip_plus(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw Error(ErrorKind::InvalidInput, "matrix entry count does not match shape");
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<Rational> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw Error(ErrorKind::InvalidInput, "ragged matrix rows");
        data.insert(data.end(), row.begin(), row.end());
    }
    return RatMatrix(r, c, std::move(data));
}

RatMatrix RatMatrix::identity(std::size_t n) {
    std::vector<Rational> data(n * n);
    for (std::size_t i = 0; i < n; ++i) data[i * n + i] = 1;
    return RatMatrix(n, n, std::move(data));
}

RatMatrix RatMatrix::transposed() const {
    std::vector<Rational> data(data_.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) data[c * rows_ + r] = data_[r * cols_ + c];
    return RatMatrix(cols_, rows_, std::move(data));
}

std::vector<Rational> RatMatrix::multiply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::InvalidInput, "vector length does not match column count");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (data_[r * cols_ + c] != 0) out[r] += data_[r * cols_ + c] * v[c];
    return out;
}

namespace {

struct IntegerRows {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> data;
    std::vector<Integer> scale; // row r of data = scale[r] * row r of the source
};

IntegerRows clear_denominators(const RatMatrix& m) {
    IntegerRows out{m.rows(), m.cols(), std::vector<Integer>(m.rows() * m.cols()), std::vector<Integer>(m.rows(), 1)};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        out.scale[r] = l;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& q = m(r, c);
            out.data[r * m.cols() + c] = q.get_num() * (l / q.get_den());
        }
    }
    return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return result;
}

std::uint64_t reduce_mod(const Integer& z, std::uint64_t p) {
    return mpz_fdiv_ui(z.get_mpz_t(), p);
}

int permutation_sign(std::vector<std::size_t> perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        while (perm[i] != i) {
            std::swap(perm[i], perm[perm[i]]);
            sign = -sign;
        }
    }
    return sign;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for all 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t default_probe_prime() {
    static const std::uint64_t prime = [] {
        std::uint64_t candidate = (1ull << 62) - 1;
        while (!is_prime_u64(candidate)) candidate -= 2;
        return candidate;
    }();
    return prime;
}

Elimination fraction_free_eliminate(const RatMatrix& m) {
    IntegerRows a = clear_denominators(m);
    const std::size_t rows = a.rows;
    const std::size_t cols = a.cols;
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a.data[r * cols + c]; };

    Elimination out;
    std::vector<bool> used(rows, false);
    Integer prev = 1;
    Integer t1;
    Integer t2;
    for (std::size_t col = 0; col < cols && out.rank < rows; ++col) {
        std::size_t best = rows;
        std::size_t best_size = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            if (used[r] || at(r, col) == 0) continue;
            const std::size_t size = mpz_sizeinbase(at(r, col).get_mpz_t(), 2);
            if (best == rows || size < best_size) {
                best = r;
                best_size = size;
            }
        }
        if (best == rows) continue;

        used[best] = true;
        const Integer pivot = at(best, col);
        for (std::size_t r = 0; r < rows; ++r) {
            if (used[r]) continue;
            const Integer factor = at(r, col);
            for (std::size_t c = col + 1; c < cols; ++c) {
                // (pivot * a[r][c] - factor * a[best][c]) / prev, exact by Sylvester's identity.
                mpz_mul(t1.get_mpz_t(), pivot.get_mpz_t(), at(r, c).get_mpz_t());
                mpz_mul(t2.get_mpz_t(), factor.get_mpz_t(), at(best, c).get_mpz_t());
                mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                if (!mpz_divisible_p(t1.get_mpz_t(), prev.get_mpz_t()))
                    throw std::logic_error("Bareiss step produced a non-integer entry");
                mpz_divexact(at(r, c).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            at(r, col) = 0;
        }
        prev = pivot;
        out.pivot_rows.push_back(best);
        out.pivot_cols.push_back(col);
        out.pivots.push_back(pivot);
        ++out.rank;
    }
    return out;
}

std::size_t exact_rank(const RatMatrix& m) { return fraction_free_eliminate(m).rank; }

std::size_t mat_rank(const RatMatrix& m) { return mat_rank(m, std::min(m.rows(), m.cols())); }

std::size_t mat_rank(const RatMatrix& m, std::size_t upper_bound) {
    upper_bound = std::min({upper_bound, m.rows(), m.cols()});
    if (m.rows() == 0 || m.cols() == 0) return 0;
    try {
        if (mat_rank_modular_probe(m, default_probe_prime()) == upper_bound) return upper_bound;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BadPrime) throw;
    }
    return exact_rank(m);
}

std::size_t mat_rank_modular_probe(const RatMatrix& m, std::uint64_t prime) {
    if (!is_prime_u64(prime)) throw Error(ErrorKind::BadPrime, std::to_string(prime) + " is not prime");
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const Rational& q = m(r, c);
            if (q == 0) continue;
            const std::uint64_t den = reduce_mod(q.get_den(), prime);
            if (den == 0) throw Error(ErrorKind::BadPrime, "denominator vanishes modulo " + std::to_string(prime));
            a[r * cols + c] = mul_mod(reduce_mod(q.get_num(), prime), pow_mod(den, prime - 2, prime), prime);
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t c = 0; c < cols; ++c) std::swap(a[pivot * cols + c], a[rank * cols + c]);
        const std::uint64_t inv = pow_mod(a[rank * cols + col], prime - 2, prime);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::uint64_t f = mul_mod(a[r * cols + col], inv, prime);
            if (f == 0) continue;
            for (std::size_t c = col; c < cols; ++c) {
                const std::uint64_t sub = mul_mod(f, a[rank * cols + c], prime);
                std::uint64_t& x = a[r * cols + c];
                x = x >= sub ? x - sub : x + prime - sub;
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> mat_kernel(const RatMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<Rational> a = m.entries();
    auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * cols + c]; };

    // Reduced row echelon form.
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t c = 0; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
        const Rational inv = 1 / at(rank, col);
        for (std::size_t c = col; c < cols; ++c) at(rank, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || at(r, col) == 0) continue;
            const Rational f = at(r, col);
            for (std::size_t c = col; c < cols; ++c)
                if (at(rank, c) != 0) at(r, c) -= f * at(rank, c);
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational mat_det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    const Elimination e = fraction_free_eliminate(m);
    if (e.rank < m.rows()) return 0;
    Integer scale = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        scale *= l;
    }
    Rational det(e.pivots.back() * permutation_sign(e.pivot_rows), scale);
    det.canonicalize();
    return det;
}

} // namespace lefkit
