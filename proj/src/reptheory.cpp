#include "lefkit/reptheory.hpp"

#include "lefkit/error.hpp"

namespace lefkit {

bool Weight::dominant() const {
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i - 1] < entries[i]) return false;
    return true;
}

Weight Weight::shifted(long by) const {
    Weight w = *this;
    for (auto& e : w.entries) e += by;
    return w;
}

unsigned ExponentTuple::total() const {
    unsigned t = 0;
    for (unsigned v : k) t += v;
    return t;
}

unsigned ExponentTuple::graded_degree() const {
    unsigned d = 0;
    for (std::size_t i = 0; i < k.size(); ++i) d += static_cast<unsigned>(i + 1) * k[i];
    return d;
}

Integer weyl_dim_gl(const Weight& lambda) {
    if (!lambda.dominant()) throw Error(ErrorKind::NotDominant, "weight is not weakly decreasing");
    const auto& l = lambda.entries;
    Integer num = 1;
    Integer den = 1;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j) {
            num *= l[i] - l[j] + static_cast<long>(j - i);
            den *= static_cast<long>(j - i);
        }
    if (num % den != 0) throw std::logic_error("Weyl dimension is not an integer");
    return num / den;
}

Integer narayana(unsigned n, unsigned k) {
    if (k < 1 || k > n) throw Error(ErrorKind::OutOfRange, "Narayana N(n, k) needs 1 <= k <= n");
    Integer a;
    Integer b;
    mpz_bin_uiui(a.get_mpz_t(), n, k);
    mpz_bin_uiui(b.get_mpz_t(), n, k - 1);
    return a * b / n;
}

HilbertFn narayana_hilbert(unsigned n) {
    if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1");
    HilbertFn h;
    h.socle_degree = n;
    for (unsigned k = 1; k <= n + 1; ++k) h.values.push_back(narayana(n + 1, k).get_ui());
    return h;
}

Rational q_mu(const ExponentTuple& k, const Rational& s, const Rational& d) {
    const std::size_t r = k.k.size();
    Rational product = 1;
    unsigned tail = 0; // k_{i+1} + ... + k_r
    for (std::size_t i = r; i-- > 0;) {
        tail += k.k[i];
        const Rational base = Rational(static_cast<long>(i)) * d / 2 + s;
        for (unsigned l = 0; l < tail; ++l) product *= base - l;
    }
    return product;
}

Weight typeC_weight(const ExponentTuple& k) {
    const std::size_t n = k.k.size();
    Weight w;
    w.entries.assign(n, 0);
    for (std::size_t p = 1; p <= n; ++p) {
        long sum = 0;
        for (std::size_t i = n - p + 1; i <= n; ++i) sum += k.k[i - 1];
        w.entries[p - 1] = -2 * sum;
    }
    return w;
}

std::vector<ExponentTuple> exponent_tuples(unsigned r, unsigned bound) {
    std::vector<ExponentTuple> out;
    ExponentTuple cur{std::vector<unsigned>(r, 0)};
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i == r) {
            out.push_back(cur);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            cur.k[i] = v;
            self(self, i + 1, left - v);
        }
        cur.k[i] = 0;
    };
    rec(rec, 0, bound);
    return out;
}

HilbertFn predicted_hilbert_typeC(unsigned n, unsigned s, std::size_t max_tuples) {
    if (n < 1 || s < 1) throw Error(ErrorKind::OutOfRange, "need n >= 1 and s >= 1");
    Integer count;
    mpz_bin_uiui(count.get_mpz_t(), n + s, n);
    if (!count.fits_ulong_p() || count.get_ui() > max_tuples)
        throw Error(ErrorKind::TooLarge, "too many summands to enumerate: " + count.get_str());
    HilbertFn h;
    h.socle_degree = n * s;
    h.values.assign(n * s + 1, 0);
    for (const auto& k : exponent_tuples(n, s)) h.values[k.graded_degree()] += weyl_dim_gl(typeC_weight(k)).get_ui();
    return h;
}

} // namespace lefkit
