#include "lefkit/poly_io.hpp"

#include "lefkit/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace lefkit {

std::string format_poly(const Poly& p, const std::vector<std::string>& names) {
    if (names.size() != p.nvars()) throw Error(ErrorKind::VarMismatch, "need one name per variable");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest degree first; graded-lex order within a degree.
    std::vector<const Poly::Terms::value_type*> order;
    for (const auto& t : p.terms()) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto* a, const auto* b) { return a->first.degree() > b->first.degree(); });
    for (const auto* term : order) {
        const auto& [m, c] = *term;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != 1 || m.degree() == 0) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (wrote) os << '*';
            os << names[i];
            if (m[i] > 1) os << '^' << m[i];
            wrote = true;
        }
    }
    return os.str();
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& names) : text_(text), nvars_(names.size()) {
        for (std::size_t i = 0; i < names.size(); ++i) index_.emplace(names[i], i);
    }

    Poly parse() {
        Poly out(nvars_);
        skip_space();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip_space();
            if (at_end()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [m, c] = parse_term();
            out.add_term(m, sign * c);
        }
        return out;
    }

private:
    std::pair<Monomial, Rational> parse_term() {
        std::vector<std::uint32_t> e(nvars_, 0);
        Rational c = 1;
        bool any = false;
        while (true) {
            skip_space();
            if (at_end() || peek() == '+' || peek() == '-') break;
            if (peek() == '*') {
                if (!any) fail("dangling '*'");
                ++pos_;
                skip_space();
            }
            if (at_end()) fail("expected factor");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c *= parse_number();
            } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
                const std::size_t start = pos_;
                while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
                const std::string name(text_.substr(start, pos_ - start));
                const auto it = index_.find(name);
                if (it == index_.end()) fail("unknown variable '" + name + "'");
                std::uint32_t power = 1;
                skip_space();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_space();
                    const std::size_t ds = pos_;
                    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                    if (ds == pos_) fail("expected exponent");
                    power = static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(ds, pos_ - ds))));
                }
                e[it->second] += power;
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            any = true;
        }
        if (!any) fail("empty term");
        return {Monomial(std::move(e)), c};
    }

    Rational parse_number() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (!at_end() && peek() == '/') {
            ++pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        return parse_rational(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& names) { return Parser(text, names).parse(); }

} // namespace lefkit
