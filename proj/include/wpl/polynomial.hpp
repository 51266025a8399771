#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse polynomials in three variables with exact rational coefficients.
 *
 * The same type serves both the ring variables x0, x1, x2 of R(p) and the
 * abstract presentation variables x, y, z; only the printed names differ.
 *
 * Text format: a sum of terms `coef*x0^a*x1^b*x2^c`. The coefficient may be
 * omitted when it is 1 and may be a fraction `n/d`. Whitespace is ignored.
 */

#include <array>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"
#include "integer.hpp"

namespace wpl {

using Exponents = std::array<int, 3>;

inline constexpr std::array<std::string_view, 3> ring_variable_names{"x0", "x1", "x2"};
inline constexpr std::array<std::string_view, 3> presentation_variable_names{"x", "y", "z"};

class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational>;

    Polynomial() = default;

    static Polynomial constant(const Rational& c) { return monomial({0, 0, 0}, c); }

    static Polynomial monomial(const Exponents& e, const Rational& c = 1) {
        Polynomial p;
        p.add_term(e, c);
        return p;
    }

    static Polynomial variable(std::size_t index, int power = 1) {
        Exponents e{0, 0, 0};
        e.at(index) = power;
        return monomial(e);
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// True iff the polynomial is a single term.
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(unsigned k) const {
        Polynomial result = constant(1);
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1U) result *= base;
            k >>= 1U;
            if (k > 0) base *= base;
        }
        return result;
    }

    /// Replaces variable i by images[i].
    Polynomial substitute(const std::array<Polynomial, 3>& images) const {
        Polynomial r;
        for (const auto& [e, c] : terms_) {
            Polynomial t = constant(c);
            for (std::size_t i = 0; i < 3; ++i)
                if (e[i] > 0) t *= images[i].pow(static_cast<unsigned>(e[i]));
            r += t;
        }
        return r;
    }

    /// Terms in descending lexicographic exponent order, e.g. "-x0^1*x1^3 - x0^1*x2^4".
    std::string to_string(const std::array<std::string_view, 3>& names = ring_variable_names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            const bool negative = c < 0;
            const Rational mag = negative ? Rational(-c) : c;
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            first = false;

            std::string body;
            const bool constant_term = e == Exponents{0, 0, 0};
            if (mag != 1 || constant_term) body = wpl::to_string(mag);
            for (std::size_t i = 0; i < 3; ++i) {
                if (e[i] == 0) continue;
                if (!body.empty()) body += "*";
                body += std::string(names[i]) + "^" + std::to_string(e[i]);
            }
            out += body;
        }
        return out;
    }

    static Polynomial parse(std::string_view text, const std::array<std::string_view, 3>& names = ring_variable_names) {
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
        if (s.empty()) throw parse_error("empty polynomial");

        Polynomial result;
        std::size_t pos = 0;
        auto fail = [&](const std::string& why) {
            throw parse_error("polynomial parse error at offset " + std::to_string(pos) + ": " + why);
        };
        auto read_digits = [&]() {
            const std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return s.substr(start, pos - start);
        };

        bool first = true;
        while (pos < s.size()) {
            Rational coef = 1;
            if (s[pos] == '+' || s[pos] == '-') {
                if (s[pos] == '-') coef = -1;
                ++pos;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;

            Exponents e{0, 0, 0};
            bool have_factor = false;
            for (;;) {
                if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    Integer num(read_digits());
                    Integer den = 1;
                    if (pos < s.size() && s[pos] == '/') {
                        ++pos;
                        const std::string d = read_digits();
                        if (d.empty()) fail("missing denominator");
                        den = Integer(d);
                        if (den == 0) fail("zero denominator");
                    }
                    coef *= Rational(num, den);
                } else {
                    std::size_t which = 3;
                    for (std::size_t i = 0; i < 3; ++i)
                        if (s.compare(pos, names[i].size(), names[i]) == 0) {
                            which = i;
                            break;
                        }
                    if (which == 3) fail("expected a coefficient or a variable");
                    pos += names[which].size();
                    int power = 1;
                    if (pos < s.size() && s[pos] == '^') {
                        ++pos;
                        const std::string d = read_digits();
                        if (d.empty()) fail("missing exponent");
                        if (d.size() > 9) fail("exponent too large");
                        power = std::stoi(d);
                    }
                    e[which] += power;
                }
                have_factor = true;
                if (pos < s.size() && s[pos] == '*') {
                    ++pos;
                    continue;
                }
                break;
            }
            if (!have_factor) fail("empty term");
            result.add_term(e, coef);
        }
        return result;
    }

private:
    TermMap terms_;
};

} // namespace wpl
