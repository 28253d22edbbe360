#pragma once

/**
 * @file cd_polynomial.hpp
 * @brief Polynomials in the non-commuting letters c (degree 1) and d (degree 2).
 *
 * Text form: terms in canonical word order (lexicographic, c < d), runs of
 * c written with exponents, coefficients other than 1 joined with '*':
 *
 *     c^3 + 3*cd + 3*dc
 *     c^2 - 2*d
 *     0
 */

#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdindex/error.hpp"
#include "cdindex/numeric.hpp"

namespace cdindex {

class CdWord {
public:
    CdWord() = default;
    explicit CdWord(std::string letters) : letters_(std::move(letters))
    {
        for (char ch : letters_)
            if (ch != 'c' && ch != 'd') throw ParseError("cd-word letters must be 'c' or 'd': '" + letters_ + "'");
    }

    static CdWord c() { return CdWord("c"); }
    static CdWord d() { return CdWord("d"); }

    const std::string& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    int degree() const
    {
        int deg = 0;
        for (char ch : letters_) deg += (ch == 'c') ? 1 : 2;
        return deg;
    }

    CdWord operator+(const CdWord& o) const
    {
        CdWord w;
        w.letters_ = letters_ + o.letters_;
        return w;
    }

    // Canonical order: lexicographic with c < d.
    auto operator<=>(const CdWord&) const = default;
    bool operator==(const CdWord&) const = default;

    /// "c^2dc" style; the empty word renders as "".
    std::string str() const
    {
        std::string out;
        for (std::size_t i = 0; i < letters_.size();) {
            if (letters_[i] == 'd') {
                out += 'd';
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < letters_.size() && letters_[j] == 'c') ++j;
            out += 'c';
            if (j - i > 1) out += "^" + std::to_string(j - i);
            i = j;
        }
        return out;
    }

private:
    std::string letters_;
};

template <typename Coeff>
class BasicCdPolynomial {
public:
    using Terms = std::map<CdWord, Coeff>;

    BasicCdPolynomial() = default;
    BasicCdPolynomial(const CdWord& w, Coeff k = Coeff(1)) { add(w, std::move(k)); }

    static BasicCdPolynomial one() { return BasicCdPolynomial(CdWord{}); }
    static BasicCdPolynomial c() { return BasicCdPolynomial(CdWord::c()); }
    static BasicCdPolynomial d() { return BasicCdPolynomial(CdWord::d()); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Coeff coefficient(const CdWord& w) const
    {
        const auto it = terms_.find(w);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add(const CdWord& w, const Coeff& k)
    {
        if (k == 0) return;
        auto [it, fresh] = terms_.try_emplace(w, k);
        if (!fresh) {
            it->second += k;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// True when every word has degree n (the zero polynomial qualifies).
    bool is_homogeneous(int n) const
    {
        for (const auto& [w, k] : terms_)
            if (w.degree() != n) return false;
        return true;
    }

    BasicCdPolynomial& operator+=(const BasicCdPolynomial& o)
    {
        for (const auto& [w, k] : o.terms_) add(w, k);
        return *this;
    }
    BasicCdPolynomial& operator-=(const BasicCdPolynomial& o)
    {
        for (const auto& [w, k] : o.terms_) add(w, -k);
        return *this;
    }
    BasicCdPolynomial& operator*=(const Coeff& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, k] : terms_) k *= s;
        return *this;
    }

    friend BasicCdPolynomial operator+(BasicCdPolynomial a, const BasicCdPolynomial& b) { return a += b; }
    friend BasicCdPolynomial operator-(BasicCdPolynomial a, const BasicCdPolynomial& b) { return a -= b; }
    friend BasicCdPolynomial operator-(BasicCdPolynomial a) { return a *= Coeff(-1); }
    friend BasicCdPolynomial operator*(BasicCdPolynomial a, const Coeff& s) { return a *= s; }
    friend BasicCdPolynomial operator*(const Coeff& s, BasicCdPolynomial a) { return a *= s; }

    /// Non-commutative product: concatenate words, multiply coefficients.
    friend BasicCdPolynomial operator*(const BasicCdPolynomial& a, const BasicCdPolynomial& b)
    {
        BasicCdPolynomial out;
        for (const auto& [u, x] : a.terms_)
            for (const auto& [v, y] : b.terms_) out.add(u + v, x * y);
        return out;
    }

    bool operator==(const BasicCdPolynomial&) const = default;

    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, k] : terms_) {
            const bool neg = k < 0;
            const Coeff mag = neg ? Coeff(-k) : k;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            if (w.empty())
                os << to_string(mag);
            else if (mag == 1)
                os << w.str();
            else
                os << to_string(mag) << '*' << w.str();
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BasicCdPolynomial& p) { return os << p.str(); }

private:
    Terms terms_;
};

using CdPolynomial = BasicCdPolynomial<Integer>;
using RationalCdPolynomial = BasicCdPolynomial<Rational>;

inline RationalCdPolynomial to_rational(const CdPolynomial& p)
{
    RationalCdPolynomial out;
    for (const auto& [w, k] : p.terms()) out.add(w, Rational(k));
    return out;
}

inline CdPolynomial to_integral(const RationalCdPolynomial& p)
{
    CdPolynomial out;
    for (const auto& [w, k] : p.terms()) {
        if (!is_integral(k))
            throw NonIntegralCoefficients("coefficient " + to_string(k) + " of " + w.str() + " is not an integer");
        out.add(w, to_integer(k));
    }
    return out;
}

/// p^k by repeated multiplication; p^0 is the empty word.
template <typename Coeff>
BasicCdPolynomial<Coeff> power(const BasicCdPolynomial<Coeff>& p, int k)
{
    auto out = BasicCdPolynomial<Coeff>::one();
    for (int i = 0; i < k; ++i) out = out * p;
    return out;
}

/// Words of degree n, in canonical order. There are Fibonacci(n+1) of them.
inline std::vector<CdWord> enumerate_cd_words(int n)
{
    if (n < 0) throw OutOfRange("cd-word degree must be non-negative");
    std::vector<CdWord> out;
    std::string cur;
    const auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        cur.push_back('c');
        self(self, left - 1);
        cur.pop_back();
        if (left >= 2) {
            cur.push_back('d');
            self(self, left - 2);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

namespace detail {

class CdParser {
public:
    explicit CdParser(std::string_view s) : s_(s) {}

    CdPolynomial parse()
    {
        CdPolynomial out;
        skip();
        if (at_end()) throw error("empty input");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = (peek() == '-') ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw error("expected '+' or '-'");
            }
            first = false;
            auto [w, k] = term();
            out.add(w, sign < 0 ? Integer(-k) : k);
            skip();
        }
        return out;
    }

private:
    std::pair<CdWord, Integer> term()
    {
        Integer k = 1;
        bool have_number = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            k = number();
            have_number = true;
            skip();
            if (peek() == '*') {
                ++pos_;
                skip();
            } else {
                return {CdWord{}, k};
            }
        }
        std::string letters;
        while (peek() == 'c' || peek() == 'd') {
            const char ch = peek();
            ++pos_;
            long reps = 1;
            if (peek() == '^') {
                ++pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek()))) throw error("expected exponent");
                reps = static_cast<long>(number());
            }
            letters.append(static_cast<std::size_t>(reps), ch);
        }
        if (letters.empty() && have_number) throw error("expected a word after '*'");
        if (letters.empty()) throw error("expected a term");
        return {CdWord(letters), k};
    }

    Integer number()
    {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
        return Integer(digits);
    }

    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    ParseError error(const std::string& what) const
    {
        return ParseError("cd-polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline CdPolynomial parse_cd(std::string_view text)
{
    if (text == "0") return {};
    return detail::CdParser(text).parse();
}

} // namespace cdindex
