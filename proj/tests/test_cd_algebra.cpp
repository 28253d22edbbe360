#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace cdindex;
using namespace testsupport;

namespace {

// Product of the per-letter factors, expanded by hand as nested loops.
SubsetPolynomial expand_by_factors(const CdWord& w)
{
    std::vector<std::vector<std::pair<Subset, int>>> factors;
    int pos = 1;
    for (char ch : w.letters()) {
        if (ch == 'c') {
            factors.push_back({{0, 1}, {singleton(pos), 1}});
            pos += 1;
        } else {
            factors.push_back({{singleton(pos), 1}, {singleton(pos + 1), 1}});
            pos += 2;
        }
    }
    SubsetPolynomial out(w.degree());
    std::vector<std::size_t> pick(factors.size(), 0);
    while (true) {
        Subset s = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) s |= factors[i][pick[i]].first;
        out.add(s, 1);
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == factors[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return out;
}

} // namespace

TEST_CASE("cd words")
{
    CHECK(CdWord("ccdcd").degree() == 7);
    CHECK(CdWord("").degree() == 0);
    CHECK_THROWS_AS(CdWord("cx"), ParseError);
    CHECK(CdWord("cc") + CdWord("d") == CdWord("ccd"));
    CHECK(CdWord("ccdc").str() == "c^2dc");
}

TEST_CASE("word enumeration")
{
    CHECK(enumerate_cd_words(2) == std::vector<CdWord>{CdWord("cc"), CdWord("d")});
    CHECK(enumerate_cd_words(3) == std::vector<CdWord>{CdWord("ccc"), CdWord("cd"), CdWord("dc")});
    CHECK(enumerate_cd_words(0).size() == 1);
    std::size_t a = 1, b = 1;
    for (int n = 1; n <= 14; ++n) {
        CHECK(enumerate_cd_words(n).size() == b);
        const auto next = a + b;
        a = b;
        b = next;
    }
    CHECK(enumerate_cd_words(6).size() == 13);
    for (const auto& w : enumerate_cd_words(7)) CHECK(w.degree() == 7);
}

TEST_CASE("polynomial arithmetic")
{
    const auto c = CdPolynomial::c(), d = CdPolynomial::d();
    CHECK(c * c == cd("c^2"));
    const auto base = c * c - Integer(2) * d;
    CHECK(base * base == cd("c^4 - 2*c^2d - 2*dc^2 + 4*dd"));
    CHECK(CdPolynomial::one() * base == base);
    CHECK(base * CdPolynomial::one() == base);
    CHECK(power(base, 0) == CdPolynomial::one());
    CHECK(power(base, 2) == base * base);
    CHECK((c * d - d * c).terms().size() == 2);
    CHECK((base - base).terms().empty());
    CHECK(CdPolynomial{}.str() == "0");
    CHECK(base.is_homogeneous(2));
    CHECK_FALSE((c + d).is_homogeneous(1));
}

TEST_CASE("text format round trip")
{
    for (const char* t : {"c^3 + 3*cd + 3*dc", "c^2 + 2*d", "0", "1", "c", "-d", "c^2dc^2 + 12*cdcd - 5*ddd"})
        CHECK(cd(t).str() == t);
    CHECK(cd("3*cd + c^3 + 3*dc").str() == "c^3 + 3*cd + 3*dc");
    CHECK(cd("-5*ddd + 12*cdcd + c^2dc^2").str() == "c^2dc^2 + 12*cdcd - 5*ddd");
    CHECK(cd("cd + cd") == Integer(2) * cd("cd"));
    CHECK_THROWS_AS(cd("c +"), ParseError);
    CHECK_THROWS_AS(cd("c^"), ParseError);
    CHECK_THROWS_AS(cd("x"), ParseError);
}

TEST_CASE("multiplication is associative and bilinear")
{
    std::mt19937 rng(77);
    for (int i = 0; i < 40; ++i) {
        const auto p = random_cd_polynomial(rng, 2), q = random_cd_polynomial(rng, 3), r = random_cd_polynomial(rng, 2);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + q) == Integer(2) * (p * q));
        CHECK((p + r) * q == p * q + r * q);
    }
}

TEST_CASE("phi expansion")
{
    const auto c = phi_expand(CdWord("c"));
    CHECK(c.terms == std::map<Subset, Integer>{{0, 1}, {singleton(1), 1}});
    const auto d = phi_expand(CdWord("d"));
    CHECK(d.terms == std::map<Subset, Integer>{{singleton(1), 1}, {singleton(2), 1}});
    const auto w = phi_expand(CdWord("ccdcd"));
    CHECK(w.n == 7);
    CHECK(w == expand_by_factors(CdWord("ccdcd")));
    Integer total = 0;
    for (const auto& [s, k] : w.terms) total += k;
    CHECK(total == 32);
    for (const auto& word : enumerate_cd_words(8)) CHECK(phi_expand(word) == expand_by_factors(word));
}

TEST_CASE("phi expansion is linear")
{
    std::mt19937 rng(5);
    for (int i = 0; i < 30; ++i) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        const auto p = random_cd_polynomial(rng, n), q = random_cd_polynomial(rng, n);
        auto lhs = phi_expand(p + Integer(3) * q, n);
        auto rhs = phi_expand(p, n);
        auto q3 = phi_expand(Integer(3) * q, n);
        rhs += q3;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("to_cd")
{
    SubsetPolynomial h(2);
    h.add(0, 1);
    h.add(singleton(1), 3);
    h.add(singleton(2), 3);
    h.add(singleton(1) | singleton(2), 1);
    CHECK(to_cd(h) == cd("c^2 + 2*d"));

    SubsetPolynomial one(0);
    one.add(0, 1);
    CHECK(to_cd(one) == CdPolynomial::one());

    SubsetPolynomial bad(1);
    bad.add(0, 1);
    CHECK_THROWS_AS(to_cd(bad), NotACdPolynomial);

    SubsetPolynomial zero(4);
    CHECK(to_cd(zero) == CdPolynomial{});
}

TEST_CASE("to_cd inverts phi on random polynomials")
{
    std::mt19937 rng(99);
    for (int i = 0; i < 60; ++i) {
        const int n = std::uniform_int_distribution<int>(0, 9)(rng);
        const auto p = random_cd_polynomial(rng, n, 50, 50);
        CHECK(to_cd(phi_expand(p, n)) == p);
    }
}

TEST_CASE("subset keys")
{
    CHECK(subset_key(0).empty());
    CHECK(subset_key(singleton(1) | singleton(3)) == "1,3");
    CHECK(parse_subset_key("1,3", 3) == (singleton(1) | singleton(3)));
    CHECK(parse_subset_key("", 3) == 0);
    CHECK_THROWS(parse_subset_key("4", 3));
    CHECK(complement(singleton(1), 3) == (singleton(2) | singleton(3)));
}
