#include <doctest.h>

#include <vector>

#include "paramweyl/monomial.hpp"

using namespace paramweyl;

namespace {

Monomial make(std::size_t n, std::size_t p, std::vector<std::uint32_t> x,
              std::vector<std::uint32_t> d, std::vector<std::uint32_t> s) {
    Monomial m(n, p);
    for (std::size_t i = 0; i < n; ++i) m.set_x(i, x[i]);
    for (std::size_t i = 0; i < n; ++i) m.set_d(i, d[i]);
    for (std::size_t i = 0; i < p; ++i) m.set_s(i, s[i]);
    return m;
}

// Reference order: compare the exponent tuple (d1..dn, xn..x1, sp..s1)
// entry by entry.
std::vector<std::uint32_t> key_r(const Monomial& m) {
    std::vector<std::uint32_t> key;
    for (std::size_t i = 0; i < m.n(); ++i) key.push_back(m.d_exp(i));
    for (std::size_t i = m.n(); i-- > 0;) key.push_back(m.x_exp(i));
    for (std::size_t i = m.p(); i-- > 0;) key.push_back(m.s_exp(i));
    return key;
}

} // namespace

TEST_CASE("unit monomial") {
    Monomial m = Monomial::one(2, 1);
    CHECK(m.is_one());
    CHECK(m.in_a());
    CHECK(m.in_dn());
    CHECK(m.total_degree() == 0);
    CHECK(m.to_string() == "1");
}

TEST_CASE("print order is x, d, s with descending indices") {
    Monomial m = make(2, 2, {1, 2}, {3, 0}, {0, 4});
    CHECK(m.to_string() == "x2^2*x1*d1^3*s2^4");
    CHECK(m.total_degree() == 10);
    CHECK_FALSE(m.in_a());
    CHECK_FALSE(m.in_dn());
}

TEST_CASE("lex order on R matches the reference key order") {
    // All monomials with exponents <= 1 in n = 1, p = 2.
    std::vector<Monomial> all;
    for (std::uint32_t x = 0; x <= 1; ++x)
        for (std::uint32_t d = 0; d <= 1; ++d)
            for (std::uint32_t s1 = 0; s1 <= 1; ++s1)
                for (std::uint32_t s2 = 0; s2 <= 1; ++s2)
                    all.push_back(make(1, 2, {x}, {d}, {s1, s2}));
    for (const Monomial& a : all)
        for (const Monomial& b : all) {
            const Ord got = cmp_r(a, b);
            const Ord want = key_r(a) < key_r(b)   ? Ord::LT
                             : key_r(a) > key_r(b) ? Ord::GT
                                                   : Ord::EQ;
            CHECK(got == want);
        }
}

TEST_CASE("d outranks x, x outranks s, higher x index first") {
    Monomial d1 = make(2, 1, {0, 0}, {1, 0}, {0});
    Monomial x2 = make(2, 1, {0, 1}, {0, 0}, {0});
    Monomial x1 = make(2, 1, {1, 0}, {0, 0}, {0});
    Monomial s1 = make(2, 1, {0, 0}, {0, 0}, {1});
    CHECK(cmp_r(d1, x2) == Ord::GT);
    CHECK(cmp_r(x2, x1) == Ord::GT);
    CHECK(cmp_r(x1, s1) == Ord::GT);
    CHECK(cmp_dn(d1, x2) == Ord::GT);
}

TEST_CASE("cmp_a compares from the top s variable down") {
    Monomial s1s2 = make(0, 2, {}, {}, {1, 1});
    Monomial s2 = make(0, 2, {}, {}, {0, 1});
    Monomial s1 = make(0, 2, {}, {}, {1, 0});
    CHECK(cmp_a(s1s2, s2) == Ord::GT);
    CHECK(cmp_a(s2, s1) == Ord::GT);
    CHECK(cmp_a(s1, s1) == Ord::EQ);
}

TEST_CASE("divisibility and lcm are entry-wise") {
    Monomial a = make(1, 1, {1}, {2}, {0});
    Monomial b = make(1, 1, {2}, {2}, {1});
    CHECK(divides(a, b));
    CHECK_FALSE(divides(b, a));
    Monomial q = b.quotient_by(a);
    CHECK(q == make(1, 1, {1}, {0}, {1}));
    Monomial c = make(1, 1, {0}, {3}, {2});
    CHECK(lcm_exp(b, c) == make(1, 1, {2}, {3}, {2}));
}

TEST_CASE("block projections keep the right exponents") {
    Monomial m = make(2, 1, {1, 0}, {0, 2}, {3});
    CHECK(m.a_part() == make(2, 1, {0, 0}, {0, 0}, {3}));
    CHECK(m.dn_part() == make(2, 1, {1, 0}, {0, 2}, {0}));
    Monomial flat = m.drop_s();
    CHECK(flat.p() == 0);
    CHECK(flat.x_exp(0) == 1);
    CHECK(flat.d_exp(1) == 2);
}

TEST_CASE("mul adds exponents") {
    Monomial a = make(1, 1, {1}, {2}, {3});
    Monomial b = make(1, 1, {4}, {5}, {6});
    CHECK(a.mul(b) == make(1, 1, {5}, {7}, {9}));
}
