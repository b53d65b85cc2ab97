#include <doctest.h>

#include "paramweyl/groebner.hpp"
#include "paramweyl/oracle.hpp"
#include "paramweyl/parser.hpp"

using namespace paramweyl;

namespace {

WeylOperator op(const char* text, std::size_t n = 1, std::size_t p = 1) {
    return parse_operator(text, n, p);
}

LeftIdealPresentation pres(std::vector<const char*> texts, std::size_t n = 1,
                           std::size_t p = 1) {
    std::vector<WeylOperator> gens;
    for (const char* t : texts) gens.push_back(op(t, n, p));
    return LeftIdealPresentation(n, p, std::move(gens));
}

std::vector<std::string> strings(const std::vector<WeylOperator>& ops) {
    std::vector<std::string> out;
    for (const auto& g : ops) out.push_back(g.to_string());
    return out;
}

std::vector<std::string> strings(const std::vector<CommPoly>& polys) {
    std::vector<std::string> out;
    for (const auto& g : polys) out.push_back(g.to_string());
    return out;
}

} // namespace

TEST_CASE("left division rewrites through the defining relation") {
    // x*d + 1 = d * x, so the remainder against (x) is zero.
    LeftDivision div = left_divide(op("x1*d1 + 1", 1, 0), {op("x1", 1, 0)});
    CHECK(div.remainder.is_zero());
    REQUIRE(div.quotients.size() == 1);
    CHECK(div.quotients[0].to_string() == "d1");
    // ... while x*d - 1 leaves -2: x*d - 1 = d*x - 2.
    LeftDivision div2 = left_divide(op("x1*d1 - 1", 1, 0), {op("x1", 1, 0)});
    CHECK(div2.remainder.to_string() == "-2");
}

TEST_CASE("division reassembles the dividend") {
    std::vector<WeylOperator> divisors = {op("x1*d1 - s1"), op("x1")};
    WeylOperator f = op("x1^2*d1^2 + s1*x1*d1 + s1^2");
    LeftDivision div = left_divide(f, divisors);
    WeylOperator back = div.remainder;
    for (std::size_t i = 0; i < divisors.size(); ++i)
        back = back + weyl_mul(div.quotients[i], divisors[i]);
    CHECK(back == f);
    for (const auto& [m, c] : div.remainder.terms())
        for (const auto& g : divisors) CHECK_FALSE(divides(g.lm(), m));
}

TEST_CASE("remainder of s+1 against the unreduced pair") {
    // s+1 lies in the ideal but its lm s is not divisible by lm(x*d - s) = x*d
    // or lm(x) = x, so division alone cannot see it.
    LeftDivision div = left_divide(op("s1 + 1"), {op("x1*d1 - s1"), op("x1")});
    CHECK(div.remainder.to_string() == "s1 + 1");
}

TEST_CASE("s-pair cancels leading terms") {
    CHECK(s_pair(op("x1", 1, 0), op("d1", 1, 0)).to_string() == "1");
    CHECK(s_pair(op("x1*d1 - s1"), op("x1")).to_string() == "-s1 - 1");
}

TEST_CASE("groebner basis of the canonical example") {
    GroebnerBasisR gb = buchberger_r(pres({"x1*d1 - s1", "x1"}));
    CHECK(gb.certified);
    CHECK(strings(gb.elements) == std::vector<std::string>{"x1", "s1 + 1"});
    CHECK_FALSE(is_unit_ideal(gb));
    CHECK(strings(eliminate_to_a(gb).gens()) ==
          std::vector<std::string>{"s1 + 1"});
}

TEST_CASE("unit ideal is recognized") {
    GroebnerBasisR gb = buchberger_r(pres({"x1", "d1"}, 1, 0));
    CHECK(strings(gb.elements) == std::vector<std::string>{"1"});
    CHECK(is_unit_ideal(gb));
}

TEST_CASE("elimination of the squared example") {
    GroebnerBasisR gb = buchberger_r(pres({"x1*d1 - 2*s1", "x1^2"}));
    CHECK(strings(gb.elements) ==
          std::vector<std::string>{"x1*d1 - 2*s1", "x1^2", "x1*s1 + x1",
                                   "s1^2 + 3/2*s1 + 1/2"});
    CHECK(strings(eliminate_to_a(gb).gens()) ==
          std::vector<std::string>{"s1^2 + 3/2*s1 + 1/2"});
}

TEST_CASE("elimination of the two-variable example") {
    GroebnerBasisR gb =
        buchberger_r(pres({"x1*d1 - s1", "x2*d2 - s2", "x1*x2"}, 2, 2));
    CHECK(strings(eliminate_to_a(gb).gens()) ==
          std::vector<std::string>{"s2*s1 + s2 + s1 + 1"});
}

TEST_CASE("certify_basis rejects a non-basis") {
    std::vector<WeylOperator> not_basis = {op("x1*d1 - s1"), op("x1")};
    CHECK_THROWS_AS(certify_basis(1, 1, not_basis), VerifyError);
    std::vector<WeylOperator> basis = {op("x1"), op("s1 + 1")};
    GroebnerBasisR gb = certify_basis(1, 1, basis);
    CHECK(gb.certified);
}

TEST_CASE("elimination requires a certified basis") {
    GroebnerBasisR gb = buchberger_r(pres({"x1*d1 - s1", "x1"}), false);
    CHECK_FALSE(gb.certified);
    CHECK_THROWS_AS(eliminate_to_a(gb), InvalidArgument);
}

TEST_CASE("reduce_gb keeps an already reduced basis") {
    GroebnerBasisR gb = buchberger_r(pres({"x1*d1 - s1", "x1", "s1 + 1"}));
    GroebnerBasisR red = reduce_gb(gb);
    CHECK(strings(red.elements) == strings(gb.elements));
    // Unchanged inputs keep their element order, even a non-canonical one.
    GroebnerBasisR given =
        certify_basis(1, 1, {op("s1 + 1"), op("x1"), op("x1*d1 - s1")});
    CHECK(strings(reduce_gb(given).elements) ==
          std::vector<std::string>{"s1 + 1", "x1", "x1*d1 - s1"});
}

TEST_CASE("reduce_gb rewrites a reducible leading coefficient") {
    // (s+1)*d + x has plc s+1 inside the A-part, so it reduces away.
    GroebnerBasisR gb =
        certify_basis(1, 1, {op("s1 + 1"), op("x1"), op("(s1 + 1)*d1 + x1")});
    GroebnerBasisR red = reduce_gb(gb);
    CHECK(strings(red.elements) == std::vector<std::string>{"x1", "s1 + 1"});
    // Ideal equality both ways, oracle-confirmed.
    for (const auto& e : red.elements)
        CHECK(bounded_membership(e, gb.elements, 6).in());
    for (const auto& e : gb.elements)
        CHECK(bounded_membership(e, red.elements, 6).in());
}

TEST_CASE("reduced basis leading coefficients avoid the contraction") {
    GroebnerBasisR red = reduce_gb(buchberger_r(pres({"x1*d1 - 2*s1", "x1^2"})));
    const std::vector<CommPoly> a_gb = buchberger_a(eliminate_to_a(red));
    for (const auto& e : red.elements)
        if (!e.in_a()) CHECK_FALSE(membership_a(plc(e), a_gb));
}

TEST_CASE("h polynomial multiplies the off-prime leading coefficients") {
    GroebnerBasisR gb = buchberger_r(pres({"x1*d1 - s1", "x1", "s1 + 1"}));
    CommIdeal prime(1, 1, {op("s1 + 1").to_comm()});
    // Element x1 has plc 1; s1 + 1 lies in the prime and is excluded.
    CHECK(h_polynomial(gb, prime).to_string() == "1");

    GroebnerBasisR gb2 = certify_basis(1, 1, {op("2*(s1 - 1)*x1*d1 + 1")});
    CHECK(h_polynomial(gb2, prime).to_string() == "s1 - 1");
}

TEST_CASE("specialization keeps leading monomials and certifies") {
    GroebnerBasisR gb =
        certify_basis(1, 1, {op("x1"), op("x1*d1 - s1"), op("s1 + 1")});
    CommIdeal prime(1, 1, {op("s1 + 1").to_comm()});
    RationalPoint alpha{{Rat(-1)}};
    GroebnerBasisR spec = specialize_gb(gb, prime, alpha);
    CHECK(spec.p == 0);
    CHECK(spec.certified);
    CHECK(strings(spec.elements) ==
          std::vector<std::string>{"x1", "x1*d1 + 1"});
}

TEST_CASE("specialization guards its preconditions") {
    GroebnerBasisR gb = buchberger_r(pres({"x1*d1 - s1", "x1"}));
    CommIdeal prime(1, 1, {op("s1 + 1").to_comm()});
    RationalPoint off{{Rat(0)}};
    CHECK_THROWS_AS(specialize_gb(gb, prime, off), VerifyError);
    // h = s1 - 1 vanishes at the sample point 1 in Z(s1 - 1).
    GroebnerBasisR gb2 = certify_basis(1, 1, {op("(s1 - 1)*x1*d1 + 1")});
    CommIdeal prime2(1, 1, {op("s1 - 1").to_comm()});
    CHECK_THROWS_AS(specialize_gb(gb2, prime2, RationalPoint{{Rat(1)}}),
                    VerifyError);
}

TEST_CASE("fiber nonzero exactly off the zero set of s+1") {
    LeftIdealPresentation J = pres({"x1*d1 - s1", "x1"});
    CHECK(fiber_nonzero(J, RationalPoint{{Rat(-1)}}));
    CHECK_FALSE(fiber_nonzero(J, RationalPoint{{Rat(0)}}));
    CHECK_FALSE(fiber_nonzero(J, RationalPoint{{Rat(1, 2)}}));
}

TEST_CASE("contraction check accepts the true prime") {
    LeftIdealPresentation J = pres({"x1*d1 - s1", "x1"});
    ContractionCheck chk =
        verify_prime_contraction(J, CommIdeal(1, 1, {op("s1 + 1").to_comm()}));
    CHECK(chk.ok);
    CHECK(strings(chk.contraction) == std::vector<std::string>{"s1 + 1"});
}

TEST_CASE("contraction check rejects a wrong prime with a witness") {
    LeftIdealPresentation J = pres({"x1*d1 - s1", "x1"});
    ContractionCheck chk =
        verify_prime_contraction(J, CommIdeal(1, 1, {op("s1").to_comm()}));
    CHECK_FALSE(chk.ok);
    REQUIRE(chk.witness.has_value());
    CHECK(chk.witness->to_string() == "1");
    CHECK(chk.detail == "element of the contraction lies outside the prime");
}

TEST_CASE("contraction check needs the radical, not a power of it") {
    // (R*s^2 + R*s) cap A = (s).
    LeftIdealPresentation J = pres({"s1^2"});
    CHECK(verify_prime_contraction(J, CommIdeal(1, 1, {op("s1").to_comm()})).ok);
    // (J1 + R*(s+1)^2) cap A = (s+1), strictly above ((s+1)^2).
    LeftIdealPresentation J1 = pres({"x1*d1 - s1", "x1"});
    ContractionCheck sq = verify_prime_contraction(
        J1, CommIdeal(1, 1, {op("(s1 + 1)^2").to_comm()}));
    CHECK_FALSE(sq.ok);
    REQUIRE(sq.witness.has_value());
    CHECK(sq.witness->to_string() == "s1 + 1");
    CHECK(sq.detail == "element of the contraction lies outside the prime");
}

TEST_CASE("sample generation walks the rational zero set") {
    CommIdeal prime(2, 2, {op("s1 + 1", 2, 2).to_comm()});
    CommPoly avoid = op("s2 + 1", 2, 2).to_comm();
    std::vector<RationalPoint> pts = sample_zero_set(prime, avoid, 6);
    REQUIRE(pts.size() == 6);
    for (const auto& pt : pts) {
        CHECK(pt.coords[0] == Rat(-1));
        CHECK(avoid.eval(pt) != 0);
    }
    // Excluded points are skipped.
    std::vector<RationalPoint> more = sample_zero_set(prime, avoid, 3, pts);
    for (const auto& pt : more)
        for (const auto& old : pts) CHECK(pt.coords != old.coords);
}

TEST_CASE("sample generation requires a linear prime") {
    CommIdeal quad(2, 2, {op("s1^2 - 1", 2, 2).to_comm()});
    CHECK_THROWS_AS(sample_zero_set(quad, CommPoly::constant(2, 2, 1), 2),
                    InvalidArgument);
    CommIdeal empty(2, 2, {op("s1 + 1", 2, 2).to_comm(),
                           op("s1 + 2", 2, 2).to_comm()});
    CHECK_THROWS_AS(sample_zero_set(empty, CommPoly::constant(2, 2, 1), 1),
                    InvalidArgument);
}

TEST_CASE("dense open certificate on the two-variable pipeline") {
    LeftIdealPresentation J =
        pres({"x1*d1 - s1", "x2*d2 - s2", "x1*x2"}, 2, 2);
    CommIdeal prime(2, 2, {op("s1 + 1", 2, 2).to_comm()});
    FiberCertificate cert = dense_open_certificate(J, prime, {}, 8);
    CHECK(cert.verified >= 8);
    CHECK_FALSE(cert.h.is_zero());
    const std::vector<CommPoly> p_gb = buchberger_a(prime);
    CHECK_FALSE(membership_a(cert.h, p_gb));
    for (const auto& s : cert.samples)
        if (s.admissible) CHECK(s.fiber);
}

TEST_CASE("dense open certificate records skipped user samples") {
    LeftIdealPresentation J = pres({"x1*d1 - s1", "x1"});
    CommIdeal prime(1, 1, {op("s1 + 1").to_comm()});
    std::vector<RationalPoint> user = {RationalPoint{{Rat(0)}},
                                       RationalPoint{{Rat(-1)}}};
    FiberCertificate cert = dense_open_certificate(J, prime, user, 0);
    REQUIRE(cert.samples.size() == 2);
    CHECK_FALSE(cert.samples[0].admissible);
    CHECK(cert.samples[0].skip_reason.find("outside Z(prime)") == 0);
    CHECK(cert.samples[1].admissible);
    CHECK(cert.samples[1].fiber);
    CHECK(cert.verified == 1);
}

TEST_CASE("dense open rejects a non-prime contraction") {
    LeftIdealPresentation J = pres({"x1*d1 - s1", "x1"});
    CommIdeal wrong(1, 1, {op("s1").to_comm()});
    CHECK_THROWS_AS(dense_open_certificate(J, wrong, {}, 2), VerifyError);
}
