#include <doctest.h>

#include "paramweyl/parser.hpp"
#include "paramweyl/weyl.hpp"
#include "test_support.hpp"

using namespace paramweyl;

namespace {

WeylOperator op(const char* text, std::size_t n = 1, std::size_t p = 1) {
    return parse_operator(text, n, p);
}

} // namespace

TEST_CASE("defining relation d*x = x*d + 1") {
    CHECK(op("d1*x1", 1, 0).to_string() == "x1*d1 + 1");
    CHECK(op("d1*x1 - x1*d1", 1, 0).to_string() == "1");
}

TEST_CASE("normal ordering of higher powers") {
    // d^2 x^2 = x^2 d^2 + 4 x d + 2.
    CHECK(op("d1^2*x1^2", 1, 0).to_string() == "x1^2*d1^2 + 4*x1*d1 + 2");
    // d^3 x = x d^3 + 3 d^2.
    CHECK(op("d1^3*x1", 1, 0).to_string() == "x1*d1^3 + 3*d1^2");
}

TEST_CASE("distinct indices commute") {
    CHECK(op("d1*x2", 2, 0) == op("x2*d1", 2, 0));
    CHECK(op("d2*x2", 2, 0).to_string() == "x2*d2 + 1");
}

TEST_CASE("s variables are central") {
    CHECK(op("s1*d1") == op("d1*s1"));
    CHECK(op("s1*x1") == op("x1*s1"));
}

TEST_CASE("parametric split") {
    WeylOperator P = op("x1*d1 - s1");
    ParametricSplit sp = parametric_split(P);
    CHECK(sp.plm.to_string() == "x1*d1");
    CHECK(sp.plc.to_string() == "1");
    CHECK(sp.tail.to_string() == "-s1");

    WeylOperator Q = op("(s1+1)*x1*d1 + s1*x1 + 2");
    ParametricSplit sq = parametric_split(Q);
    CHECK(sq.plm.to_string() == "x1*d1");
    CHECK(sq.plc.to_string() == "s1 + 1");
    CHECK(sq.tail.to_string() == "x1*s1 + 2");

    WeylOperator a = op("s1 + 1");
    ParametricSplit sa = parametric_split(a);
    CHECK(sa.plm.is_one());
    CHECK(sa.plc.to_string() == "s1 + 1");
    CHECK(sa.tail.is_zero());
}

TEST_CASE("split reassembles the operator") {
    testsupport::RandomOps gen(0xABCDEF01);
    for (int i = 0; i < 200; ++i) {
        WeylOperator P = gen.nonzero_op();
        ParametricSplit sp = parametric_split(P);
        WeylOperator back = weyl_mul(WeylOperator::from_comm(sp.plc),
                                     WeylOperator::from_term(sp.plm, 1)) +
                            sp.tail;
        CHECK(back == P);
        // lm factors through the split.
        CHECK(lm_r(P) == sp.plc.lm().mul(sp.plm));
    }
}

TEST_CASE("specialization is evaluation at the parameters") {
    WeylOperator P = op("(s1+1)*x1*d1 + s1");
    RationalPoint alpha{{Rat(2)}};
    WeylOperator Pa = specialize(P, alpha);
    CHECK(Pa.p() == 0);
    CHECK(Pa.to_string() == "3*x1*d1 + 2");

    RationalPoint minus_one{{Rat(-1)}};
    CHECK(specialize(P, minus_one).to_string() == "-1");
}

TEST_CASE("specialization is a ring homomorphism") {
    testsupport::RandomOps gen(0x5151AA77);
    for (int i = 0; i < 200; ++i) {
        WeylOperator P = gen.op();
        WeylOperator Q = gen.op();
        RationalPoint alpha = gen.point();
        CHECK(specialize(P + Q, alpha) == specialize(P, alpha) + specialize(Q, alpha));
        CHECK(specialize(weyl_mul(P, Q), alpha) ==
              weyl_mul(specialize(P, alpha), specialize(Q, alpha)));
    }
}

TEST_CASE("zero operator has no leading data") {
    WeylOperator z(1, 1);
    CHECK(z.is_zero());
    CHECK_THROWS_AS(z.lm(), InvalidArgument);
    CHECK_THROWS_AS((void)z.lc(), InvalidArgument);
}

TEST_CASE("presentation validates generator contexts") {
    std::vector<WeylOperator> gens = {op("x1", 1, 1)};
    CHECK_NOTHROW(LeftIdealPresentation(1, 1, gens));
    CHECK_THROWS_AS(LeftIdealPresentation(2, 1, gens), InvalidArgument);
}
