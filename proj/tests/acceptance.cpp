#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "paramweyl/groebner.hpp"
#include "paramweyl/oracle.hpp"
#include "paramweyl/parser.hpp"
#include "paramweyl/primary.hpp"
#include "test_support.hpp"

using namespace paramweyl;

namespace {

struct Failure {
    std::string message;
};

void expect(bool ok, const std::string& message) {
    if (!ok) throw Failure{message};
}

WeylOperator op(const char* text, std::size_t n, std::size_t p) {
    return parse_operator(text, n, p);
}

LeftIdealPresentation pres(std::vector<const char*> texts, std::size_t n,
                           std::size_t p) {
    std::vector<WeylOperator> gens;
    for (const char* t : texts) gens.push_back(op(t, n, p));
    return LeftIdealPresentation(n, p, std::move(gens));
}

CommIdeal comm(std::vector<const char*> texts, std::size_t p) {
    std::vector<CommPoly> gens;
    for (const char* t : texts) gens.push_back(op(t, 0, p).to_comm());
    return CommIdeal(0, p, std::move(gens));
}

std::vector<std::string> strings(const std::vector<CommPoly>& polys) {
    std::vector<std::string> out;
    for (const auto& g : polys) out.push_back(g.to_string());
    return out;
}

const LeftIdealPresentation& j1() {
    static const LeftIdealPresentation J = pres({"x1*d1 - s1", "x1"}, 1, 1);
    return J;
}

const LeftIdealPresentation& j2() {
    static const LeftIdealPresentation J = pres({"x1*d1 - 2*s1", "x1^2"}, 1, 1);
    return J;
}

const LeftIdealPresentation& j3() {
    static const LeftIdealPresentation J =
        pres({"x1*d1 - s1", "x2*d2 - s2", "x1*x2"}, 2, 2);
    return J;
}

// Shared between AC-3 and AC-4.
const FiberCertificate& j3_certificate() {
    static const FiberCertificate cert = dense_open_certificate(
        j3(), CommIdeal(2, 2, {op("s1 + 1", 2, 2).to_comm()}), {}, 20);
    return cert;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& s : parts) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

void check_elimination(const LeftIdealPresentation& J,
                       const std::vector<std::string>& want) {
    const GroebnerBasisR gb = buchberger_r(J);
    const CommIdeal contraction = eliminate_to_a(gb);
    expect(strings(contraction.gens()) == want,
           "eliminated ideal mismatch: got {" +
               join(strings(contraction.gens())) + "}, want {" + join(want) +
               "}");
    for (const auto& g : contraction.gens())
        expect(bounded_membership(WeylOperator::from_comm(g), J.generators, 6)
                   .in(),
               "oracle could not confirm " + g.to_string() +
                   " within degree 6");
}

void ac1() {
    const auto start = std::chrono::steady_clock::now();
    check_elimination(j1(), {"s1 + 1"});
    check_elimination(j2(), {"s1^2 + 3/2*s1 + 1/2"});
    check_elimination(j3(), {"s2*s1 + s2 + s1 + 1"});
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    expect(secs < 10.0, "eliminations took " + std::to_string(secs) + "s");
}

void ac2() {
    expect(verify_prime_contraction(
               j1(), CommIdeal(1, 1, {op("s1 + 1", 1, 1).to_comm()}))
               .ok,
           "J1 against (s1 + 1) failed");
    expect(verify_prime_contraction(
               j2(), CommIdeal(1, 1, {op("2*s1 + 1", 1, 1).to_comm()}))
               .ok,
           "J2 against (2*s1 + 1) failed");
    expect(verify_prime_contraction(
               j3(), CommIdeal(2, 2, {op("s1 + 1", 2, 2).to_comm(),
                                      op("s2 + 1", 2, 2).to_comm()}))
               .ok,
           "J3 against (s1 + 1, s2 + 1) failed");
    const ContractionCheck wrong = verify_prime_contraction(
        j1(), CommIdeal(1, 1, {op("s1", 1, 1).to_comm()}));
    expect(!wrong.ok, "J1 against (s1) was wrongly accepted");
    expect(wrong.witness.has_value() && wrong.witness->to_string() == "1",
           "expected the witness 1 for J1 against (s1)");
}

void ac3() {
    const auto start = std::chrono::steady_clock::now();
    const FiberCertificate& cert = j3_certificate();

    const std::vector<CommPoly> p_gb =
        buchberger_a(CommIdeal(2, 2, {op("s1 + 1", 2, 2).to_comm()}));
    expect(!membership_a(cert.h, p_gb), "h lies in the prime");
    expect(cert.verified >= 20, "only " + std::to_string(cert.verified) +
                                    " verified samples, want 20");
    for (const auto& s : cert.samples)
        expect(!s.admissible || s.fiber,
               "zero fiber at " + s.point.to_string());

    // Off the zero locus of (s1+1)(s2+1) every fiber is zero.
    const CommPoly b =
        op("(s1 + 1)*(s2 + 1)", 2, 2).to_comm();
    std::size_t checked = 0;
    for (int i = -2; i <= 3 && checked < 20; ++i)
        for (int j = -2; j <= 3 && checked < 20; ++j) {
            RationalPoint alpha{{Rat(i), Rat(j)}};
            if (b.eval(alpha) == 0) continue;
            expect(!fiber_nonzero(j3(), alpha),
                   "nonzero fiber off the zero locus at " + alpha.to_string());
            ++checked;
        }
    expect(checked >= 20, "only " + std::to_string(checked) +
                              " off-locus points checked, want 20");

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    expect(secs < 30.0, "fiber checks took " + std::to_string(secs) + "s");
}

void ac4() {
    const FiberCertificate& cert = j3_certificate();
    const CommIdeal prime = cert.prime;
    const std::vector<CommPoly> p_gb = buchberger_a(prime);

    std::vector<WeylOperator> kept;
    for (const auto& e : cert.basis.elements)
        if (!(e.in_a() && membership_a(e.to_comm(), p_gb))) kept.push_back(e);

    std::size_t admissible = 0;
    for (const auto& s : cert.samples) {
        if (!s.admissible) continue;
        ++admissible;
        const GroebnerBasisR spec = specialize_gb(cert.basis, prime, s.point);
        expect(spec.certified, "specialized basis lost its certificate at " +
                                   s.point.to_string());
        expect(spec.elements.size() == kept.size(),
               "specialized basis dropped elements at " + s.point.to_string());
        for (std::size_t i = 0; i < kept.size(); ++i)
            expect(spec.elements[i].lm() == plm(kept[i]).drop_s(),
                   "leading monomial moved under specialization at " +
                       s.point.to_string());
    }
    expect(admissible >= 20, "only " + std::to_string(admissible) +
                                 " admissible samples reached AC-4");
}

void check_reduced(const GroebnerBasisR& gb) {
    const GroebnerBasisR red = reduce_gb(gb);
    const std::vector<CommPoly> contraction_gb =
        buchberger_a(eliminate_to_a(red));
    for (const auto& e : red.elements)
        if (!e.in_a())
            expect(!membership_a(plc(e), contraction_gb),
                   "leading coefficient of " + e.to_string() +
                       " lies in the contraction");
    for (const auto& e : red.elements)
        expect(bounded_membership(e, gb.elements, 6).in(),
               "reduced element " + e.to_string() +
                   " not oracle-confirmed in the input basis");
    for (const auto& e : gb.elements)
        expect(bounded_membership(e, red.elements, 6).in(),
               "input element " + e.to_string() +
                   " not oracle-confirmed in the reduced basis");
}

void ac5() {
    check_reduced(buchberger_r(j1()));
    check_reduced(buchberger_r(j2()));
    check_reduced(buchberger_r(j3()));
    std::vector<WeylOperator> aug = j3().generators;
    aug.push_back(op("s1 + 1", 2, 2));
    check_reduced(buchberger_r(LeftIdealPresentation(2, 2, std::move(aug))));
}

// The three lemma21 assertions, re-checked outside the library.
void check_multiplier(const PrimaryComponentInput& input, const CommPoly& f) {
    const std::vector<CommPoly> q_gb = buchberger_a(input.q);
    expect(membership_a(f, buchberger_a(input.p)), "f outside p");
    expect(!membership_a(f, q_gb), "f inside q");
    for (const auto& g : input.p.gens())
        expect(membership_a(f * g, q_gb), "f*g outside q");
}

void ac6() {
    PrimaryComponentInput double_point(comm({"s1^2"}, 1), comm({"s1"}, 1));
    const CommPoly f1 = primary_multiplier(double_point);
    expect(f1.to_string() == "s1", "lemma21 on ((s1^2), (s1)) returned " +
                                       f1.to_string());
    check_multiplier(double_point, f1);

    PrimaryComponentInput planar(comm({"s1^2", "s2"}, 2), comm({"s1", "s2"}, 2));
    const CommPoly f2 = primary_multiplier(planar);
    expect(f2.to_string() == "s1",
           "lemma21 on ((s1^2, s2), (s1, s2)) returned " + f2.to_string());
    check_multiplier(planar, f2);

    std::vector<PrimaryComponentInput> comps;
    comps.emplace_back(comm({"s1^2"}, 1), comm({"s1"}, 1));
    comps.emplace_back(comm({"s1 - 1"}, 1), comm({"s1 - 1"}, 1));
    const RadicalMultiplierResult res = radical_multiplier(comps, 0);
    expect(res.h.to_string() == "s1^2 - s1",
           "thm22-h returned " + res.h.to_string());
    expect(!membership_a(res.h, buchberger_a(comps[0].q)), "h inside q_0");
    const std::vector<CommPoly> meet_gb = buchberger_a(
        intersect_ideals(comps[0].q, comps[1].q));
    for (const auto& g : comps[0].p.gens())
        expect(membership_a(res.h * g, meet_gb),
               "h*" + g.to_string() + " outside the intersection");
}

void ac7() {
    testsupport::RandomOps gen(0xAC7AC7AC);
    for (int i = 0; i < 1000; ++i) {
        const WeylOperator P = gen.op();
        const WeylOperator Q = gen.op();
        const WeylOperator T = gen.op();
        expect(weyl_mul(weyl_mul(P, Q), T) == weyl_mul(P, weyl_mul(Q, T)),
               "associativity failed at round " + std::to_string(i));
        expect(weyl_mul(P, Q + T) == weyl_mul(P, Q) + weyl_mul(P, T),
               "left distributivity failed at round " + std::to_string(i));
        expect(weyl_mul(P + Q, T) == weyl_mul(P, T) + weyl_mul(Q, T),
               "right distributivity failed at round " + std::to_string(i));

        Monomial s1 = Monomial::one(gen.n(), gen.p());
        s1.set_s(0, 1);
        const WeylOperator s = WeylOperator::from_term(s1, 1);
        expect(weyl_mul(s, P) == weyl_mul(P, s),
               "centrality failed at round " + std::to_string(i));

        const RationalPoint alpha = gen.point();
        expect(specialize(P + Q, alpha) ==
                   specialize(P, alpha) + specialize(Q, alpha),
               "q_alpha additivity failed at round " + std::to_string(i));
        expect(specialize(weyl_mul(P, Q), alpha) ==
                   weyl_mul(specialize(P, alpha), specialize(Q, alpha)),
               "q_alpha multiplicativity failed at round " + std::to_string(i));
    }
}

void ac8() {
    testsupport::RandomOps gen(0xAC8AC8AC, 1, 1, 2);
    for (int round = 0; round < 100; ++round) {
        std::vector<WeylOperator> gens = {gen.nonzero_op(3), gen.nonzero_op(3)};
        const GroebnerBasisR gb =
            buchberger_r(LeftIdealPresentation(1, 1, gens));

        // A known member: a random combination of the generators.
        WeylOperator member =
            weyl_mul(gen.op(2), gens[0]) + weyl_mul(gen.op(2), gens[1]);
        expect(left_divide(member, gb.elements).remainder.is_zero(),
               "basis missed a combination at round " + std::to_string(round));

        // A random probe: IN by the oracle must imply remainder zero, and
        // remainder zero must be confirmed by the oracle at a higher bound.
        const WeylOperator probe = gen.op(3);
        const bool gb_in = left_divide(probe, gb.elements).remainder.is_zero();
        const bool oracle_in = bounded_membership(probe, gens, 4).in();
        if (oracle_in)
            expect(gb_in, "oracle IN but nonzero remainder at round " +
                              std::to_string(round));
        if (gb_in) {
            std::uint64_t deg = 0;
            for (const auto& e : gb.elements)
                deg = std::max(deg, e.total_degree());
            expect(bounded_membership(probe, gb.elements,
                                      static_cast<std::uint32_t>(deg) + 4)
                       .in(),
                   "remainder zero but oracle missed it at round " +
                       std::to_string(round));
        }
    }
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void()>>> cases = {
        {"AC-1", ac1}, {"AC-2", ac2}, {"AC-3", ac3}, {"AC-4", ac4},
        {"AC-5", ac5}, {"AC-6", ac6}, {"AC-7", ac7}, {"AC-8", ac8},
    };
    int failures = 0;
    for (const auto& [name, fn] : cases) {
        try {
            fn();
            std::printf("%s PASS\n", name);
        } catch (const Failure& f) {
            ++failures;
            std::printf("%s FAIL: %s\n", name, f.message.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("%s FAIL: unexpected error: %s\n", name, e.what());
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
