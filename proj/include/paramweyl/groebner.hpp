#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paramweyl/commutative.hpp"
#include "paramweyl/weyl.hpp"

namespace paramweyl {

// Left Groebner basis in R (or D_n when p = 0) under cmp_r. `certified`
// records that every S-pair was re-reduced to zero against the elements.
// Outputs of buchberger_r and reduce_gb are canonical: monic, no lm divides
// another, fully tail-reduced, sorted with the largest lm first. Bases from
// certify_basis or specialize_gb keep their given element order and need not
// be minimal.
struct GroebnerBasisR {
    std::size_t n = 0, p = 0;
    std::vector<WeylOperator> elements;
    bool certified = false;

    RingTag ring() const { return p == 0 ? RingTag::Dn : RingTag::R; }
};

struct LeftDivision {
    std::vector<WeylOperator> quotients; // left multipliers, one per divisor
    WeylOperator remainder;              // no term divisible by any divisor lm
};

// Left division: each step rewrites the current leading term through the
// first divisor whose lm divides it, multiplying by a monomial on the left.
LeftDivision left_divide(const WeylOperator& f,
                         const std::vector<WeylOperator>& divisors);

// lc(b)*(lcm/lm(a))*a - lc(a)*(lcm/lm(b))*b; leading terms cancel.
WeylOperator s_pair(const WeylOperator& a, const WeylOperator& b);

// Buchberger's algorithm with the normal selection strategy (smallest lcm
// first). The coprime-lcm skip is NOT applied: it is unsound here, where
// coprime leading monomials can still produce commutator terms.
GroebnerBasisR buchberger_r(const LeftIdealPresentation& ideal,
                            bool certify = true);

// Checks that every S-pair of `elements` reduces to zero against them and
// returns the monic basis with its certificate; throws VerifyError with the
// offending remainder otherwise.
GroebnerBasisR certify_basis(std::size_t n, std::size_t p,
                             std::vector<WeylOperator> elements);

// True iff the basis contains a nonzero constant.
bool is_unit_ideal(const GroebnerBasisR& gb);

// The elements lying in A, as the canonical commutative basis of Q cap A.
// Requires a certified basis.
CommIdeal eliminate_to_a(const GroebnerBasisR& gb);

// Replacement pass: while some P outside A has plc(P) reducible by the
// A-elements, replace P by r*plm(P) + tail with r the reduced plc; drop
// zeros, remove duplicates, and restore canonical form if anything moved.
// Afterwards every plc is its own normal form against the A-elements, so in
// particular no plc lies in Q cap A. Requires a certified basis.
GroebnerBasisR reduce_gb(const GroebnerBasisR& gb);

// Monic product of plc(P) over the basis elements not lying in the given
// ideal of A; the empty product is 1.
CommPoly h_polynomial(const GroebnerBasisR& gb, const CommIdeal& prime);

// Image of the basis elements outside `prime` under s |-> alpha, with each
// element's leading monomial checked against its plm, monic-normalized, and
// the whole set re-certified in D_n. Requires alpha in Z(prime) and
// h(alpha) != 0; violations throw VerifyError with the witness.
GroebnerBasisR specialize_gb(const GroebnerBasisR& gb, const CommIdeal& prime,
                             const RationalPoint& alpha);

// True iff D_n / q_alpha(J) is nonzero, decided by a Groebner basis of the
// specialized generators.
bool fiber_nonzero(const LeftIdealPresentation& ideal,
                   const RationalPoint& alpha, bool certify = true);

struct ContractionCheck {
    bool ok = false;
    std::vector<CommPoly> contraction; // canonical basis of (J + R*prime) cap A
    std::optional<CommPoly> witness;   // element of the failed inclusion
    std::string detail;                // which inclusion failed
};

// Decides (J + R*prime) cap A == prime by mutual membership. The basis of
// J + R*prime is always certified: elimination consumes it.
ContractionCheck verify_prime_contraction(const LeftIdealPresentation& ideal,
                                          const CommIdeal& prime);

struct SampleReport {
    RationalPoint point;
    bool admissible = false; // in Z(prime) with h(point) != 0
    std::string skip_reason; // set iff not admissible
    bool fiber = false;      // fiber_nonzero verdict, admissible points only
};

struct FiberCertificate {
    CommIdeal prime;
    GroebnerBasisR basis; // canonical reduced basis of J + R*prime
    CommPoly h;
    std::vector<SampleReport> samples;
    std::size_t verified = 0; // admissible samples, all with nonzero fiber
};

// Rational points of Z(prime) avoiding the zero set of `avoid`, generated by
// solving the defining linear system; requires every generator of `prime` to
// have degree at most 1. Points listed in `exclude` are not produced.
std::vector<RationalPoint> sample_zero_set(
    const CommIdeal& prime, const CommPoly& avoid, std::size_t count,
    const std::vector<RationalPoint>& exclude = {});

// Full pipeline: check (J + R*prime) cap A == prime, compute the canonical
// reduced basis of J + R*prime and its h, then verify a nonzero fiber at
// every admissible sample point. User samples outside Z(prime) or with
// h = 0 are recorded as skipped; when the prime is generated in degree 1,
// further points are generated until `want_samples` admissible ones passed.
// An admissible sample with zero fiber throws InternalError. The main basis
// is always certified; `certify` governs the per-sample fiber bases.
FiberCertificate dense_open_certificate(const LeftIdealPresentation& ideal,
                                        const CommIdeal& prime,
                                        const std::vector<RationalPoint>& samples,
                                        std::size_t want_samples = 20,
                                        bool certify = true);

} // namespace paramweyl
