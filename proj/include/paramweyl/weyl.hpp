#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paramweyl/commpoly.hpp"
#include "paramweyl/monomial.hpp"

namespace paramweyl {

enum class RingTag { R, Dn };

// Element of R = D_n[s_1..s_p] as a normal-ordered, canonical term map:
// every key is a standard monomial x^alpha d^beta s^gamma, iteration is
// descending cmp_r, no zero coefficients are stored. D_n is the p = 0 case.
class WeylOperator {
public:
    using TermMap = std::map<Monomial, Rat, MonomialDescR>;

    WeylOperator(std::size_t n, std::size_t p) : n_(n), p_(p) {}
    static WeylOperator constant(std::size_t n, std::size_t p, const Rat& c);
    static WeylOperator from_term(const Monomial& m, const Rat& c);
    static WeylOperator from_comm(const CommPoly& f);

    std::size_t n() const { return n_; }
    std::size_t p() const { return p_; }
    RingTag ring() const { return p_ == 0 ? RingTag::Dn : RingTag::R; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const; // zero or c*1
    bool in_a() const;        // all terms in the parameter ring
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c);

    WeylOperator operator-() const;
    WeylOperator operator+(const WeylOperator& q) const;
    WeylOperator operator-(const WeylOperator& q) const;
    WeylOperator scaled(const Rat& c) const;
    bool operator==(const WeylOperator& q) const;
    bool operator!=(const WeylOperator& q) const { return !(*this == q); }

    std::uint64_t total_degree() const;

    // Leading data under cmp_r; throws InvalidArgument on zero input.
    const Monomial& lm() const;
    const Rat& lc() const;
    WeylOperator monic() const;

    // Requires in_a().
    CommPoly to_comm() const;

    std::string to_string() const;

private:
    void check_term(const Monomial& m) const;
    std::size_t n_, p_;
    TermMap terms_;
};

// Normal-ordered product in R (d_i x_i = x_i d_i + 1, everything else
// commutes, s central).
WeylOperator weyl_mul(const WeylOperator& a, const WeylOperator& b);

inline const Monomial& lm_r(const WeylOperator& op) { return op.lm(); }

// Writing P = sum over (alpha, beta) of h_{alpha,beta}(s) x^alpha d^beta:
// plm is the cmp_dn-largest x^alpha d^beta, plc its coefficient in A, and
// tail the rest, so that P = plc * plm + tail.
struct ParametricSplit {
    Monomial plm;       // gamma = 0
    CommPoly plc;       // nonzero
    WeylOperator tail;  // every dn-part strictly below plm
};
ParametricSplit parametric_split(const WeylOperator& op);
Monomial plm(const WeylOperator& op);
CommPoly plc(const WeylOperator& op);

// The specialization map s_i |-> alpha_i into D_n (context (n, 0)).
WeylOperator specialize(const WeylOperator& op, const RationalPoint& alpha);

// Finite generator list for a left ideal of R (or of D_n when p = 0).
struct LeftIdealPresentation {
    std::size_t n = 0, p = 0;
    std::vector<WeylOperator> generators;

    LeftIdealPresentation(std::size_t n_, std::size_t p_) : n(n_), p(p_) {}
    LeftIdealPresentation(std::size_t n_, std::size_t p_, std::vector<WeylOperator> gens);
    RingTag ring() const { return p == 0 ? RingTag::Dn : RingTag::R; }
};

} // namespace paramweyl
