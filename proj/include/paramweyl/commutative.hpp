#pragma once

#include <string>
#include <vector>

#include "paramweyl/commpoly.hpp"

namespace paramweyl {

// Finitely generated ideal of A = Q[s_1..s_p]. Generators are kept monic,
// deduplicated, and in first-appearance order; zero generators are dropped.
class CommIdeal {
public:
    CommIdeal(std::size_t n, std::size_t p, std::vector<CommPoly> gens);

    std::size_t n() const { return n_; }
    std::size_t p() const { return p_; }
    const std::vector<CommPoly>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

private:
    std::size_t n_, p_;
    std::vector<CommPoly> gens_;
};

struct CommDivision {
    std::vector<CommPoly> quotients; // one per divisor, in list order
    CommPoly remainder;              // no term divisible by any divisor lm
};

// Multivariate division under cmp_a: each step reduces the current leading
// term against the first divisor whose lm divides it.
CommDivision divide_a(const CommPoly& f, const std::vector<CommPoly>& divisors);

// Canonical reduced Groebner basis under cmp_a: monic, pairwise
// non-divisible leading monomials, fully tail-reduced, sorted with the
// largest lm first. The result is unique for the ideal.
std::vector<CommPoly> buchberger_a(const CommIdeal& ideal);

bool is_unit_ideal_a(const std::vector<CommPoly>& gb);

bool membership_a(const CommPoly& f, const std::vector<CommPoly>& gb);
bool membership_a(const CommPoly& f, const CommIdeal& ideal);

// f in the radical of the ideal, decided over A[y] via 1 - y*f.
bool radical_membership(const CommPoly& f, const CommIdeal& ideal);

// Intersection of two ideals via t*I + (1 - t)*J and lex elimination of t.
CommIdeal intersect_ideals(const CommIdeal& lhs, const CommIdeal& rhs);

} // namespace paramweyl
