#pragma once

#include <map>
#include <string>
#include <vector>

#include "paramweyl/monomial.hpp"

namespace paramweyl {

// Rational point alpha in Q^p (the specialization point s |-> alpha).
struct RationalPoint {
    std::vector<Rat> coords;

    std::size_t p() const { return coords.size(); }
    std::string to_string() const;
};

// Element of A = Q[s_1..s_p], stored as a canonical term map (descending
// cmp_a, no zero coefficients). All monomials must satisfy alpha = beta = 0;
// the (n, p) context is carried so elements embed into R unchanged.
class CommPoly {
public:
    using TermMap = std::map<Monomial, Rat, MonomialDescR>;

    CommPoly(std::size_t n, std::size_t p) : n_(n), p_(p) {}
    static CommPoly constant(std::size_t n, std::size_t p, const Rat& c);
    static CommPoly from_term(const Monomial& m, const Rat& c);

    std::size_t n() const { return n_; }
    std::size_t p() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Accumulates c on m, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rat& c);

    CommPoly operator-() const;
    CommPoly operator+(const CommPoly& g) const;
    CommPoly operator-(const CommPoly& g) const;
    CommPoly operator*(const CommPoly& g) const;
    CommPoly scaled(const Rat& c) const;
    CommPoly pow(unsigned long e) const;
    bool operator==(const CommPoly& g) const;
    bool operator!=(const CommPoly& g) const { return !(*this == g); }

    std::uint64_t total_degree() const; // 0 for the zero polynomial

    // Leading data under cmp_a; both throw InvalidArgument on zero input.
    const Monomial& lm() const;
    const Rat& lc() const;
    CommPoly monic() const;

    Rat eval(const RationalPoint& alpha) const;

    std::string to_string() const; // canonical text; "0" for zero

private:
    void check_term(const Monomial& m) const;
    std::size_t n_, p_;
    TermMap terms_;
};

// Order-qualified aliases, symmetric with lm_r/lc_r.
inline const Monomial& lm_a(const CommPoly& f) { return f.lm(); }
inline const Rat& lc_a(const CommPoly& f) { return f.lc(); }

} // namespace paramweyl
