#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paramweyl/errors.hpp"
#include "paramweyl/rational.hpp"

namespace paramweyl {

enum class Ord { LT = -1, EQ = 0, GT = 1 };

// Exponent triple (alpha, beta, gamma) of a standard monomial
// x^alpha d^beta s^gamma in D_n[s_1..s_p]. Monomials of A and D_n are the
// special cases with alpha = beta = 0 resp. gamma = 0. All exponents are
// nonnegative; additions are overflow-checked.
class Monomial {
public:
    Monomial(std::size_t n, std::size_t p)
        : x_(n, 0), d_(n, 0), s_(p, 0) {}

    static Monomial one(std::size_t n, std::size_t p) { return Monomial(n, p); }

    std::size_t n() const { return x_.size(); }
    std::size_t p() const { return s_.size(); }

    // 0-based variable indices.
    std::uint32_t x_exp(std::size_t i) const { return x_.at(i); }
    std::uint32_t d_exp(std::size_t i) const { return d_.at(i); }
    std::uint32_t s_exp(std::size_t i) const { return s_.at(i); }
    void set_x(std::size_t i, std::uint32_t e) { x_.at(i) = check_exp(e); }
    void set_d(std::size_t i, std::uint32_t e) { d_.at(i) = check_exp(e); }
    void set_s(std::size_t i, std::uint32_t e) { s_.at(i) = check_exp(e); }

    bool is_one() const;
    bool in_a() const;  // alpha = beta = 0
    bool in_dn() const; // gamma = 0
    std::uint64_t total_degree() const;

    // Exponent-wise sum (the monomial product at the symbol level).
    Monomial mul(const Monomial& m) const;
    // Exponent-wise difference; requires divides(m, *this).
    Monomial quotient_by(const Monomial& m) const;
    // Restriction to the parameter block (drops x, d; requires in_a()
    // unless forced) and to the D_n block (drops s).
    Monomial a_part() const;  // same (n,p), alpha = beta = 0
    Monomial dn_part() const; // same (n,p), gamma = 0
    Monomial drop_s() const;  // context (n, 0)

    bool operator==(const Monomial& m) const {
        return x_ == m.x_ && d_ == m.d_ && s_ == m.s_;
    }
    bool operator!=(const Monomial& m) const { return !(*this == m); }

    // Factor string in canonical print order: x, d, s blocks, descending
    // variable index within each block; "1" for the unit monomial.
    std::string to_string() const;

private:
    static std::uint32_t check_exp(std::uint32_t e);
    std::vector<std::uint32_t> x_, d_, s_;

    friend Ord cmp_r(const Monomial&, const Monomial&);
    friend Ord cmp_dn(const Monomial&, const Monomial&);
    friend Ord cmp_a(const Monomial&, const Monomial&);
    friend bool divides(const Monomial&, const Monomial&);
    friend Monomial lcm_exp(const Monomial&, const Monomial&);
};

// Lexicographic order on R with d_1 > .. > d_n > x_n > .. > x_1 > s_p > .. > s_1.
Ord cmp_r(const Monomial& a, const Monomial& b);
// Restriction to D_n (d_1 > .. > d_n > x_n > .. > x_1); requires gamma = 0.
Ord cmp_dn(const Monomial& a, const Monomial& b);
// Restriction to A (s_p > .. > s_1); requires alpha = beta = 0.
Ord cmp_a(const Monomial& a, const Monomial& b);

// Entry-wise <= on (alpha, beta, gamma).
bool divides(const Monomial& a, const Monomial& b);
// Entry-wise max.
Monomial lcm_exp(const Monomial& a, const Monomial& b);

// Map comparators (descending: largest monomial first).
struct MonomialDescR {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return cmp_r(a, b) == Ord::GT;
    }
};

// Appends " + c*mono" / " - c*mono" (or a leading "-c*mono") to `out`.
void append_term(std::string& out, const Monomial& m, const Rat& coef, bool first);

} // namespace paramweyl
