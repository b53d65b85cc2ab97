#pragma once

#include <random>
#include <vector>

#include "paramweyl/commpoly.hpp"
#include "paramweyl/weyl.hpp"

namespace testsupport {

using namespace paramweyl;

// Deterministic small-operator generator for property suites.
class RandomOps {
public:
    explicit RandomOps(std::uint64_t seed, std::size_t n = 2, std::size_t p = 2,
                       unsigned max_exp = 3)
        : rng_(seed), n_(n), p_(p), max_exp_(max_exp) {}

    std::size_t n() const { return n_; }
    std::size_t p() const { return p_; }

    Rat rational() {
        std::uniform_int_distribution<int> num(-6, 6);
        std::uniform_int_distribution<int> den(1, 4);
        Rat r(num(rng_), den(rng_));
        r.canonicalize();
        return r;
    }

    Monomial monomial() {
        std::uniform_int_distribution<unsigned> e(0, max_exp_);
        Monomial m = Monomial::one(n_, p_);
        unsigned budget = max_exp_;
        auto draw = [&]() {
            unsigned v = e(rng_) % (budget + 1);
            budget -= v;
            return v;
        };
        for (std::size_t i = 0; i < n_; ++i) m.set_x(i, draw());
        for (std::size_t i = 0; i < n_; ++i) m.set_d(i, draw());
        for (std::size_t i = 0; i < p_; ++i) m.set_s(i, draw());
        return m;
    }

    WeylOperator op(std::size_t max_terms = 4) {
        std::uniform_int_distribution<std::size_t> t(1, max_terms);
        WeylOperator out(n_, p_);
        const std::size_t terms = t(rng_);
        for (std::size_t i = 0; i < terms; ++i)
            out.add_term(monomial(), rational());
        return out;
    }

    WeylOperator nonzero_op(std::size_t max_terms = 4) {
        for (;;) {
            WeylOperator out = op(max_terms);
            if (!out.is_zero()) return out;
        }
    }

    CommPoly poly(std::size_t max_terms = 4) {
        std::uniform_int_distribution<std::size_t> t(1, max_terms);
        CommPoly out(n_, p_);
        const std::size_t terms = t(rng_);
        for (std::size_t i = 0; i < terms; ++i) {
            Monomial m = monomial();
            out.add_term(m.a_part(), rational());
        }
        return out;
    }

    RationalPoint point() {
        RationalPoint alpha;
        for (std::size_t i = 0; i < p_; ++i) alpha.coords.push_back(rational());
        return alpha;
    }

private:
    std::mt19937_64 rng_;
    std::size_t n_, p_;
    unsigned max_exp_;
};

} // namespace testsupport
