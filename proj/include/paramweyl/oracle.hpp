#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "paramweyl/commutative.hpp"
#include "paramweyl/weyl.hpp"

namespace paramweyl {

enum class OracleVerdict { In, NotWithinBound };

struct OracleResult {
    OracleVerdict verdict;
    // One left cofactor per generator when In: target = sum of
    // weyl_mul(cofactors[i], gens[i]), re-expanded and checked before return.
    std::vector<WeylOperator> cofactors;

    bool in() const { return verdict == OracleVerdict::In; }
};

// Exact linear span of {m * g : g generator, m a standard monomial of total
// degree <= bound}, built as a sparse echelon over Q. Independent of the
// Groebner engine: only weyl_mul and rational arithmetic.
//
// Rows are added lazily, one degree level at a time, and a target is tested
// after every level, so membership established by low-degree multipliers
// never pays for the full span. NotWithinBound verdicts always reflect the
// complete span at the configured bound and are not proofs of non-membership.
class OracleSpan {
public:
    enum class Mode { Weyl, Comm }; // Comm restricts multipliers to s-monomials

    OracleSpan(std::vector<WeylOperator> gens, std::uint32_t bound,
               Mode mode = Mode::Weyl, std::size_t max_rows = 50000);

    OracleResult test(const WeylOperator& target);

    std::size_t row_count() const { return rows_.size(); }

private:
    struct Row {
        WeylOperator value;
        std::size_t gen;
        Monomial multiplier;
        std::vector<std::pair<std::size_t, Rat>> steps; // pivots used, with scale
    };

    void expand_level(std::uint32_t degree);
    void insert_row(std::size_t gen, const Monomial& multiplier);
    bool reduce_against_span(const WeylOperator& target,
                             std::map<std::size_t, Rat>& weights) const;
    OracleResult witness(const WeylOperator& target,
                         std::map<std::size_t, Rat> weights) const;

    std::size_t n_, p_;
    std::vector<WeylOperator> gens_;
    std::uint32_t bound_;
    Mode mode_;
    std::size_t max_rows_;
    std::uint32_t next_level_ = 0;
    std::vector<Row> rows_;
    std::map<Monomial, std::size_t, MonomialDescR> pivot_of_lm_;
};

OracleResult bounded_membership(const WeylOperator& target,
                                const std::vector<WeylOperator>& gens,
                                std::uint32_t bound,
                                std::size_t max_rows = 50000);
OracleResult bounded_membership(const CommPoly& target,
                                const std::vector<CommPoly>& gens,
                                std::uint32_t bound,
                                std::size_t max_rows = 50000);

} // namespace paramweyl
