#include "paramweyl/oracle.hpp"

#include <string>

#include "paramweyl/errors.hpp"

namespace paramweyl {

namespace {

// All standard monomials of the given total degree over the slots selected
// by the mode, in a fixed order: exponent vectors enumerated with the
// leftmost slot taking the largest share first.
void monomials_of_degree(std::size_t n, std::size_t p, OracleSpan::Mode mode,
                         std::uint32_t degree, std::vector<Monomial>& out) {
    const std::size_t slots =
        mode == OracleSpan::Mode::Weyl ? 2 * n + p : p;
    std::vector<std::uint32_t> exps(slots, 0);
    const auto emit = [&] {
        Monomial m = Monomial::one(n, p);
        std::size_t at = 0;
        if (mode == OracleSpan::Mode::Weyl) {
            for (std::size_t i = 0; i < n; ++i) m.set_x(i, exps[at++]);
            for (std::size_t i = 0; i < n; ++i) m.set_d(i, exps[at++]);
        }
        for (std::size_t i = 0; i < p; ++i) m.set_s(i, exps[at++]);
        out.push_back(m);
    };
    const auto rec = [&](auto&& self, std::size_t slot, std::uint32_t left) -> void {
        if (slot + 1 == slots) {
            exps[slot] = left;
            emit();
            return;
        }
        for (std::uint32_t e = left; e != static_cast<std::uint32_t>(-1); --e) {
            exps[slot] = e;
            self(self, slot + 1, left - e);
        }
    };
    if (slots == 0) {
        if (degree == 0) out.push_back(Monomial::one(n, p));
        return;
    }
    rec(rec, 0, degree);
}

} // namespace

OracleSpan::OracleSpan(std::vector<WeylOperator> gens, std::uint32_t bound,
                       Mode mode, std::size_t max_rows)
    : n_(0), p_(0), gens_(std::move(gens)), bound_(bound), mode_(mode),
      max_rows_(max_rows) {
    if (gens_.empty()) return;
    n_ = gens_[0].n();
    p_ = gens_[0].p();
    for (const auto& g : gens_)
        if (g.n() != n_ || g.p() != p_)
            throw InvalidArgument("oracle generator context mismatch");
}

void OracleSpan::insert_row(std::size_t gen, const Monomial& multiplier) {
    if (rows_.size() >= max_rows_)
        throw LimitExceeded("oracle matrix cap of " + std::to_string(max_rows_) +
                            " rows exceeded");
    Row row{weyl_mul(WeylOperator::from_term(multiplier, 1), gens_[gen]),
            gen, multiplier, {}};
    while (!row.value.is_zero()) {
        auto it = pivot_of_lm_.find(row.value.lm());
        if (it == pivot_of_lm_.end()) {
            pivot_of_lm_.emplace(row.value.lm(), rows_.size());
            rows_.push_back(std::move(row));
            return;
        }
        const Row& pivot = rows_[it->second];
        const Rat c = row.value.lc() / pivot.value.lc();
        row.steps.emplace_back(it->second, c);
        row.value = row.value - pivot.value.scaled(c);
    }
}

void OracleSpan::expand_level(std::uint32_t degree) {
    std::vector<Monomial> multipliers;
    monomials_of_degree(n_, p_, mode_, degree, multipliers);
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (const auto& m : multipliers)
            if (!gens_[i].is_zero()) insert_row(i, m);
}

bool OracleSpan::reduce_against_span(const WeylOperator& target,
                                     std::map<std::size_t, Rat>& weights) const {
    weights.clear();
    WeylOperator r = target;
    while (!r.is_zero()) {
        auto it = pivot_of_lm_.find(r.lm());
        if (it == pivot_of_lm_.end()) return false;
        const Row& pivot = rows_[it->second];
        const Rat c = r.lc() / pivot.value.lc();
        weights[it->second] += c;
        r = r - pivot.value.scaled(c);
    }
    return true;
}

OracleResult OracleSpan::witness(const WeylOperator& target,
                                 std::map<std::size_t, Rat> weights) const {
    OracleResult out{OracleVerdict::In, {}};
    out.cofactors.assign(gens_.size(), WeylOperator(target.n(), target.p()));
    // Unfold pivot rows back to their source products, largest index first;
    // every step of a row points at an earlier row.
    while (!weights.empty()) {
        const auto node = std::prev(weights.end());
        const std::size_t idx = node->first;
        const Rat w = node->second;
        weights.erase(node);
        if (w == 0) continue;
        const Row& row = rows_[idx];
        out.cofactors[row.gen].add_term(row.multiplier, w);
        for (const auto& [k, c] : row.steps) weights[k] -= w * c;
    }
    WeylOperator expanded(target.n(), target.p());
    for (std::size_t i = 0; i < gens_.size(); ++i)
        expanded = expanded + weyl_mul(out.cofactors[i], gens_[i]);
    if (expanded != target)
        throw InternalError("oracle witness failed re-expansion");
    return out;
}

OracleResult OracleSpan::test(const WeylOperator& target) {
    if (!gens_.empty() && (target.n() != n_ || target.p() != p_))
        throw InvalidArgument("oracle target context mismatch");
    if (target.is_zero()) {
        OracleResult out{OracleVerdict::In, {}};
        out.cofactors.assign(gens_.size(), WeylOperator(target.n(), target.p()));
        return out;
    }
    std::map<std::size_t, Rat> weights;
    for (;;) {
        if (reduce_against_span(target, weights))
            return witness(target, std::move(weights));
        if (next_level_ > bound_) return {OracleVerdict::NotWithinBound, {}};
        expand_level(next_level_);
        ++next_level_;
    }
}

OracleResult bounded_membership(const WeylOperator& target,
                                const std::vector<WeylOperator>& gens,
                                std::uint32_t bound, std::size_t max_rows) {
    OracleSpan span(gens, bound, OracleSpan::Mode::Weyl, max_rows);
    return span.test(target);
}

OracleResult bounded_membership(const CommPoly& target,
                                const std::vector<CommPoly>& gens,
                                std::uint32_t bound, std::size_t max_rows) {
    std::vector<WeylOperator> lifted;
    lifted.reserve(gens.size());
    for (const auto& g : gens) lifted.push_back(WeylOperator::from_comm(g));
    OracleSpan span(std::move(lifted), bound, OracleSpan::Mode::Comm, max_rows);
    return span.test(WeylOperator::from_comm(target));
}

} // namespace paramweyl
