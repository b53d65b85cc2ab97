#include "paramweyl/commutative.hpp"

#include <algorithm>

#include "paramweyl/errors.hpp"

namespace paramweyl {

CommIdeal::CommIdeal(std::size_t n, std::size_t p, std::vector<CommPoly> gens)
    : n_(n), p_(p) {
    for (auto& g : gens) {
        if (g.n() != n_ || g.p() != p_)
            throw InvalidArgument("ideal generator context mismatch");
        if (g.is_zero()) continue;
        CommPoly m = g.monic();
        if (std::find(gens_.begin(), gens_.end(), m) == gens_.end())
            gens_.push_back(std::move(m));
    }
}

CommDivision divide_a(const CommPoly& f, const std::vector<CommPoly>& divisors) {
    for (const auto& d : divisors)
        if (d.is_zero()) throw InvalidArgument("zero divisor");
    CommDivision out{std::vector<CommPoly>(divisors.size(), CommPoly(f.n(), f.p())),
                     CommPoly(f.n(), f.p())};
    CommPoly h = f;
    while (!h.is_zero()) {
        const Monomial& m = h.lm();
        const Rat c = h.lc();
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!divides(divisors[i].lm(), m)) continue;
            const Rat t = c / divisors[i].lc();
            const CommPoly step = CommPoly::from_term(m.quotient_by(divisors[i].lm()), t);
            out.quotients[i] = out.quotients[i] + step;
            h = h - step * divisors[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            out.remainder.add_term(m, c);
            h.add_term(m, -c);
        }
    }
    return out;
}

namespace {

bool coprime_lm(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.p(); ++i)
        if (a.s_exp(i) && b.s_exp(i)) return false;
    for (std::size_t i = 0; i < a.n(); ++i)
        if ((a.x_exp(i) && b.x_exp(i)) || (a.d_exp(i) && b.d_exp(i))) return false;
    return true;
}

CommPoly s_poly_a(const CommPoly& f, const CommPoly& g) {
    const Monomial l = lcm_exp(f.lm(), g.lm());
    const CommPoly mf = CommPoly::from_term(l.quotient_by(f.lm()), 1 / f.lc());
    const CommPoly mg = CommPoly::from_term(l.quotient_by(g.lm()), 1 / g.lc());
    return mf * f - mg * g;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

// Minimal reduced form: monic elements, no lm divides another, tails in
// normal form, sorted with the largest lm first.
std::vector<CommPoly> canonicalize(std::vector<CommPoly> basis) {
    std::sort(basis.begin(), basis.end(), [](const CommPoly& a, const CommPoly& b) {
        return cmp_a(a.lm(), b.lm()) == Ord::LT;
    });
    std::vector<CommPoly> kept;
    for (const auto& g : basis) {
        bool redundant = false;
        for (const auto& h : kept)
            if (divides(h.lm(), g.lm())) { redundant = true; break; }
        if (!redundant) kept.push_back(g.monic());
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<CommPoly> others;
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            CommPoly r = divide_a(kept[i], others).remainder;
            if (r == kept[i]) continue;
            changed = true;
            if (r.is_zero()) {
                kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
                break;
            }
            kept[i] = r.monic();
        }
    }
    std::sort(kept.begin(), kept.end(), [](const CommPoly& a, const CommPoly& b) {
        return cmp_a(a.lm(), b.lm()) == Ord::GT;
    });
    return kept;
}

} // namespace

std::vector<CommPoly> buchberger_a(const CommIdeal& ideal) {
    std::vector<CommPoly> basis = ideal.gens();
    if (basis.empty()) return basis;

    std::vector<Pair> pending;
    const auto queue_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pending.push_back({i, j, lcm_exp(basis[i].lm(), basis[j].lm())});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) queue_pairs_with(j);

    while (!pending.empty()) {
        auto best = pending.begin();
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            const Ord c = cmp_a(it->lcm, best->lcm);
            if (c == Ord::LT ||
                (c == Ord::EQ && std::pair(it->i, it->j) < std::pair(best->i, best->j)))
                best = it;
        }
        const Pair pair = *best;
        pending.erase(best);
        if (coprime_lm(basis[pair.i].lm(), basis[pair.j].lm())) continue;
        CommPoly r = divide_a(s_poly_a(basis[pair.i], basis[pair.j]), basis).remainder;
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        queue_pairs_with(basis.size() - 1);
    }
    return canonicalize(std::move(basis));
}

bool is_unit_ideal_a(const std::vector<CommPoly>& gb) {
    return std::any_of(gb.begin(), gb.end(), [](const CommPoly& g) {
        return !g.is_zero() && g.lm().is_one();
    });
}

bool membership_a(const CommPoly& f, const std::vector<CommPoly>& gb) {
    if (f.is_zero()) return true;
    if (gb.empty()) return false;
    return divide_a(f, gb).remainder.is_zero();
}

bool membership_a(const CommPoly& f, const CommIdeal& ideal) {
    return membership_a(f, buchberger_a(ideal));
}

namespace {

// Shift into A[s_1..s_p, y] with the auxiliary variable at s-index p, the
// most significant position under cmp_a.
CommPoly lift_comm(const CommPoly& f) {
    CommPoly out(f.n(), f.p() + 1);
    for (const auto& [m, c] : f.terms()) {
        Monomial lifted = Monomial::one(f.n(), f.p() + 1);
        for (std::size_t i = 0; i < f.p(); ++i) lifted.set_s(i, m.s_exp(i));
        out.add_term(lifted, c);
    }
    return out;
}

CommPoly drop_aux(const CommPoly& f) {
    CommPoly out(f.n(), f.p() - 1);
    for (const auto& [m, c] : f.terms()) {
        Monomial dropped = Monomial::one(f.n(), f.p() - 1);
        for (std::size_t i = 0; i + 1 < f.p(); ++i) dropped.set_s(i, m.s_exp(i));
        out.add_term(dropped, c);
    }
    return out;
}

bool uses_aux(const CommPoly& f) {
    for (const auto& [m, c] : f.terms())
        if (m.s_exp(f.p() - 1)) return true;
    return false;
}

} // namespace

bool radical_membership(const CommPoly& f, const CommIdeal& ideal) {
    if (f.n() != ideal.n() || f.p() != ideal.p())
        throw InvalidArgument("radical membership context mismatch");
    const std::size_t n = ideal.n(), p = ideal.p();
    std::vector<CommPoly> gens;
    for (const auto& g : ideal.gens()) gens.push_back(lift_comm(g));
    Monomial aux = Monomial::one(n, p + 1);
    aux.set_s(p, 1);
    gens.push_back(CommPoly::constant(n, p + 1, 1) -
                   CommPoly::from_term(aux, 1) * lift_comm(f));
    return is_unit_ideal_a(buchberger_a(CommIdeal(n, p + 1, std::move(gens))));
}

CommIdeal intersect_ideals(const CommIdeal& lhs, const CommIdeal& rhs) {
    if (lhs.n() != rhs.n() || lhs.p() != rhs.p())
        throw InvalidArgument("ideal intersection context mismatch");
    const std::size_t n = lhs.n(), p = lhs.p();
    if (lhs.is_zero() || rhs.is_zero()) return CommIdeal(n, p, {});
    Monomial aux = Monomial::one(n, p + 1);
    aux.set_s(p, 1);
    const CommPoly t = CommPoly::from_term(aux, 1);
    const CommPoly one_minus_t = CommPoly::constant(n, p + 1, 1) - t;
    std::vector<CommPoly> gens;
    for (const auto& g : lhs.gens()) gens.push_back(t * lift_comm(g));
    for (const auto& g : rhs.gens()) gens.push_back(one_minus_t * lift_comm(g));
    std::vector<CommPoly> projected;
    for (const auto& g : buchberger_a(CommIdeal(n, p + 1, std::move(gens))))
        if (!uses_aux(g)) projected.push_back(drop_aux(g));
    return CommIdeal(n, p, std::move(projected));
}

} // namespace paramweyl
