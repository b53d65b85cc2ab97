#include "paramweyl/groebner.hpp"

#include <algorithm>
#include <utility>

#include "paramweyl/errors.hpp"

namespace paramweyl {

namespace {

WeylOperator mono_mul(const Monomial& m, const Rat& c, const WeylOperator& g) {
    return weyl_mul(WeylOperator::from_term(m, c), g);
}

bool descending_lm(const WeylOperator& a, const WeylOperator& b) {
    return cmp_r(a.lm(), b.lm()) == Ord::GT;
}

// Minimal, monic, fully tail-reduced, largest lm first.
std::vector<WeylOperator> canonicalize_r(std::vector<WeylOperator> basis) {
    std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
        return cmp_r(a.lm(), b.lm()) == Ord::LT;
    });
    std::vector<WeylOperator> kept;
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
            std::vector<WeylOperator> others;
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            WeylOperator r = left_divide(kept[i], others).remainder;
            if (r == kept[i]) continue;
            if (r.is_zero())
                throw InternalError("minimal basis element reduced to zero");
            kept[i] = r.monic();
            changed = true;
        }
    }
    std::sort(kept.begin(), kept.end(), descending_lm);
    return kept;
}

void certify_elements(const std::vector<WeylOperator>& elems) {
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            WeylOperator rem =
                left_divide(s_pair(elems[i], elems[j]), elems).remainder;
            if (!rem.is_zero())
                throw VerifyError("S-pair of " + elems[i].to_string() + " and " +
                                      elems[j].to_string() +
                                      " does not reduce to zero",
                                  rem.to_string());
        }
}

std::vector<CommPoly> a_part(const std::vector<WeylOperator>& elems) {
    std::vector<CommPoly> out;
    for (const auto& e : elems)
        if (e.in_a()) out.push_back(e.to_comm());
    return out;
}

} // namespace

LeftDivision left_divide(const WeylOperator& f,
                         const std::vector<WeylOperator>& divisors) {
    for (const auto& d : divisors)
        if (d.is_zero()) throw InvalidArgument("zero divisor");
    LeftDivision out{std::vector<WeylOperator>(divisors.size(),
                                               WeylOperator(f.n(), f.p())),
                     WeylOperator(f.n(), f.p())};
    WeylOperator h = f;
    while (!h.is_zero()) {
        const Monomial m = h.lm();
        const Rat c = h.lc();
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!divides(divisors[i].lm(), m)) continue;
            const Monomial q = m.quotient_by(divisors[i].lm());
            const Rat t = c / divisors[i].lc();
            h = h - mono_mul(q, t, divisors[i]);
            out.quotients[i].add_term(q, t);
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

WeylOperator s_pair(const WeylOperator& a, const WeylOperator& b) {
    const Monomial l = lcm_exp(a.lm(), b.lm());
    return mono_mul(l.quotient_by(a.lm()), b.lc(), a) -
           mono_mul(l.quotient_by(b.lm()), a.lc(), b);
}

GroebnerBasisR buchberger_r(const LeftIdealPresentation& ideal, bool certify) {
    std::vector<WeylOperator> basis;
    for (const auto& g : ideal.generators) {
        if (g.is_zero()) continue;
        WeylOperator m = g.monic();
        if (std::find(basis.begin(), basis.end(), m) == basis.end())
            basis.push_back(std::move(m));
    }
    GroebnerBasisR out{ideal.n, ideal.p, {}, true};
    if (basis.empty()) return out;

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pending;
    const auto queue_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pending.push_back({i, j, lcm_exp(basis[i].lm(), basis[j].lm())});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) queue_pairs_with(j);

    while (!pending.empty()) {
        auto best = pending.begin();
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            const Ord c = cmp_r(it->lcm, best->lcm);
            if (c == Ord::LT ||
                (c == Ord::EQ && std::pair(it->i, it->j) < std::pair(best->i, best->j)))
                best = it;
        }
        const Pair pair = *best;
        pending.erase(best);
        WeylOperator r =
            left_divide(s_pair(basis[pair.i], basis[pair.j]), basis).remainder;
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        queue_pairs_with(basis.size() - 1);
    }
    out.elements = canonicalize_r(std::move(basis));
    if (certify) certify_elements(out.elements);
    out.certified = certify;
    return out;
}

GroebnerBasisR certify_basis(std::size_t n, std::size_t p,
                             std::vector<WeylOperator> elements) {
    for (auto& e : elements) {
        if (e.is_zero()) throw InvalidArgument("zero basis element");
        if (e.n() != n || e.p() != p)
            throw InvalidArgument("basis element context mismatch");
        e = e.monic();
    }
    certify_elements(elements);
    return {n, p, std::move(elements), true};
}

bool is_unit_ideal(const GroebnerBasisR& gb) {
    return std::any_of(gb.elements.begin(), gb.elements.end(),
                       [](const WeylOperator& g) {
                           return !g.is_zero() && g.lm().is_one();
                       });
}

CommIdeal eliminate_to_a(const GroebnerBasisR& gb) {
    if (!gb.certified)
        throw InvalidArgument("elimination requires a certified basis");
    return CommIdeal(gb.n, gb.p,
                     buchberger_a(CommIdeal(gb.n, gb.p, a_part(gb.elements))));
}

GroebnerBasisR reduce_gb(const GroebnerBasisR& gb) {
    if (!gb.certified)
        throw InvalidArgument("reduction requires a certified basis");
    std::vector<WeylOperator> elems = gb.elements;
    bool any = false;
    constexpr std::size_t kPassCap = 100000;
    for (std::size_t pass = 0;; ++pass) {
        if (pass >= kPassCap)
            throw InternalError("plc replacement loop failed to stabilize");
        std::sort(elems.begin(), elems.end(), descending_lm);
        const std::vector<CommPoly> a_elems = a_part(elems);
        bool changed = false;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (elems[i].in_a() || a_elems.empty()) continue;
            const ParametricSplit split = parametric_split(elems[i]);
            const CommPoly r = divide_a(split.plc, a_elems).remainder;
            if (r == split.plc) continue;
            changed = true;
            any = true;
            WeylOperator next =
                weyl_mul(WeylOperator::from_comm(r),
                         WeylOperator::from_term(split.plm, 1)) +
                split.tail;
            bool drop = next.is_zero();
            if (!drop) {
                next = next.monic();
                for (std::size_t j = 0; j < elems.size() && !drop; ++j)
                    drop = j != i && elems[j] == next;
            }
            if (drop)
                elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(i));
            else
                elems[i] = std::move(next);
            break; // the A-part may have changed; restart the pass
        }
        if (!changed) break;
    }
    GroebnerBasisR out = gb;
    if (any) {
        out.elements = canonicalize_r(std::move(elems));
        certify_elements(out.elements);
        out.certified = true;
    }
    const std::vector<CommPoly> a_elems = a_part(out.elements);
    for (const auto& e : out.elements) {
        if (e.in_a()) continue;
        const CommPoly c = plc(e);
        if (c.is_zero() ||
            (!a_elems.empty() && divide_a(c, a_elems).remainder != c))
            throw InternalError("reduced basis kept a reducible plc");
    }
    return out;
}

CommPoly h_polynomial(const GroebnerBasisR& gb, const CommIdeal& prime) {
    if (prime.n() != gb.n || prime.p() != gb.p)
        throw InvalidArgument("prime context mismatch");
    const std::vector<CommPoly> p_gb = buchberger_a(prime);
    CommPoly h = CommPoly::constant(gb.n, gb.p, 1);
    for (const auto& e : gb.elements) {
        if (e.in_a() && membership_a(e.to_comm(), p_gb)) continue;
        h = h * plc(e);
    }
    return h.monic();
}

GroebnerBasisR specialize_gb(const GroebnerBasisR& gb, const CommIdeal& prime,
                             const RationalPoint& alpha) {
    if (!gb.certified)
        throw InvalidArgument("specialization requires a certified basis");
    if (prime.n() != gb.n || prime.p() != gb.p)
        throw InvalidArgument("prime context mismatch");
    if (alpha.p() != gb.p)
        throw InvalidArgument("point dimension does not match p");
    for (const auto& g : prime.gens()) {
        const Rat v = g.eval(alpha);
        if (v != 0)
            throw VerifyError("point lies outside the zero set of the prime",
                              g.to_string() + " evaluates to " + rat_to_string(v) +
                                  " at " + alpha.to_string());
    }
    const CommPoly h = h_polynomial(gb, prime);
    if (h.eval(alpha) == 0)
        throw VerifyError("h vanishes at the point",
                          "h = " + h.to_string() + " at " + alpha.to_string());
    const std::vector<CommPoly> p_gb = buchberger_a(prime);
    std::vector<WeylOperator> mapped;
    for (const auto& e : gb.elements) {
        if (e.in_a() && membership_a(e.to_comm(), p_gb)) continue;
        const Monomial expected = plm(e).drop_s();
        WeylOperator q = specialize(e, alpha);
        if (q.is_zero() || q.lm() != expected)
            throw InternalError("specialized element lost its leading monomial");
        mapped.push_back(q.monic());
    }
    return certify_basis(gb.n, 0, std::move(mapped));
}

bool fiber_nonzero(const LeftIdealPresentation& ideal,
                   const RationalPoint& alpha, bool certify) {
    if (alpha.p() != ideal.p)
        throw InvalidArgument("point dimension does not match p");
    std::vector<WeylOperator> spec;
    for (const auto& g : ideal.generators) {
        WeylOperator q = specialize(g, alpha);
        if (!q.is_zero()) spec.push_back(std::move(q));
    }
    return !is_unit_ideal(
        buchberger_r(LeftIdealPresentation(ideal.n, 0, std::move(spec)), certify));
}

ContractionCheck verify_prime_contraction(const LeftIdealPresentation& ideal,
                                          const CommIdeal& prime) {
    if (prime.n() != ideal.n || prime.p() != ideal.p)
        throw InvalidArgument("prime context mismatch");
    std::vector<WeylOperator> gens = ideal.generators;
    for (const auto& g : prime.gens()) gens.push_back(WeylOperator::from_comm(g));
    const GroebnerBasisR gb = buchberger_r(
        LeftIdealPresentation(ideal.n, ideal.p, std::move(gens)), true);
    ContractionCheck out;
    out.contraction = eliminate_to_a(gb).gens();
    const std::vector<CommPoly> p_gb = buchberger_a(prime);
    for (const auto& e : out.contraction)
        if (!membership_a(e, p_gb)) {
            out.witness = e;
            out.detail = "element of the contraction lies outside the prime";
            return out;
        }
    for (const auto& g : prime.gens())
        if (!membership_a(g, out.contraction)) {
            out.witness = g;
            out.detail = "prime generator is missing from the contraction";
            return out;
        }
    out.ok = true;
    return out;
}

namespace {

// 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 1/3, -1/3, ...
Rat rational_sequence(std::size_t index) {
    if (index == 0) return Rat(0);
    if (index <= 2) return index == 1 ? Rat(1) : Rat(-1);
    const std::size_t k = 2 + (index - 3) / 4;
    switch ((index - 3) % 4) {
    case 0: return Rat(static_cast<long>(k));
    case 1: return -Rat(static_cast<long>(k));
    case 2: return Rat(1, static_cast<long>(k));
    default: return Rat(-1, static_cast<long>(k));
    }
}

struct AffineSolution {
    std::vector<Rat> particular;          // one point of Z(prime)
    std::vector<std::vector<Rat>> basis;  // spanning directions of the fiber
};

AffineSolution solve_linear_zero_set(const CommIdeal& prime) {
    const std::size_t p = prime.p();
    std::vector<std::vector<Rat>> rows; // p coefficients then the constant
    for (const auto& g : prime.gens()) {
        std::vector<Rat> row(p + 1, Rat(0));
        for (const auto& [m, c] : g.terms()) {
            if (m.total_degree() > 1)
                throw InvalidArgument(
                    "sample generation requires a prime generated in degree 1; "
                    "got " + g.to_string());
            if (m.is_one()) {
                row[p] = c;
                continue;
            }
            for (std::size_t i = 0; i < p; ++i)
                if (m.s_exp(i)) row[i] = c;
        }
        rows.push_back(std::move(row));
    }
    // Gaussian elimination on [A | -c], solving A*s = -constant.
    for (auto& row : rows) row[p] = -row[p];
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < p && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        const Rat inv = 1 / rows[rank][col];
        for (auto& v : rows[rank]) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rat f = rows[r][col];
            for (std::size_t c = 0; c <= p; ++c) rows[r][c] -= f * rows[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r][p] != 0)
            throw InvalidArgument("prime has an empty rational zero set");

    AffineSolution out;
    out.particular.assign(p, Rat(0));
    for (std::size_t r = 0; r < rank; ++r)
        out.particular[pivot_col[r]] = rows[r][p];
    std::vector<bool> is_pivot(p, false);
    for (const auto c : pivot_col) is_pivot[c] = true;
    for (std::size_t col = 0; col < p; ++col) {
        if (is_pivot[col]) continue;
        std::vector<Rat> dir(p, Rat(0));
        dir[col] = 1;
        for (std::size_t r = 0; r < rank; ++r)
            dir[pivot_col[r]] = -rows[r][col];
        out.basis.push_back(std::move(dir));
    }
    return out;
}

bool point_listed(const RationalPoint& pt, const std::vector<RationalPoint>& in) {
    return std::any_of(in.begin(), in.end(), [&](const RationalPoint& q) {
        return q.coords == pt.coords;
    });
}

} // namespace

std::vector<RationalPoint> sample_zero_set(
    const CommIdeal& prime, const CommPoly& avoid, std::size_t count,
    const std::vector<RationalPoint>& exclude) {
    const AffineSolution sol = solve_linear_zero_set(prime);
    const std::size_t dim = sol.basis.size();
    std::vector<RationalPoint> out;
    const auto consider = [&](const std::vector<std::size_t>& idx) {
        RationalPoint pt{sol.particular};
        for (std::size_t k = 0; k < dim; ++k) {
            const Rat t = rational_sequence(idx[k]);
            for (std::size_t i = 0; i < pt.coords.size(); ++i)
                pt.coords[i] += t * sol.basis[k][i];
        }
        if (avoid.eval(pt) == 0) return;
        if (point_listed(pt, exclude) || point_listed(pt, out)) return;
        out.push_back(std::move(pt));
    };
    if (dim == 0) {
        consider({});
        return out;
    }
    constexpr std::size_t kRoundCap = 4096;
    for (std::size_t round = 0; out.size() < count; ++round) {
        if (round >= kRoundCap)
            throw LimitExceeded("sample search exhausted " +
                                std::to_string(kRoundCap) + " rounds");
        // all index tuples whose maximum entry is exactly `round`
        std::vector<std::size_t> idx(dim, 0);
        for (;;) {
            if (std::find(idx.begin(), idx.end(), round) != idx.end())
                consider(idx);
            if (out.size() >= count) break;
            std::size_t k = 0;
            for (; k < dim; ++k) {
                if (idx[k] < round) {
                    ++idx[k];
                    break;
                }
                idx[k] = 0;
            }
            if (k == dim) break;
        }
    }
    return out;
}

FiberCertificate dense_open_certificate(const LeftIdealPresentation& ideal,
                                        const CommIdeal& prime,
                                        const std::vector<RationalPoint>& samples,
                                        std::size_t want_samples, bool certify) {
    if (prime.n() != ideal.n || prime.p() != ideal.p)
        throw InvalidArgument("prime context mismatch");
    std::vector<WeylOperator> q_gens = ideal.generators;
    for (const auto& g : prime.gens())
        q_gens.push_back(WeylOperator::from_comm(g));
    const GroebnerBasisR gb = reduce_gb(buchberger_r(
        LeftIdealPresentation(ideal.n, ideal.p, std::move(q_gens)), true));

    const CommIdeal contraction = eliminate_to_a(gb);
    const std::vector<CommPoly> p_gb = buchberger_a(prime);
    for (const auto& e : contraction.gens())
        if (!membership_a(e, p_gb))
            throw VerifyError(
                "(J + R*prime) cap A != prime; prime is not a minimal prime "
                "divisor of the contraction",
                e.to_string() + " lies in the contraction but not in the prime");
    for (const auto& g : prime.gens())
        if (!membership_a(g, contraction.gens()))
            throw VerifyError(
                "(J + R*prime) cap A != prime; prime is not a minimal prime "
                "divisor of the contraction",
                g.to_string() + " is missing from the contraction");

    FiberCertificate cert{prime, gb, h_polynomial(gb, prime), {}, 0};
    if (membership_a(cert.h, p_gb))
        throw VerifyError("h lies in the prime; the prime may not be prime",
                          "h = " + cert.h.to_string());

    std::vector<RationalPoint> used;
    const auto run_sample = [&](const RationalPoint& pt) {
        SampleReport report{pt, false, "", false};
        if (pt.p() != ideal.p) {
            report.skip_reason = "point dimension does not match p";
            cert.samples.push_back(std::move(report));
            return;
        }
        for (const auto& g : prime.gens()) {
            const Rat v = g.eval(pt);
            if (v != 0) {
                report.skip_reason = "outside Z(prime): " + g.to_string() +
                                     " evaluates to " + rat_to_string(v);
                cert.samples.push_back(std::move(report));
                return;
            }
        }
        if (cert.h.eval(pt) == 0) {
            report.skip_reason = "h vanishes at the point";
            cert.samples.push_back(std::move(report));
            return;
        }
        report.admissible = true;
        report.fiber = fiber_nonzero(ideal, pt, certify);
        if (!report.fiber)
            throw InternalError("zero fiber at admissible sample point " +
                                pt.to_string());
        used.push_back(pt);
        ++cert.verified;
        cert.samples.push_back(std::move(report));
    };

    for (const auto& pt : samples) run_sample(pt);
    if (cert.verified < want_samples) {
        const bool linear = std::all_of(
            prime.gens().begin(), prime.gens().end(),
            [](const CommPoly& g) { return g.total_degree() <= 1; });
        if (linear)
            for (const auto& pt : sample_zero_set(prime, cert.h,
                                                  want_samples - cert.verified,
                                                  used))
                run_sample(pt);
        else if (cert.verified == 0 && want_samples > 0)
            throw InvalidArgument(
                "no admissible sample points; points must be supplied for a "
                "prime with generators of degree above 1");
    }
    return cert;
}

} // namespace paramweyl
