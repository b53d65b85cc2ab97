#include "paramweyl/weyl.hpp"

#include <algorithm>

namespace paramweyl {

WeylOperator WeylOperator::constant(std::size_t n, std::size_t p, const Rat& c) {
    WeylOperator op(n, p);
    op.add_term(Monomial::one(n, p), c);
    return op;
}

WeylOperator WeylOperator::from_term(const Monomial& m, const Rat& c) {
    WeylOperator op(m.n(), m.p());
    op.add_term(m, c);
    return op;
}

WeylOperator WeylOperator::from_comm(const CommPoly& f) {
    WeylOperator op(f.n(), f.p());
    for (const auto& [m, c] : f.terms()) op.terms_.emplace(m, c);
    return op;
}

void WeylOperator::check_term(const Monomial& m) const {
    if (m.n() != n_ || m.p() != p_)
        throw InvalidArgument("operator/monomial context mismatch");
}

void WeylOperator::add_term(const Monomial& m, const Rat& c) {
    check_term(m);
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool WeylOperator::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool WeylOperator::in_a() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.in_a(); });
}

WeylOperator WeylOperator::operator-() const {
    WeylOperator out(n_, p_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

WeylOperator WeylOperator::operator+(const WeylOperator& q) const {
    WeylOperator out = *this;
    for (const auto& [m, c] : q.terms_) out.add_term(m, c);
    return out;
}

WeylOperator WeylOperator::operator-(const WeylOperator& q) const {
    WeylOperator out = *this;
    for (const auto& [m, c] : q.terms_) out.add_term(m, -c);
    return out;
}

WeylOperator WeylOperator::scaled(const Rat& c) const {
    WeylOperator out(n_, p_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

bool WeylOperator::operator==(const WeylOperator& q) const {
    return n_ == q.n_ && p_ == q.p_ && terms_ == q.terms_;
}

std::uint64_t WeylOperator::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

const Monomial& WeylOperator::lm() const {
    if (terms_.empty())
        throw InvalidArgument("leading monomial of the zero operator");
    return terms_.begin()->first;
}

const Rat& WeylOperator::lc() const {
    if (terms_.empty())
        throw InvalidArgument("leading coefficient of the zero operator");
    return terms_.begin()->second;
}

WeylOperator WeylOperator::monic() const {
    if (terms_.empty()) return *this;
    return scaled(1 / lc());
}

CommPoly WeylOperator::to_comm() const {
    CommPoly f(n_, p_);
    for (const auto& [m, c] : terms_) f.add_term(m, c); // add_term rejects x/d
    return f;
}

std::string WeylOperator::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        append_term(out, m, c, first);
        first = false;
    }
    return out;
}

namespace {

// Per-variable normal ordering: d^b x^m = sum_k C(b,k) C(m,k) k! x^(m-k) d^(b-k).
// Coefficients follow the recurrence c_0 = 1, c_{k+1} = c_k (b-k)(m-k)/(k+1),
// which stays integral at every step.
void expand_d_past_x(std::uint32_t b, std::uint32_t m,
                     std::vector<Int>& coeffs) {
    const std::uint32_t kmax = std::min(b, m);
    coeffs.assign(kmax + 1, Int(1));
    for (std::uint32_t k = 0; k < kmax; ++k) {
        Int next = coeffs[k] * (b - k) * (m - k);
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), k + 1);
        coeffs[k + 1] = next;
    }
}

// Product of two standard monomials, accumulated into `out` with scale c.
void mul_monomials_into(WeylOperator& out, const Monomial& a, const Monomial& b,
                        const Rat& c) {
    const std::size_t n = a.n();
    // Gather per-variable expansion coefficients where d from `a` crosses
    // x from `b`; all other generator pairs commute.
    std::vector<std::vector<Int>> var_coeffs(n);
    std::vector<std::uint32_t> kmax(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        expand_d_past_x(a.d_exp(i), b.x_exp(i), var_coeffs[i]);
        kmax[i] = static_cast<std::uint32_t>(var_coeffs[i].size() - 1);
    }
    std::vector<std::uint32_t> k(n, 0);
    for (;;) {
        Int coeff(1);
        for (std::size_t i = 0; i < n; ++i) coeff *= var_coeffs[i][k[i]];
        Monomial m = Monomial::one(a.n(), a.p());
        for (std::size_t i = 0; i < n; ++i) {
            m.set_x(i, a.x_exp(i) + b.x_exp(i) - k[i]);
            m.set_d(i, a.d_exp(i) + b.d_exp(i) - k[i]);
        }
        for (std::size_t i = 0; i < a.p(); ++i)
            m.set_s(i, a.s_exp(i) + b.s_exp(i));
        out.add_term(m, c * Rat(coeff));
        // odometer over 0 <= k_i <= kmax_i
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (k[i] < kmax[i]) {
                ++k[i];
                break;
            }
            k[i] = 0;
        }
        if (i == n) break;
    }
}

} // namespace

WeylOperator weyl_mul(const WeylOperator& a, const WeylOperator& b) {
    if (a.n() != b.n() || a.p() != b.p())
        throw InvalidArgument("operator context mismatch in product");
    WeylOperator out(a.n(), a.p());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            mul_monomials_into(out, ma, mb, ca * cb);
    return out;
}

ParametricSplit parametric_split(const WeylOperator& op) {
    if (op.is_zero())
        throw InvalidArgument("parametric split of the zero operator");
    // Terms are sorted by (dn-part, s-part) descending, so the group sharing
    // the leading dn-part is the initial run of the map.
    const Monomial lead_dn = op.lm().dn_part();
    ParametricSplit out{lead_dn, CommPoly(op.n(), op.p()), WeylOperator(op.n(), op.p())};
    for (const auto& [m, c] : op.terms()) {
        if (m.dn_part() == lead_dn)
            out.plc.add_term(m.a_part(), c);
        else
            out.tail.add_term(m, c);
    }
    return out;
}

Monomial plm(const WeylOperator& op) { return parametric_split(op).plm; }

CommPoly plc(const WeylOperator& op) { return parametric_split(op).plc; }

WeylOperator specialize(const WeylOperator& op, const RationalPoint& alpha) {
    if (alpha.p() != op.p())
        throw InvalidArgument("point dimension " + std::to_string(alpha.p()) +
                              " does not match p = " + std::to_string(op.p()));
    WeylOperator out(op.n(), 0);
    for (const auto& [m, c] : op.terms()) {
        Rat v = c;
        for (std::size_t i = 0; i < op.p(); ++i)
            if (m.s_exp(i)) v *= rat_pow(alpha.coords[i], m.s_exp(i));
        out.add_term(m.drop_s(), v);
    }
    return out;
}

LeftIdealPresentation::LeftIdealPresentation(std::size_t n_, std::size_t p_,
                                             std::vector<WeylOperator> gens)
    : n(n_), p(p_), generators(std::move(gens)) {
    for (const auto& g : generators)
        if (g.n() != n || g.p() != p)
            throw InvalidArgument("ideal generator context mismatch");
}

} // namespace paramweyl
