#include "paramweyl/monomial.hpp"

#include <algorithm>

namespace paramweyl {

namespace {

constexpr std::uint32_t kExpMax = 1u << 30; // far beyond desk scale

void require_same_context(const Monomial& a, const Monomial& b) {
    if (a.n() != b.n() || a.p() != b.p())
        throw InvalidArgument("monomial context mismatch: (n,p)=(" +
                              std::to_string(a.n()) + "," + std::to_string(a.p()) +
                              ") vs (" + std::to_string(b.n()) + "," +
                              std::to_string(b.p()) + ")");
}

Ord cmp_u32(std::uint32_t a, std::uint32_t b) {
    if (a < b) return Ord::LT;
    if (a > b) return Ord::GT;
    return Ord::EQ;
}

} // namespace

std::uint32_t Monomial::check_exp(std::uint32_t e) {
    if (e > kExpMax)
        throw InvalidArgument("exponent too large: " + std::to_string(e));
    return e;
}

bool Monomial::is_one() const {
    auto zero = [](std::uint32_t e) { return e == 0; };
    return std::all_of(x_.begin(), x_.end(), zero) &&
           std::all_of(d_.begin(), d_.end(), zero) &&
           std::all_of(s_.begin(), s_.end(), zero);
}

bool Monomial::in_a() const {
    auto zero = [](std::uint32_t e) { return e == 0; };
    return std::all_of(x_.begin(), x_.end(), zero) &&
           std::all_of(d_.begin(), d_.end(), zero);
}

bool Monomial::in_dn() const {
    return std::all_of(s_.begin(), s_.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t t = 0;
    for (auto e : x_) t += e;
    for (auto e : d_) t += e;
    for (auto e : s_) t += e;
    return t;
}

Monomial Monomial::mul(const Monomial& m) const {
    require_same_context(*this, m);
    Monomial out = *this;
    for (std::size_t i = 0; i < x_.size(); ++i) out.x_[i] = check_exp(out.x_[i] + m.x_[i]);
    for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] = check_exp(out.d_[i] + m.d_[i]);
    for (std::size_t i = 0; i < s_.size(); ++i) out.s_[i] = check_exp(out.s_[i] + m.s_[i]);
    return out;
}

Monomial Monomial::quotient_by(const Monomial& m) const {
    require_same_context(*this, m);
    if (!divides(m, *this))
        throw InvalidArgument("monomial quotient: " + m.to_string() +
                              " does not divide " + to_string());
    Monomial out = *this;
    for (std::size_t i = 0; i < x_.size(); ++i) out.x_[i] -= m.x_[i];
    for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] -= m.d_[i];
    for (std::size_t i = 0; i < s_.size(); ++i) out.s_[i] -= m.s_[i];
    return out;
}

Monomial Monomial::a_part() const {
    Monomial out(n(), p());
    out.s_ = s_;
    return out;
}

Monomial Monomial::dn_part() const {
    Monomial out(n(), p());
    out.x_ = x_;
    out.d_ = d_;
    return out;
}

Monomial Monomial::drop_s() const {
    Monomial out(n(), 0);
    out.x_ = x_;
    out.d_ = d_;
    return out;
}

Ord cmp_r(const Monomial& a, const Monomial& b) {
    require_same_context(a, b);
    const std::size_t n = a.n(), p = a.p();
    for (std::size_t i = 0; i < n; ++i)       // d_1 > .. > d_n
        if (auto c = cmp_u32(a.d_[i], b.d_[i]); c != Ord::EQ) return c;
    for (std::size_t i = n; i-- > 0;)         // x_n > .. > x_1
        if (auto c = cmp_u32(a.x_[i], b.x_[i]); c != Ord::EQ) return c;
    for (std::size_t i = p; i-- > 0;)         // s_p > .. > s_1
        if (auto c = cmp_u32(a.s_[i], b.s_[i]); c != Ord::EQ) return c;
    return Ord::EQ;
}

Ord cmp_dn(const Monomial& a, const Monomial& b) {
    if (!a.in_dn() || !b.in_dn())
        throw InvalidArgument("cmp_dn requires s-free monomials");
    return cmp_r(a, b);
}

Ord cmp_a(const Monomial& a, const Monomial& b) {
    if (!a.in_a() || !b.in_a())
        throw InvalidArgument("cmp_a requires monomials in the parameter ring");
    return cmp_r(a, b);
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_context(a, b);
    for (std::size_t i = 0; i < a.x_.size(); ++i)
        if (a.x_[i] > b.x_[i]) return false;
    for (std::size_t i = 0; i < a.d_.size(); ++i)
        if (a.d_[i] > b.d_[i]) return false;
    for (std::size_t i = 0; i < a.s_.size(); ++i)
        if (a.s_[i] > b.s_[i]) return false;
    return true;
}

Monomial lcm_exp(const Monomial& a, const Monomial& b) {
    require_same_context(a, b);
    Monomial out = a;
    for (std::size_t i = 0; i < a.x_.size(); ++i) out.x_[i] = std::max(a.x_[i], b.x_[i]);
    for (std::size_t i = 0; i < a.d_.size(); ++i) out.d_[i] = std::max(a.d_[i], b.d_[i]);
    for (std::size_t i = 0; i < a.s_.size(); ++i) out.s_[i] = std::max(a.s_[i], b.s_[i]);
    return out;
}

std::string Monomial::to_string() const {
    std::string out;
    auto emit = [&out](char v, std::size_t idx1, std::uint32_t e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += v;
        out += std::to_string(idx1);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    };
    for (std::size_t i = x_.size(); i-- > 0;) emit('x', i + 1, x_[i]);
    for (std::size_t i = d_.size(); i-- > 0;) emit('d', i + 1, d_[i]);
    for (std::size_t i = s_.size(); i-- > 0;) emit('s', i + 1, s_[i]);
    return out.empty() ? "1" : out;
}

void append_term(std::string& out, const Monomial& m, const Rat& coef, bool first) {
    Rat c = coef;
    if (first) {
        if (c < 0) {
            out += '-';
            c = -c;
        }
    } else {
        out += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
    }
    if (m.is_one()) {
        out += rat_to_string(c);
    } else {
        if (c != 1) {
            out += rat_to_string(c);
            out += '*';
        }
        out += m.to_string();
    }
}

} // namespace paramweyl
