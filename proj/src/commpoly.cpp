#include "paramweyl/commpoly.hpp"

namespace paramweyl {

std::string RationalPoint::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += rat_to_string(coords[i]);
    }
    return out + ")";
}

CommPoly CommPoly::constant(std::size_t n, std::size_t p, const Rat& c) {
    CommPoly f(n, p);
    f.add_term(Monomial::one(n, p), c);
    return f;
}

CommPoly CommPoly::from_term(const Monomial& m, const Rat& c) {
    CommPoly f(m.n(), m.p());
    f.add_term(m, c);
    return f;
}

void CommPoly::check_term(const Monomial& m) const {
    if (m.n() != n_ || m.p() != p_)
        throw InvalidArgument("polynomial/monomial context mismatch");
    if (!m.in_a())
        throw InvalidArgument("parameter-ring polynomial cannot hold " + m.to_string());
}

void CommPoly::add_term(const Monomial& m, const Rat& c) {
    check_term(m);
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool CommPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

CommPoly CommPoly::operator-() const {
    CommPoly out(n_, p_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

CommPoly CommPoly::operator+(const CommPoly& g) const {
    CommPoly out = *this;
    for (const auto& [m, c] : g.terms_) out.add_term(m, c);
    return out;
}

CommPoly CommPoly::operator-(const CommPoly& g) const {
    CommPoly out = *this;
    for (const auto& [m, c] : g.terms_) out.add_term(m, -c);
    return out;
}

CommPoly CommPoly::operator*(const CommPoly& g) const {
    if (n_ != g.n_ || p_ != g.p_)
        throw InvalidArgument("polynomial context mismatch in product");
    CommPoly out(n_, p_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : g.terms_)
            out.add_term(m1.mul(m2), c1 * c2);
    return out;
}

CommPoly CommPoly::scaled(const Rat& c) const {
    CommPoly out(n_, p_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

CommPoly CommPoly::pow(unsigned long e) const {
    if (e > 65536)
        throw LimitExceeded("polynomial exponent too large: " + std::to_string(e));
    CommPoly out = constant(n_, p_, 1);
    for (unsigned long i = 0; i < e; ++i) out = out * *this;
    return out;
}

bool CommPoly::operator==(const CommPoly& g) const {
    return n_ == g.n_ && p_ == g.p_ && terms_ == g.terms_;
}

std::uint64_t CommPoly::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

const Monomial& CommPoly::lm() const {
    if (terms_.empty())
        throw InvalidArgument("leading monomial of the zero polynomial");
    return terms_.begin()->first;
}

const Rat& CommPoly::lc() const {
    if (terms_.empty())
        throw InvalidArgument("leading coefficient of the zero polynomial");
    return terms_.begin()->second;
}

CommPoly CommPoly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(1 / lc());
}

Rat CommPoly::eval(const RationalPoint& alpha) const {
    if (alpha.p() != p_)
        throw InvalidArgument("point dimension " + std::to_string(alpha.p()) +
                              " does not match p = " + std::to_string(p_));
    Rat out(0);
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (std::size_t i = 0; i < p_; ++i)
            if (m.s_exp(i)) v *= rat_pow(alpha.coords[i], m.s_exp(i));
        out += v;
    }
    return out;
}

std::string CommPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        append_term(out, m, c, first);
        first = false;
    }
    return out;
}

} // namespace paramweyl
