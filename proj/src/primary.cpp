#include "paramweyl/primary.hpp"

#include <string>

#include "paramweyl/errors.hpp"

namespace paramweyl {

PrimaryComponentInput::PrimaryComponentInput(CommIdeal q_, CommIdeal p_)
    : q(std::move(q_)), p(std::move(p_)), nilradical(p.gens()) {}

PrimaryComponentInput::PrimaryComponentInput(CommIdeal q_, CommIdeal p_,
                                             std::vector<CommPoly> nilradical_)
    : q(std::move(q_)), p(std::move(p_)), nilradical(std::move(nilradical_)) {}

void PrimaryComponentInput::validate() const {
    if (q.n() != p.n() || q.p() != p.p())
        throw InvalidArgument("component ideal context mismatch");
    const std::vector<CommPoly> p_gb = buchberger_a(p);
    for (const auto& g : nilradical)
        if (!membership_a(g, p_gb))
            throw InvalidArgument("nilradical generator " + g.to_string() +
                                  " lies outside the radical");
    for (const auto& g : q.gens())
        if (!membership_a(g, p_gb))
            throw InvalidArgument("primary generator " + g.to_string() +
                                  " lies outside the claimed radical");
    for (const auto& g : p.gens())
        if (!radical_membership(g, q))
            throw InvalidArgument("radical generator " + g.to_string() +
                                  " has no power inside the primary ideal");
}

CommPoly primary_multiplier(const PrimaryComponentInput& input,
                            std::uint32_t k_cap) {
    input.validate();
    const std::vector<CommPoly> q_gb = buchberger_a(input.q);
    const std::vector<CommPoly> p_gb = buchberger_a(input.p);
    bool equal = true;
    for (const auto& g : input.p.gens())
        if (!membership_a(g, q_gb)) { equal = false; break; }
    if (equal)
        throw InvalidArgument(
            "the primary ideal equals its radical; the multiplier requires a "
            "proper containment");

    CommPoly f = CommPoly::constant(input.q.n(), input.q.p(), 1);
    for (const auto& g : input.nilradical) {
        CommPoly fg = f * g; // f * g^k, k from 1
        std::uint32_t k = 1;
        while (!membership_a(fg, q_gb)) {
            if (++k > k_cap)
                throw LimitExceeded(
                    "no power of " + g.to_string() + " below " +
                    std::to_string(k_cap) +
                    " multiplies into the primary ideal; it may not be primary "
                    "or the generator list may be wrong");
            fg = fg * g;
        }
        f = f * g.pow(k - 1);
    }
    if (!membership_a(f, p_gb))
        throw VerifyError("multiplier lies outside the radical",
                          "f = " + f.to_string());
    if (membership_a(f, q_gb))
        throw VerifyError(
            "multiplier lies inside the primary ideal; it may not be primary",
            "f = " + f.to_string());
    for (const auto& g : input.p.gens())
        if (!membership_a(f * g, q_gb))
            throw VerifyError(
                "multiplier product escapes the primary ideal; it may not be "
                "primary",
                "f * " + g.to_string() + " = " + (f * g).to_string());
    return f;
}

RadicalMultiplierResult radical_multiplier(
    const std::vector<PrimaryComponentInput>& components, std::size_t index,
    std::uint32_t k_cap) {
    if (components.empty())
        throw InvalidArgument("at least one component is required");
    if (index >= components.size())
        throw InvalidArgument("component index out of range");
    for (const auto& c : components) c.validate();
    const PrimaryComponentInput& cj = components[index];
    const std::vector<CommPoly> qj_gb = buchberger_a(cj.q);
    bool qj_radical = true;
    for (const auto& g : cj.p.gens())
        if (!membership_a(g, qj_gb)) { qj_radical = false; break; }

    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i == index) continue;
        bool contained = true;
        for (const auto& g : components[i].q.gens())
            if (!radical_membership(g, cj.q)) { contained = false; break; }
        if (contained)
            throw VerifyError(
                "radical of component " + std::to_string(i + 1) +
                    " is contained in the radical of component " +
                    std::to_string(index + 1) + "; it is not minimal",
                "");
    }

    RadicalMultiplierResult out{CommPoly::constant(cj.q.n(), cj.q.p(), 1),
                                false, std::nullopt, std::nullopt};
    if (components.size() == 1) {
        out.single_component = true;
        if (!qj_radical) {
            out.f = primary_multiplier(cj, k_cap);
            out.h = *out.f;
        }
    } else {
        std::optional<CommIdeal> inter;
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (i == index) continue;
            inter = inter ? intersect_ideals(*inter, components[i].q)
                          : CommIdeal(cj.q.n(), cj.q.p(),
                                      buchberger_a(components[i].q));
        }
        for (const auto& cand : inter->gens())
            if (!radical_membership(cand, cj.q)) {
                out.g = cand;
                break;
            }
        if (!out.g)
            throw VerifyError(
                "every generator of the intersection lies in the radical of "
                "the selected component; its radical is not minimal",
                "");
        if (qj_radical) {
            out.h = *out.g;
        } else {
            out.f = primary_multiplier(cj, k_cap);
            out.h = *out.f * *out.g;
        }
    }

    if (membership_a(out.h, qj_gb))
        throw VerifyError("h lies in the selected component",
                          "h = " + out.h.to_string());
    std::vector<std::vector<CommPoly>> gbs;
    for (const auto& c : components) gbs.push_back(buchberger_a(c.q));
    for (const auto& w : cj.p.gens())
        for (std::size_t i = 0; i < components.size(); ++i)
            if (!membership_a(out.h * w, gbs[i]))
                throw VerifyError(
                    "h times a radical generator escapes component " +
                        std::to_string(i + 1),
                    "h * " + w.to_string() + " = " + (out.h * w).to_string());
    return out;
}

} // namespace paramweyl
