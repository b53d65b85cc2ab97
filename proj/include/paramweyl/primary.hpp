#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "paramweyl/commutative.hpp"

namespace paramweyl {

// A primary ideal q together with its radical p and a generator list for
// the nilradical of A/q (defaults to the generators of p). Primaryness and
// the radical relation are caller assertions; validate() runs the decidable
// sanity checks: nilradical generators lie in p, q is contained in p, and
// each generator of p has a power in q.
struct PrimaryComponentInput {
    CommIdeal q;
    CommIdeal p;
    std::vector<CommPoly> nilradical;

    PrimaryComponentInput(CommIdeal q_, CommIdeal p_);
    PrimaryComponentInput(CommIdeal q_, CommIdeal p_,
                          std::vector<CommPoly> nilradical_);
    void validate() const;
};

// Multiplier f in p but not q with f*p contained in q, built by the
// smallest-power search f <- f * g^(k-1) over the nilradical generators.
// Requires q != p; the per-generator power search is capped by k_cap and
// throws LimitExceeded beyond it. All three membership postconditions are
// re-checked before returning; a violation (possible only when q is not
// primary or the generator list is wrong) throws VerifyError.
CommPoly primary_multiplier(const PrimaryComponentInput& input,
                            std::uint32_t k_cap = 64);

struct RadicalMultiplierResult {
    CommPoly h;
    bool single_component = false; // one-component extension of the statement
    std::optional<CommPoly> g;     // intersection element outside sqrt(q_j)
    std::optional<CommPoly> f;     // primary multiplier, when q_j is not radical
};

// Multiplier h outside q_j with h * sqrt(q_j) contained in the intersection
// of all components. Component j's radical must be minimal among the
// radicals (cross-checked via radical membership); g is the first canonical
// generator of the intersection over i != j lying outside sqrt(q_j), and
// h = g when q_j is radical, h = primary_multiplier(j) * g otherwise. With
// a single component, h = 1 when q is radical and the primary multiplier
// otherwise, flagged in the result. `index` is 0-based.
RadicalMultiplierResult radical_multiplier(
    const std::vector<PrimaryComponentInput>& components, std::size_t index,
    std::uint32_t k_cap = 64);

} // namespace paramweyl
