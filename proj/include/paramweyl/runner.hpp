#pragma once

#include <cstdint>
#include <string>

#include "paramweyl/idealfile.hpp"

namespace paramweyl {

// Selection and tuning flags for one command invocation. String selectors
// name blocks in the document; an empty selector falls back to the unique
// block of that kind when the document has exactly one.
struct RunOptions {
    std::string ideal;
    std::string prime;       // block name, or path to a file whose first
                             // prime block is used
    std::string target;      // oracle-member: operator expression
    std::string point;       // block name or inline "a1,a2,..."
    std::string components;  // lemma21 / thm22-h: "q1:p1,q2:p2,..."
    std::size_t index = 1;   // thm22-h: 1-based component index
    std::string samples = "20"; // all digits: count to generate;
                                // else ';'-separated points (names or tuples)
    std::uint32_t max_degree = 6;
    std::uint32_t k_cap = 64;
    bool certify = true;
    bool json = false;
};

struct RunResult {
    int exit_code = 0;
    std::string output; // stdout payload, newline-terminated when nonempty
    std::string error;  // stderr payload on failure
};

// Executes one subcommand against a parsed document. Never throws: parse and
// usage errors exit 2, every other failure exits 1, with the message in
// `error` prefixed by "error: ".
//
// Commands: gb, eliminate, reduce-gb, h-poly, specialize, fiber-check,
// dense-open, lemma21, thm22-h, verify-lemma24, oracle-member.
RunResult run_command(const std::string& command, const Document& doc,
                      const RunOptions& opts);

} // namespace paramweyl
