#pragma once

#include <string>
#include <utility>
#include <vector>

#include "paramweyl/commutative.hpp"
#include "paramweyl/weyl.hpp"

namespace paramweyl {

// A parsed ideal file. The format:
//
//   # comments run to end of line
//   vars n=2 p=2
//   ideal J: x1*d1 - s1; x2*d2 - s2;
//       x2*x1
//   prime P: s1 + 1
//   point a: -1, 1/2
//
// The first contentful line declares the variable counts. Every later block
// starts with `ideal|prime|point <name>:` and its payload continues over
// following lines until the next block keyword. Ideal and prime payloads are
// `;`-separated operator expressions (primes must be polynomials in the s
// variables alone); point payloads are comma-separated rationals, one per
// s variable. Names must be unique per kind.
struct Document {
    std::size_t n = 0;
    std::size_t p = 0;
    std::vector<std::pair<std::string, LeftIdealPresentation>> ideals;
    std::vector<std::pair<std::string, CommIdeal>> primes;
    std::vector<std::pair<std::string, RationalPoint>> points;

    const LeftIdealPresentation& ideal(const std::string& name) const;
    const CommIdeal& prime(const std::string& name) const;
    const RationalPoint& point(const std::string& name) const;
    bool has_ideal(const std::string& name) const;
    bool has_prime(const std::string& name) const;
    bool has_point(const std::string& name) const;
};

Document parse_document(const std::string& text);
Document parse_document_file(const std::string& path);

} // namespace paramweyl
