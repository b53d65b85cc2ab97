#pragma once

#include <gmpxx.h>

#include <string>

#include "paramweyl/errors.hpp"

namespace paramweyl {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (reduced, positive denominator) under arithmetic.
using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Accepts "7", "-3", "3/2", "-5/4". Rejects everything else.
inline Rat rat_from_string(const std::string& text) {
    if (text.empty())
        throw InvalidArgument("empty rational literal");
    std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
    bool seen_digit = false, seen_slash = false, digit_after_slash = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/') {
            if (seen_slash || !seen_digit)
                throw InvalidArgument("bad rational literal: " + text);
            seen_slash = true;
        } else if (c >= '0' && c <= '9') {
            (seen_slash ? digit_after_slash : seen_digit) = true;
        } else {
            throw InvalidArgument("bad rational literal: " + text);
        }
    }
    if (!seen_digit || (seen_slash && !digit_after_slash))
        throw InvalidArgument("bad rational literal: " + text);
    if (seen_slash && Int(text.substr(text.find('/') + 1)) == 0)
        throw InvalidArgument("zero denominator: " + text);
    Rat r(text);
    r.canonicalize();
    return r;
}

// r^e for e >= 0.
inline Rat rat_pow(const Rat& r, unsigned long e) {
    Rat out(1);
    Rat base = r;
    while (e) {
        if (e & 1)
            out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

} // namespace paramweyl
