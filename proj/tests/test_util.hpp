#ifndef GALECIRCUIT_TESTS_TEST_UTIL_HPP
#define GALECIRCUIT_TESTS_TEST_UTIL_HPP

#include <string>
#include <vector>

#include "galecircuit/rational.hpp"

namespace testutil {

using galecircuit::Integer;
using galecircuit::Rational;

/// "2.618033988749894848204587" -> exact rational digits/10^k.
inline Rational decimal(const std::string& s) {
    std::string digits;
    long frac = 0;
    bool seen_dot = false, negative = false;
    for (char ch : s) {
        if (ch == '-') {
            negative = true;
        } else if (ch == '.') {
            seen_dot = true;
        } else {
            digits.push_back(ch);
            if (seen_dot) ++frac;
        }
    }
    Rational r = galecircuit::make_rational(galecircuit::parse_integer(digits),
                                            galecircuit::int_pow(Integer(10), frac));
    return negative ? Rational(-r) : r;
}

inline std::vector<Rational> rats(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace testutil

#endif
