#ifndef GALECIRCUIT_RATIONAL_HPP
#define GALECIRCUIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "galecircuit/errors.hpp"

namespace galecircuit {

using Integer = mpz_class;

/// Arbitrary-precision rational. mpq_class keeps values canonical
/// (positive denominator, coprime) through all arithmetic.
using Rational = mpq_class;

inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

inline Integer abs_int(const Integer& x) { return abs(x); }

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ParseError("zero denominator");
    Rational q;
    mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
    q.canonicalize();
    return q;
}

inline Integer parse_integer(const std::string& s) {
    try {
        return Integer(s, 10);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad integer literal '" + s + "'");
    }
}

/// Accepts "p" or "p/q" with an optional sign on p.
inline Rational parse_rational(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den <= 0) throw ParseError("denominator must be positive in '" + raw + "'");
    return make_rational(num, den);
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) {
    if (is_integral(x)) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Integer denominator_lcm(const std::vector<Rational>& xs) {
    Integer l = 1;
    for (const auto& x : xs) l = int_lcm(l, x.get_den());
    return l;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// base^e for integer e (negative e inverts; requires base != 0 then).
inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long ue = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Integer num = int_pow(base.get_num(), ue);
    Integer den = int_pow(base.get_den(), ue);
    if (invert) {
        if (num == 0) throw PreconditionViolated("0 raised to a negative power");
        return make_rational(den, num);
    }
    return make_rational(num, den);
}

/// Returns x as Integer; throws unless x is integral.
inline Integer to_integer(const Rational& x) {
    if (!is_integral(x)) throw PreconditionViolated("expected integer, got " + to_string(x));
    return x.get_num();
}

/// Clears denominators and divides by the gcd; resulting entries are coprime
/// integers. The global sign is preserved.
inline std::vector<Rational> scale_to_coprime_integers(const std::vector<Rational>& xs) {
    Integer l = denominator_lcm(xs);
    Integer g = 0;
    std::vector<Integer> ints;
    ints.reserve(xs.size());
    for (const auto& x : xs) {
        Integer v = x.get_num() * (l / x.get_den());
        g = int_gcd(g, v);
        ints.push_back(v);
    }
    std::vector<Rational> out;
    out.reserve(xs.size());
    for (auto& v : ints) out.emplace_back(g == 0 ? v : Integer(v / g));
    return out;
}

}  // namespace galecircuit

#endif
