#ifndef GALECIRCUIT_POLYNOMIAL_HPP
#define GALECIRCUIT_POLYNOMIAL_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "galecircuit/rational.hpp"

namespace galecircuit {

/// Expansion guard: converts runaway exponent data into a clean error.
inline constexpr long kDefaultDegreeCap = 20000;

/// Dense univariate polynomial over Q, coefficients ascending by degree.
/// The zero polynomial has an empty coefficient list.
struct RatPoly {
    std::vector<Rational> coeffs;

    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> c) : coeffs(std::move(c)) { normalize(); }
    RatPoly(std::initializer_list<Rational> c) : coeffs(c) { normalize(); }

    static RatPoly zero() { return RatPoly(); }
    static RatPoly constant(Rational v) { return RatPoly({std::move(v)}); }
    static RatPoly monomial(std::size_t deg, Rational v) {
        if (sign(v) == 0) return zero();
        std::vector<Rational> c(deg + 1, Rational(0));
        c[deg] = std::move(v);
        RatPoly p;
        p.coeffs = std::move(c);
        return p;
    }

    void normalize() {
        while (!coeffs.empty() && sign(coeffs.back()) == 0) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }  // -1 for zero
    const Rational& leading() const { return coeffs.back(); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    bool operator==(const RatPoly& other) const { return coeffs == other.coeffs; }
};

inline RatPoly poly_add(const RatPoly& p, const RatPoly& q) {
    std::vector<Rational> c(std::max(p.coeffs.size(), q.coeffs.size()), Rational(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) c[i] += p.coeffs[i];
    for (std::size_t i = 0; i < q.coeffs.size(); ++i) c[i] += q.coeffs[i];
    return RatPoly(std::move(c));
}

inline RatPoly poly_neg(const RatPoly& p) {
    RatPoly r = p;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

inline RatPoly poly_sub(const RatPoly& p, const RatPoly& q) { return poly_add(p, poly_neg(q)); }

inline RatPoly poly_scale(const RatPoly& p, const Rational& s) {
    if (sign(s) == 0) return RatPoly::zero();
    RatPoly r = p;
    for (auto& c : r.coeffs) c *= s;
    return r;
}

inline RatPoly poly_mul(const RatPoly& p, const RatPoly& q, long cap = kDefaultDegreeCap) {
    if (p.is_zero() || q.is_zero()) return RatPoly::zero();
    long d = p.degree() + q.degree();
    if (d > cap) throw DegreeCapExceeded(d, cap);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (sign(p.coeffs[i]) == 0) continue;
        for (std::size_t j = 0; j < q.coeffs.size(); ++j)
            if (sign(q.coeffs[j]) != 0) c[i + j] += p.coeffs[i] * q.coeffs[j];
    }
    return RatPoly(std::move(c));
}

inline RatPoly poly_pow(const RatPoly& p, long e, long cap = kDefaultDegreeCap) {
    if (e < 0) throw PreconditionViolated("poly_pow requires a nonnegative exponent");
    if (e == 0) return RatPoly::constant(Rational(1));
    if (p.is_zero()) return RatPoly::zero();
    if (p.degree() * e > cap) throw DegreeCapExceeded(p.degree() * e, cap);
    RatPoly acc = RatPoly::constant(Rational(1));
    RatPoly base = p;
    long k = e;
    while (k > 0) {
        if (k & 1) acc = poly_mul(acc, base, cap);
        k >>= 1;
        if (k > 0) base = poly_mul(base, base, cap);
    }
    return acc;
}

inline RatPoly derivative(const RatPoly& p) {
    if (p.degree() < 1) return RatPoly::zero();
    std::vector<Rational> c(p.coeffs.size() - 1);
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) c[i - 1] = p.coeffs[i] * Rational(static_cast<long>(i));
    return RatPoly(std::move(c));
}

/// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw PreconditionViolated("division by the zero polynomial");
    RatPoly r = a;
    if (a.degree() < b.degree()) return {RatPoly::zero(), r};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long shift = r.degree() - b.degree();
        Rational f = r.leading() / b.leading();
        q[static_cast<std::size_t>(shift)] = f;
        for (std::size_t i = 0; i < b.coeffs.size(); ++i)
            r.coeffs[i + static_cast<std::size_t>(shift)] -= f * b.coeffs[i];
        r.normalize();
    }
    return {RatPoly(std::move(q)), r};
}

// ---------------------------------------------------------------------------
// Integer polynomials. Sturm chains and gcds run on these: pseudo-remainders
// keep everything in Z and content removal keeps coefficient growth tame.
// ---------------------------------------------------------------------------

using IntPoly = std::vector<Integer>;  // ascending, trailing entry nonzero

inline void int_normalize(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long int_degree(const IntPoly& p) { return static_cast<long>(p.size()) - 1; }

/// Clears denominators with a positive factor; preserves signs everywhere.
inline IntPoly to_int_poly(const RatPoly& p) {
    Integer l = denominator_lcm(p.coeffs);
    IntPoly out;
    out.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) out.push_back(c.get_num() * (l / c.get_den()));
    return out;
}

inline RatPoly to_rat_poly(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& v : p) c.emplace_back(v);
    return RatPoly(std::move(c));
}

inline Integer int_content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p) g = int_gcd(g, c);
    return g;  // nonnegative
}

/// Divides out the (positive) content; signs unchanged.
inline IntPoly int_primitive(IntPoly p) {
    Integer g = int_content(p);
    if (g > 1)
        for (auto& c : p) c /= g;
    return p;
}

inline IntPoly int_derivative(const IntPoly& p) {
    if (int_degree(p) < 1) return {};
    IntPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
    return d;
}

inline IntPoly int_neg(IntPoly p) {
    for (auto& c : p) c = -c;
    return p;
}

/// Pseudo-remainder: rem(lc(b)^(da-db+1) * a, b), computed entirely in Z.
inline IntPoly int_pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.empty()) throw PreconditionViolated("pseudo-remainder by zero");
    IntPoly r = a;
    int_normalize(r);
    long db = int_degree(b);
    const Integer& lb = b.back();
    while (int_degree(r) >= db) {
        long shift = int_degree(r) - db;
        Integer lr = r.back();
        for (auto& c : r) c *= lb;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[i + static_cast<std::size_t>(shift)] -= lr * b[i];
        int_normalize(r);
    }
    return r;
}

/// Primitive gcd via the primitive remainder sequence; positive leading coeff.
inline IntPoly int_gcd_poly(IntPoly a, IntPoly b) {
    int_normalize(a);
    int_normalize(b);
    if (a.empty()) return b.empty() ? b : int_primitive(std::move(b));
    if (b.empty()) return int_primitive(std::move(a));
    a = int_primitive(std::move(a));
    b = int_primitive(std::move(b));
    while (!b.empty()) {
        IntPoly r = int_primitive(int_pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() < 0) a = int_neg(std::move(a));
    return a;
}

/// Exact division of primitive integer polynomials (Gauss lemma).
inline IntPoly int_exact_div(const IntPoly& a, const IntPoly& b) {
    RatPoly q = poly_divmod(to_rat_poly(a), to_rat_poly(b)).first;
    return to_int_poly(q);
}

/// p / gcd(p, p'), primitive with positive leading coefficient.
inline IntPoly int_squarefree_part(const IntPoly& p) {
    IntPoly pp = int_primitive(p);
    if (int_degree(pp) <= 1) {
        if (!pp.empty() && pp.back() < 0) pp = int_neg(std::move(pp));
        return pp;
    }
    IntPoly g = int_gcd_poly(pp, int_derivative(pp));
    IntPoly q = (int_degree(g) == 0) ? pp : int_primitive(int_exact_div(pp, g));
    if (!q.empty() && q.back() < 0) q = int_neg(std::move(q));
    return q;
}

/// Sign of p at the rational point num/den (den > 0), via the homogeneous
/// integer evaluation sum c_i num^i den^(d-i).
inline int int_sign_at(const IntPoly& p, const Rational& x) {
    if (p.empty()) return 0;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = p.back();
    Integer dpow = 1;
    for (long i = int_degree(p) - 1; i >= 0; --i) {
        dpow *= den;
        acc = acc * num + p[static_cast<std::size_t>(i)] * dpow;
    }
    return sign(acc);
}

inline int int_sign_at_pos_inf(const IntPoly& p) { return p.empty() ? 0 : sign(p.back()); }

inline int int_sign_at_neg_inf(const IntPoly& p) {
    if (p.empty()) return 0;
    int s = sign(p.back());
    return (int_degree(p) % 2 == 0) ? s : -s;
}

inline RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    return to_rat_poly(int_gcd_poly(to_int_poly(a), to_int_poly(b)));
}

/// Squarefree part, normalized to primitive integer coefficients with a
/// positive leading coefficient. Roots and their order are preserved.
inline RatPoly squarefree_part(const RatPoly& p) {
    return to_rat_poly(int_squarefree_part(to_int_poly(p)));
}

}  // namespace galecircuit

#endif
