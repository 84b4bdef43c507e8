#ifndef GALECIRCUIT_INTERVAL_HPP
#define GALECIRCUIT_INTERVAL_HPP

#include <optional>
#include <string>

#include "galecircuit/rational.hpp"

namespace galecircuit {

/// Interval over the rationals. A missing endpoint means -inf / +inf
/// (always open). lo < hi whenever both endpoints are finite.
struct RatInterval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool lo_open = true;
    bool hi_open = true;
    bool empty = false;

    static RatInterval all() { return {}; }

    static RatInterval open(Rational a, Rational b) {
        if (!(a < b)) throw PreconditionViolated("interval endpoints must satisfy lo < hi");
        RatInterval iv;
        iv.lo = std::move(a);
        iv.hi = std::move(b);
        return iv;
    }

    static RatInterval closed(Rational a, Rational b) {
        RatInterval iv = open(std::move(a), std::move(b));
        iv.lo_open = iv.hi_open = false;
        return iv;
    }

    /// (a, +inf)
    static RatInterval above(Rational a) {
        RatInterval iv;
        iv.lo = std::move(a);
        return iv;
    }

    /// (-inf, b)
    static RatInterval below(Rational b) {
        RatInterval iv;
        iv.hi = std::move(b);
        return iv;
    }

    static RatInterval make_empty() {
        RatInterval iv;
        iv.empty = true;
        return iv;
    }

    bool contains(const Rational& x) const {
        if (empty) return false;
        if (lo) {
            if (x < *lo) return false;
            if (lo_open && x == *lo) return false;
        }
        if (hi) {
            if (x > *hi) return false;
            if (hi_open && x == *hi) return false;
        }
        return true;
    }

    std::string str() const {
        if (empty) return "{}";
        std::string s = lo_open ? "(" : "[";
        s += lo ? to_string(*lo) : "-inf";
        s += ", ";
        s += hi ? to_string(*hi) : "inf";
        s += hi_open ? ")" : "]";
        return s;
    }
};

}  // namespace galecircuit

#endif
