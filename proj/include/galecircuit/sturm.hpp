#ifndef GALECIRCUIT_STURM_HPP
#define GALECIRCUIT_STURM_HPP

#include <algorithm>
#include <vector>

#include "galecircuit/interval.hpp"
#include "galecircuit/polynomial.hpp"

namespace galecircuit {

namespace detail {

/// Pseudo-remainder that reports how often the dividend was scaled by lc(b),
/// so callers can undo a negative scaling sign.
inline IntPoly pseudo_rem_counted(const IntPoly& a, const IntPoly& b, long& steps) {
    IntPoly r = a;
    int_normalize(r);
    long db = int_degree(b);
    const Integer& lb = b.back();
    steps = 0;
    while (int_degree(r) >= db) {
        long shift = int_degree(r) - db;
        Integer lr = r.back();
        for (auto& c : r) c *= lb;
        ++steps;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[i + static_cast<std::size_t>(shift)] -= lr * b[i];
        int_normalize(r);
    }
    return r;
}

}  // namespace detail

/// Sturm chain of the squarefree part of a polynomial. Entries are primitive
/// integer polynomials; each is a positive scalar multiple of the classical
/// chain element, so sign sequences (and hence variation counts) agree.
struct SturmChain {
    std::vector<IntPoly> polys;

    static SturmChain build_from_squarefree(IntPoly q) {
        SturmChain ch;
        int_normalize(q);
        if (q.empty()) throw PreconditionViolated("Sturm chain of the zero polynomial");
        ch.polys.push_back(int_primitive(q));
        if (int_degree(ch.polys[0]) == 0) return ch;
        ch.polys.push_back(int_primitive(int_derivative(ch.polys[0])));
        while (int_degree(ch.polys.back()) > 0) {
            const IntPoly& a = ch.polys[ch.polys.size() - 2];
            const IntPoly& b = ch.polys.back();
            long steps = 0;
            IntPoly r = detail::pseudo_rem_counted(a, b, steps);
            if (r.empty()) break;  // only for non-squarefree input
            // r = lc(b)^steps * rem(a, b); flip so the stored entry is a
            // positive multiple of -rem(a, b).
            bool neg_scaling = (b.back() < 0) && (steps % 2 == 1);
            ch.polys.push_back(int_primitive(neg_scaling ? r : int_neg(std::move(r))));
        }
        return ch;
    }

    static SturmChain build(const RatPoly& p) {
        return build_from_squarefree(int_squarefree_part(to_int_poly(p)));
    }

    long variations(const std::vector<int>& signs) const {
        long v = 0;
        int prev = 0;
        for (int s : signs) {
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    long variations_at(const Rational& x) const {
        std::vector<int> signs;
        signs.reserve(polys.size());
        for (const auto& p : polys) signs.push_back(int_sign_at(p, x));
        return variations(signs);
    }

    long variations_pos_inf() const {
        std::vector<int> signs;
        signs.reserve(polys.size());
        for (const auto& p : polys) signs.push_back(int_sign_at_pos_inf(p));
        return variations(signs);
    }

    long variations_neg_inf() const {
        std::vector<int> signs;
        signs.reserve(polys.size());
        for (const auto& p : polys) signs.push_back(int_sign_at_neg_inf(p));
        return variations(signs);
    }
};

struct RootCount {
    long count = 0;
    bool squarefree = true;  // false when the input had a multiple root
};

/// All real roots of q lie strictly inside (-bound, bound).
inline Rational cauchy_root_bound(const IntPoly& q) {
    if (q.empty()) throw PreconditionViolated("root bound of the zero polynomial");
    Integer lead = abs_int(q.back());
    Rational best(0);
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
        Rational r = make_rational(abs_int(q[i]), lead);
        if (r > best) best = r;
    }
    return best + 1;
}

/// Number of distinct real roots of p inside iv, honoring open/closed
/// endpoints. Multiple roots collapse; RootCount::squarefree reports whether
/// any were present in p at all.
inline RootCount sturm_count(const RatPoly& p, const RatInterval& iv) {
    if (p.is_zero()) throw PreconditionViolated("sturm_count of the zero polynomial");
    IntPoly ip = to_int_poly(p);
    IntPoly q = int_squarefree_part(ip);
    RootCount rc;
    rc.squarefree = (int_degree(q) == int_degree(ip));
    if (iv.empty || int_degree(q) == 0) return rc;
    SturmChain ch = SturmChain::build_from_squarefree(q);
    long vlo = iv.lo ? ch.variations_at(*iv.lo) : ch.variations_neg_inf();
    long vhi = iv.hi ? ch.variations_at(*iv.hi) : ch.variations_pos_inf();
    long count = vlo - vhi;  // roots in (lo, hi]
    if (iv.hi && iv.hi_open && int_sign_at(q, *iv.hi) == 0) --count;
    if (iv.lo && !iv.lo_open && int_sign_at(q, *iv.lo) == 0) ++count;
    rc.count = count;
    return rc;
}

namespace detail {

/// Count of roots in (a, b] for finite non-root bookkeeping.
inline long half_open_count(const SturmChain& ch, const Rational& a, const Rational& b) {
    return ch.variations_at(a) - ch.variations_at(b);
}

/// Largest x <= e (resp. smallest x >= e) that is not a root of q and cuts
/// off no root between itself and e. 'outward' widens past e.
inline Rational nudge(const SturmChain& ch, const IntPoly& q, const Rational& e, bool downward,
                      Rational step) {
    for (int iter = 0; iter < 4096; ++iter) {
        Rational c = downward ? Rational(e - step) : Rational(e + step);
        bool nonroot = int_sign_at(q, c) != 0;
        long stray = downward ? half_open_count(ch, c, e) - (int_sign_at(q, e) == 0 ? 1 : 0)
                              : half_open_count(ch, e, c);
        if (nonroot && stray == 0) return c;
        step /= 2;
    }
    throw Error("endpoint nudge did not converge");
}

inline Rational nonroot_midpoint(const IntPoly& q, const Rational& a, const Rational& b) {
    Rational m = (a + b) / 2;
    while (int_sign_at(q, m) == 0) m = (a + m) / 2;  // finitely many roots
    return m;
}

/// Finite open bounds (lo, hi) with non-root endpoints containing exactly the
/// roots of q that lie in iv.
inline std::pair<Rational, Rational> working_bounds(const SturmChain& ch, const IntPoly& q,
                                                    const RatInterval& iv) {
    Rational bound = cauchy_root_bound(q);
    Rational lo, hi;
    if (!iv.lo) {
        lo = -bound;
    } else {
        const Rational& e = *iv.lo;
        bool root_at_e = int_sign_at(q, e) == 0;
        if (!root_at_e)
            lo = e;
        else if (iv.lo_open)
            lo = nudge(ch, q, e, /*downward=*/false, Rational(1));  // skip the excluded root
        else
            lo = nudge(ch, q, e, /*downward=*/true, Rational(1));  // include the endpoint root
    }
    if (!iv.hi) {
        hi = bound;
        if (hi <= lo) hi = lo + 1;
    } else {
        const Rational& e = *iv.hi;
        bool root_at_e = int_sign_at(q, e) == 0;
        if (!root_at_e)
            hi = e;
        else if (iv.hi_open)
            hi = nudge(ch, q, e, /*downward=*/true, Rational(e - lo) / 2);
        else
            hi = nudge(ch, q, e, /*downward=*/false, Rational(1));
    }
    return {lo, hi};
}

}  // namespace detail

/// Pairwise disjoint open intervals, each isolating exactly one distinct real
/// root of p inside iv; together they cover all of them.
inline std::vector<RatInterval> isolate_roots(const RatPoly& p, const RatInterval& iv) {
    if (p.is_zero()) throw PreconditionViolated("isolate_roots of the zero polynomial");
    std::vector<RatInterval> out;
    long total = sturm_count(p, iv).count;
    if (total == 0) return out;
    IntPoly q = int_squarefree_part(to_int_poly(p));
    SturmChain ch = SturmChain::build_from_squarefree(q);
    auto [lo, hi] = detail::working_bounds(ch, q, iv);
    std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        long cnt = detail::half_open_count(ch, a, b);  // endpoints are non-roots
        if (cnt == 0) continue;
        if (cnt == 1) {
            out.push_back(RatInterval::open(a, b));
            continue;
        }
        Rational m = detail::nonroot_midpoint(q, a, b);
        stack.emplace_back(a, m);
        stack.emplace_back(m, b);
    }
    std::sort(out.begin(), out.end(),
              [](const RatInterval& x, const RatInterval& y) { return *x.lo < *y.lo; });
    return out;
}

/// Bisection refinement with exact sign decisions. Returns a rational within
/// eps of the unique root of p in iv; linear factors and exact midpoint hits
/// return the root itself.
inline Rational refine_root(const RatPoly& p, const RatInterval& iv, const Rational& eps) {
    if (p.is_zero()) throw PreconditionViolated("refine_root of the zero polynomial");
    if (sign(eps) <= 0) throw PreconditionViolated("eps must be positive");
    if (sturm_count(p, iv).count != 1)
        throw NotIsolating("interval " + iv.str() + " does not isolate exactly one root");
    IntPoly q = int_squarefree_part(to_int_poly(p));
    // The isolated root may sit exactly on a closed endpoint.
    if (iv.lo && !iv.lo_open && int_sign_at(q, *iv.lo) == 0) return *iv.lo;
    if (iv.hi && !iv.hi_open && int_sign_at(q, *iv.hi) == 0) return *iv.hi;
    if (int_degree(q) == 1) return make_rational(-q[0], q[1]);
    SturmChain ch = SturmChain::build_from_squarefree(q);
    auto [a, b] = detail::working_bounds(ch, q, iv);
    int sa = int_sign_at(q, a);
    while (b - a >= eps) {
        Rational m = (a + b) / 2;
        int sm = int_sign_at(q, m);
        if (sm == 0) return m;
        if (sm == sa)
            a = m;
        else
            b = m;
    }
    return (a + b) / 2;
}

}  // namespace galecircuit

#endif
