// Independent test oracles. These deliberately avoid the library's own
// elimination, witness search, and hull code paths: they were written first,
// straight from the definitions, and the implementation is checked against
// them.
#ifndef GALECIRCUIT_TESTS_ORACLES_HPP
#define GALECIRCUIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "galecircuit/matrix.hpp"

namespace oracles {

using galecircuit::Integer;
using galecircuit::RatMatrix;
using galecircuit::Rational;
using galecircuit::RatVector;

/// Fraction-free (Bareiss) elimination over the integers. Returns nullopt for
/// a singular matrix. Denominators are cleared up front; exact throughout.
inline std::optional<RatVector> bareiss_solve(const RatMatrix& m, const RatVector& rhs) {
    const std::size_t n = m.rows;
    if (m.cols != n || rhs.size() != n) return std::nullopt;
    // scale every row to integers
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        Integer l(1);
        for (std::size_t c = 0; c < n; ++c) l = galecircuit::int_lcm(l, m.at(r, c).get_den());
        l = galecircuit::int_lcm(l, rhs[r].get_den());
        for (std::size_t c = 0; c < n; ++c) {
            const Rational& x = m.at(r, c);
            a[r][c] = x.get_num() * (l / x.get_den());
        }
        a[r][n] = rhs[r].get_num() * (l / rhs[r].get_den());
    }
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t sel = k + 1;
            while (sel < n && a[sel][k] == 0) ++sel;
            if (sel == n) return std::nullopt;
            std::swap(a[k], a[sel]);
            for (auto& e : a[k]) e = -e;  // keep the determinant track consistent
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j <= n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    if (a[n - 1][n - 1] == 0) return std::nullopt;
    // back substitution in rationals
    RatVector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational acc(a[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(a[ii][j]) * x[j];
        x[ii] = acc / Rational(a[ii][ii]);
    }
    return x;
}

/// Does any bijection of the coefficients onto slots satisfy the alternating
/// strict partial-sum inequalities? Brute force over all permutations of the
/// labels and both global signs, straight from the statement.
inline bool exhaustive_witness_exists(const std::vector<Rational>& lam) {
    const std::size_t m = lam.size();
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    for (int flip : {1, -1}) {
        std::vector<std::size_t> p = perm;
        do {
            Rational t(0);
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i) {
                Rational v = Rational(flip) * lam[p[i]];
                int want = (i % 2 == 0) ? 1 : -1;
                if (galecircuit::sign(v) != want) ok = false;
                t += v;
                if (i + 1 < m && galecircuit::sign(t) != want) ok = false;
            }
            if (ok && galecircuit::sign(t) == 0) return true;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return false;
}

/// Lower convex hull (Andrew monotone chain, lower half) of exact points.
/// Input need not be sorted; collinear interior points are dropped, so the
/// result lists exactly the hull vertices left to right.
inline std::vector<std::pair<Rational, Rational>> lower_hull(
    std::vector<std::pair<Rational, Rational>> pts) {
    std::sort(pts.begin(), pts.end());
    // keep only the lowest point per x
    std::vector<std::pair<Rational, Rational>> uniq;
    for (auto& p : pts) {
        if (!uniq.empty() && uniq.back().first == p.first) continue;  // sorted: first is lowest
        uniq.push_back(p);
    }
    std::vector<std::pair<Rational, Rational>> hull;
    for (const auto& p : uniq) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            Rational cross =
                (b.first - a.first) * (p.second - a.second) -
                (b.second - a.second) * (p.first - a.first);
            if (galecircuit::sign(cross) <= 0)
                hull.pop_back();  // b is not a strict vertex of the lower hull
            else
                break;
        }
        hull.push_back(p);
    }
    return hull;
}

/// Distinct real roots of a*y^2 + b*y + c inside the open interval (lo, hi).
/// Exact, no square roots: sign checks at the endpoints and the vertex.
/// Endpoints must not be roots.
inline long quadratic_roots_in(const Rational& a, const Rational& b, const Rational& c,
                               const Rational& lo, const Rational& hi) {
    using galecircuit::sign;
    auto value = [&](const Rational& y) { return Rational(a * y * y + b * y + c); };
    int slo = sign(value(lo)), shi = sign(value(hi));
    if (slo == 0 || shi == 0) throw galecircuit::PreconditionViolated("oracle endpoint is a root");
    if (sign(a) == 0) {
        if (sign(b) == 0) return 0;
        Rational r = -c / b;
        return (r > lo && r < hi) ? 1 : 0;
    }
    Rational disc = b * b - 4 * a * c;
    if (sign(disc) < 0) return 0;
    Rational vertex = -b / (2 * a);
    if (sign(disc) == 0) return (vertex > lo && vertex < hi) ? 1 : 0;
    if (slo != shi) return 1;  // exactly one root straddled
    if (vertex > lo && vertex < hi && sign(value(vertex)) != slo) return 2;
    return 0;
}

}  // namespace oracles

#endif
