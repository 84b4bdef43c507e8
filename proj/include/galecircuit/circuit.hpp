#ifndef GALECIRCUIT_CIRCUIT_HPP
#define GALECIRCUIT_CIRCUIT_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "galecircuit/matrix.hpp"

namespace galecircuit {

/// n+2 labeled points in dimension n, minimally affinely dependent.
/// Labels are 1-based positions in the point list.
struct Circuit {
    std::size_t dim = 0;
    std::vector<RatVector> points;

    std::size_t size() const { return points.size(); }  // dim + 2
};

/// The unique (up to scale) affine relation sum lambda_i w_i = 0,
/// sum lambda_i = 0. Entries are coprime integers, the first is positive.
struct AffineRelation {
    std::vector<Rational> coeffs;
};

/// An ordering of the labels certifying the partial-sum inequalities:
/// the reordered coefficients alternate in sign starting positive and their
/// running sums T_i alternate strictly, with T_{n+2} = 0.
struct OrderingWitness {
    std::vector<std::size_t> order;      // 1-based labels sigma(1..n+2)
    std::vector<Rational> signed_seq;    // lambda in witness order (maybe globally negated)
    std::vector<Rational> partial_sums;  // T_1..T_{n+2}
};

struct CharacterizationVerdict {
    bool supports_max = false;
    std::optional<OrderingWitness> witness;
    std::string failure_reason;
};

/// Stacks the coordinates over a row of ones: (n+1) x (n+2).
inline RatMatrix augmented_support_matrix(const std::vector<RatVector>& points) {
    std::size_t n = points[0].size();
    RatMatrix m(n + 1, points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = points[j][i];
        m.at(n, j) = 1;
    }
    return m;
}

/// Checks minimal affine dependence: the kernel of the augmented matrix is
/// one-dimensional and its generator has no zero entry.
inline Circuit validate_circuit(const std::vector<RatVector>& points) {
    if (points.empty()) throw NotACircuit("no points supplied");
    std::size_t n = points[0].size();
    if (n == 0) throw NotACircuit("points must have dimension >= 1");
    for (const auto& p : points)
        if (p.size() != n) throw NotACircuit("points have mixed dimensions");
    if (points.size() != n + 2)
        throw NotACircuit("expected " + std::to_string(n + 2) + " points in dimension " +
                          std::to_string(n) + ", got " + std::to_string(points.size()));
    std::set<RatVector> seen(points.begin(), points.end());
    if (seen.size() != points.size()) throw NotACircuit("duplicate points");
    auto basis = kernel(augmented_support_matrix(points));
    if (basis.size() != 1)
        throw NotACircuit("kernel dimension " + std::to_string(basis.size()) + ", need 1");
    for (std::size_t i = 0; i < basis[0].size(); ++i)
        if (sign(basis[0][i]) == 0)
            throw NotACircuit("zero coefficient at label " + std::to_string(i + 1) +
                              " (a proper subset is affinely dependent)");
    return Circuit{n, points};
}

inline AffineRelation affine_relation(const Circuit& c) {
    auto basis = kernel(augmented_support_matrix(c.points));
    if (basis.size() != 1) throw NotACircuit("kernel dimension changed; circuit not validated?");
    std::vector<Rational> lam = scale_to_coprime_integers(basis[0]);
    if (sign(lam[0]) < 0)
        for (auto& x : lam) x = -x;
    return AffineRelation{std::move(lam)};
}

/// Necessary sign condition: #positive and #negative coefficients agree
/// up to 1 when n is odd, exactly when n is even.
inline bool sign_balance_check(const AffineRelation& r) {
    long pos = 0, neg = 0;
    for (const auto& x : r.coeffs) (sign(x) > 0 ? pos : neg)++;
    long n = static_cast<long>(r.coeffs.size()) - 2;
    return std::abs(pos - neg) <= (n % 2);
}

/// Strict alternation of the running sums of an alternating sequence:
/// T_i > 0 for odd i, T_i < 0 for even i, for i <= n+1 (T_{n+2} = 0).
inline bool check_partial_sums(const std::vector<Rational>& seq) {
    if (seq.size() < 2) throw PreconditionViolated("sequence too short");
    Rational total(0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int want = (i % 2 == 0) ? 1 : -1;
        if (sign(seq[i]) != want)
            throw PreconditionViolated("sequence signs must alternate starting positive");
        total += seq[i];
    }
    if (sign(total) != 0) throw PreconditionViolated("sequence must sum to zero");
    Rational t(0);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        t += seq[i];
        int want = (i % 2 == 0) ? 1 : -1;
        if (sign(t) != want) return false;
    }
    return true;
}

namespace detail {

/// Depth-first search over slot assignments, trying labels in ascending
/// order, pruning on the partial-sum sign condition. The first complete
/// assignment found is the lexicographically smallest for this sign class.
inline bool witness_dfs(const std::vector<Rational>& lam, const std::vector<std::size_t>& pos,
                        const std::vector<std::size_t>& neg, std::vector<char>& used,
                        std::vector<std::size_t>& order, Rational& running) {
    std::size_t k = order.size();
    std::size_t m = lam.size();
    if (k == m) return true;
    bool odd_slot = (k % 2 == 0);  // 1-based slot k+1
    const auto& cands = odd_slot ? pos : neg;
    for (std::size_t idx : cands) {
        if (used[idx]) continue;
        Rational t = running + lam[idx];
        if (k + 1 < m) {
            int want = odd_slot ? 1 : -1;
            if (sign(t) != want) continue;
        }
        used[idx] = 1;
        order.push_back(idx);
        Rational saved = running;
        running = t;
        if (witness_dfs(lam, pos, neg, used, order, running)) return true;
        running = saved;
        order.pop_back();
        used[idx] = 0;
    }
    return false;
}

}  // namespace detail

/// Searches for an ordering witness; both global sign normalizations are
/// tried and the lexicographically smallest passing permutation is returned.
inline std::optional<OrderingWitness> find_witness_ordering(const AffineRelation& r) {
    std::size_t m = r.coeffs.size();
    std::size_t odd_slots = (m + 1) / 2;
    std::optional<OrderingWitness> best;
    for (int flip : {1, -1}) {
        std::vector<Rational> lam;
        lam.reserve(m);
        for (const auto& x : r.coeffs) lam.push_back(flip > 0 ? x : Rational(-x));
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < m; ++i) (sign(lam[i]) > 0 ? pos : neg).push_back(i);
        if (pos.size() != odd_slots) continue;
        std::vector<char> used(m, 0);
        std::vector<std::size_t> order;
        order.reserve(m);
        Rational running(0);
        if (!detail::witness_dfs(lam, pos, neg, used, order, running)) continue;
        OrderingWitness w;
        w.order.reserve(m);
        for (std::size_t idx : order) w.order.push_back(idx + 1);
        Rational t(0);
        for (std::size_t idx : order) {
            w.signed_seq.push_back(lam[idx]);
            t += lam[idx];
            w.partial_sums.push_back(t);
        }
        if (!best || w.order < best->order) best = std::move(w);
    }
    return best;
}

inline CharacterizationVerdict characterize(const Circuit& c) {
    CharacterizationVerdict v;
    AffineRelation r = affine_relation(c);
    if (!sign_balance_check(r)) {
        v.failure_reason = "sign balance violated: positive and negative coefficient counts "
                           "differ by more than n mod 2";
        return v;
    }
    auto w = find_witness_ordering(r);
    if (!w) {
        v.failure_reason = "no admissible ordering keeps the partial sums strictly "
                           "alternating (some T_i vanishes or has the wrong sign)";
        return v;
    }
    v.supports_max = true;
    v.witness = std::move(w);
    return v;
}

/// Alternating coefficient list with magnitudes 1,2,2,...,2,1; both sign
/// classes sum to n+1 in absolute value.
inline std::vector<Rational> canonical_max_positive_relation(long n) {
    if (n < 1) throw PreconditionViolated("n must be >= 1");
    std::vector<Rational> v(static_cast<std::size_t>(n) + 2);
    for (long i = 0; i < n + 2; ++i) {
        long mag = (i == 0 || i == n + 1) ? 1 : 2;
        v[static_cast<std::size_t>(i)] = Rational((i % 2 == 0) ? mag : -mag);
    }
    return v;
}

/// Standard realization of a relation as a circuit: w_i = m e_i for i <= n,
/// w_{n+2} = 0 and w_{n+1} = -(m/lambda_{n+1}) sum_{i<=n} lambda_i e_i with m
/// the smallest positive integer clearing denominators.
inline Circuit realize_circuit(const std::vector<Rational>& rel, long n) {
    if (static_cast<long>(rel.size()) != n + 2)
        throw PreconditionViolated("relation must have n+2 entries");
    Rational total(0);
    for (const auto& x : rel) {
        if (sign(x) == 0) throw PreconditionViolated("relation entries must be nonzero");
        total += x;
    }
    if (sign(total) != 0) throw PreconditionViolated("relation must sum to zero");
    std::vector<Rational> lam = scale_to_coprime_integers(rel);
    Integer pivot = abs_int(lam[static_cast<std::size_t>(n)].get_num());
    Integer g = 0;
    for (long i = 0; i < n; ++i) g = int_gcd(g, lam[static_cast<std::size_t>(i)].get_num());
    Integer m = pivot / int_gcd(pivot, abs_int(g));
    std::vector<RatVector> pts;
    pts.reserve(static_cast<std::size_t>(n) + 2);
    for (long i = 0; i < n; ++i) {
        RatVector p(static_cast<std::size_t>(n), Rational(0));
        p[static_cast<std::size_t>(i)] = Rational(m);
        pts.push_back(std::move(p));
    }
    RatVector mixed(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        mixed[static_cast<std::size_t>(i)] =
            -Rational(m) * lam[static_cast<std::size_t>(i)] / lam[static_cast<std::size_t>(n)];
    pts.push_back(std::move(mixed));
    pts.emplace_back(static_cast<std::size_t>(n), Rational(0));
    return validate_circuit(pts);
}

/// n! * Vol(conv W), computed over both circuit triangulations (omit one
/// point of fixed relation sign per simplex) and cross-checked for equality.
inline Integer kouchnirenko_bound(const Circuit& c) {
    for (const auto& p : c.points)
        for (const auto& x : p)
            if (!is_integral(x))
                throw PreconditionViolated("Kouchnirenko bound requires integral coordinates");
    AffineRelation r = affine_relation(c);
    std::size_t n = c.dim;
    auto simplex_vol = [&](std::size_t omit) {
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < c.points.size(); ++j)
            if (j != omit) keep.push_back(j);
        RatMatrix d(n, n);
        for (std::size_t col = 0; col + 1 < keep.size(); ++col)
            for (std::size_t row = 0; row < n; ++row)
                d.at(row, col) = c.points[keep[col]][row] - c.points[keep.back()][row];
        Rational det = determinant(d);
        return sign(det) < 0 ? Rational(-det) : det;
    };
    Rational vol_pos(0), vol_neg(0);
    for (std::size_t i = 0; i < c.points.size(); ++i)
        (sign(r.coeffs[i]) > 0 ? vol_pos : vol_neg) += simplex_vol(i);
    if (vol_pos != vol_neg)
        throw Error("triangulation volumes disagree: " + to_string(vol_pos) + " vs " +
                    to_string(vol_neg));
    return to_integer(vol_pos);
}

}  // namespace galecircuit

#endif
