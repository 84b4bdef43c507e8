#ifndef GALECIRCUIT_GALE_HPP
#define GALECIRCUIT_GALE_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "galecircuit/bigfloat.hpp"
#include "galecircuit/circuit.hpp"
#include "galecircuit/interval.hpp"
#include "galecircuit/sturm.hpp"

namespace galecircuit {

/// n equations in n variables whose total support is a set of n+2 points.
/// Row i of coeff holds the coefficients of equation i, one per support point.
struct SupportedSystem {
    std::size_t dim = 0;
    std::vector<RatVector> support;  // n+2 exponent vectors, rational entries allowed
    RatMatrix coeff;                 // n x (n+2)
};

inline void validate_system_shape(const SupportedSystem& s) {
    if (s.dim == 0) throw ParseError("system dimension must be >= 1");
    if (s.support.size() != s.dim + 2)
        throw ParseError("support must have dim+2 = " + std::to_string(s.dim + 2) + " points");
    for (const auto& w : s.support)
        if (w.size() != s.dim) throw ParseError("support point of wrong dimension");
    std::set<RatVector> seen(s.support.begin(), s.support.end());
    if (seen.size() != s.support.size()) throw ParseError("support points must be distinct");
    if (s.coeff.rows != s.dim || s.coeff.cols != s.dim + 2)
        throw ParseError("coefficient matrix must be dim x (dim+2)");
}

/// Scales exponents by the lcm of their denominators and translates so the
/// last support point is the origin. Both moves are bijections of the
/// positive orthant, so positive-solution counts are preserved.
inline SupportedSystem normalize_support(const SupportedSystem& s) {
    validate_system_shape(s);
    SupportedSystem out = s;
    Integer l(1);
    for (const auto& w : out.support)
        for (const auto& x : w) l = int_lcm(l, x.get_den());
    const RatVector origin = out.support.back();
    for (auto& w : out.support)
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = (w[i] - origin[i]) * Rational(l);
    return out;
}

/// Diagonal form z^{w_i} = a_i + b_i y with y = z^{w_dist}, exponents
/// translated so the origin point is 0. The attached relation is the
/// circuit relation permuted into (retained..., distinguished, origin) order.
struct DiagonalSystem {
    std::size_t dim = 0;
    std::vector<std::vector<Integer>> exponents;        // n retained rows
    std::vector<Integer> distinguished;                 // w_dist - w_origin
    std::vector<std::pair<Rational, Rational>> linear_parts;  // (a_i, b_i)
    std::vector<Rational> relation;                     // length n+2, diagonal order
    std::vector<std::size_t> retained_labels;           // 1-based original labels
    std::size_t distinguished_label = 0;
    std::size_t origin_label = 0;
};

namespace detail {

inline std::vector<Integer> integer_exponent(const RatVector& v) {
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_integer(x));
    return out;
}

inline bool exponents_independent(const std::vector<std::vector<Integer>>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = Rational(rows[r][c]);
    return rank(m) == rows.size();
}

}  // namespace detail

/// Gaussian elimination onto a retained set of n support points. Candidate
/// (distinguished, origin) pairs are tried in a fixed order: retained sets in
/// lexicographic label order, then the leftover pair as (smaller, larger)
/// before (larger, smaller). An already-diagonal system is returned as is.
inline DiagonalSystem diagonalize(const SupportedSystem& sys) {
    SupportedSystem s = normalize_support(sys);
    Circuit circ = validate_circuit(s.support);
    AffineRelation rel = affine_relation(circ);
    std::size_t n = s.dim, m = n + 2;

    std::vector<std::size_t> retained(n);
    for (std::size_t i = 0; i < n; ++i) retained[i] = i;
    auto next_combination = [&]() -> bool {
        // lexicographic next n-subset of {0..m-1}
        long i = static_cast<long>(n) - 1;
        while (i >= 0 && retained[static_cast<std::size_t>(i)] ==
                             m - n + static_cast<std::size_t>(i))
            --i;
        if (i < 0) return false;
        ++retained[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j)
            retained[j] = retained[j - 1] + 1;
        return true;
    };

    do {
        std::vector<char> in_set(m, 0);
        for (auto i : retained) in_set[i] = 1;
        std::vector<std::size_t> leftover;
        for (std::size_t i = 0; i < m; ++i)
            if (!in_set[i]) leftover.push_back(i);
        for (auto [dist, orig] : {std::pair{leftover[0], leftover[1]},
                                  std::pair{leftover[1], leftover[0]}}) {
            RatMatrix sub(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) sub.at(r, c) = s.coeff.at(r, retained[c]);
            RatMatrix inv;
            try {
                inv = inverse(sub);
            } catch (const SingularMatrix&) {
                continue;
            }
            std::vector<std::vector<Integer>> exps;
            for (auto ridx : retained) {
                RatVector diff(n);
                for (std::size_t k = 0; k < n; ++k)
                    diff[k] = s.support[ridx][k] - s.support[orig][k];
                exps.push_back(detail::integer_exponent(diff));
            }
            if (!detail::exponents_independent(exps)) continue;  // unreachable for circuits

            RatVector co = mat_vec(inv, s.coeff.col(orig));
            RatVector cd = mat_vec(inv, s.coeff.col(dist));
            DiagonalSystem d;
            d.dim = n;
            d.exponents = std::move(exps);
            RatVector ddiff(n);
            for (std::size_t k = 0; k < n; ++k)
                ddiff[k] = s.support[dist][k] - s.support[orig][k];
            d.distinguished = detail::integer_exponent(ddiff);
            for (std::size_t i = 0; i < n; ++i) d.linear_parts.emplace_back(-co[i], -cd[i]);
            for (auto ridx : retained) {
                d.relation.push_back(rel.coeffs[ridx]);
                d.retained_labels.push_back(ridx + 1);
            }
            d.relation.push_back(rel.coeffs[dist]);
            d.relation.push_back(rel.coeffs[orig]);
            d.distinguished_label = dist + 1;
            d.origin_label = orig + 1;
            return d;
        }
    } while (next_combination());
    throw NoDiagonalization(
        "every retained set gives a singular coefficient submatrix; "
        "consider a small coefficient perturbation");
}

/// Delta_plus: intersection of { a_i + b_i y > 0 } with { y > 0 }. Open, with
/// rational or infinite endpoints; may be empty.
inline RatInterval positivity_domain(const DiagonalSystem& d) {
    Rational lo(0);
    std::optional<Rational> hi;
    for (const auto& [a, b] : d.linear_parts) {
        if (sign(b) > 0) {
            Rational r = -a / b;
            if (r > lo) lo = r;
        } else if (sign(b) < 0) {
            Rational r = -a / b;
            if (!hi || r < *hi) hi = r;
        } else if (sign(a) <= 0) {
            return RatInterval::make_empty();
        }
    }
    if (hi && *hi <= lo) return RatInterval::make_empty();
    return hi ? RatInterval::open(lo, *hi) : RatInterval::above(lo);
}

/// G(y) = prod_{lambda_i > 0} P_i^{lambda_i} - prod_{lambda_i < 0} P_i^{-lambda_i},
/// with P_{n+1}(y) = y and P_{n+2}(y) = 1. The relation must be the
/// integer relation of the support in diagonal order.
inline RatPoly gale_polynomial(const DiagonalSystem& d, const std::vector<Rational>& relation,
                               long cap = kDefaultDegreeCap) {
    std::size_t n = d.dim, m = n + 2;
    if (relation.size() != m) throw PreconditionViolated("relation must have n+2 entries");
    Integer pos_deg = 0, neg_deg = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (!is_integral(relation[i]))
            throw PreconditionViolated("relation must be integer-normalized");
        Integer l = relation[i].get_num();
        if (l > 0) pos_deg += l;
        if (l < 0) neg_deg -= l;
    }
    Integer worst = std::max(pos_deg, neg_deg);
    if (worst > cap) throw DegreeCapExceeded(mpz_fits_slong_p(worst.get_mpz_t())
                                                 ? worst.get_si()
                                                 : cap + 1,
                                             cap);
    auto factor = [&](std::size_t i) -> RatPoly {
        if (i < n) return RatPoly({d.linear_parts[i].first, d.linear_parts[i].second});
        if (i == n) return RatPoly::monomial(1, Rational(1));
        return RatPoly::constant(Rational(1));
    };
    RatPoly pos = RatPoly::constant(Rational(1));
    RatPoly neg = RatPoly::constant(Rational(1));
    for (std::size_t i = 0; i < m; ++i) {
        long l = relation[i].get_num().get_si();
        if (l > 0)
            pos = poly_mul(pos, poly_pow(factor(i), l, cap), cap);
        else
            neg = poly_mul(neg, poly_pow(factor(i), -l, cap), cap);
    }
    return poly_sub(pos, neg);
}

/// Exact positive-solution count via Sturm counting of the Gale polynomial
/// over the positivity domain. distinct counts distinct roots; simple counts
/// simple ones, which correspond to non-degenerate solutions.
struct CountResult {
    long distinct = 0;
    long simple = 0;
    bool squarefree_on_domain = true;
    RatPoly gale;
    RatInterval domain;
    std::vector<RatInterval> intervals;  // isolating, ascending, one per distinct root
};

inline CountResult count_positive_solutions(const DiagonalSystem& d,
                                            long cap = kDefaultDegreeCap) {
    CountResult res;
    res.domain = positivity_domain(d);
    res.gale = gale_polynomial(d, d.relation, cap);
    if (res.gale.is_zero())
        throw Error("degenerate system: Gale polynomial is identically zero");
    if (res.domain.empty) return res;
    // A root exactly on a domain endpoint contradicts the nonzero relation.
    for (const auto& end : {res.domain.lo, res.domain.hi})
        if (end && sign(res.gale.eval(*end)) == 0)
            throw Error("inconsistency: Gale root on the boundary of the positivity domain");
    RootCount rc = sturm_count(res.gale, res.domain);
    res.distinct = rc.count;
    if (rc.squarefree) {
        res.simple = res.distinct;
    } else {
        RatPoly g = poly_gcd(res.gale, derivative(res.gale));
        long multiple = g.degree() > 0 ? sturm_count(g, res.domain).count : 0;
        res.simple = res.distinct - multiple;
        res.squarefree_on_domain = (multiple == 0);
    }
    res.intervals = isolate_roots(res.gale, res.domain);
    return res;
}

/// One lifted positive solution. z coordinates are carried as natural logs
/// at the working precision plus decimal renderings.
struct PositiveSolution {
    Rational y_value;
    RatInterval y_interval;
    std::vector<BigFloat> log_z;
    std::vector<std::string> z_values;
    std::vector<double> residuals;  // per-equation upper bounds
    double max_residual = 0;
    double distinguished_rel_error = 0;
    long precision_bits = 0;
    int digits = 0;
};

struct LiftOptions {
    long start_precision = 256;
    int max_doublings = 8;
    const SupportedSystem* original = nullptr;  // also check residuals there
};

namespace detail {

inline BigFloat log_monomial(const std::vector<Integer>& expo, const std::vector<BigFloat>& x) {
    BigFloat acc(x.empty() ? 64 : x[0].precision());
    for (std::size_t j = 0; j < expo.size(); ++j) acc += x[j].mul_int(expo[j]);
    return acc;
}

}  // namespace detail

/// Largest |f_i(z)| over the equations of s, evaluated from log z.
/// Requires integral support (normalize first).
inline BigFloat system_residual(const SupportedSystem& s, const std::vector<BigFloat>& log_z) {
    mpfr_prec_t prec = log_z.empty() ? 64 : log_z[0].precision();
    BigFloat worst(prec);
    for (std::size_t r = 0; r < s.coeff.rows; ++r) {
        BigFloat acc(prec);
        for (std::size_t j = 0; j < s.support.size(); ++j) {
            if (sign(s.coeff.at(r, j)) == 0) continue;
            BigFloat term = detail::log_monomial(detail::integer_exponent(s.support[j]), log_z).exp();
            acc += BigFloat(s.coeff.at(r, j), prec) * term;
        }
        BigFloat mag = acc.abs();
        if (mag.cmp(worst) > 0) worst = mag;
    }
    return worst;
}

/// Lifts isolated Gale roots back to positive solutions by solving
/// W log z = log P_i(y*) at increasing precision until every residual
/// (diagonal equations, the distinguished identity, and optionally the
/// original system) is below eps.
inline std::vector<PositiveSolution> lift_solutions(const DiagonalSystem& d,
                                                    const std::vector<RatInterval>& roots,
                                                    const Rational& eps,
                                                    const LiftOptions& opts = {},
                                                    long cap = kDefaultDegreeCap) {
    if (sign(eps) <= 0) throw PreconditionViolated("eps must be positive");
    std::vector<PositiveSolution> out;
    if (roots.empty()) return out;
    std::size_t n = d.dim;
    RatMatrix w(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) w.at(r, c) = Rational(d.exponents[r][c]);
    RatMatrix winv = inverse(w);  // exponents are independent
    RatPoly gale = gale_polynomial(d, d.relation, cap);
    double eps_d = mpq_get_d(eps.get_mpq_t());
    int digits = 60;
    if (eps_d > 0) digits = std::max(18, static_cast<int>(std::ceil(-std::log10(eps_d))) + 6);
    digits = std::min(digits, 60);

    for (const auto& iv : roots) {
        long prec = opts.start_precision;
        bool done = false;
        for (int attempt = 0; attempt <= opts.max_doublings && !done; ++attempt, prec *= 2) {
            Rational eps_y = rational_pow(Rational(1, 2), prec);
            Rational ystar = refine_root(gale, iv, eps_y);
            std::vector<Rational> pvals;
            bool positive = true;
            for (const auto& [a, b] : d.linear_parts) {
                Rational v = a + b * ystar;
                if (sign(v) <= 0) positive = false;
                pvals.push_back(std::move(v));
            }
            if (!positive) continue;  // y* not yet inside the domain; tighten
            std::vector<BigFloat> logp;
            for (const auto& v : pvals) logp.push_back(BigFloat::log_of(v, prec));
            std::vector<BigFloat> x;
            for (std::size_t r = 0; r < n; ++r) {
                BigFloat acc(static_cast<mpfr_prec_t>(prec));
                for (std::size_t c = 0; c < n; ++c)
                    acc += BigFloat(winv.at(r, c), prec) * logp[c];
                x.push_back(std::move(acc));
            }
            PositiveSolution sol;
            sol.y_value = ystar;
            sol.y_interval = iv;
            sol.precision_bits = prec;
            sol.digits = digits;
            BigFloat worst(static_cast<mpfr_prec_t>(prec));
            for (std::size_t i = 0; i < n; ++i) {
                BigFloat lhs = detail::log_monomial(d.exponents[i], x).exp();
                BigFloat r = (lhs - BigFloat(pvals[i], prec)).abs();
                sol.residuals.push_back(r.to_double_bound());
                if (r.cmp(worst) > 0) worst = r;
            }
            BigFloat dist_val = detail::log_monomial(d.distinguished, x).exp();
            BigFloat ybf(ystar, static_cast<mpfr_prec_t>(prec));
            BigFloat rel = ((dist_val - ybf) / ybf).abs();
            sol.distinguished_rel_error = rel.to_double_bound();
            if (opts.original) {
                BigFloat r = system_residual(*opts.original, x);
                if (r.cmp(worst) > 0) worst = r;
            }
            sol.max_residual = worst.to_double_bound();
            if (worst.cmp(eps) < 0 && rel.cmp(eps) < 0) {
                for (const auto& lz : x) sol.z_values.push_back(lz.exp().str(digits));
                sol.log_z = std::move(x);
                out.push_back(std::move(sol));
                done = true;
            }
        }
        if (!done)
            throw ResidualTooLarge("could not certify residual < " + to_string(eps) + " within " +
                                   std::to_string(opts.max_doublings) + " precision doublings");
    }
    std::sort(out.begin(), out.end(),
              [](const PositiveSolution& a, const PositiveSolution& b) {
                  return a.y_value < b.y_value;
              });
    return out;
}

/// Documented coefficient perturbation: adds u/10^6 with u drawn uniformly
/// from [-999, 999] \ {0} per entry, deterministically from the seed.
inline SupportedSystem perturb_system(const SupportedSystem& s, std::uint64_t seed) {
    SupportedSystem out = s;
    std::mt19937_64 rng(seed);
    for (auto& c : out.coeff.entries) {
        long u = 0;
        while (u == 0) u = static_cast<long>(rng() % 1999) - 999;
        c += Rational(u, 1000000);
    }
    return out;
}

/// Full pipeline: normalize, diagonalize, count, lift.
struct SolveReport {
    SupportedSystem normalized;
    DiagonalSystem diag;
    CountResult count;
    std::vector<PositiveSolution> solutions;
    bool perturbed = false;
};

inline SolveReport solve_system(const SupportedSystem& s, const Rational& eps,
                                long cap = kDefaultDegreeCap, bool perturb = false,
                                std::uint64_t seed = 0) {
    SolveReport rep;
    rep.normalized = normalize_support(s);
    if (perturb) {
        rep.normalized = perturb_system(rep.normalized, seed);
        rep.perturbed = true;
    }
    rep.diag = diagonalize(rep.normalized);
    rep.count = count_positive_solutions(rep.diag, cap);
    LiftOptions opts;
    opts.original = &rep.normalized;
    rep.solutions = lift_solutions(rep.diag, rep.count.intervals, eps, opts, cap);
    return rep;
}

}  // namespace galecircuit

#endif
