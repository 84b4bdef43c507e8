#ifndef GALECIRCUIT_VIRO_HPP
#define GALECIRCUIT_VIRO_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "galecircuit/gale.hpp"

namespace galecircuit {

/// Interleaved partial sums p_0 = 0, p_{2k+1} = sum of odd-slot entries so
/// far, p_{2k} = -(sum of even-slot entries so far). Strictly increasing
/// exactly when the ordering passes the partial-sum test.
struct PSequence {
    std::vector<Rational> p;       // p_0 .. p_{n+1}
    std::vector<Rational> lambda;  // source sequence
};

inline PSequence p_sequence(const std::vector<Rational>& seq) {
    if (seq.size() < 3) throw PreconditionViolated("sequence too short");
    Rational total(0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int want = (i % 2 == 0) ? 1 : -1;
        if (sign(seq[i]) != want)
            throw PreconditionViolated("sequence signs must alternate starting positive");
        total += seq[i];
    }
    if (sign(total) != 0) throw PreconditionViolated("sequence must sum to zero");
    PSequence ps;
    ps.lambda = seq;
    ps.p.emplace_back(0);
    Rational odd(0), even(0);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (i % 2 == 0) {
            odd += seq[i];
            ps.p.push_back(odd);
        } else {
            even -= seq[i];
            ps.p.push_back(even);
        }
        std::size_t k = ps.p.size() - 1;
        if (!(ps.p[k] > ps.p[k - 1]))
            throw NotStrictlyIncreasing(k, "p_" + std::to_string(k - 1) + " = " +
                                               to_string(ps.p[k - 1]) + ", p_" +
                                               std::to_string(k) + " = " + to_string(ps.p[k]));
    }
    return ps;
}

/// Heights over the p-sequence: h_0 = 0, h_{i+1} = h_i + s_i (p_{i+1} - p_i).
/// Strictly increasing slopes make every (p_i, h_i) a lower-hull vertex.
struct HeightFunction {
    std::vector<Rational> h;       // h_0 .. h_{n+1}
    std::vector<Rational> slopes;  // s_0 .. s_n
};

inline HeightFunction heights(const PSequence& ps,
                              const std::optional<std::vector<Rational>>& slopes = {}) {
    std::size_t segments = ps.p.size() - 1;  // n+1
    HeightFunction hf;
    if (slopes) {
        if (slopes->size() != segments)
            throw InvalidSlopes("expected " + std::to_string(segments) + " slopes");
        hf.slopes = *slopes;
    } else {
        for (std::size_t i = 0; i < segments; ++i) hf.slopes.emplace_back(static_cast<long>(i));
    }
    for (std::size_t i = 1; i < hf.slopes.size(); ++i)
        if (!(hf.slopes[i] > hf.slopes[i - 1]))
            throw InvalidSlopes("slopes must be strictly increasing");
    hf.h.emplace_back(0);
    for (std::size_t i = 0; i < segments; ++i)
        hf.h.push_back(hf.h.back() + hf.slopes[i] * (ps.p[i + 1] - ps.p[i]));
    return hf;
}

/// t-exponents of the Viro factors: alpha_1 = h_1/p_1, alpha_2 = h_2/p_2,
/// alpha_i = (h_i - h_{i-2}) / (p_i - p_{i-2}) for i >= 3.
struct ViroExponents {
    std::vector<Rational> alpha;  // alpha[i] = alpha_{i+1}, i = 0..n
};

inline ViroExponents viro_exponents(const PSequence& ps, const HeightFunction& hf) {
    if (hf.h.size() != ps.p.size()) throw PreconditionViolated("p/h size mismatch");
    ViroExponents ve;
    ve.alpha.push_back(hf.h[1] / ps.p[1]);
    if (ps.p.size() > 2) ve.alpha.push_back(hf.h[2] / ps.p[2]);
    for (std::size_t i = 3; i < ps.p.size(); ++i)
        ve.alpha.push_back((hf.h[i] - hf.h[i - 2]) / (ps.p[i] - ps.p[i - 2]));
    // Under default slopes 0..n the closed form
    // alpha_{i+2} = i + (p_{i+2} - p_{i+1}) / (p_{i+2} - p_i) must agree.
    bool default_slopes = true;
    for (std::size_t i = 0; i < hf.slopes.size(); ++i)
        if (hf.slopes[i] != Rational(static_cast<long>(i))) default_slopes = false;
    if (default_slopes) {
        for (std::size_t i = 0; i + 2 < ps.p.size(); ++i) {
            Rational closed = Rational(static_cast<long>(i)) +
                              (ps.p[i + 2] - ps.p[i + 1]) / (ps.p[i + 2] - ps.p[i]);
            if (closed != ve.alpha[i + 1])
                throw Error("viro exponent closed form disagrees at index " + std::to_string(i + 2));
        }
    }
    return ve;
}

// ---------------------------------------------------------------------------
// Viro polynomials in (y, t): finitely many terms c * y^deg * t^order with
// rational t-orders. Enough structure to take the products in the Gale
// polynomial, read off the lower hull, and substitute a concrete t.
// ---------------------------------------------------------------------------

/// terms[deg][t_order] = coefficient
struct ViroPoly {
    std::map<long, std::map<Rational, Rational>> terms;

    void add(long deg, const Rational& order, const Rational& coeff) {
        if (sign(coeff) == 0) return;
        Rational& slot = terms[deg][order];
        slot += coeff;
        if (sign(slot) == 0) {
            terms[deg].erase(order);
            if (terms[deg].empty()) terms.erase(deg);
        }
    }

    long degree() const { return terms.empty() ? -1 : terms.rbegin()->first; }
};

namespace detail {

inline ViroPoly vp_mul(const ViroPoly& a, const ViroPoly& b, long cap) {
    long d = a.degree() + b.degree();
    if (d > cap) throw DegreeCapExceeded(d, cap);
    ViroPoly r;
    for (const auto& [da, ta] : a.terms)
        for (const auto& [qa, ca] : ta)
            for (const auto& [db, tb] : b.terms)
                for (const auto& [qb, cb] : tb) r.add(da + db, qa + qb, ca * cb);
    return r;
}

/// (1 + t^alpha y)^e expanded along its line of support.
inline ViroPoly vp_binomial_power(const Rational& alpha, long e) {
    ViroPoly r;
    Integer binom = 1;
    for (long k = 0; k <= e; ++k) {
        r.add(k, alpha * Rational(k), Rational(binom));
        binom = binom * (e - k) / (k + 1);
    }
    return r;
}

}  // namespace detail

/// The Gale polynomial of the Viro factors P_{1,t} = t^{alpha_1} y,
/// P_{i,t} = 1 + t^{alpha_i} y, P_{n+2,t} = 1, kept symbolic in (y, t).
inline ViroPoly viro_gale_support(const std::vector<Rational>& seq, const ViroExponents& alpha,
                                  long cap = kDefaultDegreeCap) {
    PSequence ps = p_sequence(seq);
    std::size_t m = seq.size();
    if (alpha.alpha.size() != m - 1)
        throw PreconditionViolated("need n+1 viro exponents");
    Integer pos_deg = ps.p.back().get_num();
    if (pos_deg > cap)
        throw DegreeCapExceeded(mpz_fits_slong_p(pos_deg.get_mpz_t()) ? pos_deg.get_si() : cap + 1,
                                cap);
    ViroPoly odd;  // slot 1 carries the pure monomial factor
    {
        long l1 = to_integer(seq[0]).get_si();
        odd.add(l1, Rational(alpha.alpha[0] * Rational(l1)), Rational(1));
    }
    ViroPoly even;
    even.add(0, Rational(0), Rational(1));
    // slots 2..n+1; slot n+2 is the constant factor 1 and contributes nothing
    for (std::size_t i = 1; i + 1 < m; ++i) {
        long l = to_integer(seq[i]).get_si();
        if (i % 2 == 0)
            odd = detail::vp_mul(odd, detail::vp_binomial_power(alpha.alpha[i], l), cap);
        else
            even = detail::vp_mul(even, detail::vp_binomial_power(alpha.alpha[i], -l), cap);
    }
    ViroPoly g = odd;
    for (const auto& [deg, row] : even.terms)
        for (const auto& [q, c] : row) g.add(deg, q, -c);
    return g;
}

/// Substitutes t = tau^M; every t-order times M must be an integer.
inline RatPoly substitute_t(const ViroPoly& vp, const Rational& tau, const Integer& M) {
    if (sign(tau) <= 0) throw PreconditionViolated("tau must be positive");
    long deg = vp.degree();
    if (deg < 0) return RatPoly::zero();
    std::vector<Rational> coeffs(static_cast<std::size_t>(deg + 1), Rational(0));
    for (const auto& [d, row] : vp.terms)
        for (const auto& [q, c] : row) {
            Integer e = to_integer(Rational(M) * q);
            if (!mpz_fits_slong_p(e.get_mpz_t()))
                throw PreconditionViolated("t-exponent out of range");
            coeffs[static_cast<std::size_t>(d)] += c * rational_pow(tau, e.get_si());
        }
    return RatPoly(std::move(coeffs));
}

inline RatPoly gale_viro(const std::vector<Rational>& seq, const ViroExponents& alpha,
                         const Rational& tau, const Integer& M, long cap = kDefaultDegreeCap) {
    for (const auto& a : alpha.alpha)
        if (!is_integral(Rational(M) * a))
            throw PreconditionViolated("M must clear all alpha denominators");
    return substitute_t(viro_gale_support(seq, alpha, cap), tau, M);
}

/// Heights are recoverable from the exponents: h_1 = alpha_1 p_1,
/// h_2 = alpha_2 p_2, h_i = h_{i-2} + alpha_i (p_i - p_{i-2}).
inline std::vector<Rational> reconstruct_heights(const PSequence& ps, const ViroExponents& alpha) {
    std::vector<Rational> h;
    h.emplace_back(0);
    h.push_back(alpha.alpha[0] * ps.p[1]);
    if (ps.p.size() > 2) h.push_back(alpha.alpha[1] * ps.p[2]);
    for (std::size_t i = 3; i < ps.p.size(); ++i)
        h.push_back(h[i - 2] + alpha.alpha[i - 1] * (ps.p[i] - ps.p[i - 2]));
    return h;
}

/// Two-term facial subpolynomial over one lower-hull edge.
struct FacialBinomial {
    std::size_t edge = 0;  // 0-based: [ (p_edge, h_edge), (p_edge+1, h_edge+1) ]
    long deg_lo = 0, deg_hi = 0;
    Rational coeff_lo, coeff_hi;

    RatPoly as_poly() const {
        std::vector<Rational> c(static_cast<std::size_t>(deg_hi) + 1, Rational(0));
        c[static_cast<std::size_t>(deg_lo)] = coeff_lo;
        c[static_cast<std::size_t>(deg_hi)] = coeff_hi;
        return RatPoly(std::move(c));
    }
};

/// Extracts the facial subpolynomial of every lower-hull edge and certifies
/// the hull: vertices are exactly (p_i, h_i), all support lies on or above
/// each edge line, and each edge carries exactly two terms of opposite sign.
inline std::vector<FacialBinomial> facial_subpolynomials(const std::vector<Rational>& seq,
                                                         const ViroExponents& alpha,
                                                         long cap = kDefaultDegreeCap) {
    PSequence ps = p_sequence(seq);
    std::vector<Rational> h = reconstruct_heights(ps, alpha);
    for (std::size_t i = 2; i < ps.p.size(); ++i) {
        Rational s_prev = (h[i - 1] - h[i - 2]) / (ps.p[i - 1] - ps.p[i - 2]);
        Rational s_next = (h[i] - h[i - 1]) / (ps.p[i] - ps.p[i - 1]);
        if (!(s_next > s_prev))
            throw InvalidSlopes("exponents do not describe a strictly convex lower hull");
    }
    ViroPoly vp = viro_gale_support(seq, alpha, cap);
    std::vector<FacialBinomial> out;
    for (std::size_t e = 0; e + 1 < ps.p.size(); ++e) {
        const Rational px = ps.p[e], py = h[e];
        const Rational qx = ps.p[e + 1], qy = h[e + 1];
        std::vector<std::pair<long, Rational>> on_edge;  // (degree, coefficient)
        for (const auto& [d, row] : vp.terms) {
            Rational x(d);
            for (const auto& [ord, c] : row) {
                // orientation of (x, ord) against the edge line
                Rational cross = (qx - px) * (ord - py) - (qy - py) * (x - px);
                if (sign(cross) < 0)
                    throw NotBinomial("support point below the claimed lower hull at degree " +
                                      std::to_string(d));
                if (sign(cross) == 0 && x >= px && x <= qx) on_edge.emplace_back(d, c);
            }
        }
        if (on_edge.size() != 2)
            throw NotBinomial("edge " + std::to_string(e) + " carries " +
                              std::to_string(on_edge.size()) + " terms");
        FacialBinomial fb;
        fb.edge = e;
        fb.deg_lo = on_edge[0].first;
        fb.coeff_lo = on_edge[0].second;
        fb.deg_hi = on_edge[1].first;
        fb.coeff_hi = on_edge[1].second;
        if (fb.deg_lo > fb.deg_hi) {
            std::swap(fb.deg_lo, fb.deg_hi);
            std::swap(fb.coeff_lo, fb.coeff_hi);
        }
        if (sign(fb.coeff_lo) * sign(fb.coeff_hi) != -1)
            throw NotBinomial("edge " + std::to_string(e) + " coefficients do not have opposite signs");
        out.push_back(std::move(fb));
    }
    return out;
}

/// Everything needed to replay the construction: the data of the lower hull,
/// the chosen parameter t = tau^M, and the certified root count.
struct ViroCertificate {
    std::vector<Rational> lambda;
    std::vector<Rational> p;
    std::vector<Rational> h;
    std::vector<Rational> alpha;
    std::vector<Rational> slopes;
    Rational tau;
    Integer M;
    RatPoly gale;
    long root_count = 0;
    std::vector<RatInterval> intervals;
};

/// Deterministic halving schedule: tau = 2^-k for the smallest k whose Gale
/// polynomial has exactly n+1 simple roots on (0, +inf).
inline ViroCertificate select_t(const std::vector<Rational>& seq, const ViroExponents& alpha,
                                long tau_budget = 64, long cap = kDefaultDegreeCap) {
    PSequence ps = p_sequence(seq);
    long target = static_cast<long>(seq.size()) - 1;  // n+1
    Integer M = 1;
    for (const auto& a : alpha.alpha) M = int_lcm(M, a.get_den());
    ViroPoly support = viro_gale_support(seq, alpha, cap);
    RatInterval axis = RatInterval::above(Rational(0));
    for (long k = 1; k <= tau_budget; ++k) {
        Rational tau = rational_pow(Rational(1, 2), k);
        RatPoly g = substitute_t(support, tau, M);
        if (g.is_zero()) continue;
        RootCount rc = sturm_count(g, axis);
        if (rc.count != target) continue;
        if (!rc.squarefree) {
            RatPoly common = poly_gcd(g, derivative(g));
            if (common.degree() > 0 && sturm_count(common, axis).count > 0) continue;
        }
        ViroCertificate cert;
        cert.lambda = seq;
        cert.p = ps.p;
        cert.h = reconstruct_heights(ps, alpha);
        cert.alpha = alpha.alpha;
        for (std::size_t i = 0; i + 1 < cert.h.size(); ++i)
            cert.slopes.push_back((cert.h[i + 1] - cert.h[i]) / (cert.p[i + 1] - cert.p[i]));
        cert.tau = tau;
        cert.M = M;
        cert.gale = std::move(g);
        cert.root_count = rc.count;
        cert.intervals = isolate_roots(cert.gale, axis);
        return cert;
    }
    throw SmallTExhausted("no tau = 2^-k with k <= " + std::to_string(tau_budget) +
                          " certifies " + std::to_string(target) + " simple positive roots");
}

/// A constructed witness system on a circuit, in both supported and diagonal
/// form, together with its certificate.
struct Construction {
    SupportedSystem system;
    DiagonalSystem diag;
    ViroCertificate cert;
};

/// Builds the witness system: the witness-order-1 point is distinguished,
/// the witness-order-(n+2) point is the origin, and the n remaining points
/// get equations z^{w_i - w_o} = 1 + t^{alpha_i - alpha_1} z^{w_1 - w_o}.
/// With default slopes alpha_1 = 0 and the exponents are the alpha_i as is.
inline Construction construct_system(const Circuit& c, const OrderingWitness& w,
                                     const std::optional<std::vector<Rational>>& slopes = {},
                                     long tau_budget = 64, long cap = kDefaultDegreeCap) {
    std::size_t m = c.size();
    if (w.order.size() != m || w.signed_seq.size() != m)
        throw PreconditionViolated("witness does not match the circuit size");
    {
        AffineRelation rel = affine_relation(c);
        int flip = (w.signed_seq[0] == rel.coeffs[w.order[0] - 1]) ? 1 : -1;
        for (std::size_t k = 0; k < m; ++k)
            if (w.signed_seq[k] != Rational(flip) * rel.coeffs[w.order[k] - 1])
                throw PreconditionViolated("witness sequence is not the circuit relation");
    }
    std::size_t n = c.dim;
    PSequence ps = p_sequence(w.signed_seq);
    HeightFunction hf = heights(ps, slopes);
    ViroExponents alpha = viro_exponents(ps, hf);
    ViroCertificate cert = select_t(w.signed_seq, alpha, tau_budget, cap);

    // Translate so the origin point is 0 and clear any rational coordinates.
    std::size_t origin = w.order.back() - 1;
    std::vector<RatVector> translated(m, RatVector(n));
    Integer L = 1;
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            translated[j][k] = c.points[j][k] - c.points[origin][k];
            L = int_lcm(L, translated[j][k].get_den());
        }
    for (auto& v : translated)
        for (auto& x : v) x *= Rational(L);

    SupportedSystem sys;
    sys.dim = n;
    sys.support = translated;
    sys.coeff = RatMatrix(n, m);
    DiagonalSystem diag;
    diag.dim = n;
    diag.distinguished_label = w.order.front();
    diag.origin_label = w.order.back();
    diag.distinguished = detail::integer_exponent(translated[w.order.front() - 1]);
    for (std::size_t slot = 2; slot <= n + 1; ++slot) {
        std::size_t label = w.order[slot - 1];
        Rational texp = rational_pow(cert.tau,
                                     to_integer(Rational(cert.M) * (alpha.alpha[slot - 1] -
                                                                    alpha.alpha[0])).get_si());
        std::size_t row = slot - 2;
        sys.coeff.at(row, label - 1) = 1;
        sys.coeff.at(row, w.order.front() - 1) = -texp;
        sys.coeff.at(row, w.order.back() - 1) = -1;
        diag.exponents.push_back(detail::integer_exponent(translated[label - 1]));
        diag.linear_parts.emplace_back(Rational(1), texp);
        diag.retained_labels.push_back(label);
        diag.relation.push_back(w.signed_seq[slot - 1]);
    }
    diag.relation.push_back(w.signed_seq.front());
    diag.relation.push_back(w.signed_seq.back());

    CountResult check = count_positive_solutions(diag, cap);
    if (check.distinct != static_cast<long>(n) + 1 || !check.squarefree_on_domain)
        throw Error("constructed system failed re-verification: " +
                    std::to_string(check.distinct) + " roots");
    return Construction{std::move(sys), std::move(diag), std::move(cert)};
}

}  // namespace galecircuit

#endif
