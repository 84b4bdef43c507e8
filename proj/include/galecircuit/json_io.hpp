#ifndef GALECIRCUIT_JSON_IO_HPP
#define GALECIRCUIT_JSON_IO_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "galecircuit/circuit.hpp"
#include "galecircuit/dessin.hpp"
#include "galecircuit/gale.hpp"
#include "galecircuit/viro.hpp"

namespace galecircuit {

using nlohmann::json;

// Rationals travel as strings "p/q" (or "p"); integer JSON numbers are also
// accepted on input. Floats are rejected to keep everything exact.
inline json rat_json(const Rational& x) { return to_string(x); }

inline Rational rat_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    throw ParseError("expected a rational string or integer, got " + j.dump());
}

inline json rat_list_json(const std::vector<Rational>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(rat_json(x));
    return a;
}

inline std::vector<Rational> rat_list_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(rat_from_json(e));
    return out;
}

inline json int_json(const Integer& x) {
    if (mpz_fits_slong_p(x.get_mpz_t())) return x.get_si();
    return x.get_str();
}

inline json interval_json(const RatInterval& iv) {
    if (iv.empty) return json{{"empty", true}};
    json j;
    j["lo"] = iv.lo ? to_string(*iv.lo) : "-inf";
    j["hi"] = iv.hi ? to_string(*iv.hi) : "inf";
    j["lo_open"] = iv.lo_open;
    j["hi_open"] = iv.hi_open;
    return j;
}

inline RatInterval interval_from_json(const json& j) {
    if (j.contains("empty") && j["empty"].get<bool>()) return RatInterval::make_empty();
    RatInterval iv;
    std::string lo = j.at("lo").is_string() ? j["lo"].get<std::string>() : j["lo"].dump();
    std::string hi = j.at("hi").is_string() ? j["hi"].get<std::string>() : j["hi"].dump();
    if (lo != "-inf") iv.lo = parse_rational(lo);
    if (hi != "inf") iv.hi = parse_rational(hi);
    if (j.contains("lo_open")) iv.lo_open = j["lo_open"].get<bool>();
    if (j.contains("hi_open")) iv.hi_open = j["hi_open"].get<bool>();
    return iv;
}

inline json interval_list_json(const std::vector<RatInterval>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(interval_json(x));
    return a;
}

// --- circuits ---------------------------------------------------------------

inline json circuit_json(const Circuit& c) {
    json pts = json::array();
    for (const auto& p : c.points) pts.push_back(rat_list_json(p));
    return json{{"dim", c.dim}, {"points", pts}};
}

inline Circuit circuit_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
        throw ParseError("circuit JSON needs \"dim\" and \"points\"");
    std::size_t dim = j["dim"].get<std::size_t>();
    std::vector<RatVector> pts;
    for (const auto& p : j["points"]) pts.push_back(rat_list_from_json(p));
    for (const auto& p : pts)
        if (p.size() != dim) throw ParseError("point dimension does not match \"dim\"");
    return validate_circuit(pts);
}

// --- supported systems -------------------------------------------------------

inline json system_json(const SupportedSystem& s) {
    json sup = json::array();
    for (const auto& w : s.support) {
        json row = json::array();
        for (const auto& x : w) {
            if (is_integral(x))
                row.push_back(int_json(x.get_num()));
            else
                row.push_back(to_string(x));
        }
        sup.push_back(row);
    }
    json co = json::array();
    for (std::size_t r = 0; r < s.coeff.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < s.coeff.cols; ++c) row.push_back(rat_json(s.coeff.at(r, c)));
        co.push_back(row);
    }
    return json{{"dim", s.dim}, {"support", sup}, {"coefficients", co}};
}

inline SupportedSystem system_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("support") ||
        !j.contains("coefficients"))
        throw ParseError("system JSON needs \"dim\", \"support\" and \"coefficients\"");
    SupportedSystem s;
    s.dim = j["dim"].get<std::size_t>();
    for (const auto& w : j["support"]) s.support.push_back(rat_list_from_json(w));
    std::size_t rows = j["coefficients"].size();
    std::size_t cols = rows ? j["coefficients"][0].size() : 0;
    s.coeff = RatMatrix(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j["coefficients"][r];
        if (row.size() != cols) throw ParseError("ragged coefficient matrix");
        for (std::size_t c = 0; c < cols; ++c) s.coeff.at(r, c) = rat_from_json(row[c]);
    }
    validate_system_shape(s);
    return s;
}

// --- analysis verdicts -------------------------------------------------------

inline json witness_json(const OrderingWitness& w) {
    json j;
    j["order"] = w.order;
    j["signed_seq"] = rat_list_json(w.signed_seq);
    j["partial_sums"] = rat_list_json(w.partial_sums);
    return j;
}

inline json profile_json(const DessinProfile& prof) {
    json j;
    json lam = json::array(), val = json::array(), ec = json::array();
    for (const auto& x : prof.lambda) lam.push_back(int_json(x));
    for (const auto& x : prof.valencies) val.push_back(int_json(x));
    for (const auto& x : prof.edge_counts) ec.push_back(int_json(x));
    j["lambda"] = lam;
    j["valencies"] = val;
    j["edge_counts"] = ec;
    j["degree"] = int_json(prof.degree);
    j["rescaled"] = prof.rescaled;
    return j;
}

inline json verdict_json(const Circuit& c, const AffineRelation& rel,
                         const CharacterizationVerdict& v) {
    json j;
    j["dim"] = c.dim;
    j["relation"] = rat_list_json(rel.coeffs);
    j["sign_balance"] = sign_balance_check(rel);
    j["supports_max"] = v.supports_max;
    if (v.witness)
        j["witness"] = witness_json(*v.witness);
    else
        j["witness"] = nullptr;
    if (v.supports_max)
        j["failure_reason"] = nullptr;
    else
        j["failure_reason"] = v.failure_reason;
    if (v.witness) {
        try {
            j["dessin"] = profile_json(edge_counts(v.witness->signed_seq));
        } catch (const Error&) {
            j["dessin"] = nullptr;  // cannot happen for a valid witness
        }
    } else {
        j["dessin"] = nullptr;
    }
    bool integral = true;
    for (const auto& p : c.points)
        for (const auto& x : p)
            if (!is_integral(x)) integral = false;
    if (integral)
        j["kouchnirenko_bound"] = int_json(kouchnirenko_bound(c));
    else
        j["kouchnirenko_bound"] = nullptr;
    return j;
}

// --- polynomials, certificates, solve reports --------------------------------

inline json poly_json(const RatPoly& p) { return rat_list_json(p.coeffs); }

inline json certificate_json(const ViroCertificate& cert) {
    json j;
    j["lambda"] = rat_list_json(cert.lambda);
    j["p"] = rat_list_json(cert.p);
    j["h"] = rat_list_json(cert.h);
    j["alpha"] = rat_list_json(cert.alpha);
    j["slopes"] = rat_list_json(cert.slopes);
    j["tau"] = rat_json(cert.tau);
    j["M"] = int_json(cert.M);
    j["gale_degree"] = cert.gale.degree();
    j["gale_poly"] = poly_json(cert.gale);
    j["root_count"] = cert.root_count;
    j["intervals"] = interval_list_json(cert.intervals);
    return j;
}

inline json solution_json(const PositiveSolution& s) {
    json j;
    j["y"] = rat_json(s.y_value);
    j["y_decimal"] = BigFloat(s.y_value, 256).str(s.digits);
    j["y_interval"] = interval_json(s.y_interval);
    j["z"] = s.z_values;
    j["residuals"] = s.residuals;
    j["max_residual"] = s.max_residual;
    j["distinguished_rel_error"] = s.distinguished_rel_error;
    j["precision_bits"] = s.precision_bits;
    j["digits"] = s.digits;
    return j;
}

inline json solve_report_json(const SolveReport& rep) {
    json j;
    j["dim"] = rep.diag.dim;
    j["count"] = rep.count.distinct;
    j["simple_count"] = rep.count.simple;
    j["squarefree"] = rep.count.squarefree_on_domain;
    j["gale_poly"] = poly_json(rep.count.gale);
    j["delta_plus"] = interval_json(rep.count.domain);
    j["intervals"] = interval_list_json(rep.count.intervals);
    json sols = json::array();
    for (const auto& s : rep.solutions) sols.push_back(solution_json(s));
    j["solutions"] = sols;
    j["perturbed"] = rep.perturbed;
    j["diagonalization"] = json{{"retained", rep.diag.retained_labels},
                                {"distinguished", rep.diag.distinguished_label},
                                {"origin", rep.diag.origin_label}};
    return j;
}

}  // namespace galecircuit

#endif
