#ifndef GALECIRCUIT_DESSIN_HPP
#define GALECIRCUIT_DESSIN_HPP

#include <sstream>
#include <string>
#include <vector>

#include "galecircuit/rational.hpp"

namespace galecircuit {

/// Combinatorial profile of the real dessin d'enfant of an alternating
/// integer relation: valencies of the special points and the numbers of
/// complex edges between consecutive ones.
struct DessinProfile {
    std::vector<Integer> lambda;       // alternating, starts positive, sums to 0
    std::vector<Integer> valencies;    // V_i = 2|lambda_i|
    std::vector<Integer> edge_counts;  // N_{1,2} .. N_{n+1,n+2}, all even and >= 0
    Integer degree;                    // p_{n+1} = sum of positive lambda_i
    bool rescaled = false;             // input was scaled to coprime integers
    bool flipped = false;              // input was globally negated to start positive

    std::size_t gaps() const { return edge_counts.size(); }  // n+1
};

/// Computes the edge counts from the valency relations. Throws
/// InvalidProfile at the first gap with a negative count, which for integer
/// relations happens exactly when the ordering fails the partial-sum test.
inline DessinProfile edge_counts(const std::vector<Rational>& seq) {
    if (seq.size() < 3) throw PreconditionViolated("relation too short");
    DessinProfile prof;
    std::vector<Rational> scaled = scale_to_coprime_integers(seq);
    prof.rescaled = (scaled != seq);
    if (sign(scaled[0]) < 0) {
        prof.flipped = true;
        for (auto& x : scaled) x = -x;
    }
    Rational total(0);
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        int want = (i % 2 == 0) ? 1 : -1;
        if (sign(scaled[i]) != want)
            throw PreconditionViolated("relation signs must alternate");
        total += scaled[i];
    }
    if (sign(total) != 0) throw PreconditionViolated("relation must sum to zero");
    std::size_t m = scaled.size();  // n+2
    for (const auto& x : scaled) {
        prof.lambda.push_back(x.get_num());
        prof.valencies.push_back(2 * abs_int(x.get_num()));
    }
    prof.degree = 0;
    for (const auto& l : prof.lambda)
        if (l > 0) prof.degree += l;
    // N_{1,2} = V_1 - 2, then N_{i,i+1} = V_i - N_{i-1,i} - 4.
    std::vector<Integer> N;
    N.reserve(m - 1);
    N.push_back(prof.valencies[0] - 2);
    for (std::size_t i = 2; i <= m - 1; ++i) {
        Integer next = prof.valencies[i - 1] - N.back() - 4;
        if (next < 0)
            throw InvalidProfile(i, "N_{" + std::to_string(i) + "," + std::to_string(i + 1) +
                                        "} = " + to_string(next));
        N.push_back(next);
    }
    if (N.back() != prof.valencies[m - 1] - 2)
        throw InvalidProfile(m - 1, "final consistency N_{n+1,n+2} = " + to_string(N.back()) +
                                        " != 2|lambda_{n+2}| - 2 = " +
                                        to_string(Integer(prof.valencies[m - 1] - 2)));
    // Closed form N_{i,i+1} = 2 (-1)^{i+1} T_i - 2, cross-checked.
    Integer t = 0;
    for (std::size_t i = 1; i <= m - 1; ++i) {
        t += prof.lambda[i - 1];
        Integer closed = 2 * ((i % 2 == 1) ? t : Integer(-t)) - 2;
        if (closed != N[i - 1])
            throw Error("edge-count closed form disagrees with recurrence at gap " +
                        std::to_string(i));
        if (N[i - 1] % 2 != 0) throw Error("edge count parity broken at gap " + std::to_string(i));
    }
    prof.edge_counts = std::move(N);
    return prof;
}

/// Branch description of one gap between consecutive special points:
/// k = N/2 nested conjugate pairs above the real branch L_0.
struct GapLayout {
    std::size_t gap = 0;           // 1-based: between x_gap and x_{gap+1}
    Integer pairs;                 // k
    bool real_branch_r = false;    // L_0 carries a letter r
    std::vector<bool> pair_r;      // pair j (1..k) carries an r on each branch
    bool figure_convention = false;
};

struct DessinLayout {
    std::vector<GapLayout> gaps;
    std::size_t delta_plus_r = 0;        // letters r on the positivity arc: n+1
    std::size_t critical_points = 0;     // c_2..c_{n+1}: n of them, all on that arc
    Integer total_r;                     // over the whole graph, conjugates counted
    bool degree_consistent = false;      // total_r == deg(phi); diagnostic only
};

/// Branch L_j of a gap with k pairs carries one letter r iff j and k-1 have
/// the same parity.
inline DessinLayout letter_layout(const DessinProfile& prof) {
    DessinLayout lay;
    std::size_t m = prof.lambda.size();
    lay.delta_plus_r = m - 1;      // n+1
    lay.critical_points = m - 2;   // n
    Integer total = static_cast<long>(lay.delta_plus_r);
    for (std::size_t i = 1; i <= prof.gaps(); ++i) {
        GapLayout g;
        g.gap = i;
        g.pairs = prof.edge_counts[i - 1] / 2;
        long k = static_cast<long>(g.pairs.get_si());
        g.real_branch_r = (k % 2 == 1);  // 0 and k-1 share parity
        for (long j = 1; j <= k; ++j) g.pair_r.push_back(((j - (k - 1)) % 2) == 0);
        g.figure_convention = (i == 1 || i == prof.gaps());
        if (g.real_branch_r) total += 1;
        for (bool b : g.pair_r)
            if (b) total += 2;  // branch and its conjugate
        lay.gaps.push_back(std::move(g));
    }
    lay.total_r = total;
    lay.degree_consistent = (lay.total_r == prof.degree);
    return lay;
}

enum class GraphFormat { dot, json_text };

namespace detail {

inline std::string dessin_dot(const DessinProfile& prof, const DessinLayout& lay) {
    std::ostringstream os;
    std::size_t m = prof.lambda.size();
    os << "graph dessin {\n";
    os << "  // special points x1..x" << m << "; p maps to 0, q maps to infinity\n";
    for (std::size_t i = 1; i <= m; ++i)
        os << "  x" << i << " [label=\"" << ((i % 2 == 1) ? 'p' : 'q') << "\", shape=circle];\n";
    os << "  // non-special critical points, all on the positivity arc\n";
    for (std::size_t i = 2; i <= m - 1; ++i) os << "  c" << i << " [shape=point];\n";
    for (std::size_t i = 1; i <= lay.delta_plus_r; ++i)
        os << "  rplus" << i << " [label=\"r\", shape=none];\n";
    for (const auto& g : lay.gaps) {
        if (g.real_branch_r) os << "  rg" << g.gap << " [label=\"r\", shape=none];\n";
        for (std::size_t j = 0; j < g.pair_r.size(); ++j)
            if (g.pair_r[j]) os << "  rg" << g.gap << "p" << (j + 1) << " [label=\"r\", shape=none];\n";
    }
    os << "  // real axis between consecutive special points\n";
    for (const auto& g : lay.gaps) {
        if (g.real_branch_r)
            os << "  x" << g.gap << " -- rg" << g.gap << " -- x" << (g.gap + 1) << ";\n";
        else
            os << "  x" << g.gap << " -- x" << (g.gap + 1) << ";\n";
    }
    os << "  // positivity arc from x1 to x" << m << " (through infinity)\n";
    os << "  x1 -- rplus1";
    for (std::size_t i = 2; i <= m - 1; ++i) os << " -- c" << i << " -- rplus" << i;
    os << " -- x" << m << ";\n";
    os << "  // conjugate branch pairs (each dashed chain stands for a pair)\n";
    for (const auto& g : lay.gaps) {
        for (std::size_t j = 0; j < g.pair_r.size(); ++j) {
            if (g.pair_r[j])
                os << "  x" << g.gap << " -- rg" << g.gap << "p" << (j + 1) << " -- x"
                   << (g.gap + 1) << " [style=dashed];\n";
            else
                os << "  x" << g.gap << " -- x" << (g.gap + 1) << " [style=dashed];\n";
        }
    }
    os << "}\n";
    return os.str();
}

inline std::string dessin_json(const DessinProfile& prof, const DessinLayout& lay) {
    std::ostringstream os;
    auto int_list = [&os](const std::vector<Integer>& xs) {
        os << "[";
        for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i].get_str();
        os << "]";
    };
    os << "{\"lambda\":";
    int_list(prof.lambda);
    os << ",\"valencies\":";
    int_list(prof.valencies);
    os << ",\"edge_counts\":";
    int_list(prof.edge_counts);
    os << ",\"degree\":" << prof.degree.get_str();
    os << ",\"rescaled\":" << (prof.rescaled ? "true" : "false");
    os << ",\"flipped\":" << (prof.flipped ? "true" : "false");
    os << ",\"gaps\":[";
    for (std::size_t i = 0; i < lay.gaps.size(); ++i) {
        const auto& g = lay.gaps[i];
        os << (i ? "," : "") << "{\"gap\":" << g.gap << ",\"pairs\":" << g.pairs.get_str()
           << ",\"real_branch_r\":" << (g.real_branch_r ? "true" : "false") << ",\"pair_r\":[";
        for (std::size_t j = 0; j < g.pair_r.size(); ++j)
            os << (j ? "," : "") << (g.pair_r[j] ? "true" : "false");
        os << "],\"figure_convention\":" << (g.figure_convention ? "true" : "false") << "}";
    }
    os << "],\"delta_plus\":{\"r_count\":" << lay.delta_plus_r
       << ",\"critical_points\":" << lay.critical_points << "}";
    os << ",\"total_r\":" << lay.total_r.get_str();
    os << ",\"degree_consistent\":" << (lay.degree_consistent ? "true" : "false");
    if (!lay.degree_consistent)
        os << ",\"warning\":\"total r letters do not match deg(phi)\"";
    os << "}";
    return os.str();
}

}  // namespace detail

/// Deterministic rendering of the profile; identical input gives
/// byte-identical output. JSON text mirrors the profile and layout fields.
inline std::string emit_graph(const DessinProfile& prof, GraphFormat format) {
    DessinLayout lay = letter_layout(prof);
    if (format == GraphFormat::dot) return detail::dessin_dot(prof, lay);
    return detail::dessin_json(prof, lay);
}

}  // namespace galecircuit

#endif
