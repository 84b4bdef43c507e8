// Walks the whole pipeline on one relation: realize it as a circuit, decide
// the characterization, build a witness system, and count/lift its positive
// solutions.

#include <iostream>

#include "galecircuit/json_io.hpp"

namespace gc = galecircuit;

int main() {
    std::vector<gc::Rational> lambda{3, -7, 6, -3, 1};
    gc::Circuit circuit = gc::realize_circuit(lambda, 3);
    std::cout << "circuit: " << gc::circuit_json(circuit).dump() << "\n";

    gc::CharacterizationVerdict verdict = gc::characterize(circuit);
    std::cout << "supports n+1 positive solutions: " << (verdict.supports_max ? "yes" : "no")
              << "\n";
    if (!verdict.supports_max) return 1;

    gc::Construction built = gc::construct_system(circuit, *verdict.witness);
    std::cout << "tau = " << gc::to_string(built.cert.tau) << ", M = " << built.cert.M
              << ", certified roots = " << built.cert.root_count << "\n";

    gc::SolveReport rep = gc::solve_system(built.system, gc::Rational(1, 1000000000));
    std::cout << "lifted " << rep.solutions.size() << " positive solutions:\n";
    for (const auto& s : rep.solutions) {
        std::cout << "  y ~ " << gc::BigFloat(s.y_value, 128).str(12) << ", z = (";
        for (std::size_t i = 0; i < s.z_values.size(); ++i)
            std::cout << (i ? ", " : "") << s.z_values[i];
        std::cout << "), residual < " << s.max_residual << "\n";
    }
    return 0;
}
