#ifndef GALECIRCUIT_ERRORS_HPP
#define GALECIRCUIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace galecircuit {

/// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data (JSON, rational literals, flag values).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

/// A caller violated a documented precondition.
struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what)
        : Error("precondition violated: " + what) {}
};

/// The supplied points are not minimally affinely dependent.
struct NotACircuit : Error {
    explicit NotACircuit(const std::string& what) : Error("not a circuit: " + what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what) : Error("singular matrix: " + what) {}
};

/// A polynomial expansion would exceed the configured degree cap.
struct DegreeCapExceeded : Error {
    long requested;
    long cap;
    DegreeCapExceeded(long requested_, long cap_)
        : Error("degree cap exceeded: expansion needs degree " + std::to_string(requested_) +
                " > cap " + std::to_string(cap_)),
          requested(requested_), cap(cap_) {}
};

/// refine_root was handed an interval that does not isolate exactly one root.
struct NotIsolating : Error {
    explicit NotIsolating(const std::string& what) : Error("not isolating: " + what) {}
};

/// No ordered pair of leftover points yields an invertible coefficient submatrix.
struct NoDiagonalization : Error {
    explicit NoDiagonalization(const std::string& what)
        : Error("no diagonalization: " + what) {}
};

/// The p-sequence of an ordered relation fails p_0 < p_1 < ... < p_{n+1}.
struct NotStrictlyIncreasing : Error {
    std::size_t index;  // first i with p_i <= p_{i-1}
    NotStrictlyIncreasing(std::size_t index_, const std::string& what)
        : Error("p-sequence not strictly increasing: " + what), index(index_) {}
};

struct InvalidSlopes : Error {
    explicit InvalidSlopes(const std::string& what) : Error("invalid slopes: " + what) {}
};

/// A facial subpolynomial turned out not to be a binomial (internal inconsistency).
struct NotBinomial : Error {
    explicit NotBinomial(const std::string& what) : Error("facial subpolynomial not binomial: " + what) {}
};

/// The halving schedule for the Viro parameter ran out of budget.
struct SmallTExhausted : Error {
    explicit SmallTExhausted(const std::string& what) : Error("small-t search exhausted: " + what) {}
};

/// Solution lifting could not push residuals below the requested tolerance.
struct ResidualTooLarge : Error {
    explicit ResidualTooLarge(const std::string& what) : Error("residual too large: " + what) {}
};

/// Some edge count N_{i,i+1} is negative, or the final consistency check fails.
struct InvalidProfile : Error {
    std::size_t index;  // 1-based gap index of the first violation
    InvalidProfile(std::size_t index_, const std::string& what)
        : Error("invalid dessin profile: " + what), index(index_) {}
};

}  // namespace galecircuit

#endif
