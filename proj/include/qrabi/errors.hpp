#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qrabi {

struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unsupported_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Fock-cutoff doubling reached its limit without the energy settling.
/// Carries the energy trace (one value per cutoff tried) for diagnosis.
struct convergence_error : std::runtime_error {
    std::vector<int> cutoffs;
    std::vector<double> energies;
    convergence_error(const std::string& msg, std::vector<int> n, std::vector<double> e)
        : std::runtime_error(msg), cutoffs(std::move(n)), energies(std::move(e)) {}
};

/// Requested density pair sits in the non-v-representable boundary band.
struct boundary_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Ground state too close to degenerate for a well-defined inversion.
struct degeneracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qrabi
