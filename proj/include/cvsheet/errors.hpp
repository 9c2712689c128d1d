#pragma once

#include <stdexcept>
#include <string>

namespace cvsheet {

// The (4.144) symbol form divides by mu+ + mu-; undefined where that sum vanishes.
struct singular_form_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Requested quantity only exists in a different stability regime.
struct regime_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Jump system is singular (gamma = 0 with mu+ + mu- = 0).
struct degenerate_frequency_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A lattice mode sits too close to a symbol zero for a stable division.
struct near_singular_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hemisphere search found no zero where the root analysis guarantees one.
struct search_inconsistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simulation detected energy returning from the truncated far field.
struct invalid_run_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Explicit time step exceeds the CFL bound.
struct step_size_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace cvsheet
