#pragma once

#include <stdexcept>
#include <string>

namespace gaussreg {

// Bad sizes: odd latent dim, mismatched permutation length, D != S*S, ...
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Structurally invalid configuration (period not dividing dim, batch size not
// dividing D, bad enum value, malformed input file).
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// A loss hit a point where its gradient is undefined (log 0, |m|^{1/n} at 0,
// zero spectrum bin under the NLL).
struct SingularityError : std::domain_error {
    explicit SingularityError(const std::string& what) : std::domain_error(what) {}
};

// Empirical variance below eps_var in a variance-normalized loss.
struct DegenerateVarianceError : SingularityError {
    explicit DegenerateVarianceError(const std::string& what) : SingularityError(what) {}
};

// Not enough records/points to compute a statistic.
struct InsufficientDataError : std::invalid_argument {
    explicit InsufficientDataError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace gaussreg
