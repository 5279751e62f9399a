#pragma once

#include <stdexcept>
#include <string>

namespace antvote {

// Base class for every error raised by the library.  All of them indicate
// a violated precondition or an infeasible request, never an internal bug.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A probability parameter is outside (0,1) or a pair does not sum to 1.
struct InvalidProbability : Error { using Error::Error; };

// The signal structure carries no information (delta <= 0).
struct NonInformative : Error { using Error::Error; };

// Group counts are inconsistent with the population size, or empty/negative.
struct InconsistentCounts : Error { using Error::Error; };

// A strictly-validated profile contains a weakly dominated strategy.
struct DominatedStrategy : Error { using Error::Error; };

// A quantity was requested outside its domain of definition.
struct DomainError : Error { using Error::Error; };

// The requested robustness level cannot be certified by the construction.
struct InfeasibleXi : Error { using Error::Error; };

// More deviators requested than eligible agents.
struct KTooLarge : Error { using Error::Error; };

// Monte Carlo invoked with a non-positive trial count.
struct InvalidTrials : Error { using Error::Error; };

// Brute-force search would exceed its evaluation budget.
struct ExplosionGuard : Error { using Error::Error; };

// A root finder could not bracket a sign change (the segment is empty).
struct NoBracket : Error { using Error::Error; };

}  // namespace antvote
