#pragma once

#include <stdexcept>
#include <string>

namespace admm_topo {

// Base for all library errors so callers can catch everything from this
// library in one handler while tests still match the precise condition.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph construction / generation
struct DisconnectedGraph : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct TooSmall : Error { using Error::Error; };
struct GenerationFailed : Error { using Error::Error; };
struct TooLargeForExactConductance : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// operators / numerics
struct ParameterOutOfRange : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };

// iteration / rate measurement
struct NonFiniteState : Error { using Error::Error; };
struct Diverged : Error { using Error::Error; };
struct WindowTooNoisy : Error { using Error::Error; };

// tuning
struct OmegaOutOfRange : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };

}  // namespace admm_topo
