#pragma once

#include <stdexcept>

namespace cgp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph / instance files
struct CycleDetected : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// instance generator
struct GenerationExhausted : Error { using Error::Error; };

// master problem
struct NumericalFailure : Error { using Error::Error; };
struct NotImproving : Error { using Error::Error; };
struct PoolInfeasible : Error { using Error::Error; };

// neural model
struct ShapeMismatch : Error { using Error::Error; };
struct NonFiniteActivation : Error { using Error::Error; };
struct VersionMismatch : Error { using Error::Error; };
struct CorruptCheckpoint : Error { using Error::Error; };

// training
struct EmptyDataset : Error { using Error::Error; };

// solve driver
struct IpWithArtificials : Error { using Error::Error; };

}  // namespace cgp
