#pragma once

#include <stdexcept>
#include <string>

namespace qdisc {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generic precondition violation (bad tolerance, bad shape, out-of-range knob).
struct InvalidArgument : Error { using Error::Error; };

// --- linear algebra ---
struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NotPSD : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// Inputs that are structurally broken rather than merely failing a verdict
// (e.g. a "density" whose trace is far from one).
struct DataIntegrity : Error { using Error::Error; };

// --- gate families ---
struct InvalidRank : Error { using Error::Error; };
struct DimensionTooSmall : Error { using Error::Error; };
struct OddRankUnsupported : Error { using Error::Error; };
struct RankTooLarge : Error { using Error::Error; };

// --- certificates ---
struct StructureMismatch : Error { using Error::Error; };

// --- rank reduction ---
struct ZeroInput : Error { using Error::Error; };
struct SingularDensity : Error { using Error::Error; };
struct AnnihilatorNotFound : Error { using Error::Error; };
struct DegenerateTrace : Error { using Error::Error; };

// --- feasibility search ---
struct ZeroFactor : Error { using Error::Error; };

// --- superdense coding ---
struct NotDiscriminating : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct Ambiguous : Error { using Error::Error; };

}  // namespace qdisc
