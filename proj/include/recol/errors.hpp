#ifndef RECOL_ERRORS_HPP
#define RECOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace recol {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// bad family parameters, malformed spec strings
struct ParameterError : Error { using Error::Error; };
// malformed graph / coloring / path files
struct FormatError : Error { using Error::Error; };
// exact search or oracle enumeration beyond the configured budget
struct SizeLimit : Error { using Error::Error; };
// input is not (P2+P3,C4)-free, or a partition precondition failed
struct NotInClass : Error { using Error::Error; };
struct NotConnected : Error { using Error::Error; };
struct ComparablePairPresent : Error { using Error::Error; };
// the structure theorems promise this never fires on in-class inputs
struct DecompositionFailure : Error { using Error::Error; };
struct ClassMismatch : Error { using Error::Error; };
struct NoSpareColor : Error { using Error::Error; };
struct NotP3Free : Error { using Error::Error; };
struct NotChordal : Error { using Error::Error; };
struct NotThreeK1Free : Error { using Error::Error; };
struct PaletteClash : Error { using Error::Error; };
struct NotComparable : Error { using Error::Error; };
struct ThresholdTooLow : Error { using Error::Error; };
struct NotExceptional : Error { using Error::Error; };
struct NotEmbeddable : Error { using Error::Error; };
// decider says no and ell < rho+2: no constructive path is promised
struct NotMixingAtEll : Error { using Error::Error; };
// an invariant the theorems guarantee was violated: a bug, not an input error
struct InternalError : Error { using Error::Error; };

}  // namespace recol

#endif
