#ifndef PRELIE_ERROR_HPP
#define PRELIE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace prelie {

enum class ErrorKind {
    Parse,
    ShapeMismatch,
    IndexOutOfRange,
    SingularMatrix,
    NonSquare,
    ImageNotInKernel,
    NotPreLie,
    NotLie,
    NotCommAssoc,
    FlavorMismatch,
    AlgebraMismatch,
    NotHomomorphism,
    ArityMismatch,
    NotAComplex,
    SizeLimit,
    NotDerivation,
    NotAntisymmetric,
    Degenerate,
    NotCocycle,
    NotRotaBaxter,
    NotNijenhuis,
    NotOOperator,
    NotSymmetric,
    NotSMatrix,
    NotCompatible,
    SingularT2,
    CrossCheckMismatch,
    TripleMismatch,
    NotNijenhuisPair,
    NotClosed,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace prelie

#endif
