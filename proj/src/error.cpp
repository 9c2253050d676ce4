#include "prelie/error.hpp"

namespace prelie {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::ImageNotInKernel: return "ImageNotInKernel";
    case ErrorKind::NotPreLie: return "NotPreLie";
    case ErrorKind::NotLie: return "NotLie";
    case ErrorKind::NotCommAssoc: return "NotCommAssoc";
    case ErrorKind::FlavorMismatch: return "FlavorMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotDerivation: return "NotDerivation";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::NotRotaBaxter: return "NotRotaBaxter";
    case ErrorKind::NotNijenhuis: return "NotNijenhuis";
    case ErrorKind::NotOOperator: return "NotOOperator";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotSMatrix: return "NotSMatrix";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::SingularT2: return "SingularT2";
    case ErrorKind::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorKind::TripleMismatch: return "TripleMismatch";
    case ErrorKind::NotNijenhuisPair: return "NotNijenhuisPair";
    case ErrorKind::NotClosed: return "NotClosed";
    }
    return "Unknown";
}

}  // namespace prelie
