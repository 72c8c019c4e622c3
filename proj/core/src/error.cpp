#include "albert/error.hpp"

namespace albert {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedParents: return "MixedParents";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::InvalidAutomorphism: return "InvalidAutomorphism";
    case Errc::NotGalois: return "NotGalois";
    case Errc::NormNotOne: return "NormNotOne";
    case Errc::ExhaustedCandidates: return "ExhaustedCandidates";
    case Errc::NotSubalgebra: return "NotSubalgebra";
    case Errc::NotInCenter: return "NotInCenter";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::WrongBackend: return "WrongBackend";
    case Errc::WrongConstruction: return "WrongConstruction";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::NormMismatch: return "NormMismatch";
    case Errc::NotSpecialUnitary: return "NotSpecialUnitary";
    case Errc::NotSimilarity: return "NotSimilarity";
    case Errc::NotIsomorphism: return "NotIsomorphism";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::NotInvertibleGenerator: return "NotInvertibleGenerator";
    case Errc::CyclicElement: return "CyclicElement";
    case Errc::NotCubicSubfield: return "NotCubicSubfield";
    case Errc::RetriesExhausted: return "RetriesExhausted";
    case Errc::NoDecomposition: return "NoDecomposition";
    case Errc::NotStabilizing: return "NotStabilizing";
    case Errc::RecoveryFailed: return "RecoveryFailed";
    case Errc::SingularImageOfOne: return "SingularImageOfOne";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

}  // namespace albert
