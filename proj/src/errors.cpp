#include "fg/errors.hpp"

namespace fg {

const char* to_string(Err code) {
    switch (code) {
    case Err::InvalidArgument: return "InvalidArgument";
    case Err::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case Err::NonCubic: return "NonCubic";
    case Err::LoopOrMultiEdge: return "LoopOrMultiEdge";
    case Err::Disconnected: return "Disconnected";
    case Err::NonPlanar: return "NonPlanar";
    case Err::BadFaceLength: return "BadFaceLength";
    case Err::WrongPentagonCount: return "WrongPentagonCount";
    case Err::BadHeader: return "BadHeader";
    case Err::TruncatedRecord: return "TruncatedRecord";
    case Err::VertexIdOutOfRange: return "VertexIdOutOfRange";
    case Err::EdgeNotPresent: return "EdgeNotPresent";
    case Err::OverlapInvariantViolated: return "OverlapInvariantViolated";
    case Err::WrongVertexCount: return "WrongVertexCount";
    case Err::NotACycle: return "NotACycle";
    case Err::SeedOnBoundaryCrossing: return "SeedOnBoundaryCrossing";
    case Err::NotTwoConnected: return "NotTwoConnected";
    case Err::IdentityViolated: return "IdentityViolated";
    case Err::NotNormal: return "NotNormal";
    case Err::LayerLemmaViolated: return "LayerLemmaViolated";
    case Err::NegativeRunLength: return "NegativeRunLength";
    case Err::PreconditionP6: return "PreconditionP6";
    case Err::IoError: return "IoError";
    case Err::ValidationError: return "ValidationError";
    case Err::SuiteFailed: return "SuiteFailed";
    }
    return "UnknownError";
}

} // namespace fg
