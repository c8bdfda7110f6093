#pragma once

#include <stdexcept>
#include <string>

namespace fg {

enum class Err {
    InvalidArgument,
    // rotation-system construction
    AsymmetricAdjacency,
    NonCubic,
    LoopOrMultiEdge,
    Disconnected,
    NonPlanar,
    // fullerene validation
    BadFaceLength,
    WrongPentagonCount,
    // planar_code
    BadHeader,
    TruncatedRecord,
    VertexIdOutOfRange,
    // edge sets
    EdgeNotPresent,
    // bipartizer
    OverlapInvariantViolated,
    WrongVertexCount,
    // patches
    NotACycle,
    SeedOnBoundaryCrossing,
    NotTwoConnected,
    IdentityViolated,
    NotNormal,
    LayerLemmaViolated,
    NegativeRunLength,
    PreconditionP6,
    // harness
    IoError,
    ValidationError,
    SuiteFailed,
};

const char* to_string(Err code);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void raise(Err code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace fg
