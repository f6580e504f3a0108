#pragma once

#include <stdexcept>
#include <string>

namespace hilbsq {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operation requires a non-degenerate lattice but det(gram) = 0.
struct DegenerateLattice : Error {
    explicit DegenerateLattice(const std::string& what = "DegenerateLattice") : Error(what) {}
};

// Polarisation degree t of a generic surface must be >= 1.
struct InvalidDegree : Error {
    explicit InvalidDegree(const std::string& what = "InvalidDegree") : Error(what) {}
};

// embedding * G * embedding^T does not reproduce the claimed Picard Gram.
struct GramMismatch : Error {
    explicit GramMismatch(const std::string& what = "GramMismatch") : Error(what) {}
};

// Embedding rows do not span a primitive sublattice.
struct NotPrimitive : Error {
    explicit NotPrimitive(const std::string& what = "NotPrimitive") : Error(what) {}
};

// Picard rank outside 1..19.
struct RankOutOfRange : Error {
    explicit RankOutOfRange(const std::string& what = "RankOutOfRange") : Error(what) {}
};

// Picard Gram does not have signature (1, r-1).
struct WrongSignature : Error {
    explicit WrongSignature(const std::string& what = "WrongSignature") : Error(what) {}
};

// Hodge-class computations are only valid under the generality assumption.
struct GeneralityRequired : Error {
    explicit GeneralityRequired(const std::string& what = "GeneralityRequired") : Error(what) {}
};

// Integral-only operation applied to a non-integral class.
struct NotIntegral : Error {
    explicit NotIntegral(const std::string& what = "NotIntegral") : Error(what) {}
};

// Two independent computations of the same quantity disagreed. Must never fire.
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what = "InternalInconsistency")
        : Error(what) {}
};

// Malformed external input (JSON schema violations and the like).
struct BadInput : Error {
    explicit BadInput(const std::string& what = "BadInput") : Error(what) {}
};

}  // namespace hilbsq
