#pragma once

#include <stdexcept>
#include <string>

namespace iwa {

// Base class for every arithmetic or domain failure raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scalars from different (p, M) contexts were mixed.
struct ContextMismatch : Error {
    ContextMismatch() : Error("context mismatch: operands use different (p, M)") {}
};

// a_p is not a p-adic unit, so there is no unit Hecke root.
struct NonOrdinary : Error {
    NonOrdinary() : Error("non-ordinary: a_p is divisible by p") {}
};

struct NotAUnit : Error {
    NotAUnit() : Error("not a unit: element has positive valuation") {}
};

struct NonResidue : Error {
    NonResidue() : Error("not a quadratic residue mod p") {}
};

// Layer elements from different layers (or contexts) were combined.
struct LayerMismatch : Error {
    LayerMismatch() : Error("layer mismatch: operands live in different layer algebras") {}
};

struct BottomLayer : Error {
    BottomLayer() : Error("cannot project below layer 0") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch() : Error("dimension mismatch") {}
};

struct SizeTooLarge : Error {
    SizeTooLarge() : Error("minor size exceeds matrix dimensions") {}
};

struct LevelOutOfRange : Error {
    LevelOutOfRange() : Error("tower level out of range") {}
};

struct InvalidTower : Error {
    InvalidTower() : Error("tower does not satisfy its defining relations") {}
};

struct HypothesisViolation : Error {
    explicit HypothesisViolation(const std::string& what) : Error("hypothesis violation: " + what) {}
};

struct BadReduction : Error {
    BadReduction() : Error("bad reduction: prime divides the conductor or discriminant") {}
};

struct RamifiedPrime : Error {
    explicit RamifiedPrime(long long q)
        : Error("prime " + std::to_string(q) + " divides both the conductor and the field discriminant") {}
};

struct NotSplit : Error {
    NotSplit() : Error("p does not split in the imaginary quadratic field") {}
};

struct NonIntegralNorm : Error {
    NonIntegralNorm() : Error("(D_K^2 + D_K)/4 is not an integer: D_K must be 3 mod 4") {}
};

// Malformed or inconsistent input files.
struct DataError : Error {
    using Error::Error;
};

} // namespace iwa
