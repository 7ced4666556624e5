#pragma once

#include <atomic>
#include <stdexcept>
#include <string>

namespace canalgeo {

// Global geometric tolerance tau used by orientation/containment predicates.
// All inputs are O(1)-O(1e6) magnitudes; predicates scale tau by the local
// feature size where that matters.
double tolerance() noexcept;

// Intended for process startup (CLI reads CANALGEO_TOL). Library code never
// mutates it.
void set_tolerance(double tau) noexcept;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input whose affine dimension is too low for the requested operation.
struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& what) : Error(what) {}
};

// A configured size cap would be exceeded (e.g. Minkowski vertex products).
struct ScaleLimit : Error {
    explicit ScaleLimit(const std::string& what) : Error(what) {}
};

// A documented precondition does not hold for the given inputs.
struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

// A witness body does not project onto the required base body.
struct ProjectionMismatch : Error {
    explicit ProjectionMismatch(const std::string& what) : Error(what) {}
};

}  // namespace canalgeo
