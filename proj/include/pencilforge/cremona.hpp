#pragma once

// Quadratic Cremona transformations acting on numerical classes, and a greedy
// reduction that certifies a class is Cremona-equivalent to a line.
//
// The certificate is purely numerical. It says nothing about whether the
// blown-up points are in general position (no three on a line, no six on a
// conic); a configuration in special position can make a certified class
// reducible, and no numerical test can see that.

#include "pencilforge/picard_lattice.hpp"

#include <array>
#include <optional>
#include <vector>

namespace pencilforge {

/// Three pairwise distinct point indices in 1..9.
using IndexTriple = std::array<int, 3>;

inline constexpr int kDefaultMaxCremonaSteps = 64;

/// Throws std::invalid_argument for out-of-range or repeated indices.
void validate_triple(const IndexTriple& idx);

/// d' = 2d - mi - mj - mk, mi' = d - mj - mk (and cyclically), other
/// multiplicities unchanged. An involution and an isometry fixing K.
NumericalClass quadratic_transform(const NumericalClass& a, const IndexTriple& idx);

struct CremonaStep {
    IndexTriple indices{};
    NumericalClass before;
    NumericalClass after;
};

struct ReductionCertificate {
    std::vector<CremonaStep> chain;
    NumericalClass start;
    NumericalClass terminal;
    bool success = false;
};

/// True for (1; m) with every mi in {0,1} and at most two of them equal to 1,
/// i.e. a line through at most two of the points. A class of square 0 and
/// fibre degree 2 can only land on (1; ei).
bool is_line_class(const NumericalClass& a);

/// Repeatedly applies the transform at the three largest multiplicities
/// (ties broken towards lower indices) while this strictly lowers d. Succeeds
/// when a line class is reached within max_steps steps. On failure the
/// partial chain is kept and success is false.
ReductionCertificate reduce_to_line(const NumericalClass& a, int max_steps = kDefaultMaxCremonaSteps);

/// Re-applies every step and checks the chain links up. Used to audit
/// certificates that come back in from JSON.
bool replay(const ReductionCertificate& cert);

/// reduce_to_line(a, max_steps).success
bool is_connected_class(const NumericalClass& a, int max_steps = kDefaultMaxCremonaSteps);

} // namespace pencilforge
