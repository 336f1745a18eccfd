#pragma once

// Linear pencils of rational curves mapping 2:1 onto the base.
//
// A pencil lives on a k-minimal model X of the elliptic surface: either the
// plane (anticanonical degree 9, nine blown-up points) or a del Pezzo surface
// of degree d (d blown-up points). It is cut out inside |O(n)| (plane) or
// |-nK_X| (del Pezzo) by asking for multiplicity >= n_i at the blown-up
// points, plus a number of extra linear conditions.
//
// Extra conditions model tangency to the common tangent line of the cubic
// pencil at a base point, i.e. passing through an infinitely near base
// point. Each one costs a dimension and absorbs one intersection with the
// fibres, so it is subtracted from both the dimension count and the degree
// to the base. It does not change the genus bound.
//
// Point layout. Multiplicity vectors are indexed by blown-up points laid out
// orbit by orbit: the designated rational orbit (the contracted zero section)
// occupies slot 0, then every other orbit in the order given.

#include "pencilforge/picard_lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pencilforge {

struct Model {
    enum class Kind { Plane, DelPezzo };

    Kind kind = Kind::Plane;
    int degree = 9; // K_X^2

    static Model plane() { return {}; }
    /// Throws std::invalid_argument unless 1 <= d <= 8.
    static Model del_pezzo(int d);
    /// "P2" or "dP1".."dP8".
    static Model parse(std::string_view name);

    bool is_plane() const { return kind == Kind::Plane; }
    /// Number of blown-up points: 9 for the plane, d for a del Pezzo surface.
    int point_count() const { return degree; }
    std::string name() const;

    friend bool operator==(const Model&, const Model&) = default;
};

struct OrbitStructure {
    std::vector<int> orbit_sizes;
    std::size_t rational_orbit_index = 0;

    int total() const;
    /// Orbit index of every blown-up point, in slot order (see file comment).
    std::vector<std::size_t> point_layout() const;

    friend bool operator==(const OrbitStructure&, const OrbitStructure&) = default;
};

/// Throws std::invalid_argument if sizes are non-positive, the designated
/// orbit is missing or not of size 1.
void validate_orbits(const OrbitStructure& orbits);

struct PencilSpec {
    Model model;
    std::int64_t level = 1;
    std::vector<std::int64_t> mults;
    std::int64_t extra_conditions = 0;

    friend bool operator==(const PencilSpec&, const PencilSpec&) = default;
};

/// level >= 1, mults non-negative and one per blown-up point, extra >= 0.
void validate_spec(const PencilSpec& spec);

/// Lower bound for dim H^0 of the linear system, unclamped. >= 2 means the
/// system contains at least a pencil.
///   plane:    (n+1)(n+2)/2 - sum n_i(n_i+1)/2 - extra
///   del Pezzo: d(n^2+n)/2 + 1 - sum (n_i^2+n_i)/2 - extra
Integer dim_lower_bound(const PencilSpec& spec);

/// Upper bound for the geometric genus of a member.
///   plane:    (n-1)(n-2)/2 - sum n_i(n_i-1)/2
///   del Pezzo: d(n^2-n)/2 + 1 - sum (n_i^2-n_i)/2
Integer genus_upper_bound(const PencilSpec& spec);

/// Degree of the fibration restricted to the strict transform of a member.
///   plane: 3n - sum n_i - extra;  del Pezzo: nd - sum n_i - extra
Integer degree_to_base_spec(const PencilSpec& spec);

struct PencilReport {
    Integer dim_lower_bound;
    Integer genus_upper_bound;
    Integer degree_to_base;
    bool is_valid_pair_member = false;

    friend bool operator==(const PencilReport&, const PencilReport&) = default;
};

PencilReport verify(const PencilSpec& spec);

/// Class of the strict transform on the rational elliptic surface. The plane
/// gives (n; n_1..n_9). A del Pezzo surface of degree d is the plane blown up
/// in 9-d further points, where -nK_X pulls back to (3n; n,...,n), so the
/// class is (3n; n x (9-d), n_1..n_d). Throws std::invalid_argument when
/// extra_conditions > 0: tangencies have no slot of their own.
NumericalClass to_numerical_class(const PencilSpec& spec);

/// Base-point multiplicities (m1, m2, m3) of a cubic pencil whose only base
/// points are a rational point p1 and a conjugate pair p2, p3.
enum class TangencyPattern { M1_4_4, M3_3_3, M5_2_2, M7_1_1 };

std::string to_string(TangencyPattern p);
/// "1,4,4", "3,3,3", "5,2,2", "7,1,1"
TangencyPattern parse_tangency_pattern(std::string_view text);

struct Unsupported {
    std::string reason;
};

/// Rewrites a degree-6 orbit configuration by blowing up one Galois orbit,
/// which lands on a del Pezzo surface of lower degree.
struct OrbitRewrite {
    int target_degree = 0;
    std::size_t blown_up_orbit = 0; // index into the input orbit_sizes
    OrbitStructure remaining;
};

/// Degree-6 orbit structures only (sizes summing to 6).
///   a conjugate pair and a conjugate triple -> blow up the pair, degree 4;
///   a second rational point -> blow it up, degree 5;
///   a conjugate quintuple -> Unsupported.
/// Throws std::invalid_argument for a structure that does not sum to 6.
std::variant<OrbitRewrite, Unsupported> reduce_orbit_config(const OrbitStructure& orbits);

struct PencilPair {
    std::string construction; // short label of the construction used
    Model model;              // model the specs live on (after any rewrite)
    OrbitStructure orbits;    // orbit structure on that model
    std::optional<OrbitRewrite> rewrite;
    PencilSpec first;
    PencilSpec second;
};

using ConstructionResult = std::variant<PencilPair, Unsupported>;

/// Builds the two pencils used for a double quadratic base change.
///
/// Plane. The first pencil is always lines through p1. The second depends on
/// the smallest orbit other than p1:
///   1: lines through a second rational point
///   2: with no other base point, conics through the pair with the pencil's
///      tangent conditions (needs `pattern`); otherwise the construction of
///      the smallest remaining orbit is used (2 or 4 -> conics through four
///      points, 3 -> conics through p1 and the triple, 5, 6 as below)
///   3: conics through p1 and the triple
///   4: conics through the four points
///   5: cubics through p1..p6, singular at p1
///   6: quintics through p1, singular at the six points
///   7: quartics through the seven points, triple at p1
///   8: curves of degree 17 through p1 with multiplicity 6 at the eight points
/// When several orbits tie for "smallest remaining", the first in input order
/// is used. With nine points a quintuple or septuple is never the smallest;
/// `second_orbit` names the orbit to build on instead, for when a smaller one
/// is not in general position with p1. A bare pair is padded to nine slots
/// with zeros (infinitely near points).
///
/// del Pezzo degree 8, 5, 4: fixed multiplicities at the rational point and
/// a common multiplicity on all other points (hence Galois invariant for any
/// finer orbit split). Degree 6 goes through reduce_orbit_config. Degrees 1,
/// 2, 3 and 7 are Unsupported.
///
/// Throws std::invalid_argument for inconsistent orbit data.
ConstructionResult construct_pencils(const Model& model, const OrbitStructure& orbits,
                                     std::optional<TangencyPattern> pattern = std::nullopt,
                                     std::optional<std::size_t> second_orbit = std::nullopt);

/// All specs with level <= n_max and multiplicities constant on each orbit,
/// each in [0, n_max+1], with dim_lower_bound >= 2, genus_upper_bound <= 0 and
/// degree_to_base_spec == 2. No extra conditions. Sorted by (level, mults).
/// Orbit sizes must sum to the model's point count.
std::vector<PencilSpec> search_pencils(const Model& model, const OrbitStructure& orbits,
                                       int n_max);

} // namespace pencilforge
