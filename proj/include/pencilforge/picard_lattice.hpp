#pragma once

// Intersection theory on Pic of the plane blown up in nine points.
//
// A class is written (d; m1,...,m9) and stands for d*L0 - sum(mi*Li), where
// L0 is the pull-back of a line and Li the exceptional curve over the i-th
// point. With this sign convention an effective curve carries its point
// multiplicities as non-negative mi, and the exceptional curve Ej = Lj is
// (0; 0,...,-1,...,0). The form has signature (1,9):
//
//     a.b = a.d*b.d - sum(a.mi*b.mi).
//
// No effectivity test is attempted anywhere; every operation is pure lattice
// arithmetic.

#include "pencilforge/arith.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>

namespace pencilforge {

inline constexpr std::size_t kBlownUpPoints = 9;

struct NumericalClass {
    Integer d = 0;
    std::array<Integer, kBlownUpPoints> m{};

    NumericalClass() = default;
    NumericalClass(Integer degree, const std::array<Integer, kBlownUpPoints>& mults);

    /// Ten integers (d, m1..m9). Throws std::invalid_argument on any other length.
    static NumericalClass from_list(std::initializer_list<long long> values);

    /// Exceptional curve over the j-th point, j in 1..9.
    static NumericalClass exceptional(int j);
    /// Strict transform of a general line through the j-th point, j in 1..9.
    static NumericalClass line_through(int j);
    /// Pull-back of a line, (1; 0,...,0).
    static NumericalClass line();

    /// 1-based access to the multiplicities.
    const Integer& mult(int i) const;
    Integer& mult(int i);

    NumericalClass& operator+=(const NumericalClass& o);
    NumericalClass& operator-=(const NumericalClass& o);
    friend NumericalClass operator+(NumericalClass a, const NumericalClass& b) { return a += b; }
    friend NumericalClass operator-(NumericalClass a, const NumericalClass& b) { return a -= b; }
    friend NumericalClass operator*(const Integer& k, NumericalClass a);
    friend NumericalClass operator-(NumericalClass a);

    friend bool operator==(const NumericalClass& a, const NumericalClass& b);
    friend bool operator!=(const NumericalClass& a, const NumericalClass& b) { return !(a == b); }
    /// Lexicographic on (d, m1, ..., m9).
    friend bool operator<(const NumericalClass& a, const NumericalClass& b);

    std::string str() const;
};

/// K = (-3; -1,...,-1).
NumericalClass canonical_class();
/// F = -K = (3; 1,...,1), the class of a fibre.
NumericalClass fibre_class();

Integer intersect(const NumericalClass& a, const NumericalClass& b);
Integer self_intersection(const NumericalClass& a);

/// (a.a + a.K)/2 + 1. For an effective plane curve of degree d with
/// multiplicities mi this is (d-1)(d-2)/2 - sum mi(mi-1)/2, the upper bound
/// for the geometric genus.
Integer arithmetic_genus(const NumericalClass& a);

/// a.F = 3d - sum(mi): the degree of the fibration restricted to a curve in
/// the class.
Integer degree_to_base(const NumericalClass& a);

/// Geometric Mordell-Weil rank bound s-1 for a cubic pencil with s distinct
/// base points. Throws std::invalid_argument unless 1 <= s <= 9.
int mw_rank_bound(int distinct_base_points);

/// True iff the Picard rank over k is at least 5, which forces a k-minimal
/// model of degree >= 3 and hence k-unirationality. Throws
/// std::invalid_argument unless 1 <= rank <= 10.
bool unirationality_check(int pic_rank_over_k);

} // namespace pencilforge
