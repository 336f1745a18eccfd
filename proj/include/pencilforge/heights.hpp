#pragma once

// Height pairing on the Mordell-Weil lattice of an elliptic surface,
//
//   <P,Q> = chi + (P.O) + (Q.O) - (P.Q) - sum_v contr_v(P,Q),
//
// with local correction contr_v(P,Q) = -(A_v^-1)_{ij} when P meets component
// i and Q meets component j of the reducible fibre at v (0 if either meets
// the identity component). A_v is the intersection matrix of the
// non-identity components, built from the fibre's dual graph and inverted
// exactly; no table is transcribed.
//
// Component labels (Theta_0 is always the identity component):
//
//   I_n, n >= 2   cycle Theta_0 - Theta_1 - ... - Theta_{n-1} - Theta_0
//   III           Theta_0, Theta_1 (meeting in a double point)
//   IV            Theta_0, Theta_1, Theta_2 (concurrent lines)
//   I_n*          simple Theta_0, Theta_1 at the near end, simple Theta_2,
//                 Theta_3 at the far end, double chain Theta_4 .. Theta_{n+4};
//                 Theta_0, Theta_1 meet Theta_4 and Theta_2, Theta_3 meet
//                 Theta_{n+4}
//   IV*           centre Theta_5 with arms Theta_0-Theta_6, Theta_1-Theta_3,
//                 Theta_2-Theta_4 (simple ones at the tips: 0, 1, 2)
//   III*          chain Theta_0-Theta_2-Theta_3-Theta_4-Theta_5-Theta_6-Theta_1
//                 with Theta_7 attached to Theta_4
//   II*           chain Theta_0-Theta_1-...-Theta_7 with Theta_8 attached to
//                 Theta_5
//
// Irreducible fibres (I_0, I_1, II) have only Theta_0 and contribute 0.

#include "pencilforge/arith.hpp"
#include "pencilforge/base_change.hpp"
#include "pencilforge/picard_lattice.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pencilforge {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Edges of the dual graph of the fibre, labelled as above. Components of
/// I_2 and III meet twice, reported as a single edge of weight 2.
struct DualGraph {
    int components = 1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> weights;
};
DualGraph dual_graph(const KodairaFibre& f);

/// Exact inverse by Gauss-Jordan elimination. Throws std::domain_error for a
/// singular matrix.
Matrix<Rational> invert(const Matrix<Rational>& a);

class ReducibleFibreData {
public:
    explicit ReducibleFibreData(const KodairaFibre& f);

    const KodairaFibre& fibre() const { return fibre_; }
    /// A_v: (m_v-1) x (m_v-1) intersection matrix of Theta_1..Theta_{m_v-1}.
    const Matrix<Integer>& intersection_matrix() const { return intersection_; }
    /// -A_v^-1, same indexing shifted by one (entry [i-1][j-1] is contr(i,j)).
    const Matrix<Rational>& contribution_matrix() const { return contribution_; }

private:
    KodairaFibre fibre_;
    Matrix<Integer> intersection_;
    Matrix<Rational> contribution_;
};

/// 0 if i == 0 or j == 0, else -(A_v^-1)_{ij}. Throws std::invalid_argument
/// for indices outside 0..m_v-1.
Rational contribution(const ReducibleFibreData& data, int i, int j);

struct SectionIntersections {
    Integer po = 0;
    Integer qo = 0;
    Integer pq = 0;
    /// Per reducible fibre (aligned with the fibre list), the components met
    /// by P and by Q.
    std::vector<std::pair<int, int>> components;
};

/// The caller supplies (P.Q) = -chi when P = Q.
Rational height_pairing(const SectionIntersections& data, const Integer& chi,
                        const std::vector<ReducibleFibreData>& fibres);

/// Prescribed intersection number with a fixed class.
struct IntersectionConstraint {
    NumericalClass with;
    Integer value;
};

inline constexpr long kMaxSectionDegree = 10000;

/// Every class c with |d| <= d_max, c.c = -1, c.F = 1 and all constraints
/// met, in lexicographic order of (d, m1, ..., m9). d_max stands in for a
/// height bound on the sections of interest.
std::vector<NumericalClass> enumerate_section_classes(const std::vector<IntersectionConstraint>& constraints,
                                                     long d_max);

/// deg [n]^-1(C0) = n^2 for a section C0. Throws for n < 1.
Integer multiplication_pullback_degree(const Integer& n);

struct KummerInputs {
    Integer h;      // degree C.F of the curves in the family
    Rational f1;    // Kummer constant: |Gal| >= f1 * m
    Rational c_e;   // torsion growth: [k(P):k] >= c_e * m^alpha
    Rational alpha;
};

/// Throws std::invalid_argument unless every input is strictly positive.
void validate(const KummerInputs& in);

/// floor(h / f1): largest m allowed by h >= f1 * m.
Integer kummer_index_bound(const KummerInputs& in);
/// Largest t >= 0 with c_e * t^alpha <= h, found by search.
Integer torsion_order_bound(const KummerInputs& in);
/// n0 = kummer_index_bound * torsion_order_bound.
Integer kummer_bound(const KummerInputs& in);

} // namespace pencilforge
