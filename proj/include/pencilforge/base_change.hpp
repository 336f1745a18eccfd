#pragma once

// Kodaira fibre bookkeeping under a quadratic base change C -> B of genus-0
// curves. Such a cover has exactly two branch points.
//
// Symbols transform as follows when the cover ramifies over the place:
//
//   reduced     I_n -> I_2n    II -> IV    III -> I_0*   IV -> IV*
//   non-reduced I_n* -> I_2n   IV* -> IV   III* -> I_0*  II* -> IV*
//
// so the local Euler number goes d -> 2d for reduced fibres and
// d -> 2d - 12 for starred ones (after passing to the relatively minimal
// model). An unramified place splits into two places with the same fibre.
// A smooth fibre (I_0) stays smooth either way.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pencilforge {

struct KodairaFibre {
    enum class Kind { I, II, III, IV, IStar, IVStar, IIIStar, IIStar };

    Kind kind = Kind::I;
    int n = 0; // only meaningful for I_n and I_n*

    static KodairaFibre smooth() { return {Kind::I, 0}; }
    static KodairaFibre i(int n);
    static KodairaFibre i_star(int n);

    /// "I0", "I5", "II", "III", "IV", "I0*", "I3*", "IV*", "III*", "II*".
    static KodairaFibre parse(std::string_view symbol);
    std::string symbol() const;

    /// Local Euler number d_v.
    int euler() const;
    /// False exactly for the starred types.
    bool reduced() const;
    /// Number of irreducible components m_v.
    int components() const;

    friend bool operator==(const KodairaFibre&, const KodairaFibre&) = default;
};

struct Place {
    std::string id;
    KodairaFibre fibre;

    friend bool operator==(const Place&, const Place&) = default;
};

/// Places of B carrying a fibre; places not listed carry smooth fibres.
struct FibreConfiguration {
    std::vector<Place> places;

    /// Places named v0, v1, ... in the order given.
    static FibreConfiguration from_counts(const std::vector<std::pair<KodairaFibre, int>>& counts);

    const Place* find(std::string_view id) const;

    friend bool operator==(const FibreConfiguration&, const FibreConfiguration&) = default;
};

/// Two distinct places of B.
struct BranchLocus {
    std::string first;
    std::string second;

    BranchLocus(std::string a, std::string b);
    bool contains(std::string_view id) const { return first == id || second == id; }
};

std::vector<KodairaFibre> transform_fibre(const KodairaFibre& f, bool ramified);

int euler_total(const FibreConfiguration& config);

/// Fibres of the base-changed surface. A ramified place keeps its id; an
/// unramified one becomes "<id>'" and "<id>''".
FibreConfiguration base_change(const FibreConfiguration& config, const BranchLocus& branch);

enum class SurfaceClass { Rational, K3, TrivialProduct };
std::string to_string(SurfaceClass c);

/// Rational (Euler total 12 after the change), K3 (24), or TrivialProduct
/// when both branch points sit under I_0* fibres. Throws
/// std::invalid_argument unless the configuration has Euler total 12 and
/// lists every place at most once.
SurfaceClass classify_quadratic_base_change(const FibreConfiguration& config, const BranchLocus& branch);

/// Normalized fibre product of two double covers of B, judged from how many
/// branch points they share: none -> genus 1, one -> genus 0, both -> the
/// product splits into two rational components.
enum class FibreProductGenus { Genus0, Genus1, Split };
std::string to_string(FibreProductGenus g);
FibreProductGenus fibre_product_genus(const BranchLocus& a, const BranchLocus& b);

} // namespace pencilforge
