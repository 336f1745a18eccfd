#pragma once

// Shared test scaffolding: seeded generators and oracles that are written
// from scratch here, independent of the library code they check.

#include "pencilforge/base_change.hpp"
#include "pencilforge/picard_lattice.hpp"
#include "pencilforge/pencils.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing {

using pencilforge::Integer;
using pencilforge::NumericalClass;
using pencilforge::Rational;

// ---------------------------------------------------------------- generators

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long long integer(long long lo, long long hi)
    {
        return std::uniform_int_distribution<long long>(lo, hi)(rng_);
    }

    bool coin() { return integer(0, 1) == 1; }

    NumericalClass numerical_class(long long bound)
    {
        NumericalClass c;
        c.d = integer(-bound, bound);
        for (auto& mi : c.m) {
            mi = integer(-bound, bound);
        }
        return c;
    }

    // Occasionally huge entries, to exercise the multiprecision paths.
    NumericalClass wide_class()
    {
        NumericalClass c = numerical_class(50);
        if (integer(0, 9) == 0) {
            c.d *= Integer("1000000000000000000000");
            c.m[static_cast<std::size_t>(integer(0, 8))] -= Integer("98765432109876543210987");
        }
        return c;
    }

    std::array<int, 3> triple()
    {
        std::array<int, 3> t{};
        std::vector<int> pool{1, 2, 3, 4, 5, 6, 7, 8, 9};
        for (int k = 0; k < 3; ++k) {
            auto pos = static_cast<std::size_t>(integer(0, static_cast<long long>(pool.size()) - 1));
            t[static_cast<std::size_t>(k)] = pool[pos];
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pos));
        }
        return t;
    }

    template <class T>
    const T& pick(const std::vector<T>& items)
    {
        return items[static_cast<std::size_t>(integer(0, static_cast<long long>(items.size()) - 1))];
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// ---------------------------------------------------------- lattice oracle

// Intersection form written out coordinate by coordinate.
inline Integer dot(const NumericalClass& a, const NumericalClass& b)
{
    Integer s = a.d * b.d;
    for (std::size_t i = 0; i < 9; ++i) {
        s -= a.m[i] * b.m[i];
    }
    return s;
}

// Closed-form plane-curve genus (d-1)(d-2)/2 - sum m(m-1)/2.
inline Integer plane_genus(const NumericalClass& a)
{
    Integer g = (a.d - 1) * (a.d - 2) / 2;
    for (const auto& mi : a.m) {
        g -= mi * (mi - 1) / 2;
    }
    return g;
}

// ---------------------------------------------------------- pencil oracle

struct PlainSpec {
    int level;
    std::vector<std::int64_t> mults;
    bool operator<(const PlainSpec& o) const
    {
        return level != o.level ? level < o.level : mults < o.mults;
    }
    bool operator==(const PlainSpec& o) const { return level == o.level && mults == o.mults; }
};

// The three counts in 64-bit arithmetic, straight from the formulas.
struct PlainCounts {
    std::int64_t dim, genus, degree;
};

inline PlainCounts plain_counts(bool plane, std::int64_t d, std::int64_t n, const std::vector<std::int64_t>& m,
                                std::int64_t extra = 0)
{
    std::int64_t s1 = 0, s2 = 0;
    for (auto x : m) {
        s1 += x;
        s2 += x * x;
    }
    if (plane) {
        return {(n + 1) * (n + 2) / 2 - (s2 + s1) / 2 - extra, (n - 1) * (n - 2) / 2 - (s2 - s1) / 2,
                3 * n - s1 - extra};
    }
    return {d * (n * n + n) / 2 + 1 - (s2 + s1) / 2 - extra, d * (n * n - n) / 2 + 1 - (s2 - s1) / 2,
            n * d - s1 - extra};
}

// Exhaustive search: every level and every orbit-constant assignment, no
// pruning.
inline std::vector<PlainSpec> brute_force_pencils(bool plane, int d, const std::vector<int>& orbit_sizes, int n_max)
{
    std::vector<PlainSpec> out;
    const std::size_t k = orbit_sizes.size();
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::int64_t> per_orbit(k, 0);
        while (true) {
            std::vector<std::int64_t> mults;
            for (std::size_t o = 0; o < k; ++o) {
                for (int r = 0; r < orbit_sizes[o]; ++r) {
                    mults.push_back(per_orbit[o]);
                }
            }
            PlainCounts c = plain_counts(plane, d, n, mults);
            if (c.dim >= 2 && c.genus <= 0 && c.degree == 2) {
                out.push_back({n, mults});
            }
            std::size_t pos = 0;
            while (pos < k && per_orbit[pos] == n_max + 1) {
                per_orbit[pos++] = 0;
            }
            if (pos == k) {
                break;
            }
            ++per_orbit[pos];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ------------------------------------------------------ base change oracle

// Euler number after a quadratic base change, from Riemann-Hurwitz for the
// topological Euler characteristic plus the -12 correction when a starred
// fibre is pulled back and untwisted.
inline int euler_after(const std::vector<std::pair<pencilforge::KodairaFibre, bool>>& places)
{
    int e = 0;
    for (const auto& [f, ramified] : places) {
        const int d = f.euler();
        e += ramified ? (f.reduced() ? 2 * d : 2 * d - 12) : 2 * d;
    }
    return e;
}

// Genus of the normalized fibre product of y^2 = (t-a)(t-b) and z^2 = (t-c)(t-d)
// by Riemann-Hurwitz for the degree-4 cover; -1 signals the reducible case.
inline int fibre_product_genus_rh(const std::set<std::string>& b1, const std::set<std::string>& b2)
{
    if (b1 == b2) {
        return -1;
    }
    std::set<std::string> all = b1;
    all.insert(b2.begin(), b2.end());
    // every branch value has two preimages of index 2 in the normalization
    const int ramification = 2 * static_cast<int>(all.size());
    const int two_g_minus_2 = 4 * (-2) + ramification;
    return two_g_minus_2 / 2 + 1;
}

// -------------------------------------------------- Cartan matrix oracle

// Bourbaki numbering (1-based), converted to 0-based adjacency.
inline std::vector<std::vector<long long>> cartan(char type, int rank)
{
    std::vector<std::vector<long long>> c(static_cast<std::size_t>(rank), std::vector<long long>(static_cast<std::size_t>(rank), 0));
    auto link = [&](int a, int b) {
        c[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = -1;
        c[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = -1;
    };
    for (int i = 0; i < rank; ++i) {
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    }
    if (type == 'A') {
        for (int i = 1; i < rank; ++i) {
            link(i, i + 1);
        }
    } else if (type == 'D') {
        for (int i = 1; i < rank - 1; ++i) {
            link(i, i + 1);
        }
        link(rank - 2, rank);
    } else if (type == 'E') {
        link(1, 3);
        link(2, 4);
        for (int i = 3; i < rank; ++i) {
            link(i, i + 1);
        }
    }
    return c;
}

// Fraction-free (Bareiss) determinant.
inline Integer bareiss_det(std::vector<std::vector<Integer>> a)
{
    const std::size_t n = a.size();
    if (n == 0) {
        return 1;
    }
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) {
                ++r;
            }
            if (r == n) {
                return 0;
            }
            std::swap(a[r], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Inverse through the adjugate: (C^-1)_ij = (-1)^(i+j) det(minor_ji) / det C.
inline std::vector<std::vector<Rational>> adjugate_inverse(const std::vector<std::vector<long long>>& c)
{
    const std::size_t n = c.size();
    std::vector<std::vector<Integer>> big(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            big[i][j] = c[i][j];
        }
    }
    const Integer det = bareiss_det(big);
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Integer>> minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) {
                    continue;
                }
                std::vector<Integer> row;
                for (std::size_t s = 0; s < n; ++s) {
                    if (s != i) {
                        row.push_back(big[r][s]);
                    }
                }
                minor.push_back(std::move(row));
            }
            Integer cof = bareiss_det(minor);
            if ((i + j) % 2 == 1) {
                cof = -cof;
            }
            inv[i][j] = Rational(cof, det);
        }
    }
    return inv;
}

struct RootSystemOracle {
    char type;
    int rank;
    // component label (1..m_v-1) -> Bourbaki node (1..rank)
    std::map<int, int> to_bourbaki;
};

// Label correspondence read off the component conventions in heights.hpp.
inline RootSystemOracle root_system_of(const pencilforge::KodairaFibre& f)
{
    using K = pencilforge::KodairaFibre::Kind;
    RootSystemOracle o{'A', 0, {}};
    switch (f.kind) {
    case K::I:
    case K::III:
    case K::IV: {
        const int r = f.components() - 1;
        o = {'A', r, {}};
        for (int i = 1; i <= r; ++i) {
            o.to_bourbaki[i] = i;
        }
        break;
    }
    case K::IStar: {
        const int r = f.n + 4;
        o = {'D', r, {{1, 1}, {2, r - 1}, {3, r}}};
        for (int c = 4; c <= f.n + 4; ++c) {
            o.to_bourbaki[c] = c - 2;
        }
        break;
    }
    case K::IVStar:
        o = {'E', 6, {{1, 1}, {3, 3}, {5, 4}, {4, 5}, {2, 6}, {6, 2}}};
        break;
    case K::IIIStar:
        o = {'E', 7, {{2, 1}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {1, 7}, {7, 2}}};
        break;
    case K::IIStar:
        o = {'E', 8, {{7, 1}, {6, 3}, {5, 4}, {4, 5}, {3, 6}, {2, 7}, {1, 8}, {8, 2}}};
        break;
    case K::II:
        break;
    }
    return o;
}

} // namespace testing
