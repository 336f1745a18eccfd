#include "pencilforge/heights.hpp"

#include <limits>
#include <stdexcept>

namespace pencilforge {

DualGraph dual_graph(const KodairaFibre& f)
{
    using K = KodairaFibre::Kind;
    DualGraph g;
    g.components = f.components();
    auto edge = [&](int a, int b, int w = 1) {
        g.edges.emplace_back(a, b);
        g.weights.push_back(w);
    };
    auto chain = [&](std::initializer_list<int> nodes) {
        auto it = nodes.begin();
        for (int prev = *it++; it != nodes.end(); prev = *it++) {
            edge(prev, *it);
        }
    };

    switch (f.kind) {
    case K::I:
        if (f.n == 2) {
            edge(0, 1, 2);
        } else if (f.n >= 3) {
            for (int i = 0; i < f.n; ++i) {
                edge(i, (i + 1) % f.n);
            }
        }
        break;
    case K::II:
        break;
    case K::III:
        edge(0, 1, 2);
        break;
    case K::IV:
        chain({0, 1, 2});
        edge(2, 0);
        break;
    case K::IStar: {
        const int near = 4;
        const int far = f.n + 4;
        for (int c = near; c < far; ++c) {
            edge(c, c + 1);
        }
        edge(0, near);
        edge(1, near);
        edge(2, far);
        edge(3, far);
        break;
    }
    case K::IVStar:
        chain({0, 6, 5});
        chain({1, 3, 5});
        chain({2, 4, 5});
        break;
    case K::IIIStar:
        chain({0, 2, 3, 4, 5, 6, 1});
        edge(7, 4);
        break;
    case K::IIStar:
        chain({0, 1, 2, 3, 4, 5, 6, 7});
        edge(8, 5);
        break;
    }
    return g;
}

Matrix<Rational> invert(const Matrix<Rational>& a)
{
    const std::size_t n = a.size();
    Matrix<Rational> work = a;
    Matrix<Rational> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (work[i].size() != n) {
            throw std::invalid_argument("matrix is not square");
        }
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            throw std::domain_error("singular matrix");
        }
        std::swap(work[pivot], work[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational p = work[col][col];
        for (std::size_t k = 0; k < n; ++k) {
            work[col][k] /= p;
            inv[col][k] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || work[r][col] == 0) {
                continue;
            }
            const Rational factor = work[r][col];
            for (std::size_t k = 0; k < n; ++k) {
                work[r][k] -= factor * work[col][k];
                inv[r][k] -= factor * inv[col][k];
            }
        }
    }
    return inv;
}

ReducibleFibreData::ReducibleFibreData(const KodairaFibre& f) : fibre_(f)
{
    const DualGraph g = dual_graph(f);
    const auto size = static_cast<std::size_t>(g.components - 1);
    intersection_.assign(size, std::vector<Integer>(size, Integer(0)));
    for (std::size_t i = 0; i < size; ++i) {
        intersection_[i][i] = -2;
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        if (a == 0 || b == 0) {
            continue;
        }
        intersection_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] += g.weights[e];
        intersection_[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] += g.weights[e];
    }

    Matrix<Rational> a(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            a[i][j] = Rational(intersection_[i][j]);
        }
    }
    contribution_ = invert(a);
    for (auto& row : contribution_) {
        for (auto& x : row) {
            x = -x;
        }
    }
}

Rational contribution(const ReducibleFibreData& data, int i, int j)
{
    const int m = data.fibre().components();
    if (i < 0 || j < 0 || i >= m || j >= m) {
        throw std::invalid_argument("component index outside 0.." + std::to_string(m - 1) + " for "
                                    + data.fibre().symbol());
    }
    if (i == 0 || j == 0) {
        return 0;
    }
    return data.contribution_matrix()[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

Rational height_pairing(const SectionIntersections& data, const Integer& chi,
                        const std::vector<ReducibleFibreData>& fibres)
{
    if (chi < 1) {
        throw std::invalid_argument("chi must be positive");
    }
    if (data.components.size() != fibres.size()) {
        throw std::invalid_argument("component data given for " + std::to_string(data.components.size())
                                    + " fibres, expected " + std::to_string(fibres.size()));
    }
    Rational h = Rational(chi + data.po + data.qo - data.pq);
    for (std::size_t v = 0; v < fibres.size(); ++v) {
        h -= contribution(fibres[v], data.components[v].first, data.components[v].second);
    }
    return h;
}

namespace {

// Walks m1..m9 in increasing order so that output comes out lexicographic.
class SectionWalk {
public:
    SectionWalk(long d, const std::vector<IntersectionConstraint>& constraints, std::vector<NumericalClass>& out)
        : d_(d), constraints_(constraints), out_(out)
    {
    }

    void run() { descend(0, 3 * d_ - 1, d_ * d_ + 1); }

private:
    // sum / squares still to be distributed over entries k..8
    void descend(std::size_t k, long sum, long squares)
    {
        const long left = static_cast<long>(kBlownUpPoints - k);
        if (left == 0) {
            if (sum == 0 && squares == 0) {
                emit();
            }
            return;
        }
        // m^2 = m mod 2, and Cauchy-Schwarz: sum^2 <= left * squares
        if (squares < 0 || ((sum - squares) & 1) != 0 || sum * sum > left * squares) {
            return;
        }
        long bound = 0;
        while ((bound + 1) * (bound + 1) <= squares) {
            ++bound;
        }
        for (long m = -bound; m <= bound; ++m) {
            m_[k] = m;
            descend(k + 1, sum - m, squares - m * m);
        }
    }

    void emit()
    {
        NumericalClass c;
        c.d = d_;
        for (std::size_t i = 0; i < kBlownUpPoints; ++i) {
            c.m[i] = m_[i];
        }
        for (const auto& con : constraints_) {
            if (intersect(c, con.with) != con.value) {
                return;
            }
        }
        out_.push_back(std::move(c));
    }

    long d_;
    const std::vector<IntersectionConstraint>& constraints_;
    std::vector<NumericalClass>& out_;
    std::array<long, kBlownUpPoints> m_{};
};

} // namespace

std::vector<NumericalClass> enumerate_section_classes(const std::vector<IntersectionConstraint>& constraints,
                                                     long d_max)
{
    if (d_max < 0 || d_max > kMaxSectionDegree) {
        throw std::invalid_argument("d_max must lie in 0.." + std::to_string(kMaxSectionDegree));
    }
    std::vector<NumericalClass> out;
    for (long d = -d_max; d <= d_max; ++d) {
        SectionWalk(d, constraints, out).run();
    }
    return out;
}

Integer multiplication_pullback_degree(const Integer& n)
{
    if (n < 1) {
        throw std::invalid_argument("multiplication degree n must be >= 1");
    }
    return n * n;
}

void validate(const KummerInputs& in)
{
    if (in.h <= 0 || in.f1 <= 0 || in.c_e <= 0 || in.alpha <= 0) {
        throw std::invalid_argument("Kummer inputs h, f1, c_E, alpha must all be positive");
    }
}

Integer kummer_index_bound(const KummerInputs& in)
{
    validate(in);
    return floor(Rational(in.h) / in.f1);
}

Integer torsion_order_bound(const KummerInputs& in)
{
    validate(in);
    // c_e * t^(p/q) <= h  <=>  t^p <= x^q  with x = h / c_e
    const Rational x = Rational(in.h) / in.c_e;
    const Integer p = numerator(in.alpha);
    const Integer q = denominator(in.alpha);
    constexpr unsigned kMaxExponent = 4096;
    if (p > kMaxExponent || q > kMaxExponent) {
        throw std::invalid_argument("alpha numerator and denominator must not exceed "
                                    + std::to_string(kMaxExponent));
    }
    const auto pe = p.convert_to<unsigned>();
    const auto qe = q.convert_to<unsigned>();
    const Integer lhs_scale = boost::multiprecision::pow(denominator(x), qe);
    const Integer rhs = boost::multiprecision::pow(numerator(x), qe);
    auto fits = [&](const Integer& t) { return boost::multiprecision::pow(t, pe) * lhs_scale <= rhs; };

    Integer hi = 1;
    while (fits(hi)) {
        hi *= 2;
    }
    Integer lo = hi / 2; // fits(lo) holds (fits(0) trivially)
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (fits(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

Integer kummer_bound(const KummerInputs& in)
{
    return kummer_index_bound(in) * torsion_order_bound(in);
}

} // namespace pencilforge
