#include "pencilforge/picard_lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace pencilforge {

namespace {

void check_point_index(int i)
{
    if (i < 1 || i > static_cast<int>(kBlownUpPoints)) {
        throw std::invalid_argument("point index " + std::to_string(i) + " outside 1..9");
    }
}

} // namespace

NumericalClass::NumericalClass(Integer degree, const std::array<Integer, kBlownUpPoints>& mults)
    : d(std::move(degree)), m(mults)
{
}

NumericalClass NumericalClass::from_list(std::initializer_list<long long> values)
{
    if (values.size() != kBlownUpPoints + 1) {
        throw std::invalid_argument("a numerical class has exactly 10 coordinates, got "
                                    + std::to_string(values.size()));
    }
    NumericalClass c;
    auto it = values.begin();
    c.d = *it++;
    for (auto& mi : c.m) {
        mi = *it++;
    }
    return c;
}

NumericalClass NumericalClass::exceptional(int j)
{
    check_point_index(j);
    NumericalClass c;
    c.mult(j) = -1;
    return c;
}

NumericalClass NumericalClass::line_through(int j)
{
    check_point_index(j);
    NumericalClass c;
    c.d = 1;
    c.mult(j) = 1;
    return c;
}

NumericalClass NumericalClass::line()
{
    NumericalClass c;
    c.d = 1;
    return c;
}

const Integer& NumericalClass::mult(int i) const
{
    check_point_index(i);
    return m[static_cast<std::size_t>(i - 1)];
}

Integer& NumericalClass::mult(int i)
{
    check_point_index(i);
    return m[static_cast<std::size_t>(i - 1)];
}

NumericalClass& NumericalClass::operator+=(const NumericalClass& o)
{
    d += o.d;
    for (std::size_t i = 0; i < kBlownUpPoints; ++i) {
        m[i] += o.m[i];
    }
    return *this;
}

NumericalClass& NumericalClass::operator-=(const NumericalClass& o)
{
    d -= o.d;
    for (std::size_t i = 0; i < kBlownUpPoints; ++i) {
        m[i] -= o.m[i];
    }
    return *this;
}

NumericalClass operator*(const Integer& k, NumericalClass a)
{
    a.d *= k;
    for (auto& mi : a.m) {
        mi *= k;
    }
    return a;
}

NumericalClass operator-(NumericalClass a)
{
    return Integer(-1) * std::move(a);
}

bool operator==(const NumericalClass& a, const NumericalClass& b)
{
    return a.d == b.d && a.m == b.m;
}

bool operator<(const NumericalClass& a, const NumericalClass& b)
{
    if (a.d != b.d) {
        return a.d < b.d;
    }
    return std::lexicographical_compare(a.m.begin(), a.m.end(), b.m.begin(), b.m.end());
}

std::string NumericalClass::str() const
{
    std::string out = "(" + d.str() + ";";
    for (std::size_t i = 0; i < kBlownUpPoints; ++i) {
        out += (i == 0 ? " " : ", ") + m[i].str();
    }
    return out + ")";
}

NumericalClass canonical_class()
{
    return NumericalClass::from_list({-3, -1, -1, -1, -1, -1, -1, -1, -1, -1});
}

NumericalClass fibre_class()
{
    return NumericalClass::from_list({3, 1, 1, 1, 1, 1, 1, 1, 1, 1});
}

Integer intersect(const NumericalClass& a, const NumericalClass& b)
{
    Integer acc = a.d * b.d;
    for (std::size_t i = 0; i < kBlownUpPoints; ++i) {
        acc -= a.m[i] * b.m[i];
    }
    return acc;
}

Integer self_intersection(const NumericalClass& a)
{
    return intersect(a, a);
}

Integer arithmetic_genus(const NumericalClass& a)
{
    Integer twice = intersect(a, a) + intersect(a, canonical_class());
    // d(d-3) - sum m(m-1) is always even.
    if ((twice & 1) != 0) {
        throw std::logic_error("odd a.a + a.K for " + a.str());
    }
    return twice / 2 + 1;
}

Integer degree_to_base(const NumericalClass& a)
{
    return intersect(a, fibre_class());
}

int mw_rank_bound(int distinct_base_points)
{
    if (distinct_base_points < 1 || distinct_base_points > 9) {
        throw std::invalid_argument("a cubic pencil has between 1 and 9 distinct base points, got "
                                    + std::to_string(distinct_base_points));
    }
    return distinct_base_points - 1;
}

bool unirationality_check(int pic_rank_over_k)
{
    if (pic_rank_over_k < 1 || pic_rank_over_k > 10) {
        throw std::invalid_argument("Picard rank of a rational elliptic surface lies in 1..10, got "
                                    + std::to_string(pic_rank_over_k));
    }
    return pic_rank_over_k >= 5;
}

} // namespace pencilforge
