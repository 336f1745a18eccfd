#include "pencilforge/cremona.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pencilforge {

void validate_triple(const IndexTriple& idx)
{
    for (int i : idx) {
        if (i < 1 || i > static_cast<int>(kBlownUpPoints)) {
            throw std::invalid_argument("Cremona index " + std::to_string(i) + " outside 1..9");
        }
    }
    if (idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2]) {
        throw std::invalid_argument("Cremona indices must be pairwise distinct");
    }
}

NumericalClass quadratic_transform(const NumericalClass& a, const IndexTriple& idx)
{
    validate_triple(idx);
    const auto& [i, j, k] = idx;
    const Integer& mi = a.mult(i);
    const Integer& mj = a.mult(j);
    const Integer& mk = a.mult(k);

    NumericalClass out = a;
    out.d = 2 * a.d - mi - mj - mk;
    out.mult(i) = a.d - mj - mk;
    out.mult(j) = a.d - mi - mk;
    out.mult(k) = a.d - mi - mj;
    return out;
}

bool is_line_class(const NumericalClass& a)
{
    if (a.d != 1) {
        return false;
    }
    int ones = 0;
    for (const auto& mi : a.m) {
        if (mi == 1) {
            ++ones;
        } else if (mi != 0) {
            return false;
        }
    }
    return ones <= 2;
}

namespace {

IndexTriple top_three(const NumericalClass& a)
{
    std::array<int, kBlownUpPoints> order{};
    std::iota(order.begin(), order.end(), 1);
    // stable: equal multiplicities keep ascending index order
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return a.mult(x) > a.mult(y); });
    IndexTriple t{order[0], order[1], order[2]};
    std::sort(t.begin(), t.end());
    return t;
}

} // namespace

ReductionCertificate reduce_to_line(const NumericalClass& a, int max_steps)
{
    if (max_steps < 0) {
        throw std::invalid_argument("max_steps must be non-negative");
    }
    ReductionCertificate cert;
    cert.start = a;
    NumericalClass current = a;
    while (!is_line_class(current) && static_cast<int>(cert.chain.size()) < max_steps) {
        IndexTriple idx = top_three(current);
        NumericalClass next = quadratic_transform(current, idx);
        if (next.d >= current.d) {
            break;
        }
        cert.chain.push_back({idx, current, next});
        current = std::move(next);
    }
    cert.success = is_line_class(current);
    cert.terminal = std::move(current);
    return cert;
}

bool replay(const ReductionCertificate& cert)
{
    NumericalClass current = cert.start;
    for (const auto& step : cert.chain) {
        if (step.before != current) {
            return false;
        }
        try {
            if (quadratic_transform(step.before, step.indices) != step.after) {
                return false;
            }
        } catch (const std::invalid_argument&) {
            return false;
        }
        current = step.after;
    }
    return current == cert.terminal && cert.success == is_line_class(cert.terminal);
}

bool is_connected_class(const NumericalClass& a, int max_steps)
{
    return reduce_to_line(a, max_steps).success;
}

} // namespace pencilforge
