#include "pencilforge/pencils.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace pencilforge {

// ---------------------------------------------------------------------------
// Model / orbit plumbing

Model Model::del_pezzo(int d)
{
    if (d < 1 || d > 8) {
        throw std::invalid_argument("del Pezzo degree must lie in 1..8, got " + std::to_string(d));
    }
    return {Kind::DelPezzo, d};
}

Model Model::parse(std::string_view name)
{
    if (name == "P2") {
        return plane();
    }
    if (name.size() == 3 && name.substr(0, 2) == "dP" && name[2] >= '1' && name[2] <= '8') {
        return del_pezzo(name[2] - '0');
    }
    throw std::invalid_argument("unknown model '" + std::string(name) + "' (expected P2 or dP1..dP8)");
}

std::string Model::name() const
{
    return is_plane() ? std::string("P2") : "dP" + std::to_string(degree);
}

int OrbitStructure::total() const
{
    return std::accumulate(orbit_sizes.begin(), orbit_sizes.end(), 0);
}

std::vector<std::size_t> OrbitStructure::point_layout() const
{
    std::vector<std::size_t> layout;
    auto push = [&](std::size_t orbit) {
        layout.insert(layout.end(), static_cast<std::size_t>(orbit_sizes[orbit]), orbit);
    };
    push(rational_orbit_index);
    for (std::size_t o = 0; o < orbit_sizes.size(); ++o) {
        if (o != rational_orbit_index) {
            push(o);
        }
    }
    return layout;
}

void validate_orbits(const OrbitStructure& orbits)
{
    if (orbits.orbit_sizes.empty()) {
        throw std::invalid_argument("orbit structure is empty");
    }
    for (int s : orbits.orbit_sizes) {
        if (s < 1) {
            throw std::invalid_argument("orbit sizes must be positive");
        }
    }
    if (orbits.rational_orbit_index >= orbits.orbit_sizes.size()) {
        throw std::invalid_argument("rational orbit index out of range");
    }
    if (orbits.orbit_sizes[orbits.rational_orbit_index] != 1) {
        throw std::invalid_argument("the designated rational orbit must have size 1");
    }
}

void validate_spec(const PencilSpec& spec)
{
    if (spec.level < 1) {
        throw std::invalid_argument("pencil level must be >= 1");
    }
    if (spec.extra_conditions < 0) {
        throw std::invalid_argument("extra_conditions must be non-negative");
    }
    if (static_cast<int>(spec.mults.size()) != spec.model.point_count()) {
        throw std::invalid_argument(spec.model.name() + " has " + std::to_string(spec.model.point_count())
                                    + " blown-up points, got " + std::to_string(spec.mults.size())
                                    + " multiplicities");
    }
    for (auto n : spec.mults) {
        if (n < 0) {
            throw std::invalid_argument("multiplicities must be non-negative");
        }
    }
}

// ---------------------------------------------------------------------------
// Dimension / genus / degree

namespace {

// sum of n_i(n_i + sign)/2
Integer half_sum(const std::vector<std::int64_t>& mults, int sign)
{
    Integer acc = 0;
    for (auto n : mults) {
        Integer ni = n;
        acc += ni * (ni + sign) / 2;
    }
    return acc;
}

Integer mult_sum(const std::vector<std::int64_t>& mults)
{
    Integer acc = 0;
    for (auto n : mults) {
        acc += n;
    }
    return acc;
}

} // namespace

Integer dim_lower_bound(const PencilSpec& spec)
{
    validate_spec(spec);
    Integer n = spec.level;
    Integer ambient = spec.model.is_plane() ? (n + 1) * (n + 2) / 2
                                            : spec.model.degree * (n * n + n) / 2 + 1;
    return ambient - half_sum(spec.mults, +1) - spec.extra_conditions;
}

Integer genus_upper_bound(const PencilSpec& spec)
{
    validate_spec(spec);
    Integer n = spec.level;
    Integer ambient = spec.model.is_plane() ? (n - 1) * (n - 2) / 2
                                            : spec.model.degree * (n * n - n) / 2 + 1;
    return ambient - half_sum(spec.mults, -1);
}

Integer degree_to_base_spec(const PencilSpec& spec)
{
    validate_spec(spec);
    Integer n = spec.level;
    Integer fibre_degree = spec.model.is_plane() ? 3 * n : spec.model.degree * n;
    return fibre_degree - mult_sum(spec.mults) - spec.extra_conditions;
}

PencilReport verify(const PencilSpec& spec)
{
    PencilReport r;
    r.dim_lower_bound = dim_lower_bound(spec);
    r.genus_upper_bound = genus_upper_bound(spec);
    r.degree_to_base = degree_to_base_spec(spec);
    r.is_valid_pair_member = r.dim_lower_bound >= 2 && r.genus_upper_bound <= 0 && r.degree_to_base == 2;
    return r;
}

NumericalClass to_numerical_class(const PencilSpec& spec)
{
    validate_spec(spec);
    if (spec.extra_conditions != 0) {
        throw std::invalid_argument("a spec with tangency conditions has no numerical class in the 9-point basis");
    }
    NumericalClass c;
    std::size_t slot = 0;
    if (spec.model.is_plane()) {
        c.d = spec.level;
    } else {
        c.d = 3 * Integer(spec.level);
        for (; slot < kBlownUpPoints - static_cast<std::size_t>(spec.model.degree); ++slot) {
            c.m[slot] = spec.level;
        }
    }
    for (auto n : spec.mults) {
        c.m[slot++] = n;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Tangency patterns

std::string to_string(TangencyPattern p)
{
    switch (p) {
    case TangencyPattern::M1_4_4: return "1,4,4";
    case TangencyPattern::M3_3_3: return "3,3,3";
    case TangencyPattern::M5_2_2: return "5,2,2";
    case TangencyPattern::M7_1_1: return "7,1,1";
    }
    return "?";
}

TangencyPattern parse_tangency_pattern(std::string_view text)
{
    for (auto p : {TangencyPattern::M1_4_4, TangencyPattern::M3_3_3, TangencyPattern::M5_2_2,
                   TangencyPattern::M7_1_1}) {
        if (text == to_string(p)) {
            return p;
        }
    }
    throw std::invalid_argument("unknown tangency pattern '" + std::string(text)
                                + "' (expected 1,4,4 | 3,3,3 | 5,2,2 | 7,1,1)");
}

// ---------------------------------------------------------------------------
// Degree 6 rewrite

std::variant<OrbitRewrite, Unsupported> reduce_orbit_config(const OrbitStructure& orbits)
{
    validate_orbits(orbits);
    if (orbits.total() != 6) {
        throw std::invalid_argument("degree-6 orbit structure must cover 6 points, got "
                                    + std::to_string(orbits.total()));
    }

    auto drop = [&](std::size_t orbit) {
        OrbitRewrite rw;
        rw.blown_up_orbit = orbit;
        for (std::size_t o = 0; o < orbits.orbit_sizes.size(); ++o) {
            if (o == orbit) {
                continue;
            }
            if (o == orbits.rational_orbit_index) {
                rw.remaining.rational_orbit_index = rw.remaining.orbit_sizes.size();
            }
            rw.remaining.orbit_sizes.push_back(orbits.orbit_sizes[o]);
        }
        rw.target_degree = 6 - orbits.orbit_sizes[orbit];
        return rw;
    };

    std::vector<int> others;
    for (std::size_t o = 0; o < orbits.orbit_sizes.size(); ++o) {
        if (o == orbits.rational_orbit_index) {
            continue;
        }
        if (orbits.orbit_sizes[o] == 1) {
            return drop(o); // second rational point -> degree 5
        }
        others.push_back(orbits.orbit_sizes[o]);
    }
    std::sort(others.begin(), others.end());
    if (others == std::vector<int>{2, 3}) {
        for (std::size_t o = 0; o < orbits.orbit_sizes.size(); ++o) {
            if (orbits.orbit_sizes[o] == 2) {
                return drop(o); // conjugate pair -> degree 4
            }
        }
    }
    if (others == std::vector<int>{5}) {
        return Unsupported{"degree 6 with a Galois orbit of 5 points: the rational curves built over k "
                           "have two connected components"};
    }
    return Unsupported{"unrecognized degree-6 orbit configuration"};
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

struct SlotBuilder {
    Model model;
    std::vector<std::size_t> layout;

    PencilSpec spec(std::int64_t level, std::int64_t extra = 0) const
    {
        return {model, level, std::vector<std::int64_t>(layout.size(), 0), extra};
    }

    void set_orbit(PencilSpec& s, std::size_t orbit, std::int64_t mult) const
    {
        for (std::size_t slot = 0; slot < layout.size(); ++slot) {
            if (layout[slot] == orbit) {
                s.mults[slot] = mult;
            }
        }
    }

    void set_all_but(PencilSpec& s, std::size_t orbit, std::int64_t mult) const
    {
        for (std::size_t slot = 0; slot < layout.size(); ++slot) {
            if (layout[slot] != orbit) {
                s.mults[slot] = mult;
            }
        }
    }
};

// Smallest orbit among `candidates`, first in input order on ties.
std::size_t smallest_orbit(const OrbitStructure& orbits, const std::vector<std::size_t>& candidates)
{
    return *std::min_element(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
        return orbits.orbit_sizes[a] < orbits.orbit_sizes[b];
    });
}

// Second plane pencil attached to a single orbit of the given size.
PencilSpec plane_pencil_for_orbit(const SlotBuilder& b, std::size_t p1, std::size_t orbit, int size,
                                  std::string& label)
{
    PencilSpec s;
    switch (size) {
    case 1:
        label = "lines through a second rational point";
        s = b.spec(1);
        b.set_orbit(s, orbit, 1);
        break;
    case 3:
        label = "conics through p1 and a conjugate triple";
        s = b.spec(2);
        b.set_orbit(s, p1, 1);
        b.set_orbit(s, orbit, 1);
        break;
    case 4:
        label = "conics through a conjugate quadruple";
        s = b.spec(2);
        b.set_orbit(s, orbit, 1);
        break;
    case 5:
        label = "cubics through p1 and a conjugate quintuple, singular at p1";
        s = b.spec(3);
        b.set_orbit(s, p1, 2);
        b.set_orbit(s, orbit, 1);
        break;
    case 6:
        label = "quintics through p1, singular at a conjugate sextuple";
        s = b.spec(5);
        b.set_orbit(s, p1, 1);
        b.set_orbit(s, orbit, 2);
        break;
    case 7:
        label = "quartics through a conjugate septuple, triple at p1";
        s = b.spec(4);
        b.set_orbit(s, p1, 3);
        b.set_orbit(s, orbit, 1);
        break;
    case 8:
        label = "degree-17 curves through p1, 6-fold at a conjugate octuple";
        s = b.spec(17);
        b.set_orbit(s, p1, 1);
        b.set_orbit(s, orbit, 6);
        break;
    default:
        throw std::logic_error("no plane construction for an orbit of size " + std::to_string(size));
    }
    return s;
}

ConstructionResult construct_plane(const OrbitStructure& orbits, std::optional<TangencyPattern> pattern,
                                   std::optional<std::size_t> second_orbit)
{
    const bool bare_pair = orbits.orbit_sizes.size() == 2 && orbits.total() == 3;
    if (orbits.total() != 9 && !bare_pair) {
        throw std::invalid_argument("plane orbit structure must cover 9 points (or be a rational point "
                                    "plus a conjugate pair with a tangency pattern), got "
                                    + std::to_string(orbits.total()));
    }
    if (pattern && !bare_pair) {
        throw std::invalid_argument("a tangency pattern only applies to a rational point plus a conjugate "
                                    "pair with no other base points");
    }
    if (bare_pair && !pattern) {
        throw std::invalid_argument("a rational point plus a conjugate pair needs a tangency pattern "
                                    "(1,4,4 | 3,3,3 | 5,2,2 | 7,1,1)");
    }

    SlotBuilder b{Model::plane(), orbits.point_layout()};
    const std::size_t p1 = orbits.rational_orbit_index;

    PencilPair pair;
    pair.model = b.model;
    pair.orbits = orbits;
    pair.first = b.spec(1);
    b.set_orbit(pair.first, p1, 1);

    std::vector<std::size_t> others;
    for (std::size_t o = 0; o < orbits.orbit_sizes.size(); ++o) {
        if (o != p1) {
            others.push_back(o);
        }
    }
    if (second_orbit && (*second_orbit >= orbits.orbit_sizes.size() || *second_orbit == p1)) {
        throw std::invalid_argument("second_orbit must name an orbit other than the rational one");
    }
    const std::size_t chosen = second_orbit ? *second_orbit : smallest_orbit(orbits, others);
    const int size = orbits.orbit_sizes[chosen];

    std::string label;
    if (size != 2) {
        pair.second = plane_pencil_for_orbit(b, p1, chosen, size, label);
    } else if (bare_pair) {
        if (*pattern == TangencyPattern::M1_4_4) {
            label = "conics through a conjugate pair with the two common tangents";
            pair.second = b.spec(2, 2);
            b.set_orbit(pair.second, chosen, 1);
        } else {
            label = "conics through p1 and a conjugate pair with the common tangent at p1";
            pair.second = b.spec(2, 1);
            b.set_orbit(pair.second, p1, 1);
            b.set_orbit(pair.second, chosen, 1);
        }
        label += " [" + to_string(*pattern) + "]";
        // The six remaining slots are infinitely near points; the tangencies
        // are already counted as extra conditions.
        pair.first.mults.resize(kBlownUpPoints, 0);
        pair.second.mults.resize(kBlownUpPoints, 0);
    } else {
        std::vector<std::size_t> extra;
        for (auto o : others) {
            if (o != chosen) {
                extra.push_back(o);
            }
        }
        const std::size_t next = smallest_orbit(orbits, extra);
        const int next_size = orbits.orbit_sizes[next];
        if (next_size == 2) {
            label = "conics through two conjugate pairs";
            pair.second = b.spec(2);
            b.set_orbit(pair.second, chosen, 1);
            b.set_orbit(pair.second, next, 1);
        } else {
            pair.second = plane_pencil_for_orbit(b, p1, next, next_size, label);
        }
        label = "conjugate pair with further base points; " + label;
    }
    pair.construction = "plane: lines through p1 | " + label;
    return pair;
}

ConstructionResult construct_del_pezzo(int degree, const OrbitStructure& orbits)
{
    if (orbits.total() != degree) {
        throw std::invalid_argument("dP" + std::to_string(degree) + " orbit structure must cover "
                                    + std::to_string(degree) + " points, got " + std::to_string(orbits.total()));
    }
    const Model model = Model::del_pezzo(degree);
    const SlotBuilder b{model, orbits.point_layout()};
    const std::size_t p = orbits.rational_orbit_index;

    struct Level {
        std::int64_t n, at_rational, elsewhere;
    };
    auto make = [&](Level l) {
        PencilSpec s = b.spec(l.n);
        b.set_all_but(s, p, l.elsewhere);
        b.set_orbit(s, p, l.at_rational);
        return s;
    };

    PencilPair pair;
    pair.model = model;
    pair.orbits = orbits;
    switch (degree) {
    case 8:
        pair.first = make({8, 13, 7});
        pair.second = make({22, 13, 23});
        break;
    case 5:
        pair.first = make({2, 4, 1});
        pair.second = make({10, 4, 11});
        break;
    case 4:
        pair.first = make({1, 2, 0});
        pair.second = make({7, 2, 8});
        break;
    case 6: {
        auto rw = reduce_orbit_config(orbits);
        if (auto* u = std::get_if<Unsupported>(&rw)) {
            return *u;
        }
        auto rewrite = std::get<OrbitRewrite>(rw);
        auto inner = construct_del_pezzo(rewrite.target_degree, rewrite.remaining);
        if (auto* u = std::get_if<Unsupported>(&inner)) {
            return *u;
        }
        auto result = std::get<PencilPair>(std::move(inner));
        result.construction = "dP6 -> " + result.construction;
        result.rewrite = std::move(rewrite);
        return result;
    }
    case 7:
        return Unsupported{"there is no k-minimal rational surface of degree 7"};
    case 1:
        return Unsupported{"degree 1: no pencil of rational curves of fibre degree 2 is constructed"};
    default: // 2, 3
        return Unsupported{"degree " + std::to_string(degree)
                           + ": the rational curves built over k have two connected components"};
    }
    pair.construction = model.name() + ": -nK pencils with a fixed multiplicity at the rational point";
    return pair;
}

} // namespace

ConstructionResult construct_pencils(const Model& model, const OrbitStructure& orbits,
                                     std::optional<TangencyPattern> pattern, std::optional<std::size_t> second_orbit)
{
    validate_orbits(orbits);
    if (model.is_plane()) {
        return construct_plane(orbits, pattern, second_orbit);
    }
    if (pattern) {
        throw std::invalid_argument("tangency patterns only apply to the plane model");
    }
    if (second_orbit) {
        throw std::invalid_argument("second_orbit only applies to the plane model");
    }
    return construct_del_pezzo(model.degree, orbits);
}

// ---------------------------------------------------------------------------
// Exhaustive search

namespace {

constexpr int kMaxSearchLevel = 100000;

// Branch and bound over one multiplicity per orbit for a fixed level. All
// quantities fit comfortably in 64 bits for level <= kMaxSearchLevel.
class LevelSearch {
public:
    LevelSearch(const Model& model, const OrbitStructure& orbits, std::int64_t level, std::int64_t max_mult)
        : model_(model), orbits_(orbits), level_(level), max_mult_(max_mult)
    {
        order_.push_back(orbits.rational_orbit_index);
        for (std::size_t o = 0; o < orbits.orbit_sizes.size(); ++o) {
            if (o != orbits.rational_orbit_index) {
                order_.push_back(o);
            }
        }
        const std::int64_t n = level;
        if (model.is_plane()) {
            target_sum_ = 3 * n - 2;
            max_dim_cost_ = (n + 1) * (n + 2) / 2 - 2;
            min_genus_cost_ = (n - 1) * (n - 2) / 2;
        } else {
            const std::int64_t d = model.degree;
            target_sum_ = d * n - 2;
            max_dim_cost_ = d * (n * n + n) / 2 + 1 - 2;
            min_genus_cost_ = d * (n * n - n) / 2 + 1;
        }
        remaining_points_.assign(order_.size() + 1, 0);
        for (std::size_t k = order_.size(); k-- > 0;) {
            remaining_points_[k] = remaining_points_[k + 1] + orbits.orbit_sizes[order_[k]];
        }
        choice_.assign(order_.size(), 0);
    }

    std::vector<PencilSpec> run()
    {
        if (target_sum_ >= 0) {
            descend(0, 0, 0, 0);
        }
        return std::move(found_);
    }

private:
    // sum:        sum of s*m so far
    // dim_cost:   sum of s*m(m+1)/2
    // genus_cost: sum of s*m(m-1)/2
    void descend(std::size_t k, std::int64_t sum, std::int64_t dim_cost, std::int64_t genus_cost)
    {
        if (k == order_.size()) {
            if (sum == target_sum_ && dim_cost <= max_dim_cost_ && genus_cost >= min_genus_cost_) {
                emit();
            }
            return;
        }
        const std::int64_t rest = target_sum_ - sum;
        const std::int64_t pts = remaining_points_[k];
        if (rest < 0 || rest > pts * max_mult_) {
            return;
        }
        // Convexity: spreading `rest` evenly over `pts` points is the cheapest
        // way to place it, costing at least rest*(rest+pts)/(2*pts).
        if (2 * pts * (dim_cost - max_dim_cost_) + rest * (rest + pts) > 0) {
            return;
        }
        // Concentrating it in one point is the most genus-expensive.
        if (genus_cost + rest * (rest - 1) / 2 < min_genus_cost_) {
            return;
        }
        const std::int64_t s = orbits_.orbit_sizes[order_[k]];
        for (std::int64_t m = 0; m <= max_mult_ && s * m <= rest; ++m) {
            choice_[k] = m;
            descend(k + 1, sum + s * m, dim_cost + s * m * (m + 1) / 2, genus_cost + s * m * (m - 1) / 2);
        }
    }

    void emit()
    {
        PencilSpec spec{model_, level_, {}, 0};
        for (std::size_t k = 0; k < order_.size(); ++k) {
            spec.mults.insert(spec.mults.end(), static_cast<std::size_t>(orbits_.orbit_sizes[order_[k]]),
                              choice_[k]);
        }
        found_.push_back(std::move(spec));
    }

    Model model_;
    const OrbitStructure& orbits_;
    std::int64_t level_;
    std::int64_t max_mult_;
    std::vector<std::size_t> order_;
    std::vector<std::int64_t> remaining_points_;
    std::vector<std::int64_t> choice_;
    std::int64_t target_sum_ = 0;
    std::int64_t max_dim_cost_ = 0;
    std::int64_t min_genus_cost_ = 0;
    std::vector<PencilSpec> found_;
};

bool spec_less(const PencilSpec& a, const PencilSpec& b)
{
    if (a.level != b.level) {
        return a.level < b.level;
    }
    return a.mults < b.mults;
}

} // namespace

std::vector<PencilSpec> search_pencils(const Model& model, const OrbitStructure& orbits, int n_max)
{
    validate_orbits(orbits);
    if (n_max < 1 || n_max > kMaxSearchLevel) {
        throw std::invalid_argument("n_max must lie in 1.." + std::to_string(kMaxSearchLevel));
    }
    if (orbits.total() != model.point_count()) {
        throw std::invalid_argument(model.name() + " has " + std::to_string(model.point_count())
                                    + " blown-up points, orbit structure covers " + std::to_string(orbits.total()));
    }

    // Levels are independent; workers pull them from a shared counter and
    // write into per-level slots, so the merged output does not depend on
    // scheduling.
    std::vector<std::vector<PencilSpec>> per_level(static_cast<std::size_t>(n_max));
    std::atomic<int> next{1};
    auto worker = [&] {
        for (int level = next++; level <= n_max; level = next++) {
            per_level[static_cast<std::size_t>(level - 1)] = LevelSearch(model, orbits, level, n_max + 1).run();
        }
    };
    const unsigned workers = std::clamp(std::thread::hardware_concurrency(), 1u, static_cast<unsigned>(n_max));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) {
            pool.emplace_back(worker);
        }
        worker();
    }

    std::vector<PencilSpec> out;
    for (auto& level : per_level) {
        std::move(level.begin(), level.end(), std::back_inserter(out));
    }
    std::sort(out.begin(), out.end(), spec_less);
    return out;
}

} // namespace pencilforge
