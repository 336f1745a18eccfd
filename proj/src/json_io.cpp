#include "pencilforge/json_io.hpp"

#include <limits>

namespace pencilforge {

namespace {

const Json& require(const Json& j, const char* key)
{
    if (!j.is_object()) {
        throw FormatError(std::string("expected a JSON object with key '") + key + "'");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw FormatError(std::string("missing key '") + key + "'");
    }
    return *it;
}

std::int64_t int64_from_json(const Json& j, const char* what)
{
    if (j.is_number_integer()) {
        return j.get<std::int64_t>();
    }
    if (j.is_number_unsigned() && j.get<std::uint64_t>() <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(j.get<std::uint64_t>());
    }
    throw FormatError(std::string(what) + " must be an integer");
}

std::string string_from_json(const Json& j, const char* what)
{
    if (!j.is_string()) {
        throw FormatError(std::string(what) + " must be a string");
    }
    return j.get<std::string>();
}

bool bool_from_json(const Json& j, const char* what)
{
    if (!j.is_boolean()) {
        throw FormatError(std::string(what) + " must be a boolean");
    }
    return j.get<bool>();
}

const Json& array_from_json(const Json& j, const char* what)
{
    if (!j.is_array()) {
        throw FormatError(std::string(what) + " must be an array");
    }
    return j;
}

template <class Fn>
auto reraise_as_format(const std::string& context, Fn&& fn)
{
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        throw FormatError(context + ": " + e.what());
    }
}

} // namespace

Json integer_to_json(const Integer& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return x.convert_to<std::int64_t>();
    }
    return x.str();
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer() || j.is_number_unsigned()) {
        return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return reraise_as_format("integer", [&] { return parse_integer(j.get<std::string>()); });
    }
    throw FormatError("expected an integer, got " + j.dump());
}

Json to_json(const Rational& q)
{
    return to_string(q);
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) {
        return reraise_as_format("rational", [&] { return parse_rational(j.get<std::string>()); });
    }
    if (j.is_number_integer() || j.is_number_unsigned()) {
        return Rational(integer_from_json(j));
    }
    throw FormatError("expected a rational \"p/q\", got " + j.dump());
}

Json to_json(const NumericalClass& c)
{
    Json out = Json::array();
    out.push_back(integer_to_json(c.d));
    for (const auto& mi : c.m) {
        out.push_back(integer_to_json(mi));
    }
    return out;
}

NumericalClass class_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != kBlownUpPoints + 1) {
        throw FormatError("a numerical class is a JSON array of 10 integers [d, m1, ..., m9]");
    }
    NumericalClass c;
    c.d = integer_from_json(j[0]);
    for (std::size_t i = 0; i < kBlownUpPoints; ++i) {
        c.m[i] = integer_from_json(j[i + 1]);
    }
    return c;
}

Json to_json(const ReductionCertificate& cert)
{
    Json steps = Json::array();
    for (const auto& s : cert.chain) {
        steps.push_back({{"indices", s.indices}, {"before", to_json(s.before)}, {"after", to_json(s.after)}});
    }
    return {{"success", cert.success},
            {"start", to_json(cert.start)},
            {"terminal", to_json(cert.terminal)},
            {"steps", std::move(steps)}};
}

ReductionCertificate certificate_from_json(const Json& j)
{
    ReductionCertificate cert;
    cert.success = bool_from_json(require(j, "success"), "success");
    cert.start = class_from_json(require(j, "start"));
    cert.terminal = class_from_json(require(j, "terminal"));
    for (const auto& s : array_from_json(require(j, "steps"), "steps")) {
        const Json& idx = require(s, "indices");
        if (!idx.is_array() || idx.size() != 3) {
            throw FormatError("step indices must be three integers");
        }
        CremonaStep step;
        for (std::size_t k = 0; k < 3; ++k) {
            step.indices[k] = static_cast<int>(int64_from_json(idx[k], "index"));
        }
        step.before = class_from_json(require(s, "before"));
        step.after = class_from_json(require(s, "after"));
        cert.chain.push_back(std::move(step));
    }
    return cert;
}

Json to_json(const OrbitStructure& o)
{
    return {{"orbit_sizes", o.orbit_sizes}, {"rational_orbit_index", o.rational_orbit_index}};
}

OrbitStructure orbits_from_json(const Json& j)
{
    OrbitStructure o;
    for (const auto& s : array_from_json(require(j, "orbit_sizes"), "orbit_sizes")) {
        o.orbit_sizes.push_back(static_cast<int>(int64_from_json(s, "orbit size")));
    }
    auto idx = j.contains("rational_orbit_index") ? int64_from_json(j["rational_orbit_index"], "rational_orbit_index")
                                                  : 0;
    if (idx < 0) {
        throw FormatError("rational_orbit_index must be non-negative");
    }
    o.rational_orbit_index = static_cast<std::size_t>(idx);
    return o;
}

Json to_json(const PencilSpec& s)
{
    return {{"model", s.model.name()},
            {"level", s.level},
            {"mults", s.mults},
            {"extra_conditions", s.extra_conditions}};
}

PencilSpec spec_from_json(const Json& j)
{
    PencilSpec s;
    const std::string model = string_from_json(require(j, "model"), "model");
    s.model = reraise_as_format("model", [&] { return Model::parse(model); });
    s.level = int64_from_json(require(j, "level"), "level");
    for (const auto& n : array_from_json(require(j, "mults"), "mults")) {
        s.mults.push_back(int64_from_json(n, "multiplicity"));
    }
    s.extra_conditions = j.contains("extra_conditions") ? int64_from_json(j["extra_conditions"], "extra_conditions")
                                                        : 0;
    return s;
}

Json to_json(const PencilReport& r)
{
    return {{"dim_lower_bound", integer_to_json(r.dim_lower_bound)},
            {"genus_upper_bound", integer_to_json(r.genus_upper_bound)},
            {"degree_to_base", integer_to_json(r.degree_to_base)},
            {"is_valid_pair_member", r.is_valid_pair_member}};
}

PencilReport report_from_json(const Json& j)
{
    PencilReport r;
    r.dim_lower_bound = integer_from_json(require(j, "dim_lower_bound"));
    r.genus_upper_bound = integer_from_json(require(j, "genus_upper_bound"));
    r.degree_to_base = integer_from_json(require(j, "degree_to_base"));
    r.is_valid_pair_member = bool_from_json(require(j, "is_valid_pair_member"), "is_valid_pair_member");
    return r;
}

Json to_json(const OrbitRewrite& rw)
{
    return {{"target_degree", rw.target_degree},
            {"blown_up_orbit", rw.blown_up_orbit},
            {"remaining", to_json(rw.remaining)}};
}

OrbitRewrite rewrite_from_json(const Json& j)
{
    OrbitRewrite rw;
    rw.target_degree = static_cast<int>(int64_from_json(require(j, "target_degree"), "target_degree"));
    auto orbit = int64_from_json(require(j, "blown_up_orbit"), "blown_up_orbit");
    if (orbit < 0) {
        throw FormatError("blown_up_orbit must be non-negative");
    }
    rw.blown_up_orbit = static_cast<std::size_t>(orbit);
    rw.remaining = orbits_from_json(require(j, "remaining"));
    return rw;
}

Json to_json(const ConstructionResult& r)
{
    if (const auto* u = std::get_if<Unsupported>(&r)) {
        return {{"unsupported", u->reason}};
    }
    const auto& p = std::get<PencilPair>(r);
    Json out = {{"construction", p.construction}, {"model", p.model.name()}, {"orbits", to_json(p.orbits)}};
    if (p.rewrite) {
        out["rewrite"] = to_json(*p.rewrite);
    }
    out["first"] = to_json(p.first);
    out["second"] = to_json(p.second);
    return out;
}

ConstructionResult construction_from_json(const Json& j)
{
    if (j.is_object() && j.contains("unsupported")) {
        return Unsupported{string_from_json(j["unsupported"], "unsupported")};
    }
    PencilPair p;
    p.construction = string_from_json(require(j, "construction"), "construction");
    const std::string model = string_from_json(require(j, "model"), "model");
    p.model = reraise_as_format("model", [&] { return Model::parse(model); });
    p.orbits = orbits_from_json(require(j, "orbits"));
    if (j.contains("rewrite")) {
        p.rewrite = rewrite_from_json(j["rewrite"]);
    }
    p.first = spec_from_json(require(j, "first"));
    p.second = spec_from_json(require(j, "second"));
    return p;
}

Json to_json(const FibreConfiguration& c)
{
    Json out = Json::array();
    for (const auto& p : c.places) {
        out.push_back({{"place", p.id}, {"type", p.fibre.symbol()}});
    }
    return out;
}

FibreConfiguration configuration_from_json(const Json& j)
{
    auto parse_fibre = [](const std::string& symbol) {
        return reraise_as_format("fibre type", [&] { return KodairaFibre::parse(symbol); });
    };
    if (j.is_object()) {
        std::vector<std::pair<KodairaFibre, int>> counts;
        for (const auto& [symbol, count] : j.items()) {
            auto c = int64_from_json(count, "fibre count");
            if (c < 0 || c > 1000) {
                throw FormatError("fibre count for " + symbol + " must lie in 0..1000");
            }
            counts.emplace_back(parse_fibre(symbol), static_cast<int>(c));
        }
        return FibreConfiguration::from_counts(counts);
    }
    FibreConfiguration config;
    for (const auto& p : array_from_json(j, "fibre configuration")) {
        config.places.push_back({string_from_json(require(p, "place"), "place"),
                                 parse_fibre(string_from_json(require(p, "type"), "type"))});
    }
    return config;
}

} // namespace pencilforge
