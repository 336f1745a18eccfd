#include "pencilforge/cli.hpp"

#include "pencilforge/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace pencilforge::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Flags take either inline JSON or the path of a file holding the same JSON.
Json load_json(const std::string& text)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec)) {
        std::ifstream in(text);
        if (!in) {
            throw FormatError("cannot read " + text);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        return Json::parse(buf.str());
    }
    return Json::parse(text);
}

std::vector<std::string> split_commas(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        parts.push_back(item);
    }
    return parts;
}

BranchLocus parse_branch(const std::string& text)
{
    auto parts = split_commas(text);
    if (parts.size() != 2) {
        throw FormatError("a branch locus is two place ids separated by a comma, got '" + text + "'");
    }
    return BranchLocus(parts[0], parts[1]);
}

IndexTriple parse_triple(const std::string& text)
{
    auto parts = split_commas(text);
    if (parts.size() != 3) {
        throw FormatError("a Cremona triple is three indices i,j,k, got '" + text + "'");
    }
    IndexTriple t{};
    for (std::size_t k = 0; k < 3; ++k) {
        Integer v = integer_from_json(Json(parts[k]));
        if (v < -1000 || v > 1000) {
            throw std::invalid_argument("Cremona index " + parts[k] + " outside 1..9");
        }
        t[k] = v.convert_to<int>();
    }
    return t;
}

Integer parse_integer_flag(const std::string& text)
{
    return integer_from_json(Json(text));
}

Rational parse_rational_flag(const std::string& text)
{
    return rational_from_json(Json(text));
}

int max_steps_from(const std::optional<int>& flag)
{
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("PENCILFORGE_MAX_STEPS"); env != nullptr && *env != '\0') {
        Integer v;
        try {
            v = parse_integer(env);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument(std::string("PENCILFORGE_MAX_STEPS is not an integer: ") + env);
        }
        if (v < 0 || v > 1'000'000) {
            throw std::invalid_argument("PENCILFORGE_MAX_STEPS must lie in 0..1000000");
        }
        return v.convert_to<int>();
    }
    return kDefaultMaxCremonaSteps;
}

// Orbit structures come as a bare size list [1,2,6] (rational orbit first)
// or as the full object form.
OrbitStructure orbits_from_flag(const std::string& text)
{
    Json j = load_json(text);
    if (j.is_array()) {
        return orbits_from_json(Json{{"orbit_sizes", j}});
    }
    return orbits_from_json(j);
}

Json rational_matrix(const Matrix<Rational>& m)
{
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) {
            r.push_back(to_json(x));
        }
        out.push_back(std::move(r));
    }
    return out;
}

Json integer_matrix(const Matrix<Integer>& m)
{
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) {
            r.push_back(integer_to_json(x));
        }
        out.push_back(std::move(r));
    }
    return out;
}

// {"chi": 1, "po": 0, "qo": 0, "pq": 0, "fibres": ["I2", ...], "components": [[1, 1], ...]}
Rational height_from_json(const Json& j)
{
    if (!j.is_object()) {
        throw FormatError("height input must be an object");
    }
    for (const char* key : {"chi", "po", "qo", "pq"}) {
        if (!j.contains(key)) {
            throw FormatError(std::string("missing key '") + key + "'");
        }
    }
    SectionIntersections s;
    s.po = integer_from_json(j["po"]);
    s.qo = integer_from_json(j["qo"]);
    s.pq = integer_from_json(j["pq"]);
    std::vector<ReducibleFibreData> fibres;
    if (j.contains("fibres")) {
        if (!j["fibres"].is_array()) {
            throw FormatError("fibres must be an array of Kodaira symbols");
        }
        for (const auto& f : j["fibres"]) {
            if (!f.is_string()) {
                throw FormatError("fibres must be an array of Kodaira symbols");
            }
            fibres.emplace_back(KodairaFibre::parse(f.get<std::string>()));
        }
    }
    if (j.contains("components")) {
        if (!j["components"].is_array()) {
            throw FormatError("components must be an array of [i, j] pairs");
        }
        for (const auto& c : j["components"]) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
                throw FormatError("components must be an array of [i, j] pairs");
            }
            s.components.emplace_back(c[0].get<int>(), c[1].get<int>());
        }
    }
    return height_pairing(s, integer_from_json(j["chi"]), fibres);
}

std::vector<IntersectionConstraint> constraints_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw FormatError("constraints must be an array of {\"with\": class, \"value\": n}");
    }
    std::vector<IntersectionConstraint> out;
    for (const auto& c : j) {
        if (!c.is_object() || !c.contains("with") || !c.contains("value")) {
            throw FormatError("constraints must be an array of {\"with\": class, \"value\": n}");
        }
        out.push_back({class_from_json(c["with"]), integer_from_json(c["value"])});
    }
    return out;
}

using Action = std::function<Json()>;

struct Options {
    std::string cls, with, transform, certificate;
    std::optional<int> max_steps;
    std::string model = "P2", orbits, pattern, spec;
    std::optional<std::size_t> second_orbit;
    int n_max = 0;
    std::string config, branch, branch2, fibre;
    bool ramified = false;
    std::string input;
    std::optional<int> comp_i, comp_j;
    long d_max = 0;
    std::string constraints;
    std::string h, f1, c_e, alpha, n;
    int points = 0, pic_rank = 0;
};

void add_class_commands(CLI::App& app, Options& o, Action& action)
{
    auto* cls = app.add_subcommand("class", "genus, degree to the base and self-intersection of a class");
    cls->add_option("--class", o.cls, "[d, m1, ..., m9]")->required();
    cls->add_option("--with", o.with, "second class; adds their intersection number");
    cls->callback([&] {
        action = [&] {
            NumericalClass a = class_from_json(load_json(o.cls));
            Json r = {{"genus", integer_to_json(arithmetic_genus(a))},
                      {"degree_to_base", integer_to_json(degree_to_base(a))},
                      {"self_int", integer_to_json(self_intersection(a))}};
            if (!o.with.empty()) {
                r["intersection"] = integer_to_json(intersect(a, class_from_json(load_json(o.with))));
            }
            return r;
        };
    });

    auto* cremona = app.add_subcommand("cremona", "reduce a class to a line by quadratic transformations");
    cremona->add_option("--class", o.cls, "[d, m1, ..., m9]");
    cremona->add_option("--transform", o.transform, "apply a single transform at i,j,k instead");
    cremona->add_option("--certificate", o.certificate, "replay a certificate instead");
    cremona->add_option("--max-steps", o.max_steps, "step cap (default 64, or PENCILFORGE_MAX_STEPS)");
    cremona->callback([&] {
        action = [&]() -> Json {
            if (!o.certificate.empty()) {
                ReductionCertificate cert = certificate_from_json(load_json(o.certificate));
                return {{"replay_ok", replay(cert)}};
            }
            if (o.cls.empty()) {
                throw UsageError("cremona needs --class or --certificate");
            }
            NumericalClass a = class_from_json(load_json(o.cls));
            if (!o.transform.empty()) {
                return to_json(quadratic_transform(a, parse_triple(o.transform)));
            }
            return to_json(reduce_to_line(a, max_steps_from(o.max_steps)));
        };
    });
}

void add_pencil_commands(CLI::App& app, Options& o, Action& action)
{
    auto* pencil = app.add_subcommand("pencil", "pencils of rational curves of degree 2 over the base");
    pencil->require_subcommand(1);

    auto* construct = pencil->add_subcommand("construct", "the two pencils for a Galois orbit structure");
    construct->add_option("--model", o.model, "P2 or dP1..dP8")->capture_default_str();
    construct->add_option("--orbits", o.orbits, "orbit sizes, rational orbit first")->required();
    construct->add_option("--pattern", o.pattern, "cubic pencil multiplicities: 1,4,4 3,3,3 5,2,2 7,1,1");
    construct->add_option("--second-orbit", o.second_orbit,
                          "index of the orbit the second pencil is built on (default: smallest)");
    construct->callback([&] {
        action = [&] {
            std::optional<TangencyPattern> pattern;
            if (!o.pattern.empty()) {
                pattern = parse_tangency_pattern(o.pattern);
            }
            return to_json(construct_pencils(Model::parse(o.model), orbits_from_flag(o.orbits), pattern,
                                             o.second_orbit));
        };
    });

    auto* search = pencil->add_subcommand("search", "every orbit-invariant spec up to a level");
    search->add_option("--model", o.model, "P2 or dP1..dP8")->capture_default_str();
    search->add_option("--orbits", o.orbits, "orbit sizes, rational orbit first")->required();
    search->add_option("--n-max", o.n_max, "largest level")->required();
    search->callback([&] {
        action = [&] {
            Json out = Json::array();
            for (const auto& s : search_pencils(Model::parse(o.model), orbits_from_flag(o.orbits), o.n_max)) {
                out.push_back(to_json(s));
            }
            return out;
        };
    });

    auto* verify_cmd = pencil->add_subcommand("verify", "dimension, genus and degree counts for a spec");
    verify_cmd->add_option("--spec", o.spec, "{\"model\", \"level\", \"mults\", \"extra_conditions\"}")->required();
    verify_cmd->callback([&] {
        action = [&] { return to_json(verify(spec_from_json(load_json(o.spec)))); };
    });

    auto* reduce = pencil->add_subcommand("reduce", "rewrite a degree-6 orbit structure");
    reduce->add_option("--orbits", o.orbits, "orbit sizes, rational orbit first")->required();
    reduce->callback([&] {
        action = [&]() -> Json {
            auto r = reduce_orbit_config(orbits_from_flag(o.orbits));
            if (const auto* u = std::get_if<Unsupported>(&r)) {
                return {{"unsupported", u->reason}};
            }
            return to_json(std::get<OrbitRewrite>(r));
        };
    });
}

void add_base_change_commands(CLI::App& app, Options& o, Action& action)
{
    auto* bc = app.add_subcommand("basechange", "singular fibres under a quadratic base change");
    bc->require_subcommand(1);

    auto* classify = bc->add_subcommand("classify", "Rational, K3 or TrivialProduct");
    classify->add_option("--config", o.config, "fibre configuration")->required();
    classify->add_option("--branch", o.branch, "two branch places a,b")->required();
    classify->callback([&] {
        action = [&] {
            return Json(to_string(
                classify_quadratic_base_change(configuration_from_json(load_json(o.config)), parse_branch(o.branch))));
        };
    });

    auto* transform = bc->add_subcommand("transform", "fibres after the base change");
    transform->add_option("--config", o.config, "fibre configuration")->required();
    transform->add_option("--branch", o.branch, "two branch places a,b")->required();
    transform->callback([&] {
        action = [&] {
            FibreConfiguration after = base_change(configuration_from_json(load_json(o.config)), parse_branch(o.branch));
            return Json{{"configuration", to_json(after)}, {"euler_total", euler_total(after)}};
        };
    });

    auto* euler = bc->add_subcommand("euler", "total Euler number of a configuration");
    euler->add_option("--config", o.config, "fibre configuration")->required();
    euler->callback([&] {
        action = [&] { return Json(euler_total(configuration_from_json(load_json(o.config)))); };
    });

    auto* fibre = bc->add_subcommand("fibre", "transform a single Kodaira fibre");
    fibre->add_option("--fibre", o.fibre, "Kodaira symbol")->required();
    fibre->add_flag("--ramified", o.ramified, "the cover ramifies over the place");
    fibre->callback([&] {
        action = [&] {
            Json out = Json::array();
            for (const auto& f : transform_fibre(KodairaFibre::parse(o.fibre), o.ramified)) {
                out.push_back(f.symbol());
            }
            return out;
        };
    });

    auto* product = bc->add_subcommand("fibre-product", "genus of the fibre product of two double covers");
    product->add_option("--branch", o.branch, "branch places a,b of the first cover")->required();
    product->add_option("--branch2", o.branch2, "branch places c,d of the second cover")->required();
    product->callback([&] {
        action = [&] { return Json(to_string(fibre_product_genus(parse_branch(o.branch), parse_branch(o.branch2)))); };
    });
}

void add_height_commands(CLI::App& app, Options& o, Action& action)
{
    auto* height = app.add_subcommand("height", "height pairing and local fibre contributions");
    height->require_subcommand(1);

    auto* pair = height->add_subcommand("pair", "<P,Q> from intersection data");
    pair->add_option("--input", o.input, "{\"chi\", \"po\", \"qo\", \"pq\", \"fibres\", \"components\"}")->required();
    pair->callback([&] {
        action = [&] { return to_json(height_from_json(load_json(o.input))); };
    });

    auto* contrib = height->add_subcommand("contrib", "local contributions of a reducible fibre");
    contrib->add_option("--fibre", o.fibre, "Kodaira symbol")->required();
    contrib->add_option("-i", o.comp_i, "component met by P");
    contrib->add_option("-j", o.comp_j, "component met by Q");
    contrib->callback([&] {
        action = [&]() -> Json {
            ReducibleFibreData data(KodairaFibre::parse(o.fibre));
            if (o.comp_i.has_value() != o.comp_j.has_value()) {
                throw UsageError("give both -i and -j, or neither");
            }
            if (o.comp_i) {
                return to_json(contribution(data, *o.comp_i, *o.comp_j));
            }
            return {{"fibre", data.fibre().symbol()},
                    {"intersection_matrix", integer_matrix(data.intersection_matrix())},
                    {"contributions", rational_matrix(data.contribution_matrix())}};
        };
    });

    auto* sections = app.add_subcommand("sections", "numerical classes of sections");
    sections->require_subcommand(1);
    auto* enumerate = sections->add_subcommand("enumerate", "classes with c.c = -1, c.F = 1 and |d| <= d_max");
    enumerate->add_option("--d-max", o.d_max, "bound on |d|")->required();
    enumerate->add_option("--constraints", o.constraints, "[{\"with\": class, \"value\": n}, ...]");
    enumerate->callback([&] {
        action = [&] {
            std::vector<IntersectionConstraint> cons;
            if (!o.constraints.empty()) {
                cons = constraints_from_json(load_json(o.constraints));
            }
            Json classes = Json::array();
            for (const auto& c : enumerate_section_classes(cons, o.d_max)) {
                classes.push_back(to_json(c));
            }
            return Json{{"count", classes.size()}, {"classes", std::move(classes)}};
        };
    });

    auto* kummer = app.add_subcommand("kummer", "degree bounds from Kummer theory");
    kummer->require_subcommand(1);
    auto* bound = kummer->add_subcommand("bound", "n0 = floor(h/f1) * max{t : c_E t^alpha <= h}, h = --degree");
    bound->add_option("--degree", o.h, "degree h of the curves to the base")->required();
    bound->add_option("--f1", o.f1, "Kummer constant, rational p/q")->required();
    bound->add_option("--c-e", o.c_e, "torsion constant, rational p/q")->required();
    bound->add_option("--alpha", o.alpha, "torsion exponent, rational p/q")->required();
    bound->callback([&] {
        action = [&] {
            KummerInputs in{parse_integer_flag(o.h), parse_rational_flag(o.f1), parse_rational_flag(o.c_e),
                            parse_rational_flag(o.alpha)};
            return Json{{"index_bound", integer_to_json(kummer_index_bound(in))},
                        {"torsion_bound", integer_to_json(torsion_order_bound(in))},
                        {"n0", integer_to_json(kummer_bound(in))}};
        };
    });
    auto* pullback = kummer->add_subcommand("pullback", "degree of [n]^-1 of a section");
    pullback->add_option("--n", o.n, "multiplication factor")->required();
    pullback->callback([&] {
        action = [&] { return integer_to_json(multiplication_pullback_degree(parse_integer_flag(o.n))); };
    });

    auto* mw = app.add_subcommand("mwrank", "Mordell-Weil rank bound from the number of distinct base points");
    mw->add_option("--points", o.points, "distinct base points over the field")->required();
    mw->callback([&] {
        action = [&] { return Json(mw_rank_bound(o.points)); };
    });

    auto* uni = app.add_subcommand("unirational", "Picard rank criterion for unirationality");
    uni->add_option("--pic-rank", o.pic_rank, "rank of Pic over the field")->required();
    uni->callback([&] {
        action = [&] { return Json(unirationality_check(o.pic_rank)); };
    });
}

Json error_object(const std::string& kind, const std::string& message)
{
    return {{"ok", false}, {"error", {{"kind", kind}, {"message", message}}}};
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact arithmetic for pencils on rational elliptic surfaces", "pencilforge"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the JSON output");

    Options opts;
    Action action;
    add_class_commands(app, opts, action);
    add_pencil_commands(app, opts, action);
    add_base_change_commands(app, opts, action);
    add_height_commands(app, opts, action);

    auto emit = [&](const Json& j) {
        out << (pretty ? j.dump(2) : j.dump()) << '\n';
    };

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        // help goes inside the JSON so stdout stays machine readable
        const CLI::App* target = &app;
        while (true) {
            auto subs = target->get_subcommands();
            if (subs.empty()) {
                break;
            }
            target = subs.front();
        }
        emit({{"ok", true}, {"result", {{"help", target->help()}}}});
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        emit(error_object("usage", e.what()));
        return kExitFormat;
    }

    try {
        Json result = action();
        emit({{"ok", true}, {"result", std::move(result)}});
        return kExitOk;
    } catch (const Json::exception& e) {
        emit(error_object("format", e.what()));
        return kExitFormat;
    } catch (const FormatError& e) {
        emit(error_object("format", e.what()));
        return kExitFormat;
    } catch (const UsageError& e) {
        emit(error_object("usage", e.what()));
        return kExitFormat;
    } catch (const std::invalid_argument& e) {
        emit(error_object("domain", e.what()));
        return kExitDomain;
    } catch (const std::domain_error& e) {
        emit(error_object("domain", e.what()));
        return kExitDomain;
    } catch (const std::out_of_range& e) {
        emit(error_object("domain", e.what()));
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        emit(error_object("internal", e.what()));
        return kExitInternal;
    }
}

} // namespace pencilforge::cli
