#include "pencilforge/base_change.hpp"

#include <charconv>
#include <set>
#include <stdexcept>

namespace pencilforge {

KodairaFibre KodairaFibre::i(int n)
{
    if (n < 0) {
        throw std::invalid_argument("I_n needs n >= 0");
    }
    return {Kind::I, n};
}

KodairaFibre KodairaFibre::i_star(int n)
{
    if (n < 0) {
        throw std::invalid_argument("I_n* needs n >= 0");
    }
    return {Kind::IStar, n};
}

KodairaFibre KodairaFibre::parse(std::string_view symbol)
{
    const std::string_view original = symbol;
    const bool star = !symbol.empty() && symbol.back() == '*';
    if (star) {
        symbol.remove_suffix(1);
    }
    if (symbol == "II") {
        return {star ? Kind::IIStar : Kind::II, 0};
    }
    if (symbol == "III") {
        return {star ? Kind::IIIStar : Kind::III, 0};
    }
    if (symbol == "IV") {
        return {star ? Kind::IVStar : Kind::IV, 0};
    }
    if (symbol.size() >= 2 && symbol.front() == 'I') {
        auto digits = symbol.substr(1);
        int n = -1;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 0) {
            return {star ? Kind::IStar : Kind::I, n};
        }
    }
    throw std::invalid_argument("unknown Kodaira symbol '" + std::string(original) + "'");
}

std::string KodairaFibre::symbol() const
{
    switch (kind) {
    case Kind::I: return "I" + std::to_string(n);
    case Kind::II: return "II";
    case Kind::III: return "III";
    case Kind::IV: return "IV";
    case Kind::IStar: return "I" + std::to_string(n) + "*";
    case Kind::IVStar: return "IV*";
    case Kind::IIIStar: return "III*";
    case Kind::IIStar: return "II*";
    }
    return "?";
}

int KodairaFibre::euler() const
{
    switch (kind) {
    case Kind::I: return n;
    case Kind::II: return 2;
    case Kind::III: return 3;
    case Kind::IV: return 4;
    case Kind::IStar: return n + 6;
    case Kind::IVStar: return 8;
    case Kind::IIIStar: return 9;
    case Kind::IIStar: return 10;
    }
    return 0;
}

bool KodairaFibre::reduced() const
{
    switch (kind) {
    case Kind::IStar:
    case Kind::IVStar:
    case Kind::IIIStar:
    case Kind::IIStar:
        return false;
    default:
        return true;
    }
}

int KodairaFibre::components() const
{
    switch (kind) {
    case Kind::I: return n == 0 ? 1 : n;
    case Kind::II: return 1;
    case Kind::III: return 2;
    case Kind::IV: return 3;
    case Kind::IStar: return n + 5;
    case Kind::IVStar: return 7;
    case Kind::IIIStar: return 8;
    case Kind::IIStar: return 9;
    }
    return 1;
}

FibreConfiguration FibreConfiguration::from_counts(const std::vector<std::pair<KodairaFibre, int>>& counts)
{
    FibreConfiguration config;
    for (const auto& [fibre, count] : counts) {
        if (count < 0) {
            throw std::invalid_argument("negative fibre count for " + fibre.symbol());
        }
        for (int c = 0; c < count; ++c) {
            config.places.push_back({"v" + std::to_string(config.places.size()), fibre});
        }
    }
    return config;
}

const Place* FibreConfiguration::find(std::string_view id) const
{
    for (const auto& p : places) {
        if (p.id == id) {
            return &p;
        }
    }
    return nullptr;
}

BranchLocus::BranchLocus(std::string a, std::string b) : first(std::move(a)), second(std::move(b))
{
    if (first == second) {
        throw std::invalid_argument("a quadratic cover of P^1 has two distinct branch points");
    }
}

std::vector<KodairaFibre> transform_fibre(const KodairaFibre& f, bool ramified)
{
    using K = KodairaFibre::Kind;
    if (!ramified) {
        return {f, f};
    }
    switch (f.kind) {
    case K::I: return {KodairaFibre::i(2 * f.n)};
    case K::II: return {{K::IV, 0}};
    case K::III: return {KodairaFibre::i_star(0)};
    case K::IV: return {{K::IVStar, 0}};
    case K::IStar: return {KodairaFibre::i(2 * f.n)};
    case K::IVStar: return {{K::IV, 0}};
    case K::IIIStar: return {KodairaFibre::i_star(0)};
    case K::IIStar: return {{K::IVStar, 0}};
    }
    throw std::logic_error("unhandled Kodaira kind");
}

int euler_total(const FibreConfiguration& config)
{
    int total = 0;
    for (const auto& p : config.places) {
        total += p.fibre.euler();
    }
    return total;
}

FibreConfiguration base_change(const FibreConfiguration& config, const BranchLocus& branch)
{
    FibreConfiguration out;
    for (const auto& p : config.places) {
        const bool ramified = branch.contains(p.id);
        auto fibres = transform_fibre(p.fibre, ramified);
        if (ramified) {
            out.places.push_back({p.id, fibres.front()});
        } else {
            out.places.push_back({p.id + "'", fibres[0]});
            out.places.push_back({p.id + "''", fibres[1]});
        }
    }
    return out;
}

std::string to_string(SurfaceClass c)
{
    switch (c) {
    case SurfaceClass::Rational: return "Rational";
    case SurfaceClass::K3: return "K3";
    case SurfaceClass::TrivialProduct: return "TrivialProduct";
    }
    return "?";
}

SurfaceClass classify_quadratic_base_change(const FibreConfiguration& config, const BranchLocus& branch)
{
    std::set<std::string_view> seen;
    for (const auto& p : config.places) {
        if (!seen.insert(p.id).second) {
            throw std::invalid_argument("place '" + p.id + "' listed twice");
        }
    }
    const int total = euler_total(config);
    if (total != 12) {
        throw std::invalid_argument("a rational elliptic surface has Euler number 12, configuration sums to "
                                    + std::to_string(total));
    }

    auto is_i0_star = [&](const std::string& id) {
        const Place* p = config.find(id);
        return p != nullptr && p->fibre == KodairaFibre::i_star(0);
    };
    if (is_i0_star(branch.first) && is_i0_star(branch.second)) {
        return SurfaceClass::TrivialProduct;
    }

    const int after = euler_total(base_change(config, branch));
    if (after == 12) {
        return SurfaceClass::Rational;
    }
    if (after == 24) {
        return SurfaceClass::K3;
    }
    throw std::logic_error("quadratic base change produced Euler number " + std::to_string(after));
}

std::string to_string(FibreProductGenus g)
{
    switch (g) {
    case FibreProductGenus::Genus0: return "genus 0";
    case FibreProductGenus::Genus1: return "genus 1";
    case FibreProductGenus::Split: return "Split";
    }
    return "?";
}

FibreProductGenus fibre_product_genus(const BranchLocus& a, const BranchLocus& b)
{
    const int shared = int(b.contains(a.first)) + int(b.contains(a.second));
    switch (shared) {
    case 0: return FibreProductGenus::Genus1;
    case 1: return FibreProductGenus::Genus0;
    default: return FibreProductGenus::Split;
    }
}

} // namespace pencilforge
