#ifndef M1COH_TABLES_HPP
#define M1COH_TABLES_HPP

#include "abelian_group.hpp"
#include "amalgam.hpp"
#include "moduli.hpp"
#include "serialize.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace m1coh {

enum class Format { Markdown, Csv, Json };

inline std::optional<Format> parse_format(const std::string& s)
{
    if (s == "md")
        return Format::Markdown;
    if (s == "csv")
        return Format::Csv;
    if (s == "json")
        return Format::Json;
    return std::nullopt;
}

/// A grid of rendered groups together with its JSON form.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    nlohmann::ordered_json json = nlohmann::ordered_json::array();
};

inline std::string emit(const Table& t, Format f)
{
    std::ostringstream os;
    switch (f) {
    case Format::Json:
        os << t.json.dump(2) << "\n";
        break;
    case Format::Csv: {
        const auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                os << (i ? "," : "") << cells[i];
            os << "\n";
        };
        line(t.header);
        for (const auto& r : t.rows)
            line(r);
        break;
    }
    case Format::Markdown: {
        const auto line = [&](const std::vector<std::string>& cells) {
            os << "|";
            for (const auto& c : cells)
                os << " " << c << " |";
            os << "\n";
        };
        line(t.header);
        os << "|";
        for (std::size_t i = 0; i < t.header.size(); ++i)
            os << (i == 0 ? "---|" : ":---:|");
        os << "\n";
        for (const auto& r : t.rows)
            line(r);
        break;
    }
    }
    return os.str();
}

inline RenderOptions render_options_for(const CoefficientRing& ring, bool primary)
{
    RenderOptions o;
    o.primary = primary;
    if (ring.kind == CoefficientRing::Kind::Localized)
        o.inverted_primes = ring.inverted;
    return o;
}

inline std::string ring_label(const CoefficientRing& ring)
{
    switch (ring.kind) {
    case CoefficientRing::Kind::PrimeField:
        return "F_" + std::to_string(ring.prime);
    case CoefficientRing::Kind::Localized: {
        std::string s = "Z[1/";
        Integer prod = 1;
        for (const auto& p : ring.inverted)
            prod *= p;
        return s + prod.get_str() + "]";
    }
    case CoefficientRing::Kind::Integers:
        break;
    }
    return "Z";
}

/// Rows H^p(SL2(Z), M_k) for k <= max_k, columns p <= max_p.
inline Table sl2z_table(unsigned max_k, std::size_t max_p, const CoefficientRing& ring = CoefficientRing::integers(),
                        SymConvention convention = SymConvention::Dual, bool primary = false)
{
    const auto opts = render_options_for(ring, primary);
    Table t;
    t.header.push_back("");
    for (std::size_t p = 0; p <= max_p; ++p)
        t.header.push_back("p=" + std::to_string(p));
    for (unsigned k = 0; k <= max_k; ++k) {
        const GroupModule m = sym_module(k, convention);
        std::vector<std::string> row{"H^p(G, M_" + std::to_string(k) + ")"};
        const AmalgamComplex c(ring.kind == CoefficientRing::Kind::PrimeField ? m.reduced_mod(ring.prime) : m,
                               max_p + 2);
        for (std::size_t p = 0; p <= max_p; ++p) {
            FgAbelianGroup g = c.cohomology_at(p);
            if (ring.kind == CoefficientRing::Kind::Localized)
                g = localize(g, ring.inverted);
            row.push_back(render(g, opts));
            nlohmann::ordered_json cell;
            cell["k"] = k;
            cell["p"] = p;
            cell["ring"] = ring_label(ring);
            cell["group"] = to_json(g);
            cell["rendered"] = render(g, opts);
            t.json.push_back(std::move(cell));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// Two rows: H^n(M_{1,1}) and the dagger part of H^n(M_1), n <= max_n <= 9.
inline Table moduli_table(std::size_t max_n, bool primary = false)
{
    if (max_n > kDegenerationBound)
        throw DegenerationUnproven(max_n);
    const RenderOptions opts{primary, {}};
    Table t;
    t.header.push_back("n");
    std::vector<std::string> m11{"H^n(M_{1,1}, Z)"}, dagger{"H^n(M_1, Z)^dagger"};
    for (std::size_t n = 0; n <= max_n; ++n) {
        t.header.push_back(std::to_string(n));
        const auto a = m11_group(n);
        const auto b = dagger_group(n);
        m11.push_back(render(a, opts));
        dagger.push_back(render(b, opts));
        nlohmann::ordered_json cell;
        cell["n"] = n;
        cell["m11"] = to_json(a);
        cell["dagger"] = to_json(b);
        cell["rendered"] = {{"m11", render(a, opts)}, {"dagger", render(b, opts)}};
        t.json.push_back(std::move(cell));
    }
    t.rows = {std::move(m11), std::move(dagger)};
    return t;
}

/// H^n(M_1, Z[1/2]), n <= max_n <= 9.
inline Table moduli_half_table(std::size_t max_n, bool primary = false)
{
    if (max_n > kDegenerationBound)
        throw DegenerationUnproven(max_n);
    const RenderOptions opts{primary, {Integer(2)}};
    Table t;
    t.header.push_back("n");
    std::vector<std::string> row{"H^n(M_1, Z[1/2])"};
    for (std::size_t n = 0; n <= max_n; ++n) {
        t.header.push_back(std::to_string(n));
        const auto g = half_inverted_group(n);
        row.push_back(render(g, opts));
        nlohmann::ordered_json cell;
        cell["n"] = n;
        cell["ring"] = "Z[1/2]";
        cell["group"] = to_json(g);
        cell["rendered"] = render(g, opts);
        t.json.push_back(std::move(cell));
    }
    t.rows.push_back(std::move(row));
    return t;
}

} // namespace m1coh

#endif // M1COH_TABLES_HPP
