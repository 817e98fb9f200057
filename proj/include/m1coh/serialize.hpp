#ifndef M1COH_SERIALIZE_HPP
#define M1COH_SERIALIZE_HPP

#include "abelian_group.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace m1coh {

/// {"free_rank": r, "invariant_factors": [d1, ...]}; factors too large for u64 are strings.
inline nlohmann::ordered_json to_json(const FgAbelianGroup& g)
{
    nlohmann::ordered_json j;
    j["free_rank"] = g.free_rank();
    auto factors = nlohmann::ordered_json::array();
    for (const auto& d : g.invariant_factors()) {
        if (d.fits_ulong_p())
            factors.push_back(d.get_ui());
        else
            factors.push_back(d.get_str());
    }
    j["invariant_factors"] = std::move(factors);
    return j;
}

template <typename Json>
FgAbelianGroup group_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("free_rank") || !j.contains("invariant_factors"))
        throw std::invalid_argument("group_from_json: expected free_rank and invariant_factors");
    const auto& r = j.at("free_rank");
    if (!r.is_number_unsigned() && !(r.is_number_integer() && r.template get<long long>() >= 0))
        throw std::invalid_argument("group_from_json: free_rank must be a non-negative integer");
    std::vector<Integer> factors;
    for (const auto& d : j.at("invariant_factors")) {
        Integer v;
        if (d.is_string())
            v = Integer(d.template get<std::string>());
        else if (d.is_number_unsigned())
            v = Integer(d.template get<unsigned long>());
        else if (d.is_number_integer())
            v = Integer(d.template get<long>());
        else
            throw std::invalid_argument("group_from_json: invariant factor must be an integer");
        if (v < 1)
            throw std::invalid_argument("group_from_json: invariant factor must be positive");
        factors.push_back(v);
    }
    return FgAbelianGroup(r.template get<std::size_t>(), std::move(factors));
}

inline FgAbelianGroup group_from_json(const std::string& text)
{
    return group_from_json(nlohmann::json::parse(text));
}

} // namespace m1coh

#endif // M1COH_SERIALIZE_HPP
