#pragma once

// Text rendering of reports. Every JSON field becomes exactly one line
// (or one header line for nested objects and arrays), so the text form and
// the JSON form carry the same content in the same order.

#include "eqlines/certificate.hpp"
#include "eqlines/verifier.hpp"

#include <ostream>
#include <sstream>
#include <string>

namespace eqlines {

namespace detail {

inline std::string scalar_text(const Json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_null())
        return "-";
    return j.dump();
}

inline bool is_srg_object(const Json& j)
{
    return j.is_object() && j.size() == 4 && j.contains("v") && j.contains("k") && j.contains("lambda") &&
           j.contains("mu");
}

inline std::string srg_text(const Json& j)
{
    return "srg(" + j["v"].dump() + "," + j["k"].dump() + "," + j["lambda"].dump() + "," + j["mu"].dump() + ")";
}

inline bool is_flat(const Json& j)
{
    if (is_srg_object(j))
        return true;
    if (j.is_array())
        return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive() || is_srg_object(e); });
    return j.is_primitive();
}

inline std::string flat_text(const Json& j)
{
    if (is_srg_object(j))
        return srg_text(j);
    if (j.is_array()) {
        std::string out = "[";
        for (std::size_t i = 0; i < j.size(); ++i)
            out += (i ? ", " : "") + flat_text(j[i]);
        return out + "]";
    }
    return scalar_text(j);
}

inline void render(std::ostream& os, const Json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_flat(value)) {
                os << pad << key << ": " << flat_text(value) << '\n';
            } else {
                os << pad << key << ":\n";
                render(os, value, indent + 1);
            }
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (is_flat(j[i])) {
                os << pad << "- " << flat_text(j[i]) << '\n';
            } else {
                os << pad << "[" << i << "]\n";
                render(os, j[i], indent + 1);
            }
        }
    } else {
        os << pad << flat_text(j) << '\n';
    }
}

} // namespace detail

inline std::string render_text(const Json& j)
{
    std::ostringstream os;
    detail::render(os, j, 0);
    return os.str();
}

inline Json to_json(const GramReport& r)
{
    Json classes = Json::array();
    for (const ValueClass& c : r.distinct_offdiag)
        classes.push_back(Json{{"value", c.value}, {"count", c.count}});
    return Json{{"construction", r.construction},
                {"size", r.size},
                {"ambient", r.ambient},
                {"numeric_rank", r.numeric_rank},
                {"min_eigenvalue", r.min_eigenvalue},
                {"distinct_offdiag", classes},
                {"frame_potential", r.frame_potential},
                {"centroid_norm", r.centroid_norm},
                {"psd", r.verdicts.psd},
                {"two_distance", r.verdicts.two_distance},
                {"equiangular", r.verdicts.equiangular},
                {"tight_frame", r.verdicts.tight_frame},
                {"two_design", r.verdicts.two_design}};
}

} // namespace eqlines
