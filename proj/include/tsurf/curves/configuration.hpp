#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tsurf/core/errors.hpp"
#include "tsurf/core/polynomial.hpp"

namespace tsurf {

struct NotContractible : Error {
    using Error::Error;
};
struct UnknownCurve : Error {
    using Error::Error;
};

namespace tags {
inline constexpr const char* f_exceptional = "f-exceptional";
inline constexpr const char* eps_exceptional = "epsilon-exceptional";
inline constexpr const char* section = "section";
inline constexpr const char* fiber = "fiber-component";
}  // namespace tags

struct Curve {
    std::string name;
    long self_intersection = 0;
    long genus = 0;  // arithmetic genus
    std::set<std::string> tags;
    std::optional<Rational> coefficient;  // codiscrepancy, on f-exceptional curves

    long k_degree() const { return 2 * genus - 2 - self_intersection; }
    bool has(const std::string& tag) const { return tags.count(tag) > 0; }
};

// Dual graph of a configuration of curves on a smooth surface.  Curves keep
// insertion order; incidences are stored once per unordered pair.
class CurveConfiguration {
public:
    bool minimal = false;
    bool kodaira_dimension_one = false;
    std::optional<long> k_squared;  // of the ambient surface, when known
    long contracted = 0;            // blow-downs since the starting surface
    // T-strings carried along for bookkeeping (by curve name)
    std::vector<std::vector<std::string>> strings;

    void add_curve(Curve c);
    void remove_curve(const std::string& name);
    bool has(const std::string& name) const;
    const Curve& curve(const std::string& name) const;
    Curve& curve(const std::string& name);
    const std::vector<Curve>& curves() const { return curves_; }
    std::vector<std::string> names() const;

    long incidence(const std::string& a, const std::string& b) const;  // a == b gives C^2
    void set_incidence(const std::string& a, const std::string& b, long m);
    void add_incidence(const std::string& a, const std::string& b, long m);
    // curves meeting `name` positively, with multiplicities
    std::vector<std::pair<std::string, long>> neighbours(const std::string& name) const;

    // symmetric storage holds by construction; checks names and signs
    void validate() const;

    static CurveConfiguration from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    std::string to_dot(const std::string& graph_name = "G") const;

    bool operator==(const CurveConfiguration& o) const;

private:
    static std::pair<std::string, std::string> key(const std::string& a, const std::string& b);
    std::vector<Curve> curves_;
    std::map<std::pair<std::string, std::string>, long> inc_;
};

// Contracts a (-1)-curve of arithmetic genus 0: every other curve C meeting it
// m times gains C^2 += m^2, pa += m(m-1)/2, and C.C' += m m'.
CurveConfiguration blow_down(const CurveConfiguration& cfg, const std::string& name);

// Blows up a point lying on the listed curves with the given multiplicities;
// the new (-1)-curve meets each of them m times.
CurveConfiguration blow_up(const CurveConfiguration& cfg, const std::string& new_name,
                           const std::vector<std::pair<std::string, long>>& through,
                           const std::set<std::string>& new_tags = {tags::eps_exceptional});

// Assigns the codiscrepancy coefficients of the chain read from the listed
// curves' self-intersections and tags them f-exceptional.
void assign_codiscrepancy(CurveConfiguration& cfg, const std::vector<std::string>& chain);

// Names and self-intersections of a chain, or std::nullopt when the curves do
// not form a chain of smooth rational curves (consecutive incidence 1, others 0).
std::optional<std::vector<long>> chain_of(const CurveConfiguration& cfg, const std::vector<std::string>& names);

}  // namespace tsurf
