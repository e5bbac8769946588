#include "tsurf/curves/configuration.hpp"

#include <algorithm>
#include <sstream>

#include "tsurf/tsing/tchain.hpp"

namespace tsurf {

std::pair<std::string, std::string> CurveConfiguration::key(const std::string& a, const std::string& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

void CurveConfiguration::add_curve(Curve c) {
    if (c.name.empty()) throw std::invalid_argument("curve without a name");
    if (has(c.name)) throw std::invalid_argument("curve '" + c.name + "' already present");
    if (c.genus < 0) throw std::invalid_argument("negative arithmetic genus on '" + c.name + "'");
    curves_.push_back(std::move(c));
}

void CurveConfiguration::remove_curve(const std::string& name) {
    auto it = std::find_if(curves_.begin(), curves_.end(), [&](const Curve& c) { return c.name == name; });
    if (it == curves_.end()) throw UnknownCurve("no curve '" + name + "'");
    curves_.erase(it);
    for (auto i = inc_.begin(); i != inc_.end();) {
        if (i->first.first == name || i->first.second == name)
            i = inc_.erase(i);
        else
            ++i;
    }
    for (auto& s : strings) s.erase(std::remove(s.begin(), s.end(), name), s.end());
    strings.erase(std::remove_if(strings.begin(), strings.end(), [](const auto& s) { return s.empty(); }),
                  strings.end());
}

bool CurveConfiguration::has(const std::string& name) const {
    return std::any_of(curves_.begin(), curves_.end(), [&](const Curve& c) { return c.name == name; });
}

const Curve& CurveConfiguration::curve(const std::string& name) const {
    for (const auto& c : curves_)
        if (c.name == name) return c;
    throw UnknownCurve("no curve '" + name + "'");
}

Curve& CurveConfiguration::curve(const std::string& name) {
    for (auto& c : curves_)
        if (c.name == name) return c;
    throw UnknownCurve("no curve '" + name + "'");
}

std::vector<std::string> CurveConfiguration::names() const {
    std::vector<std::string> out;
    for (const auto& c : curves_) out.push_back(c.name);
    return out;
}

long CurveConfiguration::incidence(const std::string& a, const std::string& b) const {
    if (a == b) return curve(a).self_intersection;
    curve(a);
    curve(b);
    auto it = inc_.find(key(a, b));
    return it == inc_.end() ? 0 : it->second;
}

void CurveConfiguration::set_incidence(const std::string& a, const std::string& b, long m) {
    if (a == b) {
        curve(a).self_intersection = m;
        return;
    }
    curve(a);
    curve(b);
    if (m < 0) throw std::invalid_argument("negative incidence between '" + a + "' and '" + b + "'");
    if (m == 0)
        inc_.erase(key(a, b));
    else
        inc_[key(a, b)] = m;
}

void CurveConfiguration::add_incidence(const std::string& a, const std::string& b, long m) {
    set_incidence(a, b, incidence(a, b) + m);
}

std::vector<std::pair<std::string, long>> CurveConfiguration::neighbours(const std::string& name) const {
    std::vector<std::pair<std::string, long>> out;
    for (const auto& c : curves_) {
        if (c.name == name) continue;
        long m = incidence(name, c.name);
        if (m > 0) out.emplace_back(c.name, m);
    }
    return out;
}

void CurveConfiguration::validate() const {
    for (const auto& [k, m] : inc_) {
        if (!has(k.first) || !has(k.second)) throw std::logic_error("incidence mentions a removed curve");
        if (m <= 0) throw std::logic_error("stored incidence " + k.first + "." + k.second + " is not positive");
    }
    for (const auto& c : curves_)
        if (c.genus < 0) throw std::logic_error("negative arithmetic genus on '" + c.name + "'");
    for (const auto& s : strings)
        for (const auto& n : s) curve(n);
}

bool CurveConfiguration::operator==(const CurveConfiguration& o) const { return to_json() == o.to_json(); }

CurveConfiguration CurveConfiguration::from_json(const nlohmann::json& j) {
    CurveConfiguration cfg;
    for (const auto& c : j.at("curves")) {
        Curve cur;
        cur.name = c.at("name").get<std::string>();
        cur.self_intersection = c.at("self_intersection").get<long>();
        cur.genus = c.value("genus", 0L);
        for (const auto& t : c.value("tags", std::vector<std::string>{})) {
            if (t != tags::f_exceptional && t != tags::eps_exceptional && t != tags::section && t != tags::fiber)
                throw std::invalid_argument("unknown tag '" + t + "' on '" + cur.name + "'");
            cur.tags.insert(t);
        }
        if (c.contains("coefficient")) cur.coefficient = Rational(c.at("coefficient").get<std::string>());
        if (cur.coefficient) cur.coefficient->canonicalize();
        cfg.add_curve(std::move(cur));
    }
    for (const auto& e : j.value("incidences", nlohmann::json::array())) {
        if (e.size() != 3) throw std::invalid_argument("an incidence is [curve, curve, multiplicity]");
        std::string a = e[0].get<std::string>(), b = e[1].get<std::string>();
        if (a == b) throw std::invalid_argument("self-incidence of '" + a + "' listed as an incidence");
        cfg.set_incidence(a, b, e[2].get<long>());
    }
    if (j.contains("flags")) {
        cfg.minimal = j["flags"].value("minimal", false);
        cfg.kodaira_dimension_one = j["flags"].value("kodaira_dimension_one", false);
    }
    if (j.contains("k_squared")) cfg.k_squared = j.at("k_squared").get<long>();
    cfg.contracted = j.value("contracted", 0L);
    for (const auto& s : j.value("strings", nlohmann::json::array())) {
        auto names = s.get<std::vector<std::string>>();
        bool has_coeffs = std::all_of(names.begin(), names.end(),
                                      [&](const std::string& n) { return cfg.curve(n).coefficient.has_value(); });
        if (!has_coeffs) assign_codiscrepancy(cfg, names);
        cfg.strings.push_back(names);
    }
    cfg.validate();
    return cfg;
}

nlohmann::json CurveConfiguration::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : curves_) {
        nlohmann::json o{{"name", c.name}, {"self_intersection", c.self_intersection}, {"genus", c.genus},
                         {"tags", std::vector<std::string>(c.tags.begin(), c.tags.end())}};
        if (c.coefficient) o["coefficient"] = c.coefficient->get_str();
        cs.push_back(o);
    }
    nlohmann::json inc = nlohmann::json::array();
    for (const auto& [k, m] : inc_) inc.push_back({k.first, k.second, m});
    nlohmann::json out{{"curves", cs},
                       {"incidences", inc},
                       {"flags", {{"minimal", minimal}, {"kodaira_dimension_one", kodaira_dimension_one}}},
                       {"strings", strings},
                       {"contracted", contracted}};
    if (k_squared) out["k_squared"] = *k_squared;
    return out;
}

std::string CurveConfiguration::to_dot(const std::string& graph_name) const {
    std::ostringstream os;
    os << "graph \"" << graph_name << "\" {\n";
    for (const auto& c : curves_) {
        os << "  \"" << c.name << "\" [label=\"" << c.name << "\\n" << c.self_intersection;
        if (c.genus) os << ", pa " << c.genus;
        os << "\"";
        if (c.self_intersection == -1 && c.genus == 0)
            os << ", shape=box";
        else if (c.has(tags::f_exceptional))
            os << ", shape=ellipse, style=bold";
        os << "];\n";
    }
    for (const auto& [k, m] : inc_) {
        os << "  \"" << k.first << "\" -- \"" << k.second << "\"";
        if (m > 1) os << " [label=\"" << m << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

CurveConfiguration blow_down(const CurveConfiguration& cfg, const std::string& name) {
    const Curve& g = cfg.curve(name);
    if (g.self_intersection != -1 || g.genus != 0)
        throw NotContractible("'" + name + "' has self-intersection " + std::to_string(g.self_intersection) +
                              " and arithmetic genus " + std::to_string(g.genus) + "; only (-1)-curves of genus 0 contract");
    CurveConfiguration out = cfg;
    auto nb = cfg.neighbours(name);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        const auto& [c, m] = nb[i];
        Curve& cur = out.curve(c);
        cur.self_intersection += m * m;
        cur.genus += m * (m - 1) / 2;
        for (std::size_t j = i + 1; j < nb.size(); ++j) out.add_incidence(c, nb[j].first, m * nb[j].second);
    }
    out.remove_curve(name);
    if (out.k_squared) *out.k_squared += 1;
    ++out.contracted;
    out.validate();
    return out;
}

CurveConfiguration blow_up(const CurveConfiguration& cfg, const std::string& new_name,
                           const std::vector<std::pair<std::string, long>>& through, const std::set<std::string>& new_tags) {
    CurveConfiguration out = cfg;
    for (std::size_t i = 0; i < through.size(); ++i) {
        const auto& [c, m] = through[i];
        if (m <= 0) throw std::invalid_argument("multiplicity of '" + c + "' at the centre must be positive");
        for (std::size_t j = i + 1; j < through.size(); ++j) {
            long left = out.incidence(c, through[j].first) - m * through[j].second;
            if (left < 0)
                throw std::invalid_argument("'" + c + "' and '" + through[j].first +
                                            "' do not meet with the stated multiplicities at the centre");
            out.set_incidence(c, through[j].first, left);
        }
        Curve& cur = out.curve(c);
        cur.self_intersection -= m * m;
        cur.genus -= m * (m - 1) / 2;
        if (cur.genus < 0) throw std::invalid_argument("'" + c + "' cannot have multiplicity " + std::to_string(m));
    }
    out.add_curve(Curve{new_name, -1, 0, new_tags, std::nullopt});
    for (const auto& [c, m] : through) out.set_incidence(new_name, c, m);
    if (out.k_squared) *out.k_squared -= 1;
    out.validate();
    return out;
}

std::optional<std::vector<long>> chain_of(const CurveConfiguration& cfg, const std::vector<std::string>& names) {
    std::vector<long> b;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const Curve& c = cfg.curve(names[i]);
        if (c.genus != 0) return std::nullopt;
        b.push_back(-c.self_intersection);
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            long want = j == i + 1 ? 1 : 0;
            if (cfg.incidence(names[i], names[j]) != want) return std::nullopt;
        }
    }
    return b;
}

void assign_codiscrepancy(CurveConfiguration& cfg, const std::vector<std::string>& chain) {
    auto b = chain_of(cfg, chain);
    if (!b) throw std::invalid_argument("the listed curves do not form a chain of rational curves");
    Codiscrepancy cd = codiscrepancy(*b);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        Curve& c = cfg.curve(chain[i]);
        c.coefficient = cd.coefficients[i];
        c.tags.insert(tags::f_exceptional);
    }
}

}  // namespace tsurf
