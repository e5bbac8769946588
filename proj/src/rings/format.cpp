#include "tsurf/rings/format.hpp"

#include <algorithm>

#include "tsurf/core/parse.hpp"

namespace tsurf {

std::string Certificate::label() const {
    if (source == Source::Product) return "(MV)_" + std::to_string(rows.at(0) + 1);
    std::string s = "Pf[";
    for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? "," : "") + std::to_string(rows[i] + 1);
    return s + "]";
}

std::string Certificate::combination_str() const {
    if (combination.empty()) return "0";
    std::string s;
    for (const auto& [name, m] : combination) {
        if (!s.empty()) s += " + ";
        if (m == Polynomial::constant(m.ring(), 1))
            s += name;
        else if (m == Polynomial::constant(m.ring(), -1))
            s += "-" + name;
        else
            s += "(" + m.str() + ")*" + name;
    }
    return s;
}

namespace {

Certificate parse_certificate(const nlohmann::json& c, std::size_t n, const Ring& ring, const std::string& name) {
    Certificate cert;
    if (c.contains("pfaffian")) {
        for (const auto& r : c.at("pfaffian")) cert.rows.push_back(r.get<std::size_t>() - 1);
    } else {
        cert.source = Certificate::Source::Product;
        cert.rows.push_back(c.at("product").get<std::size_t>() - 1);
    }
    for (auto r : cert.rows)
        if (r >= n) throw std::invalid_argument(name + ": certificate row out of range");
    for (const auto& t : c.at("combination"))
        cert.combination.emplace_back(t.at(0).get<std::string>(), parse_polynomial(t.at(1).get<std::string>(), ring));
    return cert;
}

}  // namespace

RelationFormat RelationFormat::from_json(const std::string& name, const nlohmann::json& j, const Ring& ring) {
    const std::size_t n = j.at("size").get<std::size_t>();
    RelationFormat f{name, SkewMatrix(ring, n), {}, {}};
    const auto& upper = j.at("upper");
    if (upper.size() != n - 1) throw std::invalid_argument(name + ": upper triangle needs " + std::to_string(n - 1) + " rows");
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (upper[i].size() != n - 1 - i) throw std::invalid_argument(name + ": upper row " + std::to_string(i + 1) + " has the wrong length");
        for (std::size_t k = 0; k < upper[i].size(); ++k)
            f.matrix.set(i, i + 1 + k, parse_polynomial(upper[i][k].get<std::string>(), ring));
    }
    for (const auto& v : j.at("vector")) f.vector.push_back(parse_polynomial(v.get<std::string>(), ring));
    if (f.vector.size() != n) throw std::invalid_argument(name + ": vector length differs from matrix size");
    for (const auto& c : j.at("certificates")) f.certificates.push_back(parse_certificate(c, n, ring, name));
    return f;
}

Polynomial certificate_source(const RelationFormat& fmt, const Certificate& c) {
    if (c.source == Certificate::Source::Pfaffian) return pfaffian(fmt.matrix, c.rows);
    Polynomial s(fmt.matrix.ring());
    for (std::size_t k = 0; k < fmt.matrix.size(); ++k) s += fmt.matrix(c.rows[0], k) * fmt.vector[k];
    return s;
}

namespace {

Polynomial residual_of(const RelationFormat& fmt, const Certificate& c, const RelationSystem& rels) {
    Polynomial r = certificate_source(fmt, c);
    for (const auto& [name, m] : c.combination) r -= m * rels[name];
    return r;
}

}  // namespace

CheckResult check_certificate(const RelationFormat& fmt, const Certificate& c, const RelationSystem& rels) {
    Polynomial r = residual_of(fmt, c, rels);
    return {fmt.name + " " + c.label() + " = " + c.combination_str(), r.is_zero(), "0", r.str()};
}

std::vector<CheckResult> check_certificates(const RelationFormat& fmt, const RelationSystem& rels) {
    std::vector<CheckResult> out;
    for (const auto& c : fmt.certificates) out.push_back(check_certificate(fmt, c, rels));
    return out;
}

std::vector<CheckResult> verify_format(const std::vector<RelationFormat>& formats, const RelationSystem& rels,
                                       const std::vector<std::string>& cover) {
    std::vector<CheckResult> out;
    std::set<std::string> hit;
    for (const auto& fmt : formats) {
        for (const auto& c : fmt.certificates) {
            Polynomial r = residual_of(fmt, c, rels);
            if (!r.is_zero())
                throw CertificateFailed(fmt.name + " " + c.label() + " = " + c.combination_str() + " fails", r);
            out.push_back({fmt.name + " " + c.label() + " = " + c.combination_str(), true, "0", "0"});
            for (const auto& [name, m] : c.combination) hit.insert(name);
        }
        // completeness: every 4x4 Pfaffian and every product row has a certificate
        std::vector<std::string> missing;
        for (const auto& sp : sub_pfaffians(fmt.matrix, 4)) {
            bool found = std::any_of(fmt.certificates.begin(), fmt.certificates.end(), [&](const Certificate& c) {
                return c.source == Certificate::Source::Pfaffian && c.rows == sp.rows;
            });
            if (!found) missing.push_back(Certificate{Certificate::Source::Pfaffian, sp.rows, {}}.label());
        }
        for (std::size_t i = 0; i < fmt.matrix.size(); ++i) {
            bool found = std::any_of(fmt.certificates.begin(), fmt.certificates.end(), [&](const Certificate& c) {
                return c.source == Certificate::Source::Product && c.rows[0] == i;
            });
            if (!found) missing.push_back(Certificate{Certificate::Source::Product, {i}, {}}.label());
        }
        std::string m;
        for (const auto& s : missing) m += (m.empty() ? "" : " ") + s;
        out.push_back({fmt.name + ": every 4x4 Pfaffian and every row of MV is certified", missing.empty(),
                       "none missing", missing.empty() ? "none missing" : m});
    }
    std::string absent, extra;
    for (const auto& n : cover)
        if (!hit.count(n)) absent += (absent.empty() ? "" : " ") + n;
    for (const auto& n : hit)
        if (std::find(cover.begin(), cover.end(), n) == cover.end()) extra += (extra.empty() ? "" : " ") + n;
    std::string want;
    for (const auto& n : cover) want += (want.empty() ? "" : " ") + n;
    std::string got;
    for (const auto& n : hit) got += (got.empty() ? "" : " ") + n;
    out.push_back({"certificates cover exactly the relations", absent.empty() && extra.empty(), want,
                   absent.empty() && extra.empty() ? want : got});
    return out;
}

}  // namespace tsurf

namespace tsurf {

RelationSystem format_relations(const RelationFormat& fmt, const std::map<std::string, int>& degrees) {
    RelationSystem sys{fmt.matrix.ring(), degrees, {}};
    auto add = [&](const Certificate& c) {
        Polynomial p = certificate_source(fmt, c);
        if (!p.is_zero()) sys.relations.push_back({c.label(), p, 0});
    };
    for (const auto& sp : sub_pfaffians(fmt.matrix, 4)) add(Certificate{Certificate::Source::Pfaffian, sp.rows, {}});
    for (std::size_t i = 0; i < fmt.matrix.size(); ++i) add(Certificate{Certificate::Source::Product, {i}, {}});
    for (auto& r : sys.relations) r.degree = sys.degree_of(r.poly);
    return sys;
}

}  // namespace tsurf

namespace tsurf {

const RelationFormat& FormatLibrary::at(const std::string& name) const {
    auto it = formats.find(name);
    if (it == formats.end()) throw std::invalid_argument("no format named '" + name + "'");
    return it->second;
}

FormatLibrary FormatLibrary::from_json(const nlohmann::json& j, const Ring& ring) {
    FormatLibrary lib;
    for (const auto& [name, fj] : j.items()) {
        if (name == "published") continue;
        lib.formats.emplace(name, RelationFormat::from_json(name, fj, ring));
        if (fj.contains("system")) lib.system_of[name] = fj.at("system").get<std::string>();
    }
    if (j.contains("published"))
        for (const auto& c : j.at("published")) {
            PublishedClaim claim{c.at("format").get<std::string>(), {}};
            claim.certificate = parse_certificate(c, lib.at(claim.format).matrix.size(), ring, claim.format);
            lib.published.push_back(std::move(claim));
        }
    return lib;
}

}  // namespace tsurf
