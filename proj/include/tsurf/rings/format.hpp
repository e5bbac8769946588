#pragma once

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

#include "tsurf/core/skew.hpp"
#include "tsurf/rings/relations.hpp"

namespace tsurf {

struct CertificateFailed : Error {
    Polynomial residual;
    CertificateFailed(const std::string& what, Polynomial r) : Error(what), residual(std::move(r)) {}
};

// source == sum multiplier_k * R_k, the source being a principal Pfaffian
// (rows, 0-based) or one row of M*V.  An empty combination certifies 0.
struct Certificate {
    enum class Source { Pfaffian, Product };
    Source source = Source::Pfaffian;
    std::vector<std::size_t> rows;  // Pfaffian rows, or {row} of M*V
    std::vector<std::pair<std::string, Polynomial>> combination;

    std::string label() const;         // "Pf[1,2,4,5]" or "(MV)_3", 1-based
    std::string combination_str() const;
};

struct RelationFormat {
    std::string name;
    SkewMatrix matrix;
    std::vector<Polynomial> vector;
    std::vector<Certificate> certificates;

    // {"size", "upper": rows of the strict upper triangle, "vector",
    //  "certificates": [{"pfaffian": [1-based rows] | "product": row,
    //                    "combination": [[relation, multiplier], ...]}]}
    static RelationFormat from_json(const std::string& name, const nlohmann::json& j, const Ring& ring);
};

Polynomial certificate_source(const RelationFormat& fmt, const Certificate& c);

// Checks every certificate as an exact identity (CertificateFailed with the
// residual on the first failure), that every 4x4 Pfaffian and every row of
// M*V is certified, and that the certificates together mention every
// relation of `cover`.
std::vector<CheckResult> verify_format(const std::vector<RelationFormat>& formats, const RelationSystem& rels,
                                       const std::vector<std::string>& cover);

// failures recorded (residual in `actual`) instead of thrown
CheckResult check_certificate(const RelationFormat& fmt, const Certificate& c, const RelationSystem& rels);
std::vector<CheckResult> check_certificates(const RelationFormat& fmt, const RelationSystem& rels);

}  // namespace tsurf

namespace tsurf {

// the nonzero 4x4 Pfaffians and rows of M*V as a relation system, named by
// Certificate::label()
RelationSystem format_relations(const RelationFormat& fmt, const std::map<std::string, int>& degrees);

}  // namespace tsurf

namespace tsurf {

// a certificate as printed in the source, kept for comparison with the
// checked one
struct PublishedClaim {
    std::string format;
    Certificate certificate;
};

// formats.json: named formats (each naming the relation system it certifies)
// plus published claims
struct FormatLibrary {
    std::map<std::string, RelationFormat> formats;
    std::map<std::string, std::string> system_of;
    std::vector<PublishedClaim> published;

    const RelationFormat& at(const std::string& name) const;
    static FormatLibrary from_json(const nlohmann::json& j, const Ring& ring);
};

}  // namespace tsurf
