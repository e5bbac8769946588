#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tsurf/curves/configuration.hpp"
#include "tsurf/tsing/tchain.hpp"

namespace tsurf {

struct UnknownRecipe : Error {
    using Error::Error;
};

// Minimal elliptic surfaces with a (-3)-section S and one special fibre:
//   "III-fiber"     F1, F2 tangent (-2)-curves, S meets F2
//   "I3-fiber"      a triangle F1, F2, F3 of (-2)-curves, S meets F1
//   "I2+Ir-fibers"  F1, F2 meeting twice, plus an I_r fibre G1..Gr; S meets
//                   F2 and G1
// All carry K^2 = 0 and the minimal / Kodaira dimension one flags.
CurveConfiguration base_surface(const std::string& fibre, long r = 2);
std::vector<std::string> base_surfaces();

struct BlowupStep {
    std::string name;
    std::vector<std::pair<std::string, long>> through;
};

struct Recipe {
    std::string name;
    std::string base;
    long r = 2;  // length of the I_r fibre, where there is one
    std::vector<BlowupStep> blowups;
    std::vector<std::vector<std::string>> strings;  // claimed T-strings
    std::vector<std::vector<long>> expected;        // their self-intersections, negated

    static Recipe from_json(const nlohmann::json& j);
};

struct ExampleSurface {
    Recipe recipe;
    CurveConfiguration configuration;  // after the blowups, codiscrepancies assigned
    std::vector<std::vector<long>> chains;
    std::vector<TSingularity> singularities;
    std::vector<std::string> connecting;  // (-1)-curves meeting every string
    Rational ktilde_squared;              // 1 + sum of Delta_j^2
};

// Applies the blowups and checks the claimed strings: each is a chain with
// the expected self-intersections, recognised as a T-chain (not a rational
// double point), the strings are pairwise disjoint, the result breaks none of
// the rules, and 1 + sum Delta_j^2 = -(number of blowups).  std::logic_error
// on any failure.
ExampleSurface build_example(const Recipe& recipe);

// data/recipes.json by name, UnknownRecipe otherwise
Recipe find_recipe(const nlohmann::json& recipes, const std::string& name);

}  // namespace tsurf
