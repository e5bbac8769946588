#pragma once

#include <map>
#include <string>
#include <vector>

#include "tsurf/core/polynomial.hpp"

namespace tsurf {

// One entry of the codiscrepancy menu: a curve of one of the two T-strings.
// Curves are named by position and string, A1 B1 C1 ... for the first string
// and A2 B2 ... for the second.
struct MenuEntry {
    std::string name;
    long self_intersection;
    Rational coefficient;
};
std::vector<MenuEntry> codiscrepancy_menu(const std::vector<long>& first, const std::vector<long>& second);

// A (-1)-curve's incidences with the string curves.
struct GammaProfile {
    std::map<std::string, long> incidences;  // nonzero only
    Rational delta;                          // Delta.Gamma
    Rational kx;                             // Delta.Gamma - 1

    std::string str() const;  // "A1 + A2 (K_X = 1/10)"
};

struct KxBounds {
    Rational lo, hi;
};

// Every nonnegative incidence vector with Delta.Gamma = 1 + K_X.Gamma and
// K_X.Gamma in [lo, hi], each incidence at most its cap (curves without a
// cap are bounded by the target alone).  Sorted by K_X.Gamma, then by the
// incidence vector.
std::vector<GammaProfile> enumerate_gamma_profiles(const std::vector<MenuEntry>& menu, const KxBounds& bounds,
                                                   const std::map<std::string, long>& caps = {});
std::vector<GammaProfile> enumerate_gamma_profiles(const std::vector<long>& first, const std::vector<long>& second,
                                                   const KxBounds& bounds, const std::map<std::string, long>& caps = {});

}  // namespace tsurf
