#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tsurf/core/polynomial.hpp"

namespace tsurf {

// all exponent vectors (over ring) of the given weighted degree in the listed
// variables; other variables keep exponent 0
std::vector<Exponents> weighted_monomials(const Ring& ring, const std::vector<std::pair<std::string, int>>& weights,
                                          int degree);

// Deterministic stand-in for a "general" form: every monomial of the degree
// gets a nonzero integer coefficient in [-bound, bound], drawn from a
// mt19937_64 stream (raw output, so the values do not depend on the standard
// library's distribution implementations).
class FormSampler {
public:
    explicit FormSampler(std::uint64_t seed) : rng_(seed) {}
    Rational nonzero(int bound = 9);
    Polynomial form(const Ring& ring, const std::vector<std::pair<std::string, int>>& weights, int degree,
                    int bound = 9);

private:
    std::mt19937_64 rng_;
};

}  // namespace tsurf
