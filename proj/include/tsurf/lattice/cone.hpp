#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "tsurf/lattice/integer_matrix.hpp"

namespace tsurf {

struct NotPointed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {v in Z^n : equations * v = 0, v_i >= 0 for flagged i}
struct LatticeCone {
    IntegerMatrix equations;
    std::vector<bool> nonnegative;

    std::size_t dimension() const { return nonnegative.size(); }
    bool contains(const IntVector& v) const;

    // every coordinate nonnegative
    static LatticeCone positive_orthant(IntegerMatrix equations);
    // v >= 0 with grading(v) a nonnegative multiple of ray, written as the
    // vanishing of the 2x2 minors of the stacked pair (grading(v); ray)
    static LatticeCone preimage_of_ray(const IntegerMatrix& grading, const IntVector& ray);
};

struct HilbertBasisOptions {
    // linear functional used for ordering and for the degree bound; defaults
    // to the coordinate sum
    std::optional<std::vector<mpq_class>> grading;
    mpq_class degree_bound = 20;
    // refuse simplicial pieces with more lattice points than this
    Integer max_parallelepiped = 2000000;
};

// primitive generators of the extreme rays, sorted lexicographically
std::vector<IntVector> extreme_rays(const LatticeCone& cone);

// Minimal generating set of the monoid of lattice points in a pointed cone.
// Candidates are the extreme rays plus the lattice points of the half-open
// parallelepipeds spanned by every linearly independent set of rays
// (Caratheodory: an irreducible element that is not a ray lies in one of
// them).  Result ordered by degree ascending, then lexicographically
// descending.  An element above the degree bound is an error, not dropped.
std::vector<IntVector> hilbert_basis(const LatticeCone& cone, const HilbertBasisOptions& options = {});

mpq_class grading_value(const std::vector<mpq_class>& grading, const IntVector& v);

}  // namespace tsurf
