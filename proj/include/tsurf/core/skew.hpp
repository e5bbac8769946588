#pragma once

#include <cstddef>
#include <vector>

#include "tsurf/core/polynomial.hpp"

namespace tsurf {

// Skew-symmetric matrix; only the strict upper triangle is stored.
class SkewMatrix {
public:
    SkewMatrix(Ring ring, std::size_t n);

    std::size_t size() const { return n_; }
    const Ring& ring() const { return ring_; }
    // (i,j) with i != j; setting below the diagonal stores the negation
    void set(std::size_t i, std::size_t j, const Polynomial& p);
    Polynomial operator()(std::size_t i, std::size_t j) const;

    std::vector<Polynomial> times(const std::vector<Polynomial>& v) const;
    std::vector<std::vector<Polynomial>> dense() const;

private:
    std::size_t slot(std::size_t i, std::size_t j) const;
    Ring ring_;
    std::size_t n_;
    std::vector<Polynomial> upper_;
};

// Pfaffian of the principal submatrix on the given rows (all rows when empty
// list is not requested explicitly); odd size gives 0, empty set gives 1.
Polynomial pfaffian(const SkewMatrix& m);
Polynomial pfaffian(const SkewMatrix& m, const std::vector<std::size_t>& rows);

struct SubPfaffian {
    std::vector<std::size_t> rows;  // 0-based, increasing
    Polynomial value;
};

// all k x k principal Pfaffians in lexicographic order of row sets
std::vector<SubPfaffian> sub_pfaffians(const SkewMatrix& m, std::size_t k);

// Laplace expansion with memoised minors
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

}  // namespace tsurf
