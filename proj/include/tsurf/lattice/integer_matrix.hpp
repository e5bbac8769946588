#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsurf {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

struct RankDeficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntegerMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;
    std::vector<IntVector> row_list() const;
    IntegerMatrix transpose() const;
    IntegerMatrix select_columns(const std::vector<std::size_t>& cols) const;
    void append_row(const IntVector& r);
    // new column appended on the right
    IntegerMatrix with_column(const IntVector& c) const;

    IntVector operator*(const IntVector& v) const;
    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    bool operator==(const IntegerMatrix& o) const = default;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

IntVector make_vector(std::initializer_list<long> v);
IntVector primitive(IntVector v);  // divided by the gcd of its entries
std::string vector_str(const IntVector& v);

// row-style Hermite normal form: same row lattice, upper echelon, positive
// pivots, entries above each pivot reduced into [0, pivot); zero rows dropped
IntegerMatrix hermite_normal_form(const IntegerMatrix& a);
std::size_t rank(const IntegerMatrix& a);
Integer determinant(const IntegerMatrix& a);
// integer inverse of a unimodular matrix
std::optional<IntegerMatrix> unimodular_inverse(const IntegerMatrix& a);

// rows: a Z-basis of {v : A v = 0}, in Hermite normal form (so every row is
// primitive with positive first nonzero entry)
IntegerMatrix kernel_basis(const IntegerMatrix& a);

// integer coordinates of v in the row basis b (rows in echelon form), or
// nullopt when v is not in the row lattice
std::optional<IntVector> lattice_coordinates(const IntegerMatrix& echelon_basis, const IntVector& v);

// Gale dual: one primitive vector per column of the weight matrix such that
// sum_i w_i v_i = 0 for every weight row w.  A maximal set of columns that
// extends to a lattice basis, chosen greedily in column order, is mapped to
// the first standard basis vectors; the rest of the basis comes from a
// Hermite normal form.
std::vector<IntVector> gale_rays(const IntegerMatrix& weights);

}  // namespace tsurf
