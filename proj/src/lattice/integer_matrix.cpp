#include "tsurf/lattice/integer_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace tsurf {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
        for (long x : r) a_.emplace_back(x);
    }
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), rows.empty() ? cols : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntegerMatrix::row(std::size_t i) const { return IntVector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

IntVector IntegerMatrix::column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<IntVector> IntegerMatrix::row_list() const {
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::select_columns(const std::vector<std::size_t>& cols) const {
    IntegerMatrix s(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols.size(); ++k) s(i, k) = (*this)(i, cols[k]);
    return s;
}

void IntegerMatrix::append_row(const IntVector& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

IntegerMatrix IntegerMatrix::with_column(const IntVector& c) const {
    if (c.size() != rows_) throw std::invalid_argument("column length mismatch");
    IntegerMatrix m(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        m(i, cols_) = c[i];
    }
    return m;
}

IntVector IntegerMatrix::operator*(const IntVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
    IntVector r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

std::string IntegerMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << vector_str(row(i));
    }
    os << ']';
    return os.str();
}

IntVector make_vector(std::initializer_list<long> v) {
    IntVector r;
    for (long x : v) r.emplace_back(x);
    return r;
}

IntVector primitive(IntVector v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

std::string vector_str(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& in) {
    std::vector<IntVector> m = in.row_list();
    const std::size_t cols = in.cols();
    std::size_t pr = 0;  // next pivot row
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && pr < m.size(); ++c) {
        for (;;) {
            // smallest nonzero |entry| among rows pr.. in column c
            std::size_t best = m.size();
            for (std::size_t r = pr; r < m.size(); ++r)
                if (m[r][c] != 0 && (best == m.size() || abs(m[r][c]) < abs(m[best][c]))) best = r;
            if (best == m.size()) break;
            std::swap(m[pr], m[best]);
            bool clean = true;
            for (std::size_t r = pr + 1; r < m.size(); ++r) {
                if (m[r][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[pr][c].get_mpz_t());
                for (std::size_t j = c; j < cols; ++j) m[r][j] -= q * m[pr][j];
                if (m[r][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (pr < m.size() && m[pr][c] != 0) {
            if (m[pr][c] < 0)
                for (auto& x : m[pr]) x = -x;
            for (std::size_t r = 0; r < pr; ++r) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[pr][c].get_mpz_t());
                if (q != 0)
                    for (std::size_t j = 0; j < cols; ++j) m[r][j] -= q * m[pr][j];
            }
            pivots.push_back(c);
            ++pr;
        }
    }
    m.resize(pr);
    return IntegerMatrix::from_rows(m, cols);
}

std::size_t rank(const IntegerMatrix& a) { return hermite_normal_form(a).rows(); }

Integer determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    IntegerMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::optional<IntegerMatrix> unimodular_inverse(const IntegerMatrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) return std::nullopt;
    Integer d = determinant(a);
    if (d != 1 && d != -1) return std::nullopt;
    // HNF of [A | I] turns A into the identity; the right block is A^-1
    IntegerMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    IntegerMatrix h = hermite_normal_form(aug);
    IntegerMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = h(i, n + j);
    return inv;
}

IntegerMatrix kernel_basis(const IntegerMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntegerMatrix aug(n, m + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug(i, j) = a(j, i);
        aug(i, m + i) = 1;
    }
    IntegerMatrix h = hermite_normal_form(aug);
    IntegerMatrix k(0, n);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        bool zero = true;
        for (std::size_t j = 0; j < m && zero; ++j)
            if (h(r, j) != 0) zero = false;
        if (!zero) continue;
        IntVector v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = h(r, m + j);
        k.append_row(v);
    }
    if (k.rows() == 0) return IntegerMatrix(0, n);
    return hermite_normal_form(k);
}

std::optional<IntVector> lattice_coordinates(const IntegerMatrix& b, const IntVector& v) {
    IntVector rest = v, coords(b.rows(), 0);
    for (std::size_t k = 0; k < b.rows(); ++k) {
        std::size_t p = 0;
        while (p < b.cols() && b(k, p) == 0) ++p;
        if (p == b.cols()) return std::nullopt;
        if (rest[p] % b(k, p) != 0) return std::nullopt;
        coords[k] = rest[p] / b(k, p);
        for (std::size_t j = 0; j < b.cols(); ++j) rest[j] -= coords[k] * b(k, j);
    }
    for (const auto& x : rest)
        if (x != 0) return std::nullopt;
    return coords;
}

namespace {

// the rows span a saturated sublattice: gcd of the maximal minors is 1
bool saturated_rows(const std::vector<IntVector>& rows) {
    const std::size_t s = rows.size(), d = rows.front().size();
    IntegerMatrix a = IntegerMatrix::from_rows(rows, d);
    Integer g = 0;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
        Integer det = determinant(a.select_columns(idx));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
        if (g == 1) return true;
        std::size_t i = s;
        while (i > 0 && idx[i - 1] == d - s + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<IntVector> gale_rays(const IntegerMatrix& weights) {
    const std::size_t m = weights.cols();
    if (rank(weights) < weights.rows()) throw RankDeficient("weight matrix does not have full row rank");
    IntegerMatrix k = kernel_basis(weights);
    const std::size_t d = k.rows();
    IntegerMatrix v = k;
    if (d > 0) {
        // Greedy in column order: keep a column while the chosen ones still
        // extend to a basis.  An appended column (a toric blowup) cannot
        // change an earlier choice, so when the old columns already held a
        // full basis the old rays keep their coordinates.
        std::vector<std::size_t> chosen;
        std::vector<IntVector> vecs;
        for (std::size_t j = 0; j < m && chosen.size() < d; ++j) {
            vecs.push_back(k.column(j));
            if (saturated_rows(vecs)) {
                chosen.push_back(j);
            } else {
                vecs.pop_back();
            }
        }
        // V with V*C = [I; 0] from the Hermite form of [C | I]; the chosen
        // columns are saturated, so the pivots of the C block are all 1
        const std::size_t s = chosen.size();
        IntegerMatrix c = k.select_columns(chosen);
        IntegerMatrix aug(d, s + d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < s; ++j) aug(i, j) = c(i, j);
            aug(i, s + i) = 1;
        }
        IntegerMatrix h = hermite_normal_form(aug);
        std::vector<std::size_t> right(d);
        for (std::size_t j = 0; j < d; ++j) right[j] = s + j;
        v = h.select_columns(right) * k;
    }
    std::vector<IntVector> rays;
    for (std::size_t j = 0; j < m; ++j) rays.push_back(v.column(j));
    return rays;
}

}  // namespace tsurf
