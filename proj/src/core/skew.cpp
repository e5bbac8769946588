#include "tsurf/core/skew.hpp"

#include <cstdint>
#include <unordered_map>

namespace tsurf {

SkewMatrix::SkewMatrix(Ring ring, std::size_t n) : ring_(std::move(ring)), n_(n) {
    if (n > 62) throw std::invalid_argument("skew matrix too large");
    upper_.assign(n * (n > 0 ? n - 1 : 0) / 2, Polynomial(ring_));
}

std::size_t SkewMatrix::slot(std::size_t i, std::size_t j) const {
    // row-major strict upper triangle
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

void SkewMatrix::set(std::size_t i, std::size_t j, const Polynomial& p) {
    if (i >= n_ || j >= n_ || i == j) throw std::out_of_range("skew matrix index");
    Polynomial q = p.ring() == ring_ ? p : p.in(ring_);
    if (i < j)
        upper_[slot(i, j)] = q;
    else
        upper_[slot(j, i)] = -q;
}

Polynomial SkewMatrix::operator()(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("skew matrix index");
    if (i == j) return Polynomial(ring_);
    return i < j ? upper_[slot(i, j)] : -upper_[slot(j, i)];
}

std::vector<Polynomial> SkewMatrix::times(const std::vector<Polynomial>& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length does not match matrix");
    std::vector<Polynomial> out(n_, Polynomial(ring_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (i != j && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j].in(ring_);
    return out;
}

std::vector<std::vector<Polynomial>> SkewMatrix::dense() const {
    std::vector<std::vector<Polynomial>> d(n_, std::vector<Polynomial>(n_, Polynomial(ring_)));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) d[i][j] = (*this)(i, j);
    return d;
}

namespace {

Polynomial pf_mask(const SkewMatrix& m, std::uint64_t mask, std::unordered_map<std::uint64_t, Polynomial>& memo) {
    if (mask == 0) return Polynomial::constant(m.ring(), 1);
    if (__builtin_popcountll(mask) % 2) return Polynomial(m.ring());
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::size_t i = static_cast<std::size_t>(__builtin_ctzll(mask));
    std::uint64_t rest = mask & ~(std::uint64_t{1} << i);
    Polynomial acc(m.ring());
    int sign = 1;
    for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (!(rest >> j & 1u)) continue;
        Polynomial a = m(i, j);
        if (!a.is_zero()) {
            Polynomial sub = pf_mask(m, rest & ~(std::uint64_t{1} << j), memo);
            if (!sub.is_zero()) {
                if (sign > 0)
                    acc += a * sub;
                else
                    acc -= a * sub;
            }
        }
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace

Polynomial pfaffian(const SkewMatrix& m, const std::vector<std::size_t>& rows) {
    std::uint64_t mask = 0;
    for (auto r : rows) {
        if (r >= m.size()) throw std::out_of_range("pfaffian row index");
        mask |= std::uint64_t{1} << r;
    }
    std::unordered_map<std::uint64_t, Polynomial> memo;
    return pf_mask(m, mask, memo);
}

Polynomial pfaffian(const SkewMatrix& m) {
    std::vector<std::size_t> all(m.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return pfaffian(m, all);
}

std::vector<SubPfaffian> sub_pfaffians(const SkewMatrix& m, std::size_t k) {
    std::vector<SubPfaffian> out;
    if (k > m.size()) return out;
    std::unordered_map<std::uint64_t, Polynomial> memo;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        std::uint64_t mask = 0;
        for (auto r : idx) mask |= std::uint64_t{1} << r;
        out.push_back({idx, pf_mask(m, mask, memo)});
        // next combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m.size() - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        if (k == 0) break;
    }
    return out;
}

namespace {

Polynomial det_rec(const std::vector<std::vector<Polynomial>>& m, std::size_t row, std::uint64_t cols,
                   std::unordered_map<std::uint64_t, Polynomial>& memo, const Ring& ring) {
    if (row == m.size()) return Polynomial::constant(ring, 1);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Polynomial acc(ring);
    int sign = 1;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (!(cols >> j & 1u)) continue;
        if (!m[row][j].is_zero()) {
            Polynomial minor = det_rec(m, row + 1, cols & ~(std::uint64_t{1} << j), memo, ring);
            if (sign > 0)
                acc += m[row][j] * minor;
            else
                acc -= m[row][j] * minor;
        }
        sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
}

}  // namespace

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
    if (m.empty()) return Polynomial::constant(Ring(), 1);
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.size() > 62) throw std::invalid_argument("matrix too large");
    const Ring& ring = m[0][0].ring();
    std::unordered_map<std::uint64_t, Polynomial> memo;
    std::uint64_t all = m.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.size()) - 1;
    return det_rec(m, 0, all, memo, ring);
}

}  // namespace tsurf
