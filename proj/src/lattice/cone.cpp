#include "tsurf/lattice/cone.hpp"

#include <algorithm>
#include <set>

namespace tsurf {

bool LatticeCone::contains(const IntVector& v) const {
    if (v.size() != dimension()) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (nonnegative[i] && v[i] < 0) return false;
    for (const auto& x : equations * v)
        if (x != 0) return false;
    return true;
}

LatticeCone LatticeCone::positive_orthant(IntegerMatrix equations) {
    std::size_t n = equations.cols();
    return LatticeCone{std::move(equations), std::vector<bool>(n, true)};
}

LatticeCone LatticeCone::preimage_of_ray(const IntegerMatrix& grading, const IntVector& ray) {
    if (grading.rows() != ray.size()) throw std::invalid_argument("ray length does not match grading");
    const std::size_t n = grading.cols();
    IntegerMatrix eq(0, n);
    for (std::size_t i = 0; i < ray.size(); ++i)
        for (std::size_t j = i + 1; j < ray.size(); ++j) {
            // ray_j * g_i(v) - ray_i * g_j(v) = 0
            IntVector r(n);
            for (std::size_t k = 0; k < n; ++k) r[k] = ray[j] * grading(i, k) - ray[i] * grading(j, k);
            if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return x != 0; })) eq.append_row(r);
        }
    return positive_orthant(eq);
}

mpq_class grading_value(const std::vector<mpq_class>& grading, const IntVector& v) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += grading[i] * mpq_class(v[i]);
    return s;
}

namespace {

IntegerMatrix stacked(const LatticeCone& cone, const std::vector<std::size_t>& zero) {
    IntegerMatrix m = cone.equations;
    if (m.rows() == 0) m = IntegerMatrix(0, cone.dimension());
    for (auto i : zero) {
        IntVector r(cone.dimension(), 0);
        r[i] = 1;
        m.append_row(r);
    }
    return m;
}

// floor(a/b) for rationals
Integer floor_q(const mpq_class& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// rational inverse of a square integer matrix (Gauss-Jordan)
std::vector<std::vector<mpq_class>> rational_inverse(const std::vector<IntVector>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw std::logic_error("singular matrix");
        std::swap(m[p], m[c]);
        mpq_class inv = 1 / m[c][c];
        for (auto& x : m[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            mpq_class f = m[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

}  // namespace

std::vector<IntVector> extreme_rays(const LatticeCone& cone) {
    const std::size_t n = cone.dimension();
    std::vector<std::size_t> constrained;
    for (std::size_t i = 0; i < n; ++i)
        if (cone.nonnegative[i]) constrained.push_back(i);
    if (constrained.size() > 24) throw std::invalid_argument("too many inequalities for ray enumeration");
    if (kernel_basis(stacked(cone, constrained)).rows() != 0) throw NotPointed("cone contains a line");

    std::set<IntVector> rays;
    const std::size_t c = constrained.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
        std::vector<std::size_t> zero;
        for (std::size_t k = 0; k < c; ++k)
            if (mask >> k & 1u) zero.push_back(constrained[k]);
        IntegerMatrix k = kernel_basis(stacked(cone, zero));
        if (k.rows() != 1) continue;
        IntVector v = k.row(0);
        bool pos = true, neg = true;
        for (auto i : constrained) {
            if (v[i] < 0) pos = false;
            if (v[i] > 0) neg = false;
        }
        if (neg && !pos)
            for (auto& x : v) x = -x;
        if (pos || neg) rays.insert(primitive(v));
    }
    return {rays.begin(), rays.end()};
}

std::vector<IntVector> hilbert_basis(const LatticeCone& cone, const HilbertBasisOptions& options) {
    const std::size_t n = cone.dimension();
    std::vector<mpq_class> grading = options.grading.value_or(std::vector<mpq_class>(n, 1));
    for (auto& g : grading) g.canonicalize();
    if (grading.size() != n) throw std::invalid_argument("grading length does not match cone");

    std::vector<IntVector> rays = extreme_rays(cone);  // throws NotPointed
    IntegerMatrix basis = cone.equations.rows() ? kernel_basis(cone.equations) : kernel_basis(IntegerMatrix(0, n));
    if (cone.equations.rows() == 0) {
        basis = IntegerMatrix(0, n);
        for (std::size_t i = 0; i < n; ++i) {
            IntVector e(n, 0);
            e[i] = 1;
            basis.append_row(e);
        }
    }
    const std::size_t d = basis.rows();
    if (d == 0) return {};

    std::vector<IntVector> local;  // rays in lattice coordinates
    for (const auto& r : rays) {
        auto c = lattice_coordinates(basis, r);
        if (!c) throw std::logic_error("ray outside the kernel lattice");
        local.push_back(*c);
    }
    auto to_ambient = [&](const IntVector& c) {
        IntVector v(n, 0);
        for (std::size_t k = 0; k < d; ++k)
            if (c[k] != 0)
                for (std::size_t j = 0; j < n; ++j) v[j] += c[k] * basis(k, j);
        return v;
    };

    std::set<IntVector> candidates(rays.begin(), rays.end());
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    if (rays.size() >= d) {
        for (;;) {
            std::vector<IntVector> R;
            for (auto i : idx) R.push_back(local[i]);
            IntegerMatrix Rm = IntegerMatrix::from_rows(R, d);
            Integer det = determinant(Rm);
            if (det != 0) {
                if (abs(det) > options.max_parallelepiped)
                    throw BoundExceeded("simplicial piece with " + Integer(abs(det)).get_str() + " lattice points");
                auto inv = rational_inverse(R);
                IntegerMatrix H = hermite_normal_form(Rm);
                // box of coset representatives of Z^d / (row lattice of R)
                IntVector x(d, 0), h(d);
                for (std::size_t i = 0; i < d; ++i) h[i] = H(i, i);
                for (;;) {
                    // lambda = x R^-1; keep frac(lambda) R
                    std::vector<mpq_class> lambda(d, 0);
                    for (std::size_t j = 0; j < d; ++j)
                        for (std::size_t i = 0; i < d; ++i)
                            if (x[i] != 0) lambda[j] += mpq_class(x[i]) * inv[i][j];
                    IntVector y = x;
                    for (std::size_t j = 0; j < d; ++j) {
                        Integer f = floor_q(lambda[j]);
                        if (f != 0)
                            for (std::size_t k = 0; k < d; ++k) y[k] -= f * R[j][k];
                    }
                    if (std::any_of(y.begin(), y.end(), [](const Integer& t) { return t != 0; }))
                        candidates.insert(to_ambient(y));
                    std::size_t k = 0;
                    while (k < d) {
                        if (++x[k] < h[k]) break;
                        x[k] = 0;
                        ++k;
                    }
                    if (k == d) break;
                }
            }
            std::size_t i = d;
            while (i > 0 && idx[i - 1] == rays.size() - d + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    // sieve: an element is reducible iff subtracting a smaller basis element
    // stays in the cone
    auto norm = [&](const IntVector& v) {
        Integer s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (cone.nonnegative[i]) s += v[i];
        return s;
    };
    std::vector<IntVector> sorted(candidates.begin(), candidates.end());
    std::stable_sort(sorted.begin(), sorted.end(), [&](const IntVector& a, const IntVector& b) { return norm(a) < norm(b); });
    std::vector<IntVector> basis_out;
    for (const auto& c : sorted) {
        bool reducible = false;
        for (const auto& h : basis_out) {
            bool fits = true;
            for (std::size_t i = 0; i < n && fits; ++i)
                if (cone.nonnegative[i] && c[i] < h[i]) fits = false;
            if (fits && c != h) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis_out.push_back(c);
    }

    std::sort(basis_out.begin(), basis_out.end(), [&](const IntVector& a, const IntVector& b) {
        mpq_class ga = grading_value(grading, a), gb = grading_value(grading, b);
        if (ga != gb) return ga < gb;
        return a > b;
    });
    std::string over;
    for (const auto& v : basis_out)
        if (grading_value(grading, v) > options.degree_bound) over += " " + vector_str(v);
    if (!over.empty())
        throw BoundExceeded("Hilbert basis elements above degree bound " + options.degree_bound.get_str() + ":" + over);
    return basis_out;
}

}  // namespace tsurf
