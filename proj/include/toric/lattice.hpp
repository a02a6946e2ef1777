#pragma once

// Exact integer linear algebra: column-style Hermite normal form and
// solvability of linear Diophantine systems. All arithmetic is arbitrary
// precision; nothing in here touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rectangular matrix of exact integers. Row count may be zero; the column
// count is carried explicitly so empty systems keep their ambient rank.
class Mat {
  public:
    Mat() : cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Vec(cols, Int(0))) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Mat from_rows(std::vector<Vec> rows, std::size_t cols) {
        for (const Vec& r : rows)
            if (r.size() != cols) throw input_error("matrix rows must have equal length");
        Mat m;
        m.cols_ = cols;
        m.rows_ = std::move(rows);
        return m;
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const Vec& row(std::size_t i) const { return rows_[i]; }

    Vec apply(const Vec& x) const {
        if (x.size() != cols_) throw input_error("matrix-vector dimension mismatch");
        Vec y(rows(), Int(0));
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += rows_[i][j] * x[j];
        return y;
    }

    Mat multiply(const Mat& b) const {
        if (cols_ != b.rows()) throw input_error("matrix-matrix dimension mismatch");
        Mat c(rows(), b.cols());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (rows_[i][k] == 0) continue;
                for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += rows_[i][k] * b(k, j);
            }
        return c;
    }

    Vec column(std::size_t j) const {
        Vec c(rows());
        for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i][j];
        return c;
    }

    bool operator==(const Mat& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

  private:
    std::size_t cols_;
    std::vector<Vec> rows_;
};

inline Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw input_error("dot product dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const Vec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

// Floor division, b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// g = gcd(a, b) >= 0 together with p, q such that p*a + q*b = g.
inline std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

inline Int gcd_of(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

// v divided by the gcd of its entries; signs are preserved.
inline Vec primitive(const Vec& v) {
    Int g = gcd_of(v);
    if (g == 0) throw input_error("primitive: zero vector");
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
    return w;
}

struct HnfResult {
    Mat h;                                            // h = a * u, column echelon
    Mat u;                                            // unimodular
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col), strictly increasing
};

// Column-style Hermite normal form. Column operations only: pivots are
// positive, entries right of a pivot in its row are zero, entries left of a
// pivot in its row are reduced to [0, pivot).
inline HnfResult hnf(const Mat& a) {
    const std::size_t m = a.rows(), n = a.cols();
    Mat h = a;
    Mat u = Mat::identity(n);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;

    auto swap_cols = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t k = 0; k < m; ++k) std::swap(h(k, x), h(k, y));
        for (std::size_t k = 0; k < n; ++k) std::swap(u(k, x), u(k, y));
    };
    auto negate_col = [&](std::size_t x) {
        for (std::size_t k = 0; k < m; ++k) h(k, x) = -h(k, x);
        for (std::size_t k = 0; k < n; ++k) u(k, x) = -u(k, x);
    };
    // col j2 -= q * col c
    auto axpy_col = [&](std::size_t j2, const Int& q, std::size_t c) {
        if (q == 0) return;
        for (std::size_t k = 0; k < m; ++k) h(k, j2) -= q * h(k, c);
        for (std::size_t k = 0; k < n; ++k) u(k, j2) -= q * u(k, c);
    };

    std::size_t c = 0;
    for (std::size_t r = 0; r < m && c < n; ++r) {
        std::size_t j = c;
        while (j < n && h(r, j) == 0) ++j;
        if (j == n) continue;
        swap_cols(c, j);
        for (std::size_t j2 = c + 1; j2 < n; ++j2) {
            if (h(r, j2) == 0) continue;
            auto [g, p, q] = ext_gcd(h(r, c), h(r, j2));
            Int xr = h(r, c) / g, yr = h(r, j2) / g;
            for (std::size_t k = 0; k < m; ++k) {
                Int hc = p * h(k, c) + q * h(k, j2);
                Int hj = xr * h(k, j2) - yr * h(k, c);
                h(k, c) = hc;
                h(k, j2) = hj;
            }
            for (std::size_t k = 0; k < n; ++k) {
                Int uc = p * u(k, c) + q * u(k, j2);
                Int uj = xr * u(k, j2) - yr * u(k, c);
                u(k, c) = uc;
                u(k, j2) = uj;
            }
        }
        if (h(r, c) < 0) negate_col(c);
        for (std::size_t j2 = 0; j2 < c; ++j2) axpy_col(j2, floor_div(h(r, j2), h(r, c)), c);
        pivots.emplace_back(r, c);
        ++c;
    }
    return {std::move(h), std::move(u), std::move(pivots)};
}

inline std::size_t rank_of(const Mat& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return hnf(a).pivots.size();
}

// Exact determinant of a square matrix (fraction-free Bareiss elimination).
inline Int det(const Mat& a) {
    if (a.rows() != a.cols()) throw input_error("det: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Mat w = a;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(k, k) * w(i, j) - w(i, k) * w(k, j)) / prev;
        prev = w(k, k);
    }
    return sign * w(n - 1, n - 1);
}

struct AffineLatticeSolution {
    Vec witness;                   // A * witness = b
    std::vector<Vec> kernel_basis; // generates the full integer kernel of A
};

// Basis of { x in Z^n : A x = 0 }. Always saturated.
inline std::vector<Vec> kernel_basis(const Mat& a) {
    const std::size_t n = a.cols();
    if (a.rows() == 0) {
        std::vector<Vec> basis;
        for (std::size_t j = 0; j < n; ++j) {
            Vec e(n, Int(0));
            e[j] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    HnfResult res = hnf(a);
    std::vector<Vec> basis;
    for (std::size_t j = res.pivots.size(); j < n; ++j) basis.push_back(res.u.column(j));
    return basis;
}

// Integral solvability of A x = b. Empty systems are solvable with witness 0
// and the standard basis as kernel.
inline std::optional<AffineLatticeSolution> solve_affine_lattice(const Mat& a, const Vec& b) {
    if (a.rows() != b.size()) throw input_error("solve_affine_lattice: dimension mismatch");
    const std::size_t m = a.rows(), n = a.cols();
    if (m == 0) return AffineLatticeSolution{Vec(n, Int(0)), kernel_basis(a)};

    HnfResult res = hnf(a);
    const Mat& h = res.h;
    const std::size_t np = res.pivots.size();

    Vec y(n, Int(0));
    std::vector<std::optional<std::size_t>> pivot_col_of_row(m);
    for (auto [r, c] : res.pivots) pivot_col_of_row[r] = c;

    for (std::size_t r = 0; r < m; ++r) {
        Int s = 0;
        for (std::size_t k = 0; k < np; ++k) s += h(r, res.pivots[k].second) * y[res.pivots[k].second];
        if (pivot_col_of_row[r]) {
            std::size_t c = *pivot_col_of_row[r];
            Int rem = b[r] - s; // y[c] is still 0, so s has no contribution from c
            Int q = rem / h(r, c);
            if (q * h(r, c) != rem) return std::nullopt;
            y[c] = q;
        } else {
            if (s != b[r]) return std::nullopt;
        }
    }

    AffineLatticeSolution sol;
    sol.witness = res.u.apply(y);
    for (std::size_t j = np; j < n; ++j) sol.kernel_basis.push_back(res.u.column(j));
    return sol;
}

}  // namespace toric
