#include "toric/lattice.hpp"

#include "doctest.h"

#include <random>

using namespace toric;

namespace {

Vec vec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Mat mat(std::initializer_list<std::initializer_list<long>> rows, std::size_t cols) {
    std::vector<Vec> rs;
    for (const auto& r : rows) rs.push_back(Vec(r.begin(), r.end()));
    return Mat::from_rows(std::move(rs), cols);
}

bool echelon_ok(const HnfResult& res) {
    // pivots strictly increasing in (row, col); entries right of a pivot in
    // its row zero; entries left reduced to [0, pivot)
    std::size_t prev_r = 0, prev_c = 0;
    bool first = true;
    for (auto [r, c] : res.pivots) {
        if (!first && (r <= prev_r || c != prev_c + 1)) return false;
        first = false;
        prev_r = r;
        prev_c = c;
        const Int& piv = res.h(r, c);
        if (piv <= 0) return false;
        for (std::size_t j = c + 1; j < res.h.cols(); ++j)
            if (res.h(r, j) != 0) return false;
        for (std::size_t j = 0; j < c; ++j)
            if (res.h(r, j) < 0 || res.h(r, j) >= piv) return false;
    }
    for (std::size_t j = res.pivots.size(); j < res.h.cols(); ++j)
        for (std::size_t i = 0; i < res.h.rows(); ++i)
            if (res.h(i, j) != 0) return false;
    return true;
}

// Brute-force solutions of A x = b over a box [-range, range]^n.
std::vector<Vec> box_solutions(const Mat& a, const Vec& b, long range) {
    std::vector<Vec> sols;
    Vec z(a.cols(), Int(-range));
    if (a.cols() == 0) {
        if (is_zero(b)) sols.push_back(z);
        return sols;
    }
    while (true) {
        if (a.apply(z) == b) sols.push_back(z);
        std::size_t i = 0;
        while (i < a.cols()) {
            if (z[i] < range) {
                ++z[i];
                break;
            }
            z[i] = -range;
            ++i;
        }
        if (i == a.cols()) break;
    }
    return sols;
}

}  // namespace

TEST_CASE("hnf on spec instances") {
    auto id = hnf(Mat::identity(2));
    CHECK(id.h == Mat::identity(2));
    CHECK(id.u == Mat::identity(2));

    auto r = hnf(mat({{4, 6}}, 2));
    CHECK(r.h(0, 0) == 2);
    CHECK(r.h(0, 1) == 0);
    CHECK(abs(det(r.u)) == 1);
    // [4,6] * U = [2,0]
    CHECK(4 * r.u(0, 0) + 6 * r.u(1, 0) == 2);
    CHECK(4 * r.u(0, 1) + 6 * r.u(1, 1) == 0);

    auto fixed = hnf(mat({{1, 0}, {0, 0}}, 2));
    CHECK(fixed.h == mat({{1, 0}, {0, 0}}, 2));
    CHECK(fixed.u == Mat::identity(2));
}

TEST_CASE("solve_affine_lattice on spec instances") {
    // The section-2 example: only rational solution is (0, 1/2).
    auto none = solve_affine_lattice(mat({{-1, 2}, {1, 2}}, 2), vec({1, 1}));
    CHECK(!none.has_value());

    auto idsol = solve_affine_lattice(Mat::identity(2), vec({3, 4}));
    REQUIRE(idsol.has_value());
    CHECK(idsol->witness == vec({3, 4}));
    CHECK(idsol->kernel_basis.empty());

    Mat a = mat({{2, 4}}, 2);
    auto sol = solve_affine_lattice(a, vec({6}));
    REQUIRE(sol.has_value());
    CHECK(a.apply(sol->witness) == vec({6}));
    REQUIRE(sol->kernel_basis.size() == 1);
    Vec k = sol->kernel_basis[0];
    CHECK((k == vec({2, -1}) || k == vec({-2, 1})));

    CHECK_THROWS_AS(solve_affine_lattice(a, vec({1, 2})), input_error);
}

TEST_CASE("empty system is solvable with standard-basis kernel") {
    Mat a = Mat::from_rows({}, 3);
    auto sol = solve_affine_lattice(a, {});
    REQUIRE(sol.has_value());
    CHECK(sol->witness == vec({0, 0, 0}));
    CHECK(sol->kernel_basis.size() == 3);
}

TEST_CASE("primitive") {
    CHECK(primitive(vec({2, 4})) == vec({1, 2}));
    CHECK(primitive(vec({-3, 0, 3})) == vec({-1, 0, 1}));
    CHECK(primitive(vec({1, 2})) == vec({1, 2}));
    CHECK_THROWS_AS(primitive(vec({0, 0})), input_error);
}

TEST_CASE("hnf properties on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 5), entry(-6, 6);
    for (int t = 0; t < 300; ++t) {
        std::size_t m = dim(rng), n = dim(rng);
        Mat a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
        auto res = hnf(a);
        CHECK(a.multiply(res.u) == res.h);
        CHECK(abs(det(res.u)) == 1);
        CHECK(echelon_ok(res));
    }
}

TEST_CASE("diophantine solvability agrees with brute-force box search") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(1, 3), entry(-4, 4), rhs(-6, 6);
    for (int t = 0; t < 200; ++t) {
        std::size_t m = dim(rng), n = dim(rng);
        Mat a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
        Vec b(m);
        for (std::size_t i = 0; i < m; ++i) b[i] = rhs(rng);

        auto sol = solve_affine_lattice(a, b);
        auto brute = box_solutions(a, b, 8);
        if (sol) {
            CHECK(a.apply(sol->witness) == b);
            for (const Vec& k : sol->kernel_basis) CHECK(is_zero(a.apply(k)));
            // kernel completeness: every brute-force solution differs from the
            // witness by an integer combination of the kernel basis
            if (!sol->kernel_basis.empty()) {
                Mat kmat(n, sol->kernel_basis.size());
                for (std::size_t j = 0; j < sol->kernel_basis.size(); ++j)
                    for (std::size_t i = 0; i < n; ++i) kmat(i, j) = sol->kernel_basis[j][i];
                for (const Vec& s : brute) {
                    Vec diff(n);
                    for (std::size_t i = 0; i < n; ++i) diff[i] = s[i] - sol->witness[i];
                    CHECK(solve_affine_lattice(kmat, diff).has_value());
                }
            } else {
                for (const Vec& s : brute) CHECK(s == sol->witness);
            }
        } else {
            CHECK(brute.empty());
        }
    }
}
