#include "toric/cone.hpp"

#include "doctest.h"

#include <random>

using namespace toric;

namespace {

Vec vec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::vector<Vec> vecs(std::initializer_list<std::initializer_list<long>> vs) {
    std::vector<Vec> out;
    for (const auto& v : vs) out.push_back(Vec(v.begin(), v.end()));
    return out;
}

}  // namespace

TEST_CASE("orthant is self-dual") {
    Cone d = dualize(vecs({{1, 0}, {0, 1}}), 2);
    CHECK(d.generators == vecs({{0, 1}, {1, 0}}));
    CHECK(d.normals == vecs({{0, 1}, {1, 0}}));
    CHECK(d.lineality.empty());
    CHECK(d.equations.empty());
}

TEST_CASE("dual of the section-2 cone") {
    // sigma with rays (2,1), (-2,1) has facet normals (-1,2), (1,2)
    Cone d = dualize(vecs({{2, 1}, {-2, 1}}), 2);
    CHECK(d.generators == vecs({{-1, 2}, {1, 2}}));
    Cone c = cone_from_generators(vecs({{2, 1}, {-2, 1}}), 2);
    CHECK(c.normals == vecs({{-1, 2}, {1, 2}}));
}

TEST_CASE("dual of a single ray is a half-plane") {
    Cone d = dualize(vecs({{1, 0}}), 2);
    CHECK(d.normals == vecs({{1, 0}}));
    CHECK(d.generators == vecs({{1, 0}}));
    CHECK(d.lineality == vecs({{0, 1}}));
    CHECK(d.equations.empty());
}

TEST_CASE("zero cone dualizes to the full space") {
    Cone d = dualize({}, 2);
    CHECK(d.normals.empty());
    CHECK(d.lineality.size() == 2);
}

TEST_CASE("face lattice of small cones") {
    Cone orthant = cone_from_generators(vecs({{1, 0}, {0, 1}}), 2);
    auto fs = faces(orthant);
    CHECK(fs.size() == 4);
    CHECK(fs.front().dimension == 0);
    CHECK(fs.back().dimension == 2);

    Cone c = cone_from_generators(vecs({{2, 1}, {-2, 1}}), 2);
    CHECK(faces(c).size() == 4);
}

TEST_CASE("orthant in rank n has 2^n faces") {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<Vec> rays;
        for (std::size_t i = 0; i < n; ++i) {
            Vec e(n, Int(0));
            e[i] = 1;
            rays.push_back(std::move(e));
        }
        Cone c = cone_from_generators(rays, n);
        auto fs = faces(c);
        CHECK(fs.size() == (std::size_t(1) << n));
        // dim(face) + rank of active normal span = ambient rank
        for (const Face& f : fs) {
            std::vector<Vec> act;
            for (std::size_t j : f.active_normals) act.push_back(c.normals[j]);
            std::size_t r = act.empty() ? 0 : rank_of(Mat::from_rows(act, n));
            CHECK(f.dimension + static_cast<int>(r) == static_cast<int>(n));
        }
    }
}

TEST_CASE("face containment mirrors active-set reversal") {
    Cone c = cone_from_generators(vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}}), 3);
    auto fs = faces(c);
    for (const Face& f : fs)
        for (const Face& g : fs) {
            bool gens_subset = std::includes(g.spanning_generators.begin(),
                                             g.spanning_generators.end(),
                                             f.spanning_generators.begin(),
                                             f.spanning_generators.end());
            bool act_superset = std::includes(f.active_normals.begin(), f.active_normals.end(),
                                              g.active_normals.begin(), g.active_normals.end());
            CHECK(gens_subset == act_superset);
        }
}

TEST_CASE("faces of a non-pointed cone are refused") {
    Cone half = cone_from_inequalities(vecs({{1, 0}}), 2);
    CHECK(!half.pointed());
    CHECK_THROWS_AS(faces(half), input_error);
}

TEST_CASE("lineality") {
    Cone orthant = cone_from_generators(vecs({{1, 0}, {0, 1}}), 2);
    CHECK(lineality(orthant).empty());
    Cone half = cone_from_inequalities(vecs({{1, 0}}), 2);
    CHECK(lineality(half) == vecs({{0, 1}}));
}

TEST_CASE("quotient by lineality") {
    Cone orthant = cone_from_generators(vecs({{1, 0}, {0, 1}}), 2);
    auto [q1, p1] = quotient_by_lineality(orthant);
    CHECK(same_cone(q1, orthant));
    CHECK(p1 == Mat::identity(2));

    Cone half = cone_from_inequalities(vecs({{1, 0}}), 2);
    auto [q2, p2] = quotient_by_lineality(half);
    CHECK(q2.ambient_rank == 1);
    CHECK(q2.generators == vecs({{1}}));
    CHECK(q2.pointed());
}

TEST_CASE("restrict_to_span keeps the saturated lattice") {
    // cone on the diagonal plane x = y inside rank 3
    Cone c = cone_from_generators(vecs({{1, 1, 0}, {1, 1, 2}}), 3);
    CHECK(!c.full_dimensional());
    auto [r, b] = restrict_to_span(c);
    CHECK(r.ambient_rank == 2);
    CHECK(r.full_dimensional());
    CHECK(r.pointed());
    // generators pull back to the original ones
    for (const Vec& g : r.generators) {
        Vec back = b.apply(g);
        CHECK(c.contains(back));
    }
}

TEST_CASE("double dualization regenerates the cone") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> dim(2, 5), count(1, 6), entry(-4, 4);
    for (int t = 0; t < 120; ++t) {
        std::size_t n = dim(rng);
        std::vector<Vec> gens;
        int m = count(rng);
        for (int i = 0; i < m; ++i) {
            Vec v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = entry(rng);
            if (!is_zero(v)) gens.push_back(std::move(v));
        }
        Cone c = cone_from_generators(gens, n);
        Cone dd = dualize(dualize(c.generators_with_lineality(), n).generators_with_lineality(), n);
        CHECK(same_cone(c, dd));
        CHECK(dd.generators == c.generators);
        CHECK(dd.lineality == c.lineality);
        for (const Vec& g : gens) CHECK(c.contains(g));
    }
}
