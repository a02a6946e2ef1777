#pragma once

// The Hibi cone of a finite poset, the dictionary between its faces and
// quotient posets of the bounded extension, the closed-form locus dimension,
// and the rank/distance cross-check.

#include "toric/cone.hpp"
#include "toric/gorenstein.hpp"
#include "toric/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace toric {

// Cone coordinates: index 0 is psi(-infinity), indices 1..n are the elements
// of P in label order; psi(+infinity) is fixed to 0 and not carried.
struct HibiCone {
    Poset poset;
    BoundedPoset bounded;
    Cone cone;
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // covers of the bounded poset
    std::vector<std::size_t> normal_of_cover;                 // cover k -> index into cone.normals

    std::size_t coord_of(std::size_t bounded_index) const {
        if (bounded_index == bounded.bottom()) return 0;
        if (bounded_index == bounded.top()) throw input_error("top element carries no coordinate");
        return bounded_index + 1;
    }

    Vec cover_normal(std::size_t a, std::size_t b) const {
        Vec v(poset.size() + 1, Int(0));
        if (a != bounded.top()) v[coord_of(a)] += 1;
        if (b != bounded.top()) v[coord_of(b)] -= 1;
        return v;
    }
};

inline HibiCone build_cone(const Poset& p) {
    HibiCone hc{p, BoundedPoset(p), Cone{}, {}, {}};
    hc.covers = hc.bounded.covers();
    std::vector<Vec> normals;
    for (const auto& [a, b] : hc.covers) normals.push_back(hc.cover_normal(a, b));
    hc.cone = cone_from_inequalities(normals, p.size() + 1);
    for (const auto& [a, b] : hc.covers) {
        Vec v = hc.cover_normal(a, b);
        auto it = std::lower_bound(hc.cone.normals.begin(), hc.cone.normals.end(), v);
        if (it == hc.cone.normals.end() || *it != v)
            throw std::logic_error("hibi: cover normal is not a facet");
        hc.normal_of_cover.push_back(static_cast<std::size_t>(it - hc.cone.normals.begin()));
    }
    return hc;
}

// Quotient of the bounded poset: a partition into connected, order-convex
// blocks whose induced relation is again a partial order.
struct QuotientPoset {
    std::vector<std::vector<std::size_t>> blocks;  // members sorted; blocks sorted by minimum
    std::vector<std::vector<bool>> block_leq;      // induced order (transitive hull)
};

namespace detail {

inline std::uint32_t block_mask(const std::vector<std::size_t>& block) {
    std::uint32_t m = 0;
    for (std::size_t i : block) m |= 1u << i;
    return m;
}

inline QuotientPoset quotient_from_blocks(const BoundedPoset& pb,
                                          std::vector<std::vector<std::size_t>> blocks,
                                          bool validate) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    std::vector<int> block_of(pb.size(), -1);
    for (std::size_t k = 0; k < blocks.size(); ++k)
        for (std::size_t i : blocks[k]) {
            if (i >= pb.size() || block_of[i] >= 0) throw input_error("quotient: blocks do not partition");
            block_of[i] = static_cast<int>(k);
        }
    for (std::size_t i = 0; i < pb.size(); ++i)
        if (block_of[i] < 0) throw input_error("quotient: blocks do not partition");
    if (validate)
        for (const auto& b : blocks) {
            std::uint32_t m = block_mask(b);
            if (!convex_in(pb, m)) throw input_error("quotient: block is not order-convex");
            if (!connected_in(pb, m)) throw input_error("quotient: block is not connected");
        }

    const std::size_t nb = blocks.size();
    std::vector<std::vector<bool>> leq(nb, std::vector<bool>(nb, false));
    for (std::size_t k = 0; k < nb; ++k) leq[k][k] = true;
    for (std::size_t a = 0; a < pb.size(); ++a)
        for (std::size_t b = 0; b < pb.size(); ++b)
            if (pb.leq(a, b)) leq[block_of[a]][block_of[b]] = true;
    for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t i = 0; i < nb; ++i)
            if (leq[i][k])
                for (std::size_t j = 0; j < nb; ++j)
                    if (leq[k][j]) leq[i][j] = true;
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = i + 1; j < nb; ++j)
            if (leq[i][j] && leq[j][i]) throw input_error("quotient: induced relation is not antisymmetric");
    return QuotientPoset{std::move(blocks), std::move(leq)};
}

}  // namespace detail

// The face of the Hibi cone whose functions are constant on each block.
inline Face face_from_quotient(const HibiCone& hc, const QuotientPoset& q) {
    QuotientPoset validated = detail::quotient_from_blocks(hc.bounded, q.blocks, true);
    std::vector<int> block_of(hc.bounded.size());
    for (std::size_t k = 0; k < validated.blocks.size(); ++k)
        for (std::size_t i : validated.blocks[k]) block_of[i] = static_cast<int>(k);

    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < hc.covers.size(); ++k)
        if (block_of[hc.covers[k].first] == block_of[hc.covers[k].second])
            chosen.push_back(hc.normal_of_cover[k]);

    Face f;
    for (std::size_t i = 0; i < hc.cone.generators.size(); ++i) {
        bool on = true;
        for (std::size_t j : chosen)
            if (dot(hc.cone.normals[j], hc.cone.generators[i]) != 0) {
                on = false;
                break;
            }
        if (on) f.spanning_generators.push_back(i);
    }
    std::vector<Vec> span;
    for (std::size_t i : f.spanning_generators) span.push_back(hc.cone.generators[i]);
    for (std::size_t j = 0; j < hc.cone.normals.size(); ++j) {
        bool vanishes = true;
        for (std::size_t i : f.spanning_generators)
            if (dot(hc.cone.normals[j], hc.cone.generators[i]) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) f.active_normals.push_back(j);
    }
    f.dimension =
        span.empty() ? 0 : static_cast<int>(rank_of(Mat::from_rows(span, hc.cone.ambient_rank)));
    return f;
}

// Finest partition on which every function of the face is constant.
inline QuotientPoset quotient_from_face(const HibiCone& hc, const Face& f) {
    for (std::size_t i : f.spanning_generators)
        if (i >= hc.cone.generators.size()) throw input_error("quotient_from_face: face of wrong cone");

    auto value = [&](std::size_t gen, std::size_t x) -> Int {
        if (x == hc.bounded.top()) return 0;
        return hc.cone.generators[gen][hc.coord_of(x)];
    };

    std::map<std::vector<Int>, std::vector<std::size_t>> classes;
    for (std::size_t x = 0; x < hc.bounded.size(); ++x) {
        std::vector<Int> key;
        for (std::size_t i : f.spanning_generators) key.push_back(value(i, x));
        classes[key].push_back(x);
    }
    std::vector<std::vector<std::size_t>> blocks;
    for (auto& [key, members] : classes) blocks.push_back(members);
    return detail::quotient_from_blocks(hc.bounded, std::move(blocks), false);
}

// Locus data straight from the combinatorial formula; maximal components come
// from minimal non-graded complete subsets via their quotient faces.
inline LocusReport hibi_formula_report(const HibiCone& hc, std::size_t cap = 20) {
    LocusReport rep;
    auto minimal = minimal_nongraded_complete(hc.poset, cap);
    for (const CompleteSubset& a : minimal) {
        std::vector<std::vector<std::size_t>> blocks;
        std::vector<std::size_t> big = a.members();
        blocks.push_back(big);
        for (std::size_t x = 0; x < hc.bounded.size(); ++x)
            if (!a.contains(x)) blocks.push_back({x});
        QuotientPoset q = detail::quotient_from_blocks(hc.bounded, std::move(blocks), true);
        rep.maximal_contributing_faces.push_back(face_from_quotient(hc, q));
    }
    rep.gorenstein = rep.maximal_contributing_faces.empty();
    if (!rep.gorenstein) {
        int d = 0;
        for (const Face& f : rep.maximal_contributing_faces) d = std::max(d, f.dimension);
        rep.locus_dimension = d;
    }
    rep.gorenstein_on_punctured_spectrum = rep.gorenstein || *rep.locus_dimension <= 0;
    std::sort(rep.maximal_contributing_faces.begin(), rep.maximal_contributing_faces.end(),
              [](const Face& x, const Face& y) {
                  if (x.dimension != y.dimension) return x.dimension < y.dimension;
                  return x.active_normals < y.active_normals;
              });
    return rep;
}

// Vertices of the order polytope as lattice points of the Hibi cone, one per
// order ideal (down-closed subset) of P.
inline std::vector<Vec> order_polytope_vertices(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<Vec> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool down_closed = true;
        for (std::size_t b = 0; b < n && down_closed; ++b) {
            if (!((mask >> b) & 1u)) continue;
            for (std::size_t a = 0; a < n; ++a)
                if (a != b && p.leq(a, b) && !((mask >> a) & 1u)) {
                    down_closed = false;
                    break;
                }
        }
        if (!down_closed) continue;
        Vec psi(n + 1, Int(0));
        psi[0] = 1;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) psi[i + 1] = 1;
        out.push_back(std::move(psi));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Rank/distance cross-check.

// Zig-zag tuple a_1 < b_1 > a_2 < ... > a_u < b_u > a_1 with
// sum rank(a_i, b_i) > dist(a_2, b_1) + ... + dist(a_1, b_u).
inline bool mp_tuple_satisfies(const BoundedPoset& pb, const std::vector<std::size_t>& as,
                               const std::vector<std::size_t>& bs) {
    const std::size_t u = as.size();
    if (u == 0 || bs.size() != u) throw input_error("mp_tuple: tuple halves must have equal size >= 1");
    auto strictly_less = [&](std::size_t x, std::size_t y) { return x != y && pb.leq(x, y); };
    for (std::size_t i = 0; i < u; ++i)
        if (!strictly_less(as[i], bs[i])) throw input_error("mp_tuple: comparability a_i < b_i violated");
    for (std::size_t i = 0; i + 1 < u; ++i)
        if (!strictly_less(as[i + 1], bs[i])) throw input_error("mp_tuple: comparability a_{i+1} < b_i violated");
    if (u > 1 && !strictly_less(as[0], bs[u - 1]))
        throw input_error("mp_tuple: comparability a_1 < b_u violated");

    int lhs = 0;
    for (std::size_t i = 0; i < u; ++i) lhs += rank_between(pb, as[i], bs[i]);
    int rhs = 0;
    for (std::size_t i = 0; i + 1 < u; ++i) rhs += dist_between(pb, as[i + 1], bs[i]);
    rhs += dist_between(pb, as[0], bs[u - 1]);
    return lhs > rhs;
}

// psi is in the radical iff it is non-constant on every tuple satisfying the
// inequality. Tuples use distinct elements; with no satisfying tuple at all
// the intersection is the whole ring and every psi is a member.
inline bool radical_member_mp(const HibiCone& hc, const Vec& psi) {
    if (psi.size() != hc.poset.size() + 1) throw input_error("radical_member_mp: psi of wrong length");
    if (!hc.cone.contains(psi)) throw input_error("radical_member_mp: psi outside the Hibi cone");

    const BoundedPoset& pb = hc.bounded;
    auto value = [&](std::size_t x) -> Int {
        if (x == pb.top()) return 0;
        return psi[hc.coord_of(x)];
    };

    // A satisfying tuple only defeats psi when psi is constant on it, so the
    // search may stay inside one level set of psi at a time.
    std::map<Int, std::vector<std::size_t>> level_sets;
    for (std::size_t x = 0; x < pb.size(); ++x) level_sets[value(x)].push_back(x);

    auto strictly_less = [&](std::size_t x, std::size_t y) { return x != y && pb.leq(x, y); };

    for (const auto& [v, pool] : level_sets) {
        if (pool.size() < 2) continue;
        const std::size_t max_u = pool.size() / 2;
        std::vector<std::size_t> as, bs;
        std::vector<bool> used(pb.size(), false);

        // Depth-first over (a_1, b_1, a_2, b_2, ...); closes the cycle and
        // evaluates the inequality at every even depth.
        std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
            const std::size_t u = as.size();
            if (depth % 2 == 0 && u >= 1) {
                bool cycle_ok = (u == 1) || strictly_less(as[0], bs[u - 1]);
                if (cycle_ok) {
                    int lhs = 0;
                    for (std::size_t i = 0; i < u; ++i) lhs += rank_between(pb, as[i], bs[i]);
                    int rhs = 0;
                    for (std::size_t i = 0; i + 1 < u; ++i) rhs += dist_between(pb, as[i + 1], bs[i]);
                    rhs += dist_between(pb, as[0], bs[u - 1]);
                    if (lhs > rhs) return true;
                }
            }
            if (depth / 2 >= max_u) return false;
            for (std::size_t x : pool) {
                if (used[x]) continue;
                if (depth % 2 == 0) {
                    // next a: must lie below the previous b
                    if (u >= 1 && !strictly_less(x, bs[u - 1])) continue;
                    as.push_back(x);
                    used[x] = true;
                    if (search(depth + 1)) return true;
                    used[x] = false;
                    as.pop_back();
                } else {
                    if (!strictly_less(as.back(), x)) continue;
                    bs.push_back(x);
                    used[x] = true;
                    if (search(depth + 1)) return true;
                    used[x] = false;
                    bs.pop_back();
                }
            }
            return false;
        };
        if (search(0)) return false;
    }
    return true;
}

}  // namespace toric
