#pragma once

// Non-Gorenstein locus of an affine normal toric variety from the dual cone:
// a face contributes iff the affine slice pushing its active facets one
// lattice-length inward misses the lattice. Trace-ideal generators and
// radical membership follow from the same face data.

#include "toric/cone.hpp"
#include "toric/lattice.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace toric {

// The system <u_rho, x> = 1 over the ray generators of sigma lying in F^perp.
struct AffineSlice {
    Mat equations;
    Vec rhs;  // all ones
};

struct Monomial {
    Vec exponent;
};

struct LocusReport {
    bool gorenstein = true;
    std::vector<Face> maximal_contributing_faces;
    std::optional<int> locus_dimension;  // empty iff gorenstein
    bool gorenstein_on_punctured_spectrum = true;
};

namespace detail {

inline void require_paired_sigma_pointed(const Cone& sigma_dual) {
    if (!sigma_dual.full_dimensional())
        throw input_error(
            "dual cone is not full-dimensional (paired cone not pointed); restrict to its span "
            "first");
}

inline bool face_indices_valid(const Cone& c, const Face& f) {
    for (std::size_t j : f.active_normals)
        if (j >= c.normals.size()) return false;
    for (std::size_t i : f.spanning_generators)
        if (i >= c.generators.size()) return false;
    return true;
}

}  // namespace detail

inline AffineSlice f_one(const Cone& sigma_dual, const Face& f) {
    detail::require_paired_sigma_pointed(sigma_dual);
    if (!detail::face_indices_valid(sigma_dual, f)) throw input_error("f_one: face does not belong to cone");
    std::vector<Vec> rows;
    for (std::size_t j : f.active_normals) rows.push_back(sigma_dual.normals[j]);
    AffineSlice s;
    s.equations = Mat::from_rows(rows, sigma_dual.ambient_rank);
    s.rhs = Vec(rows.size(), Int(1));
    return s;
}

inline bool face_contributes(const Cone& sigma_dual, const Face& f) {
    AffineSlice s = f_one(sigma_dual, f);
    return !solve_affine_lattice(s.equations, s.rhs).has_value();
}

// Face lattice plus the per-face contribution flags, shared by the locus
// search and the property checks.
struct FaceAnalysis {
    std::vector<Face> all_faces;
    std::vector<bool> contributes;
};

inline FaceAnalysis analyze_faces(const Cone& sigma_dual) {
    detail::require_paired_sigma_pointed(sigma_dual);
    FaceAnalysis fa;
    fa.all_faces = faces(sigma_dual);
    fa.contributes.reserve(fa.all_faces.size());
    for (const Face& f : fa.all_faces) fa.contributes.push_back(face_contributes(sigma_dual, f));
    return fa;
}

inline LocusReport locus_from_analysis(const FaceAnalysis& fa) {
    LocusReport rep;
    const std::size_t n = fa.all_faces.size();
    // F is a strict subface of G iff active(F) is a strict superset of active(G).
    auto strict_superface = [&](std::size_t fi, std::size_t gi) {
        const auto& af = fa.all_faces[fi].active_normals;
        const auto& ag = fa.all_faces[gi].active_normals;
        return af.size() > ag.size() && std::includes(af.begin(), af.end(), ag.begin(), ag.end());
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (!fa.contributes[i]) continue;
        bool maximal = true;
        for (std::size_t j = 0; j < n && maximal; ++j)
            if (fa.contributes[j] && strict_superface(i, j)) maximal = false;
        if (maximal) rep.maximal_contributing_faces.push_back(fa.all_faces[i]);
    }
    rep.gorenstein = rep.maximal_contributing_faces.empty();
    if (!rep.gorenstein) {
        int d = 0;
        for (const Face& f : rep.maximal_contributing_faces) d = std::max(d, f.dimension);
        rep.locus_dimension = d;
    }
    rep.gorenstein_on_punctured_spectrum = rep.gorenstein || *rep.locus_dimension <= 0;
    return rep;
}

inline LocusReport non_gorenstein_locus(const Cone& sigma_dual) {
    return locus_from_analysis(analyze_faces(sigma_dual));
}

// Theorem-level test for a single cone given by the ray generators of sigma:
// the torus orbit avoids the locus iff <u_rho, m> = 1 has an integral solution.
inline bool gorenstein_at_cone(const std::vector<Vec>& sigma_rays) {
    if (sigma_rays.empty()) return true;
    std::size_t rank = sigma_rays[0].size();
    for (const Vec& r : sigma_rays) {
        if (r.size() != rank) throw input_error("gorenstein_at_cone: ray length mismatch");
        if (is_zero(r)) throw input_error("gorenstein_at_cone: zero ray");
    }
    Mat a = Mat::from_rows(sigma_rays, rank);
    return solve_affine_lattice(a, Vec(sigma_rays.size(), Int(1))).has_value();
}

// ---------------------------------------------------------------------------
// Bounded lattice point enumeration for the trace ideal.

namespace detail {

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

// Integer points of { x : rows_i . x >= rhs_i }; throws if the region is
// unbounded, returns {} if it is empty. Bounding box from exact vertex
// enumeration of the homogenization, then a scan with exact checks.
inline std::vector<Vec> polytope_lattice_points(const std::vector<Vec>& rows, const Vec& rhs,
                                                std::size_t rank) {
    std::vector<Vec> homog;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Vec h = rows[i];
        h.push_back(-rhs[i]);
        homog.push_back(std::move(h));
    }
    Vec t(rank + 1, Int(0));
    t[rank] = 1;
    homog.push_back(std::move(t));
    Cone c = cone_from_inequalities(homog, rank + 1);

    std::vector<Vec> vertices;  // (x, t) with t > 0
    bool recession = false;
    auto classify = [&](const Vec& g) {
        if (g[rank] > 0)
            vertices.push_back(g);
        else if (!is_zero(g))
            recession = true;
    };
    for (const Vec& g : c.generators) classify(g);
    for (const Vec& l : c.lineality) {
        recession = true;
        (void)l;
    }
    if (vertices.empty()) return {};
    if (recession) throw input_error("lattice point enumeration: region is unbounded");

    Vec lo(rank), hi(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        lo[i] = floor_div(vertices[0][i], vertices[0][rank]);
        hi[i] = ceil_div(vertices[0][i], vertices[0][rank]);
        for (const Vec& v : vertices) {
            lo[i] = std::min(lo[i], floor_div(v[i], v[rank]));
            hi[i] = std::max(hi[i], ceil_div(v[i], v[rank]));
        }
    }

    std::vector<Vec> points;
    Vec z = lo;
    auto feasible = [&](const Vec& x) {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (dot(rows[i], x) < rhs[i]) return false;
        return true;
    };
    while (true) {
        if (feasible(z)) points.push_back(z);
        std::size_t i = 0;
        while (i < rank) {
            if (z[i] < hi[i]) {
                ++z[i];
                break;
            }
            z[i] = lo[i];
            ++i;
        }
        if (i == rank) break;
    }
    std::sort(points.begin(), points.end());
    return points;
}

}  // namespace detail

// All trace-ideal generators chi^{m + m'}, m in P_K, m' in P_{-K}, whose
// height under the interior functional ell (the primitive sum of the ray
// generators of sigma) is at most the bound. Possibly incomplete as a
// generating set; the locus itself never depends on this enumeration.
inline std::vector<Monomial> trace_generators_bounded(const Cone& sigma_dual, const Int& bound) {
    detail::require_paired_sigma_pointed(sigma_dual);
    if (!sigma_dual.pointed())
        throw input_error("trace_generators_bounded: paired cone must be full-dimensional");
    if (bound < 1) throw input_error("trace_generators_bounded: bound must be >= 1");

    const std::size_t rank = sigma_dual.ambient_rank;
    const auto& u = sigma_dual.normals;
    Vec ell(rank, Int(0));
    for (const Vec& n : u)
        for (std::size_t i = 0; i < rank; ++i) ell[i] += n[i];
    ell = primitive(ell);

    auto height_min = [&](const Int& level) {
        // exact minimum of <ell, x> over { <u, x> >= level } via homogenization
        std::vector<Vec> homog;
        for (const Vec& n : u) {
            Vec h = n;
            h.push_back(-level);
            homog.push_back(std::move(h));
        }
        Vec t(rank + 1, Int(0));
        t[rank] = 1;
        homog.push_back(std::move(t));
        Cone c = cone_from_inequalities(homog, rank + 1);
        std::optional<Int> best;
        for (const Vec& v : c.generators) {
            if (v[rank] <= 0) continue;
            Vec x(v.begin(), v.begin() + rank);
            Int h = floor_div(dot(ell, x), v[rank]);
            if (!best || h < *best) best = h;
        }
        if (!best) throw std::logic_error("trace_generators_bounded: empty translate polytope");
        return *best;
    };

    Int min_k = height_min(1), min_mk = height_min(-1);

    auto points_with_cap = [&](const Int& level, const Int& cap) {
        std::vector<Vec> rows = u;
        Vec rhs(u.size(), level);
        Vec neg_ell(rank);
        for (std::size_t i = 0; i < rank; ++i) neg_ell[i] = -ell[i];
        rows.push_back(std::move(neg_ell));
        rhs.push_back(-cap);
        return detail::polytope_lattice_points(rows, rhs, rank);
    };

    std::vector<Vec> pk = points_with_cap(1, bound - min_mk);
    std::vector<Vec> pmk = points_with_cap(-1, bound - min_k);

    std::set<Vec> sums;
    for (const Vec& m : pk)
        for (const Vec& mp : pmk) {
            Vec s(rank);
            for (std::size_t i = 0; i < rank; ++i) s[i] = m[i] + mp[i];
            if (dot(ell, s) <= bound) sums.insert(std::move(s));
        }
    std::vector<Monomial> out;
    for (const Vec& s : sums) out.push_back(Monomial{s});
    return out;
}

// chi^w lies in the radical of the trace ideal iff w lies on no contributing
// face, i.e. some active normal of every maximal contributing face is
// positive on it.
inline bool in_radical(const Cone& sigma_dual, const LocusReport& report, const Monomial& w) {
    if (w.exponent.size() != sigma_dual.ambient_rank || !sigma_dual.contains(w.exponent))
        throw input_error("in_radical: exponent outside the dual cone");
    for (const Face& f : report.maximal_contributing_faces) {
        bool on_face = true;
        for (std::size_t j : f.active_normals)
            if (dot(sigma_dual.normals[j], w.exponent) != 0) {
                on_face = false;
                break;
            }
        if (on_face) return false;
    }
    return true;
}

inline bool in_radical(const Cone& sigma_dual, const Monomial& w) {
    return in_radical(sigma_dual, non_gorenstein_locus(sigma_dual), w);
}

// ---------------------------------------------------------------------------
// Normalization for callers holding a dual cone that is not yet full
// dimensional (restrict to its saturated span) or not pointed (split off the
// torus factor). Face and locus dimensions gain dim_offset.

struct PreparedDual {
    Cone cone;
    int dim_offset = 0;
};

inline PreparedDual prepare_dual_cone(const Cone& sigma_dual) {
    PreparedDual p;
    p.cone = restrict_to_span(sigma_dual).first;
    if (!p.cone.pointed()) {
        p.dim_offset = static_cast<int>(p.cone.lineality.size());
        p.cone = quotient_by_lineality(p.cone).first;
    }
    return p;
}

}  // namespace toric
