#pragma once

// Rational polyhedral cones with dual descriptions. Conversion between the
// generator and inequality pictures is an incremental double description
// computation with exact arithmetic; redundancy never survives because only
// extreme rays (modulo lineality) are kept.

#include "toric/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace toric {

// V-description of a cone: span(lineality) + cone(rays).
struct VDesc {
    std::vector<Vec> lineality;
    std::vector<Vec> rays;
};

namespace detail {

inline bool lex_less(const Vec& a, const Vec& b) { return a < b; }

inline void canonicalize_vectors(std::vector<Vec>& vs) {
    for (Vec& v : vs)
        if (!is_zero(v)) v = primitive(v);
    vs.erase(std::remove_if(vs.begin(), vs.end(), [](const Vec& v) { return is_zero(v); }),
             vs.end());
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// Deterministic, saturated basis of the span of the given vectors:
// the kernel of the kernel.
inline std::vector<Vec> saturated_span_basis(const std::vector<Vec>& vs, std::size_t rank) {
    if (vs.empty()) return {};
    std::vector<Vec> ortho = kernel_basis(Mat::from_rows(vs, rank));
    std::vector<Vec> basis = kernel_basis(Mat::from_rows(ortho, rank));
    canonicalize_vectors(basis);
    return basis;
}

struct DDRay {
    Vec v;
    std::vector<std::uint64_t> zero;  // bit i set <=> constraint i is tight
};

inline bool bit(const std::vector<std::uint64_t>& z, std::size_t i) {
    return (z[i >> 6] >> (i & 63)) & 1u;
}
inline void set_bit(std::vector<std::uint64_t>& z, std::size_t i) { z[i >> 6] |= std::uint64_t(1) << (i & 63); }

inline bool subset_of(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

}  // namespace detail

// Minimal V-description of { x in R^rank : <c, x> >= 0 for all c in constraints }.
inline VDesc polar(const std::vector<Vec>& constraints_in, std::size_t rank) {
    using namespace detail;
    std::vector<Vec> constraints;
    for (const Vec& c : constraints_in) {
        if (c.size() != rank) throw input_error("polar: constraint of wrong length");
        if (!is_zero(c)) constraints.push_back(c);
    }
    const std::size_t words = constraints.empty() ? 1 : (constraints.size() + 63) / 64;

    std::vector<Vec> lin;
    for (std::size_t i = 0; i < rank; ++i) {
        Vec e(rank, Int(0));
        e[i] = 1;
        lin.push_back(std::move(e));
    }
    std::vector<DDRay> rays;

    auto exact_zero_set = [&](const Vec& v, std::size_t upto) {
        std::vector<std::uint64_t> z(words, 0);
        for (std::size_t i = 0; i < upto; ++i)
            if (dot(constraints[i], v) == 0) set_bit(z, i);
        return z;
    };

    for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
        const Vec& a = constraints[ci];
        std::size_t l0 = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) {
                l0 = i;
                break;
            }
        if (l0 < lin.size()) {
            Vec pivot = lin[l0];
            Int c0 = dot(a, pivot);
            if (c0 < 0) {
                for (Int& x : pivot) x = -x;
                c0 = -c0;
            }
            std::vector<Vec> new_lin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == l0) continue;
                Int d = dot(a, lin[i]);
                Vec w(rank);
                for (std::size_t k = 0; k < rank; ++k) w[k] = c0 * lin[i][k] - d * pivot[k];
                if (!is_zero(w)) new_lin.push_back(primitive(w));
            }
            lin = std::move(new_lin);
            for (DDRay& r : rays) {
                Int d = dot(a, r.v);
                if (d != 0) {
                    Vec w(rank);
                    for (std::size_t k = 0; k < rank; ++k) w[k] = c0 * r.v[k] - d * pivot[k];
                    r.v = primitive(w);
                }
                r.zero = exact_zero_set(r.v, ci + 1);
            }
            DDRay nr{pivot, exact_zero_set(pivot, ci + 1)};
            rays.push_back(std::move(nr));
            continue;
        }

        // a vanishes on the lineality space: classic ray split
        std::vector<std::size_t> pos, neg;
        std::vector<Int> vals(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            vals[i] = dot(a, rays[i].v);
            if (vals[i] > 0)
                pos.push_back(i);
            else if (vals[i] < 0)
                neg.push_back(i);
            else
                set_bit(rays[i].zero, ci);
        }
        if (neg.empty()) continue;

        std::vector<DDRay> created;
        for (std::size_t p : pos)
            for (std::size_t q : neg) {
                std::vector<std::uint64_t> common(words);
                for (std::size_t w = 0; w < words; ++w)
                    common[w] = rays[p].zero[w] & rays[q].zero[w];
                bool adjacent = true;
                for (std::size_t s = 0; s < rays.size(); ++s) {
                    if (s == p || s == q) continue;
                    if (subset_of(common, rays[s].zero)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Vec w(rank);
                for (std::size_t k = 0; k < rank; ++k)
                    w[k] = vals[p] * rays[q].v[k] - vals[q] * rays[p].v[k];
                DDRay nr{primitive(w), exact_zero_set(primitive(w), ci + 1)};
                created.push_back(std::move(nr));
            }
        std::vector<DDRay> kept;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (vals[i] >= 0) kept.push_back(std::move(rays[i]));
        for (DDRay& r : created) kept.push_back(std::move(r));
        rays = std::move(kept);
    }

    VDesc out;
    out.lineality = detail::saturated_span_basis(lin, rank);
    for (DDRay& r : rays) out.rays.push_back(std::move(r.v));
    detail::canonicalize_vectors(out.rays);
    return out;
}

// A cone as a point set equals
//   { x : <e, x> = 0 for e in equations, <n, x> >= 0 for n in normals }
//   = cone(generators) + span(lineality).
// All four lists are canonical (primitive, lexicographically sorted).
struct Cone {
    std::size_t ambient_rank = 0;
    std::vector<Vec> generators;  // extreme rays (mod lineality)
    std::vector<Vec> lineality;   // saturated basis, empty iff pointed
    std::vector<Vec> normals;     // irredundant facet normals
    std::vector<Vec> equations;   // saturated basis of span(cone)^perp

    bool pointed() const { return lineality.empty(); }
    bool full_dimensional() const { return equations.empty(); }

    // Generating set of the cone as a point set: rays plus +-lineality basis.
    std::vector<Vec> generators_with_lineality() const {
        std::vector<Vec> out = generators;
        for (const Vec& l : lineality) {
            out.push_back(l);
            Vec neg(l.size());
            for (std::size_t k = 0; k < l.size(); ++k) neg[k] = -l[k];
            out.push_back(std::move(neg));
        }
        return out;
    }

    bool contains(const Vec& x) const {
        for (const Vec& e : equations)
            if (dot(e, x) != 0) return false;
        for (const Vec& n : normals)
            if (dot(n, x) < 0) return false;
        return true;
    }
};

inline Cone cone_from_generators(const std::vector<Vec>& gens, std::size_t rank) {
    for (const Vec& g : gens)
        if (g.size() != rank) throw input_error("cone: generator of wrong length");
    std::vector<Vec> clean = gens;
    detail::canonicalize_vectors(clean);

    VDesc dual = polar(clean, rank);  // V-description of the dual cone
    std::vector<Vec> dual_all = dual.rays;
    for (const Vec& l : dual.lineality) {
        dual_all.push_back(l);
        Vec neg(l.size());
        for (std::size_t k = 0; k < l.size(); ++k) neg[k] = -l[k];
        dual_all.push_back(std::move(neg));
    }
    VDesc self = polar(dual_all, rank);  // minimal V-description of the cone itself

    Cone c;
    c.ambient_rank = rank;
    c.generators = std::move(self.rays);
    c.lineality = std::move(self.lineality);
    c.normals = std::move(dual.rays);
    c.equations = std::move(dual.lineality);
    return c;
}

inline Cone cone_from_inequalities(const std::vector<Vec>& normals, std::size_t rank) {
    for (const Vec& n : normals)
        if (n.size() != rank) throw input_error("cone: normal of wrong length");
    VDesc self = polar(normals, rank);
    std::vector<Vec> gen_all = self.rays;
    for (const Vec& l : self.lineality) {
        gen_all.push_back(l);
        Vec neg(l.size());
        for (std::size_t k = 0; k < l.size(); ++k) neg[k] = -l[k];
        gen_all.push_back(std::move(neg));
    }
    VDesc dual = polar(gen_all, rank);

    Cone c;
    c.ambient_rank = rank;
    c.generators = std::move(self.rays);
    c.lineality = std::move(self.lineality);
    c.normals = std::move(dual.rays);
    c.equations = std::move(dual.lineality);
    return c;
}

// Full dual description of the cone dual to cone(generators):
// its inequalities are exactly the input generators.
inline Cone dualize(const std::vector<Vec>& generators, std::size_t rank) {
    return cone_from_inequalities(generators, rank);
}

inline std::vector<Vec> lineality(const Cone& c) { return c.lineality; }

// Semantic equality of the underlying point sets.
inline bool same_cone(const Cone& a, const Cone& b) {
    if (a.ambient_rank != b.ambient_rank) return false;
    auto gens_inside = [](const Cone& x, const Cone& y) {
        for (const Vec& g : x.generators)
            if (!y.contains(g)) return false;
        for (const Vec& l : x.lineality) {
            if (!y.contains(l)) return false;
            Vec neg(l.size());
            for (std::size_t k = 0; k < l.size(); ++k) neg[k] = -l[k];
            if (!y.contains(neg)) return false;
        }
        return true;
    };
    return gens_inside(a, b) && gens_inside(b, a);
}

// A face of a pointed cone, stored by incidence index sets.
struct Face {
    std::vector<std::size_t> active_normals;       // normals vanishing on the face
    std::vector<std::size_t> spanning_generators;  // generators lying on the face
    int dimension = 0;
};

// All faces of a pointed cone, zero face and the cone itself included,
// canonically ordered by (dimension, active normal set).
inline std::vector<Face> faces(const Cone& c) {
    using namespace detail;
    if (!c.pointed()) throw input_error("faces: cone is not pointed; quotient lineality first");

    const std::size_t ng = c.generators.size();
    const std::size_t words = ng == 0 ? 1 : (ng + 63) / 64;

    std::vector<std::vector<std::uint64_t>> incidence;  // per normal: generators on it
    for (const Vec& n : c.normals) {
        std::vector<std::uint64_t> s(words, 0);
        for (std::size_t i = 0; i < ng; ++i)
            if (dot(n, c.generators[i]) == 0) set_bit(s, i);
        incidence.push_back(std::move(s));
    }

    struct MaskHash {
        std::size_t operator()(const std::vector<std::uint64_t>& m) const {
            std::size_t h = 1469598103934665603ull;
            for (std::uint64_t w : m) h = (h ^ w) * 1099511628211ull;
            return h;
        }
    };
    std::unordered_set<std::vector<std::uint64_t>, MaskHash> seen;
    std::vector<std::vector<std::uint64_t>> queue;

    std::vector<std::uint64_t> top(words, 0);
    for (std::size_t i = 0; i < ng; ++i) set_bit(top, i);
    seen.insert(top);
    queue.push_back(top);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<std::uint64_t> cur = queue[qi];
        for (const auto& s : incidence) {
            std::vector<std::uint64_t> inter(words);
            for (std::size_t w = 0; w < words; ++w) inter[w] = cur[w] & s[w];
            if (seen.insert(inter).second) queue.push_back(inter);
        }
    }

    std::vector<Face> result;
    for (const auto& genset : seen) {
        Face f;
        std::vector<Vec> span;
        for (std::size_t i = 0; i < ng; ++i)
            if (bit(genset, i)) {
                f.spanning_generators.push_back(i);
                span.push_back(c.generators[i]);
            }
        for (std::size_t j = 0; j < incidence.size(); ++j)
            if (subset_of(genset, incidence[j])) f.active_normals.push_back(j);
        f.dimension = span.empty() ? 0 : static_cast<int>(rank_of(Mat::from_rows(span, c.ambient_rank)));
        result.push_back(std::move(f));
    }
    std::sort(result.begin(), result.end(), [](const Face& a, const Face& b) {
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        return a.active_normals < b.active_normals;
    });
    return result;
}

// Pointed image of the cone in the quotient lattice Z^rank / (lineality
// saturation), together with the projection matrix. Identity for pointed input.
inline std::pair<Cone, Mat> quotient_by_lineality(const Cone& c) {
    if (c.pointed()) return {c, Mat::identity(c.ambient_rank)};
    // Functionals vanishing on the lineality space form the dual of the
    // quotient lattice; their evaluation map is the projection.
    std::vector<Vec> funcs = kernel_basis(Mat::from_rows(c.lineality, c.ambient_rank));
    Mat proj = Mat::from_rows(funcs, c.ambient_rank);
    std::vector<Vec> imgs;
    for (const Vec& g : c.generators) imgs.push_back(proj.apply(g));
    Cone q = cone_from_generators(imgs, proj.rows());
    return {q, proj};
}

// Coordinates of the cone inside the saturated lattice of its linear span.
// Returns the restricted cone and the basis matrix B (columns = basis) with
// x = B * y mapping restricted coordinates back to the ambient lattice.
inline std::pair<Cone, Mat> restrict_to_span(const Cone& c) {
    if (c.full_dimensional()) return {c, Mat::identity(c.ambient_rank)};
    std::vector<Vec> basis = kernel_basis(Mat::from_rows(c.equations, c.ambient_rank));
    const std::size_t m = basis.size();
    Mat b(c.ambient_rank, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < c.ambient_rank; ++i) b(i, j) = basis[j][i];
    std::vector<Vec> restricted;
    auto pull = [&](const Vec& g) {
        auto sol = solve_affine_lattice(b, g);
        if (!sol) throw std::logic_error("restrict_to_span: generator outside saturated span");
        return sol->witness;
    };
    for (const Vec& g : c.generators) restricted.push_back(pull(g));
    for (const Vec& l : c.lineality) {
        Vec y = pull(l);
        restricted.push_back(y);
        for (Int& x : y) x = -x;
        restricted.push_back(y);
    }
    return {cone_from_generators(restricted, m), b};
}

}  // namespace toric
