#pragma once

// Finite posets with Hasse data, the bounded extension with sentinels, and
// the combinatorics feeding the Hibi cone: gradedness, complete subsets,
// rank and distance.

#include "toric/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace toric {

// Finite partially ordered set. Elements are referred to by index into the
// canonical (sorted, unique) label list.
class Poset {
  public:
    // Relations are pairs (a, b) meaning a <= b; closure, antisymmetry
    // validation and cover extraction happen here.
    static Poset from_relations(std::vector<std::string> labels,
                                const std::vector<std::pair<std::string, std::string>>& relations) {
        Poset p;
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
            throw input_error("poset: duplicate element label");
        p.labels_ = std::move(labels);
        const std::size_t n = p.labels_.size();
        p.leq_.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) p.leq_[i][i] = true;
        for (const auto& [a, b] : relations) p.leq_[p.index_of(a)][p.index_of(b)] = true;
        // Warshall transitive closure
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (p.leq_[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (p.leq_[k][j]) p.leq_[i][j] = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p.leq_[i][j] && p.leq_[j][i])
                    throw input_error("poset: relations are not antisymmetric");
        return p;
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t index_of(const std::string& label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label) throw input_error("poset: unknown element '" + label + "'");
        return static_cast<std::size_t>(it - labels_.begin());
    }

    bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }

    // Hasse edges a <. b
    std::vector<std::pair<std::size_t, std::size_t>> covers() const {
        std::vector<std::pair<std::size_t, std::size_t>> cs;
        const std::size_t n = size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b || !leq_[a][b]) continue;
                bool cover = true;
                for (std::size_t c = 0; c < n && cover; ++c)
                    if (c != a && c != b && leq_[a][c] && leq_[c][b]) cover = false;
                if (cover) cs.emplace_back(a, b);
            }
        return cs;
    }

  private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;
};

// P with sentinels adjoined: indices 0..n-1 are the elements of P in label
// order, n is -infinity, n+1 is +infinity.
class BoundedPoset {
  public:
    explicit BoundedPoset(const Poset& p) : n_(p.size()) {
        const std::size_t m = n_ + 2;
        leq_.assign(m, std::vector<bool>(m, false));
        for (std::size_t i = 0; i < m; ++i) leq_[i][i] = true;
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (p.leq(a, b)) leq_[a][b] = true;
        for (std::size_t i = 0; i < m; ++i) {
            leq_[bottom()][i] = true;
            leq_[i][top()] = true;
        }
        covers_ = compute_covers(leq_);
    }

    std::size_t size() const { return n_ + 2; }
    std::size_t base_size() const { return n_; }
    std::size_t bottom() const { return n_; }
    std::size_t top() const { return n_ + 1; }
    bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

    static std::vector<std::pair<std::size_t, std::size_t>> compute_covers(
        const std::vector<std::vector<bool>>& leq) {
        const std::size_t m = leq.size();
        std::vector<std::pair<std::size_t, std::size_t>> cs;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                if (a == b || !leq[a][b]) continue;
                bool cover = true;
                for (std::size_t c = 0; c < m && cover; ++c)
                    if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
                if (cover) cs.emplace_back(a, b);
            }
        return cs;
    }

  private:
    std::size_t n_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

// A connected, order-convex subset of the bounded poset, stored as a bitmask.
struct CompleteSubset {
    std::uint32_t mask = 0;

    std::size_t count() const { return static_cast<std::size_t>(__builtin_popcount(mask)); }
    bool contains(std::size_t i) const { return (mask >> i) & 1u; }
    std::vector<std::size_t> members() const {
        std::vector<std::size_t> m;
        for (std::size_t i = 0; i < 32; ++i)
            if (contains(i)) m.push_back(i);
        return m;
    }
};

namespace detail {

inline bool convex_in(const BoundedPoset& pb, std::uint32_t mask) {
    const std::size_t m = pb.size();
    for (std::size_t a = 0; a < m; ++a) {
        if (!((mask >> a) & 1u)) continue;
        for (std::size_t c = 0; c < m; ++c) {
            if (a == c || !((mask >> c) & 1u) || !pb.leq(a, c)) continue;
            for (std::size_t b = 0; b < m; ++b)
                if (b != a && b != c && pb.leq(a, b) && pb.leq(b, c) && !((mask >> b) & 1u))
                    return false;
        }
    }
    return true;
}

// Connectivity in the Hasse diagram restricted to the subset. For convex
// subsets this is the Hasse diagram of the induced order.
inline bool connected_in(const BoundedPoset& pb, std::uint32_t mask) {
    if (mask == 0) return false;
    std::uint32_t reached = mask & (~mask + 1u);  // lowest set bit
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [a, b] : pb.covers()) {
            std::uint32_t ma = 1u << a, mb = 1u << b;
            if (!(mask & ma) || !(mask & mb)) continue;
            if ((reached & ma) && !(reached & mb)) {
                reached |= mb;
                grew = true;
            } else if ((reached & mb) && !(reached & ma)) {
                reached |= ma;
                grew = true;
            }
        }
    }
    return reached == mask;
}

// Cover relations of the order induced on the subset.
inline std::vector<std::pair<std::size_t, std::size_t>> induced_covers(const BoundedPoset& pb,
                                                                       std::uint32_t mask) {
    std::vector<std::size_t> el;
    for (std::size_t i = 0; i < pb.size(); ++i)
        if ((mask >> i) & 1u) el.push_back(i);
    std::vector<std::pair<std::size_t, std::size_t>> cs;
    for (std::size_t a : el)
        for (std::size_t b : el) {
            if (a == b || !pb.leq(a, b)) continue;
            bool cover = true;
            for (std::size_t c : el)
                if (c != a && c != b && pb.leq(a, c) && pb.leq(c, b)) cover = false;
            if (cover) cs.emplace_back(a, b);
        }
    return cs;
}

}  // namespace detail

// A sub-poset is graded if an integer potential drops by exactly one across
// each of its covers. Decided by propagation over the induced Hasse diagram
// with a consistency check, componentwise.
inline bool is_graded(const BoundedPoset& pb, std::uint32_t mask) {
    auto covers = detail::induced_covers(pb, mask);
    std::map<std::size_t, long> potential;
    std::vector<std::size_t> el;
    for (std::size_t i = 0; i < pb.size(); ++i)
        if ((mask >> i) & 1u) el.push_back(i);
    for (std::size_t seed : el) {
        if (potential.count(seed)) continue;
        potential[seed] = 0;
        std::vector<std::size_t> stack{seed};
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (const auto& [a, b] : covers) {
                std::size_t other;
                long expected;
                if (a == x)
                    other = b, expected = potential[x] - 1;  // psi(a) = psi(b) + 1
                else if (b == x)
                    other = a, expected = potential[x] + 1;
                else
                    continue;
                auto it = potential.find(other);
                if (it == potential.end()) {
                    potential[other] = expected;
                    stack.push_back(other);
                } else if (it->second != expected) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_graded(const BoundedPoset& pb) {
    std::uint32_t full = (pb.size() >= 32) ? ~0u : ((1u << pb.size()) - 1u);
    return is_graded(pb, full);
}

// All connected, order-convex subsets of the bounded poset of size >= 2.
inline std::vector<CompleteSubset> complete_subsets(const Poset& p, std::size_t cap = 20) {
    BoundedPoset pb(p);
    const std::size_t m = pb.size();
    if (m > cap) throw resource_error("complete_subsets: bounded poset exceeds enumeration cap");
    std::vector<CompleteSubset> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        if (!detail::convex_in(pb, mask)) continue;
        if (!detail::connected_in(pb, mask)) continue;
        out.push_back(CompleteSubset{mask});
    }
    return out;
}

// Inclusion-minimal complete subsets that fail to be graded; these index the
// maximal components of the non-Gorenstein locus.
inline std::vector<CompleteSubset> minimal_nongraded_complete(const Poset& p, std::size_t cap = 20) {
    BoundedPoset pb(p);
    std::vector<CompleteSubset> nongraded;
    for (const CompleteSubset& a : complete_subsets(p, cap))
        if (!is_graded(pb, a.mask)) nongraded.push_back(a);
    std::vector<CompleteSubset> minimal;
    for (const CompleteSubset& a : nongraded) {
        bool is_min = true;
        for (const CompleteSubset& b : nongraded)
            if (b.mask != a.mask && (b.mask & a.mask) == b.mask) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(a);
    }
    return minimal;
}

// max { #P - #A + 2 } over non-graded complete subsets A; empty iff the
// bounded poset is graded.
inline std::optional<int> locus_dimension(const Poset& p, std::size_t cap = 20) {
    BoundedPoset pb(p);
    std::optional<int> best;
    for (const CompleteSubset& a : complete_subsets(p, cap)) {
        if (is_graded(pb, a.mask)) continue;
        int d = static_cast<int>(p.size()) - static_cast<int>(a.count()) + 2;
        if (!best || d > *best) best = d;
    }
    return best;
}

// Longest saturated chain length from a to b.
inline int rank_between(const BoundedPoset& pb, std::size_t a, std::size_t b) {
    if (!pb.leq(a, b)) throw input_error("rank: elements are incomparable");
    std::uint32_t interval = 0;
    for (std::size_t x = 0; x < pb.size(); ++x)
        if (pb.leq(a, x) && pb.leq(x, b)) interval |= 1u << x;
    auto covers = detail::induced_covers(pb, interval);
    // longest path from a to b in the cover DAG of the interval
    std::vector<int> longest(pb.size(), -1);
    longest[a] = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [x, y] : covers)
            if (longest[x] >= 0 && longest[x] + 1 > longest[y]) {
                longest[y] = longest[x] + 1;
                grew = true;
            }
    }
    return a == b ? 0 : longest[b];
}

// Shortest length of an inclusion-maximal (saturated) chain from a to b.
inline int dist_between(const BoundedPoset& pb, std::size_t a, std::size_t b) {
    if (!pb.leq(a, b)) throw input_error("dist: elements are incomparable");
    if (a == b) return 0;
    std::uint32_t interval = 0;
    for (std::size_t x = 0; x < pb.size(); ++x)
        if (pb.leq(a, x) && pb.leq(x, b)) interval |= 1u << x;
    auto covers = detail::induced_covers(pb, interval);
    std::vector<int> shortest(pb.size(), -1);
    shortest[a] = 0;
    std::vector<std::size_t> frontier{a};
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t x : frontier)
            for (const auto& [u, v] : covers)
                if (u == x && shortest[v] < 0) {
                    shortest[v] = shortest[x] + 1;
                    next.push_back(v);
                }
        frontier = std::move(next);
    }
    return shortest[b];
}

// All maximal chains of P have the same length.
inline bool is_pure(const Poset& p) {
    if (p.size() == 0) return true;
    const std::size_t n = p.size();
    auto covers = p.covers();
    std::vector<std::vector<std::size_t>> up(n);
    std::vector<bool> has_lower(n, false), has_upper(n, false);
    for (const auto& [a, b] : covers) {
        up[a].push_back(b);
        has_lower[b] = true;
        has_upper[a] = true;
    }
    std::optional<int> len;
    bool pure = true;
    std::vector<std::pair<std::size_t, int>> stack;
    for (std::size_t s = 0; s < n; ++s)
        if (!has_lower[s]) stack.emplace_back(s, 0);
    while (!stack.empty() && pure) {
        auto [x, d] = stack.back();
        stack.pop_back();
        if (!has_upper[x]) {
            if (len && *len != d) pure = false;
            len = d;
            continue;
        }
        for (std::size_t y : up[x]) stack.emplace_back(y, d + 1);
    }
    return pure;
}

// Connected components of the comparability graph of P.
inline std::vector<std::vector<std::size_t>> components(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = nc;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y = 0; y < n; ++y)
                if (comp[y] < 0 && (p.leq(x, y) || p.leq(y, x))) {
                    comp[y] = nc;
                    stack.push_back(y);
                }
        }
        ++nc;
    }
    std::vector<std::vector<std::size_t>> out(nc);
    for (std::size_t i = 0; i < n; ++i) out[comp[i]].push_back(i);
    return out;
}

inline Poset induced_subposet(const Poset& p, const std::vector<std::size_t>& elements) {
    std::vector<std::string> labels;
    for (std::size_t i : elements) labels.push_back(p.labels()[i]);
    std::vector<std::pair<std::string, std::string>> rels;
    for (std::size_t i : elements)
        for (std::size_t j : elements)
            if (i != j && p.leq(i, j)) rels.emplace_back(p.labels()[i], p.labels()[j]);
    return Poset::from_relations(std::move(labels), rels);
}

}  // namespace toric
