#pragma once

// Test corpus: exhaustive isomorphism-free enumeration of small posets and a
// seeded random sample of larger ones.

#include "toric/poset.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace corpus {

inline std::vector<std::string> labels(int n) {
    std::vector<std::string> ls;
    for (int i = 0; i < n; ++i) ls.push_back("e" + std::to_string(i));
    return ls;
}

inline toric::Poset poset_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<std::string, std::string>> rels;
    auto ls = labels(n);
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) rels.emplace_back(ls[i], ls[j]);
    return toric::Poset::from_relations(ls, rels);
}

// All posets on n elements up to isomorphism, one canonical representative
// each. Strict relations live on the upper triangle (every finite poset has a
// topological labeling), masks are kept transitively closed, and each class
// is represented by the minimum mask over all order-preserving relabelings.
inline std::vector<toric::Poset> exhaustive_posets(int n) {
    const int pairs = n * (n - 1) / 2;
    auto bit_of = [&](int i, int j) {  // i < j
        int b = 0;
        for (int r = 0; r < i; ++r) b += n - 1 - r;
        return b + (j - i - 1);
    };
    auto lt = [&](std::uint64_t mask, int i, int j) {
        return i < j && ((mask >> bit_of(i, j)) & 1);
    };

    std::vector<int> perm(n);
    std::set<std::uint64_t> canonical;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i)
            for (int j = i + 1; j < n && transitive; ++j) {
                if (!lt(mask, i, j)) continue;
                for (int k = j + 1; k < n; ++k)
                    if (lt(mask, j, k) && !lt(mask, i, k)) {
                        transitive = false;
                        break;
                    }
            }
        if (!transitive) continue;

        std::uint64_t best = mask;
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            std::uint64_t img = 0;
            bool upper = true;
            for (int i = 0; i < n && upper; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (!lt(mask, i, j)) continue;
                    int a = perm[i], b = perm[j];
                    if (a > b) {
                        upper = false;
                        break;
                    }
                    img |= std::uint64_t(1) << bit_of(a, b);
                }
            if (upper && img < best) best = img;
        } while (std::next_permutation(perm.begin(), perm.end()));
        canonical.insert(best);
    }

    std::vector<toric::Poset> out;
    for (std::uint64_t mask : canonical) out.push_back(poset_from_mask(n, mask));
    return out;
}

// Seeded random posets with up to max_n elements: a random strict relation on
// the upper triangle, transitively closed.
inline std::vector<toric::Poset> random_posets(int count, int max_n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> size_dist(1, max_n);
    std::uniform_real_distribution<double> prob(0.15, 0.75);
    std::vector<toric::Poset> out;
    for (int t = 0; t < count; ++t) {
        int n = size_dist(rng);
        double p = prob(rng);
        std::uint64_t mask = 0;
        std::size_t bit = 0;
        std::bernoulli_distribution edge(p);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (edge(rng)) mask |= std::uint64_t(1) << bit;
        // transitive closure on the mask (from_relations closes again anyway)
        out.push_back(poset_from_mask(n, mask));
    }
    return out;
}

}  // namespace corpus
