#pragma once

// Independent brute-force oracles for the tests. These deliberately avoid the
// library's windowed search paths: everything here is direct enumeration over
// a caller-chosen window plus pairwise domination, so agreement with the
// production code is meaningful evidence.

#include <algorithm>
#include <vector>

#include "semigor/harness.hpp"
#include "semigor/modules.hpp"

namespace oracle {

using namespace semigor;

// True minimal elements of a finite set under S-domination.
inline std::vector<Vec> brute_minimize(const RingPtr& ring, std::vector<Vec> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<Vec> out;
    for (const Vec& v : elems) {
        bool dominated = false;
        for (const Vec& u : elems) {
            if (u == v) continue;
            if (ring->membership(vec_sub(v, u))) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(v);
    }
    sort_deg_lex(ring->grading(), out);
    return out;
}

// Inverse module by exhaustive degree-window enumeration: every candidate is
// s - g for one fixed generator, scanned up to `window` in module degree.
inline std::vector<Vec> brute_inverse(const MonomialModule& ideal, Coord window) {
    const RingPtr& ring = ideal.ring();
    const std::vector<Vec>& gens = ideal.generators();
    const Vec g0 = gens.front();
    const Coord d0 = ring->degree(g0);
    const Coord lo = -ideal.max_degree();

    std::vector<Vec> members;
    for (Coord n = std::max<Coord>(lo + d0, 0); n <= window + d0; ++n) {
        for (const Vec& s : ring->elements_of_degree(n)) {
            Vec v = vec_sub(s, g0);
            bool ok = true;
            for (const Vec& g : gens)
                if (!ring->membership(vec_add(v, g))) {
                    ok = false;
                    break;
                }
            if (ok) members.push_back(v);
        }
    }
    return brute_minimize(ring, members);
}

inline std::vector<Vec> brute_trace(const MonomialModule& ideal, Coord window) {
    std::vector<Vec> inverse = brute_inverse(ideal, window);
    std::vector<Vec> sums;
    for (const Vec& a : ideal.generators())
        for (const Vec& b : inverse) sums.push_back(vec_add(a, b));
    return brute_minimize(ideal.ring(), sums);
}

// Random fractional ideal: a handful of semigroup elements, optionally
// shifted to negative degrees.
inline MonomialModule random_module(const RingPtr& ring, SplitMix64& rng) {
    Coord indeg = ring->indeg();
    std::vector<Vec> pool;
    for (Coord n = indeg; n <= 4 * indeg + 2; ++n)
        for (const Vec& v : ring->elements_of_degree(n)) pool.push_back(v);
    std::vector<Vec> gens;
    std::size_t count = 1 + rng.below(4);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(pool[rng.below(pool.size())]);
    if (rng.chance(1, 2)) {
        const Vec shift = pool[rng.below(pool.size())];
        for (Vec& g : gens) g = vec_sub(g, shift);
    }
    return minimize_generators(ring, gens);
}

}  // namespace oracle
