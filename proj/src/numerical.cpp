#include "semigor/numerical.hpp"

#include <algorithm>
#include <numeric>

namespace semigor {

bool NumericalSemigroup::contains(Coord n) const {
    if (n < 0) return false;
    if (n > frobenius) return true;
    return !std::binary_search(gaps.begin(), gaps.end(), n);
}

NumericalSemigroup numerical_profile(std::vector<Coord> generators) {
    if (generators.empty()) raise(ErrorKind::EmptyInput, "numerical semigroup needs generators");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (Coord g : generators)
        if (g <= 0) raise(ErrorKind::NonPositiveDegree, "generator " + std::to_string(g));
    Coord g = 0;
    for (Coord x : generators) g = std::gcd(g, x);
    if (g != 1)
        raise(ErrorKind::GcdNotOne, "generators have gcd " + std::to_string(g) +
                                        "; the complement in N would be infinite");

    NumericalSemigroup ns;
    ns.multiplicity = generators.front();

    if (ns.multiplicity == 1) {
        ns.generators = {1};
        ns.frobenius = -1;
        ns.genus = 0;
        ns.apery = {0};
        ns.pseudo_frobenius = {-1};
        ns.type = 1;
        ns.symmetric = true;
        ns.almost_symmetric = true;  // 2*0 == -1 + 1
        return ns;
    }

    Coord lo = generators.front(), hi = generators.back();
    Coord bound = checked_add(checked_mul(lo, hi), hi);  // conductor plus one generator of headroom
    if (bound > 4'000'000)
        raise(ErrorKind::DegreeCapExceeded, "numerical profile bound " + std::to_string(bound));
    std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
    member[0] = 1;
    for (Coord n = 1; n <= bound; ++n)
        for (Coord x : generators)
            if (n >= x && member[static_cast<std::size_t>(n - x)]) {
                member[static_cast<std::size_t>(n)] = 1;
                break;
            }

    for (Coord n = bound; n >= 0; --n)
        if (!member[static_cast<std::size_t>(n)]) {
            ns.frobenius = n;
            break;
        }
    for (Coord n = 1; n <= ns.frobenius; ++n)
        if (!member[static_cast<std::size_t>(n)]) ns.gaps.push_back(n);
    ns.genus = static_cast<Coord>(ns.gaps.size());

    auto in_s = [&](Coord n) { return n >= 0 && member[static_cast<std::size_t>(n)] != 0; };

    // Minimal generators: elements not a sum of two nonzero members.
    for (Coord x : generators) {
        bool reducible = false;
        for (Coord a = 1; a <= x / 2 && !reducible; ++a)
            if (in_s(a) && in_s(x - a)) reducible = true;
        if (!reducible) ns.generators.push_back(x);
    }

    // Apery set w.r.t. the multiplicity: least member in each residue class.
    ns.apery.assign(static_cast<std::size_t>(ns.multiplicity), -1);
    for (Coord n = 0; n <= bound; ++n) {
        Coord r = n % ns.multiplicity;
        if (in_s(n) && ns.apery[static_cast<std::size_t>(r)] < 0)
            ns.apery[static_cast<std::size_t>(r)] = n;
    }

    // PF: gaps x with x + n_i in S for every minimal generator n_i.
    for (Coord x : ns.gaps) {
        bool pf = true;
        for (Coord n_i : ns.generators)
            if (!in_s(x + n_i)) {
                pf = false;
                break;
            }
        if (pf) ns.pseudo_frobenius.push_back(x);
    }
    ns.type = static_cast<Coord>(ns.pseudo_frobenius.size());

    ns.symmetric = true;
    for (Coord x = 0; x <= ns.frobenius; ++x) {
        bool gap = !in_s(x);
        bool dual_in = in_s(ns.frobenius - x);
        if (gap != dual_in) {
            ns.symmetric = false;
            break;
        }
    }
    ns.almost_symmetric = (2 * ns.genus == ns.frobenius + ns.type);
    return ns;
}

RingPtr to_ring(const NumericalSemigroup& ns, Limits limits) {
    std::vector<Vec> gens;
    for (Coord g : ns.generators) gens.push_back(Vec{g});
    return new_ring(1, std::move(gens), Grading{{1}, 1}, limits);
}

}  // namespace semigor
