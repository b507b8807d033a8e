#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semigor/invariants.hpp"

namespace semigor {

// k-th Veronese subalgebra: the subsemigroup of degrees divisible by k,
// regraded by k (the ambient weights are kept and the grading divisor picks
// up the factor). Generators are discovered degree by degree up to a bound
// with a stability sweep of the same width; instability fails loudly.
RingPtr veronese_ring(const RingPtr& ring, Coord k);

// k-th Veronese submodule over a precomputed veronese_ring(ring(M), k).
MonomialModule veronese_module(const MonomialModule& module, Coord k, const RingPtr& veronese);

// Quasi-Gorenstein Veronese construction: hypotheses of the underlying
// theorem on a standard graded normal domain of dimension >= 2 plus
// a in kZ, conclusion "trace of the Veronese canonical module is the whole
// ring". The conclusion is evaluated whenever the canonical machinery
// applies, so negative controls still report what the Veronese looks like.
struct VeroneseCheck {
    std::vector<std::pair<std::string, Bool3>> hypotheses;
    bool hypotheses_met = false;
    Bool3 conclusion = Bool3::Unknown;
    RingPtr veronese;
    std::optional<CanonicalModule> omega_veronese;

    bool counterexample() const { return hypotheses_met && conclusion == Bool3::False; }
};

VeroneseCheck okokok_check(const RingPtr& ring, Coord k);

}  // namespace semigor
