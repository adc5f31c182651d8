#pragma once

#include <vector>

#include "mnesor/instances.hpp"

namespace mnesor {

// Deliberately broken grade instances. Each must be caught by the law
// checker; together they guard against the checker passing vacuously.

/// scale(A, a) = A^a instead of A^(1/a). Breaks the scale-join law and
/// flips the selectivity direction.
inline MnesorInstance<Grade> mutant_scale_raw_exponent(ComplementConfig cfg = {}) {
    auto m = grade_instance(cfg);
    m.name = "mutant-scale-raw-exponent";
    m.scale = [](const Grade& a, double l) { return pow(a, l); };
    return m;
}

/// Complement 1 - x, with the family laws left enabled. Involutive and
/// order-reversing, but incompatible with scaling and with the k-indexed
/// power identities.
inline MnesorInstance<Grade> mutant_one_minus_complement(ComplementConfig cfg = {}) {
    auto m = grade_instance(cfg);
    m.name = "mutant-one-minus-complement";
    m.complement = [](const Grade& a) { return Grade::from_linear(1.0 - a.value()); };
    m.complement_family = [](const Grade& a, double) { return Grade::from_linear(1.0 - a.value()); };
    return m;
}

/// Addition replaced by pointwise min; zero is no longer the identity.
inline MnesorInstance<Grade> mutant_min_addition(ComplementConfig cfg = {}) {
    auto m = grade_instance(cfg);
    m.name = "mutant-min-addition";
    m.add = [](const Grade& a, const Grade& b) { return min(a, b); };
    return m;
}

/// Complement composed from two different family parameters; the result is
/// a plain power function, no longer an involution (and not decreasing).
inline MnesorInstance<Grade> mutant_composed_complement(ComplementConfig cfg = {}) {
    auto m = grade_instance(cfg);
    m.name = "mutant-composed-complement";
    const ComplementConfig other{cfg.k + 0.3};
    m.complement = [cfg, other](const Grade& a) { return complement(complement(a, other), cfg); };
    return m;
}

/// All four, for sweep tests.
inline std::vector<MnesorInstance<Grade>> reference_mutants(ComplementConfig cfg = {}) {
    return {mutant_scale_raw_exponent(cfg), mutant_one_minus_complement(cfg), mutant_min_addition(cfg),
            mutant_composed_complement(cfg)};
}

}  // namespace mnesor
