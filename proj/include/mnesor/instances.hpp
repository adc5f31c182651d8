#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "mnesor/fuzzy_set.hpp"
#include "mnesor/grade.hpp"
#include "mnesor/instance.hpp"
#include "mnesor/set_format.hpp"

namespace mnesor {

/// Random grade with extra mass on the endpoints so boundary behaviour is
/// always exercised.
inline Grade sample_grade(Rng& rng) {
    const double u = rng.uniform01();
    if (u < 0.05) return Grade::zero();
    if (u < 0.10) return Grade::one();
    return Grade::from_linear(rng.uniform01());
}

/// Single membership values under (max, scaling, c_k). Carries the
/// k-indexed complement family, so the power identities are in scope.
inline MnesorInstance<Grade> grade_instance(ComplementConfig cfg = {}) {
    detail::require_positive_finite(cfg.k, "complement parameter k");
    MnesorInstance<Grade> m;
    m.name = "grade";
    m.zero = [] { return Grade::zero(); };
    m.top = [] { return Grade::one(); };
    m.add = [](const Grade& a, const Grade& b) { return max(a, b); };
    m.scale = [](const Grade& a, double l) { return scale(a, l); };
    m.equal = [](const Grade& a, const Grade& b, double tol) { return approx_equal(a, b, tol); };
    m.distance = [](const Grade& a, const Grade& b) { return std::abs(a.value() - b.value()); };
    m.sample = [](Rng& rng) { return sample_grade(rng); };
    m.describe = [](const Grade& g) { return Json(g.value()); };
    m.complement = [cfg](const Grade& a) { return complement(a, cfg); };
    m.complement_family = [](const Grade& a, double k) { return complement(a, ComplementConfig{k}); };
    m.power = [](const Grade& a, double n) { return pow(a, n); };
    return m;
}

namespace detail {

template <class Carrier>
MnesorInstance<FuzzySet<Carrier>> set_instance(std::string name, Carrier carrier, ComplementConfig cfg) {
    require_positive_finite(cfg.k, "complement parameter k");
    using Set = FuzzySet<Carrier>;
    MnesorInstance<Set> m;
    m.name = std::move(name);
    m.zero = [carrier] { return Set::empty(carrier); };
    m.top = [carrier] { return Set::full(carrier); };
    m.add = [](const Set& a, const Set& b) { return set_union(a, b); };
    m.scale = [](const Set& a, double l) { return scale(a, l); };
    m.equal = [](const Set& a, const Set& b, double tol) { return approx_equal(a, b, tol); };
    m.distance = [](const Set& a, const Set& b) { return distance(a, b); };
    m.sample = [carrier](Rng& rng) {
        std::vector<Grade> g;
        g.reserve(carrier.size());
        for (std::size_t i = 0; i < carrier.size(); ++i) g.push_back(sample_grade(rng));
        return Set(carrier, std::move(g));
    };
    m.describe = [](const Set& s) { return descriptor(s); };
    m.complement = [cfg](const Set& a) { return complement(a, cfg); };
    // No complement_family/power: the power identities are grade-level laws.
    return m;
}

}  // namespace detail

inline DiscreteCarrier default_check_universe() {
    return DiscreteCarrier({"a", "b", "c", "d", "e"});
}

/// Discrete fuzzy sets over a small fixed universe.
inline MnesorInstance<DiscreteFuzzySet> discrete_instance(ComplementConfig cfg = {}) {
    return detail::set_instance("discrete", default_check_universe(), cfg);
}

inline MnesorInstance<DiscreteFuzzySet> discrete_instance(DiscreteCarrier carrier, ComplementConfig cfg = {}) {
    return detail::set_instance("discrete", std::move(carrier), cfg);
}

/// Sampled fuzzy sets on a small fixed grid.
inline MnesorInstance<SampledFuzzySet> sampled_instance(ComplementConfig cfg = {}) {
    return detail::set_instance("sampled", GridCarrier(0.0, 1.0, 17), cfg);
}

inline MnesorInstance<SampledFuzzySet> sampled_instance(GridCarrier grid, ComplementConfig cfg = {}) {
    return detail::set_instance("sampled", std::move(grid), cfg);
}

}  // namespace mnesor
