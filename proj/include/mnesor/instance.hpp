#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "mnesor/errors.hpp"
#include "mnesor/rng.hpp"

namespace mnesor {

using Json = nlohmann::ordered_json;

/// Capability bundle describing one model of the algebra: a commutative
/// idempotent monoid with external scaling, optionally with a top element,
/// a complement, and the k-indexed complement family. The law checker
/// knows nothing about elements beyond these hooks, so any structure can
/// be checked (or deliberately broken and shown to fail).
///
/// All capabilities must be pure; the checker may invoke them from any
/// trial in any order.
template <class Element>
struct MnesorInstance {
    using element_type = Element;

    std::string name;

    // Sampling range for scale factors.
    double lambda_min = 0.05;
    double lambda_max = 4.0;

    std::function<Element()> zero;
    std::function<Element(const Element&, const Element&)> add;
    std::function<Element(const Element&, double)> scale;
    std::function<bool(const Element&, const Element&, double)> equal;
    std::function<double(const Element&, const Element&)> distance;  // sup-norm, for reports
    std::function<Element(Rng&)> sample;                             // deterministic in the rng state
    std::function<Json(const Element&)> describe;                    // serialization for counterexamples

    std::function<Element()> top;                                      // optional; required with complement
    std::function<Element(const Element&)> complement;                 // optional
    std::function<Element(const Element&, double)> complement_family;  // optional: complement at a given k
    std::function<Element(const Element&, double)> power;              // optional: x^n, needed with the family

    bool has_complement() const noexcept { return complement != nullptr; }
    bool has_power_family() const noexcept { return complement_family != nullptr && power != nullptr; }
};

/// A <= B iff A + B = B.
template <class E>
bool leq(const MnesorInstance<E>& m, const E& a, const E& b, double tol) {
    return m.equal(m.add(a, b), b, tol);
}

/// ~(~a + ~b).
template <class E>
E de_morgan_meet(const MnesorInstance<E>& m, const E& a, const E& b) {
    return m.complement(m.add(m.complement(a), m.complement(b)));
}

}  // namespace mnesor
