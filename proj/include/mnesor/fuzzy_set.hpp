#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mnesor/errors.hpp"
#include "mnesor/grade.hpp"

namespace mnesor {

/// Finite ordered universe of labels. Two discrete sets are compatible iff
/// their universes hold the same labels in the same order.
class DiscreteCarrier {
public:
    DiscreteCarrier() = default;

    explicit DiscreteCarrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
        std::unordered_set<std::string_view> seen;
        for (const auto& l : labels_)
            if (!seen.insert(l).second) throw DomainError("duplicate label '" + l + "' in universe");
    }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t size() const noexcept { return labels_.size(); }

    std::optional<std::size_t> index_of(std::string_view label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return i;
        return std::nullopt;
    }

    friend bool operator==(const DiscreteCarrier&, const DiscreteCarrier&) = default;

private:
    std::vector<std::string> labels_;
};

/// Uniform grid over [lo, hi], endpoints inclusive, n >= 2 samples.
class GridCarrier {
public:
    GridCarrier(double lo, double hi, int n) : lo_(lo), hi_(hi), n_(n) {
        if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
            throw DomainError("grid needs finite lo < hi");
        if (n < 2) throw DomainError("grid needs at least 2 samples, got " + std::to_string(n));
    }

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(n_); }

    double coordinate(int i) const noexcept { return lo_ + (hi_ - lo_) * i / (n_ - 1); }

    friend bool operator==(const GridCarrier&, const GridCarrier&) = default;

private:
    double lo_;
    double hi_;
    int n_;
};

/// A fuzzy set: one Grade per carrier position. Immutable value type; all
/// operations below are pure and safe for concurrent callers.
template <class Carrier>
class FuzzySet {
public:
    using carrier_type = Carrier;

    FuzzySet(Carrier carrier, std::vector<Grade> grades)
        : carrier_(std::move(carrier)), grades_(std::move(grades)) {
        if (grades_.size() != carrier_.size())
            throw DomainError("expected " + std::to_string(carrier_.size()) + " grades, got " +
                              std::to_string(grades_.size()));
    }

    static FuzzySet empty(Carrier c) {
        std::vector<Grade> g(c.size(), Grade::zero());
        return FuzzySet(std::move(c), std::move(g));
    }

    static FuzzySet full(Carrier c) {
        std::vector<Grade> g(c.size(), Grade::one());
        return FuzzySet(std::move(c), std::move(g));
    }

    const Carrier& carrier() const noexcept { return carrier_; }
    std::span<const Grade> grades() const& noexcept { return grades_; }
    std::span<const Grade> grades() const&& = delete;  // would dangle
    std::size_t size() const noexcept { return grades_.size(); }
    Grade operator[](std::size_t i) const noexcept { return grades_[i]; }

private:
    Carrier carrier_;
    std::vector<Grade> grades_;
};

using DiscreteFuzzySet = FuzzySet<DiscreteCarrier>;
using SampledFuzzySet = FuzzySet<GridCarrier>;

namespace detail {

template <class Carrier>
void require_same_carrier(const FuzzySet<Carrier>& a, const FuzzySet<Carrier>& b) {
    if (!(a.carrier() == b.carrier()))
        throw CarrierMismatch("sets live on different universes/grids; no implicit resampling");
}

template <class Carrier, class F>
FuzzySet<Carrier> zip(const FuzzySet<Carrier>& a, const FuzzySet<Carrier>& b, F&& f) {
    require_same_carrier(a, b);
    std::vector<Grade> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(f(a[i], b[i]));
    return FuzzySet<Carrier>(a.carrier(), std::move(out));
}

template <class Carrier, class F>
FuzzySet<Carrier> map(const FuzzySet<Carrier>& a, F&& f) {
    std::vector<Grade> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(f(a[i]));
    return FuzzySet<Carrier>(a.carrier(), std::move(out));
}

}  // namespace detail

/// Pointwise max — the addition of the algebra.
template <class Carrier>
FuzzySet<Carrier> set_union(const FuzzySet<Carrier>& a, const FuzzySet<Carrier>& b) {
    return detail::zip(a, b, [](Grade x, Grade y) { return max(x, y); });
}

/// A^(1/lambda) pointwise; lambda <= 1 tightens (subset of A, "more
/// selective"), lambda >= 1 loosens (superset).
template <class Carrier>
FuzzySet<Carrier> scale(const FuzzySet<Carrier>& a, double lambda) {
    detail::require_positive_finite(lambda, "scale factor");
    return detail::map(a, [lambda](Grade g) { return scale(g, lambda); });
}

/// Pointwise c_k complement; involutive, maps full to empty.
template <class Carrier>
FuzzySet<Carrier> complement(const FuzzySet<Carrier>& a, ComplementConfig cfg = {}) {
    detail::require_positive_finite(cfg.k, "complement parameter k");
    return detail::map(a, [cfg](Grade g) { return complement(g, cfg); });
}

/// De Morgan meet ~(~A + ~B). Collapses to the pointwise minimum because
/// the complement is a decreasing involution; the direct minimum is kept
/// out of this path so the two routes can be compared in tests.
template <class Carrier>
FuzzySet<Carrier> intersect(const FuzzySet<Carrier>& a, const FuzzySet<Carrier>& b, ComplementConfig cfg = {}) {
    detail::require_same_carrier(a, b);
    return complement(set_union(complement(a, cfg), complement(b, cfg)), cfg);
}

/// Carriers must match and every grade agree within tol; mismatched
/// carriers compare unequal rather than erroring.
template <class Carrier>
bool approx_equal(const FuzzySet<Carrier>& a, const FuzzySet<Carrier>& b, double tol) {
    if (!(a.carrier() == b.carrier())) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!approx_equal(a[i], b[i], tol)) return false;
    return true;
}

/// Order induced by the addition: A <= B iff A + B = B.
template <class Carrier>
bool is_subset(const FuzzySet<Carrier>& a, const FuzzySet<Carrier>& b, double tol) {
    return approx_equal(set_union(a, b), b, tol);
}

/// Largest pointwise |a_i - b_i| in the linear domain.
template <class Carrier>
double distance(const FuzzySet<Carrier>& a, const FuzzySet<Carrier>& b) {
    detail::require_same_carrier(a, b);
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i].value() - b[i].value()));
    return d;
}

/// Discrete set from label -> value; labels absent from the map get grade
/// zero, labels outside the universe are rejected.
inline DiscreteFuzzySet make_discrete(DiscreteCarrier carrier, const std::map<std::string, double>& values) {
    std::vector<Grade> grades(carrier.size(), Grade::zero());
    for (const auto& [label, v] : values) {
        auto idx = carrier.index_of(label);
        if (!idx) throw DomainError("label '" + label + "' is not in the universe");
        grades[*idx] = Grade::from_linear(v);
    }
    return DiscreteFuzzySet(std::move(carrier), std::move(grades));
}

inline Grade grade_of(const DiscreteFuzzySet& s, std::string_view label) {
    auto idx = s.carrier().index_of(label);
    if (!idx) throw DomainError("label '" + std::string(label) + "' is not in the universe");
    return s[*idx];
}

}  // namespace mnesor
