#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mnesor/errors.hpp"

namespace mnesor {

namespace detail {

inline void require_positive_finite(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError(std::string(what) + " must be a positive finite number, got " + std::to_string(x));
}

}  // namespace detail

/// Parameter of the complement family c_k(x) = exp(k / ln x); k > 0.
/// k = 0.4 keeps c_k closest to the familiar 1 - x.
struct ComplementConfig {
    double k = 0.4;
};

/// A membership value in [0,1], stored in both the linear and the log
/// domain (log_value = ln(value), in [-inf, 0]).
///
/// The log form is the working representation: scaling is a single division
/// (l / lambda) and the complement family another (k / l), so chains of
/// those operations lose nothing to exp/log round trips. Both fields are
/// set at construction and never mutated; Grades are safe to share freely.
class Grade {
public:
    /// Zero membership.
    constexpr Grade() noexcept = default;

    static Grade zero() noexcept { return Grade(); }
    static Grade one() noexcept { return Grade(1.0, 0.0); }

    static Grade from_linear(double v) {
        if (std::isnan(v) || v < 0.0 || v > 1.0)
            throw DomainError("grade " + std::to_string(v) + " outside [0,1]");
        if (v == 0.0) return zero();
        if (v == 1.0) return one();
        return Grade(v, std::log(v));
    }

    /// l = ln(value); accepts -inf (zero grade) and 0 (full grade).
    static Grade from_log(double l) {
        if (std::isnan(l) || l > 0.0)
            throw DomainError("log-domain grade " + std::to_string(l) + " outside [-inf,0]");
        if (l == 0.0) return one();  // also normalizes -0.0
        if (l == -std::numeric_limits<double>::infinity()) return zero();
        // exp never overshoots 1 for negative arguments by more than one
        // ulp; clamp so value() stays inside [0,1] under all libm builds.
        return Grade(std::min(std::exp(l), 1.0), l);
    }

    double value() const noexcept { return value_; }
    double log_value() const noexcept { return log_; }

    bool is_zero() const noexcept { return log_ == -std::numeric_limits<double>::infinity(); }
    bool is_one() const noexcept { return log_ == 0.0; }

private:
    constexpr Grade(double v, double l) noexcept : value_(v), log_(l) {}

    double value_ = 0.0;
    double log_ = -std::numeric_limits<double>::infinity();
};

/// Pointwise max/min. Ordering is decided in the log domain and the winning
/// argument is returned whole, so results always carry a coherent
/// (value, log) pair; ties go to the first argument.
inline Grade max(Grade a, Grade b) noexcept { return b.log_value() > a.log_value() ? b : a; }
inline Grade min(Grade a, Grade b) noexcept { return b.log_value() < a.log_value() ? b : a; }

/// External scaling a^(1/lambda), lambda > 0. One log-domain division;
/// lambda = 1 and the endpoints return the argument unchanged.
inline Grade scale(Grade a, double lambda) {
    detail::require_positive_finite(lambda, "scale factor");
    if (lambda == 1.0 || a.is_zero() || a.is_one()) return a;
    return Grade::from_log(a.log_value() / lambda);
}

/// Plain power a^n, n > 0.
inline Grade pow(Grade a, double n) {
    detail::require_positive_finite(n, "exponent");
    if (n == 1.0 || a.is_zero() || a.is_one()) return a;
    return Grade::from_log(a.log_value() * n);
}

/// c_k(x) = exp(k / ln x) on (0,1). The endpoint exchange c_k(0) = 1,
/// c_k(1) = 0 is taken on explicit branches, never through the formula
/// (which would divide by ln(1) = 0 or evaluate ln(0)). Strictly
/// decreasing in x and involutive for every fixed k.
inline Grade complement(Grade a, ComplementConfig cfg = {}) {
    detail::require_positive_finite(cfg.k, "complement parameter k");
    if (a.is_zero()) return Grade::one();
    if (a.is_one()) return Grade::zero();
    return Grade::from_log(cfg.k / a.log_value());
}

/// |a - b| <= tol in the linear domain.
inline bool approx_equal(Grade a, Grade b, double tol) {
    if (std::isnan(tol) || tol < 0.0) throw DomainError("tolerance must be >= 0");
    return std::abs(a.value() - b.value()) <= tol;
}

}  // namespace mnesor
