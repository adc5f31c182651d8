#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "mnesor/errors.hpp"
#include "mnesor/fuzzy_set.hpp"

namespace mnesor {

/// Piecewise-linear membership curves for building sampled sets.
class Shape {
public:
    enum class Kind { RampUp, RampDown, Triangle, Trapezoid, Constant };

    // 0 before a, linear to 1 at b, 1 after.
    static Shape ramp_up(double a, double b) { return Shape(Kind::RampUp, {a, b}); }
    // 1 before a, linear to 0 at b, 0 after.
    static Shape ramp_down(double a, double b) { return Shape(Kind::RampDown, {a, b}); }
    static Shape triangle(double a, double b, double c) { return Shape(Kind::Triangle, {a, b, c}); }
    static Shape trapezoid(double a, double b, double c, double d) { return Shape(Kind::Trapezoid, {a, b, c, d}); }
    static Shape constant(double v) { return Shape(Kind::Constant, {v}); }

    Kind kind() const noexcept { return kind_; }
    const std::vector<double>& params() const noexcept { return params_; }

    double evaluate(double x) const {
        const auto& p = params_;
        switch (kind_) {
            case Kind::RampUp:
                if (x >= p[1]) return 1.0;
                if (x <= p[0]) return 0.0;
                return clamp01((x - p[0]) / (p[1] - p[0]));
            case Kind::RampDown:
                if (x <= p[0]) return 1.0;
                if (x >= p[1]) return 0.0;
                return clamp01((p[1] - x) / (p[1] - p[0]));
            case Kind::Triangle:
                if (x == p[1]) return 1.0;
                if (x <= p[0] || x >= p[2]) return 0.0;
                if (x < p[1]) return clamp01((x - p[0]) / (p[1] - p[0]));
                return clamp01((p[2] - x) / (p[2] - p[1]));
            case Kind::Trapezoid:
                if (x >= p[1] && x <= p[2]) return 1.0;
                if (x <= p[0] || x >= p[3]) return 0.0;
                if (x < p[1]) return clamp01((x - p[0]) / (p[1] - p[0]));
                return clamp01((p[3] - x) / (p[3] - p[2]));
            case Kind::Constant:
                return p[0];
        }
        return 0.0;  // unreachable
    }

    /// Sample the curve onto a uniform grid, endpoints inclusive.
    SampledFuzzySet sample(double lo, double hi, int n) const {
        GridCarrier grid(lo, hi, n);
        std::vector<Grade> grades;
        grades.reserve(grid.size());
        for (int i = 0; i < n; ++i) grades.push_back(Grade::from_linear(evaluate(grid.coordinate(i))));
        return SampledFuzzySet(std::move(grid), std::move(grades));
    }

private:
    Shape(Kind kind, std::vector<double> params) : kind_(kind), params_(std::move(params)) {
        for (double v : params_)
            if (!std::isfinite(v)) throw DomainError("shape parameters must be finite");
        switch (kind_) {
            case Kind::RampUp:
            case Kind::RampDown:
                require_ordered(params_[0] <= params_[1], "ramp needs a <= b");
                break;
            case Kind::Triangle:
                require_ordered(params_[0] <= params_[1] && params_[1] <= params_[2], "triangle needs a <= b <= c");
                break;
            case Kind::Trapezoid:
                require_ordered(params_[0] <= params_[1] && params_[1] <= params_[2] && params_[2] <= params_[3],
                                "trapezoid needs a <= b <= c <= d");
                break;
            case Kind::Constant:
                require_ordered(params_[0] >= 0.0 && params_[0] <= 1.0, "constant level must lie in [0,1]");
                break;
        }
    }

    static void require_ordered(bool ok, const char* msg) {
        if (!ok) throw DomainError(msg);
    }

    static double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

    Kind kind_;
    std::vector<double> params_;
};

}  // namespace mnesor
