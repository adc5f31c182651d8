#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mnesor/errors.hpp"
#include "mnesor/instance.hpp"

namespace mnesor {

enum class LawScope {
    Base,         // monoid + scaling only
    Complement,   // needs top and complement
    PowerFamily,  // needs the k-indexed complement family and powers
};

struct Law {
    std::string id;
    std::string statement;
    LawScope scope;
    int element_arity;  // elements sampled per trial
    int scalar_arity;   // scalars sampled per trial
};

/// The fixed catalog L1..L19. L1-L8 are the linear laws of the scaled
/// monoid, L9-L18 the complement/lattice laws, L19 the power identities of
/// the c_k family (meaningful only where a k-indexed complement exists).
inline const std::vector<Law>& law_catalog() {
    static const std::vector<Law> catalog = {
        {"L1", "A * 1 = A", LawScope::Base, 1, 0},
        {"L2", "A*a | A*b = A*max(a,b)", LawScope::Base, 1, 2},
        {"L3", "(A | B)*a = A*a | B*a", LawScope::Base, 2, 1},
        {"L4", "(A*a)*b = A*(a*b)", LawScope::Base, 1, 2},
        {"L5", "A | A = A", LawScope::Base, 1, 0},
        {"L6", "EMPTY <= A and A <= A | B", LawScope::Base, 2, 0},
        {"L7", "A*a <= A when a <= 1; A <= A*a when a >= 1", LawScope::Base, 1, 1},
        {"L8", "EMPTY*a = EMPTY for 0 < a <= 1", LawScope::Base, 0, 1},
        {"L9", "~~A = A", LawScope::Complement, 1, 0},
        {"L10", "~FULL = EMPTY", LawScope::Complement, 0, 0},
        {"L11", "~(A*a) = (~A)*(1/a)", LawScope::Complement, 1, 1},
        {"L12", "A <= B implies ~B <= ~A", LawScope::Complement, 2, 0},
        {"L13", "FULL*a = FULL for a >= 1", LawScope::Complement, 0, 1},
        {"L14", "A & B <= A and A & B <= B", LawScope::Complement, 2, 0},
        {"L15", "A*a & B*a = (A & B)*a", LawScope::Complement, 2, 1},
        {"L16", "A & A = A", LawScope::Complement, 1, 0},
        {"L17", "A | (A & B) = A and A & (A | B) = A", LawScope::Complement, 2, 0},
        {"L18", "| and & are commutative and associative", LawScope::Complement, 3, 0},
        {"L19", "c(A,k)^n = c(A,k*n) and c(A^n,k) = c(A,k/n)", LawScope::PowerFamily, 1, 2},
    };
    return catalog;
}

inline const Law* find_law(std::string_view id) {
    for (const Law& l : law_catalog())
        if (l.id == id) return &l;
    return nullptr;
}

struct LawResult {
    std::string id;
    std::string status;   // "checked" | "skipped"
    int run = 0;
    int failures = 0;
    Json counterexample;  // null when no failure was seen
};

struct CheckReport {
    std::uint64_t seed = 0;
    int cases = 0;
    double tol = 0.0;
    bool pass = false;
    std::vector<LawResult> laws;

    const LawResult* result_for(std::string_view id) const {
        for (const auto& lr : laws)
            if (lr.id == id) return &lr;
        return nullptr;
    }

    Json to_json() const {
        Json doc = Json::object();
        doc["seed"] = seed;
        doc["cases"] = cases;
        doc["tol"] = tol;
        doc["verdict"] = pass ? "pass" : "fail";
        Json arr = Json::array();
        for (const auto& lr : laws) {
            Json e = Json::object();
            e["id"] = lr.id;
            e["run"] = lr.run;
            e["failures"] = lr.failures;
            e["counterexample"] = lr.counterexample;
            e["status"] = lr.status;
            arr.push_back(std::move(e));
        }
        doc["laws"] = std::move(arr);
        return doc;
    }
};

struct CheckOptions {
    int cases = 1000;
    std::uint64_t seed = 42;
    double tol = 1e-9;
};

namespace detail {

template <class E>
class LawChecker {
public:
    LawChecker(const MnesorInstance<E>& inst, const CheckOptions& opt) : inst_(inst), opt_(opt) {}

    CheckReport run() {
        if (opt_.cases < 1) throw DomainError("cases must be >= 1, got " + std::to_string(opt_.cases));
        if (std::isnan(opt_.tol) || opt_.tol < 0.0) throw DomainError("tolerance must be >= 0");
        require_capability(inst_.zero != nullptr, "zero");
        require_capability(inst_.add != nullptr, "add");
        require_capability(inst_.scale != nullptr, "scale");
        require_capability(inst_.equal != nullptr, "equal");
        require_capability(inst_.distance != nullptr, "distance");
        require_capability(inst_.sample != nullptr, "sample");
        require_capability(inst_.describe != nullptr, "describe");
        if (inst_.has_complement() && inst_.top == nullptr)
            throw InstanceError("instance '" + inst_.name + "' has a complement but no top element");
        if (!(inst_.lambda_min > 0.0) || !(inst_.lambda_max >= inst_.lambda_min))
            throw InstanceError("instance '" + inst_.name + "' has a bad scalar range");

        CheckReport rep;
        rep.seed = opt_.seed;
        rep.cases = opt_.cases;
        rep.tol = opt_.tol;
        rep.pass = true;

        const auto& catalog = law_catalog();
        for (std::size_t li = 0; li < catalog.size(); ++li) {
            const Law& law = catalog[li];
            LawResult lr;
            lr.id = law.id;
            lr.counterexample = nullptr;
            if (!applicable(law)) {
                lr.status = "skipped";
            } else {
                lr.status = "checked";
                for (int t = 0; t < opt_.cases; ++t) {
                    Trial trial(*this, li, t);
                    std::optional<Violation> v;
                    try {
                        v = dispatch(li, trial);
                    } catch (const std::exception& e) {
                        throw InstanceError("instance '" + inst_.name + "', law " + law.id + ", trial " +
                                            std::to_string(t) + ": " + e.what());
                    }
                    ++lr.run;
                    if (v) {
                        ++lr.failures;
                        if (lr.counterexample.is_null()) lr.counterexample = serialize(*v, t);
                    }
                }
            }
            if (lr.failures > 0) rep.pass = false;
            rep.laws.push_back(std::move(lr));
        }
        return rep;
    }

private:
    struct Violation {
        std::string identity;
        Json inputs;
        Json lhs;
        Json rhs;
        double deviation = 0.0;
    };

    // Per-trial sampling context. Every trial owns an rng stream derived
    // from (seed, law index, trial index), so reports do not depend on the
    // order trials execute in.
    struct Trial {
        LawChecker& chk;
        Rng rng;
        int index;
        int scalar_draws = 0;

        Trial(LawChecker& c, std::size_t law_index, int trial_index)
            : chk(c),
              rng(c.opt_.seed, static_cast<std::uint64_t>(law_index), static_cast<std::uint64_t>(trial_index)),
              index(trial_index) {}

        E element() { return chk.inst_.sample(rng); }

        // Log-uniform scale factor. The first draw of the first three
        // trials is pinned to {1, just below 1, just above 1}: uniform
        // sampling almost never lands near the unit, and both selectivity
        // branches must be exercised.
        double lambda() {
            const int draw = scalar_draws++;
            if (draw == 0 && index < 3) {
                if (index == 0) return 1.0;
                if (index == 1) return 0.999;
                return 1.001;
            }
            return rng.log_uniform(chk.inst_.lambda_min, chk.inst_.lambda_max);
        }
    };

    static void require_capability(bool present, const char* what) {
        if (!present) throw InstanceError(std::string("instance is missing the '") + what + "' capability");
    }

    bool applicable(const Law& law) const {
        switch (law.scope) {
            case LawScope::Base:
                return true;
            case LawScope::Complement:
                return inst_.has_complement();
            case LawScope::PowerFamily:
                return inst_.has_power_family();
        }
        return false;
    }

    Json serialize(const Violation& v, int trial) const {
        Json c = Json::object();
        c["trial"] = trial;
        c["identity"] = v.identity;
        c["inputs"] = v.inputs;
        c["lhs"] = v.lhs;
        c["rhs"] = v.rhs;
        c["deviation"] = v.deviation;
        return c;
    }

    std::optional<Violation> expect_eq(const char* identity, const E& lhs, const E& rhs, Json inputs) {
        if (inst_.equal(lhs, rhs, opt_.tol)) return std::nullopt;
        return Violation{identity, std::move(inputs), inst_.describe(lhs), inst_.describe(rhs),
                         inst_.distance(lhs, rhs)};
    }

    // a <= b, i.e. a + b = b; on failure lhs is the sum, rhs is b.
    std::optional<Violation> expect_leq(const char* identity, const E& a, const E& b, Json inputs) {
        E sum = inst_.add(a, b);
        if (inst_.equal(sum, b, opt_.tol)) return std::nullopt;
        return Violation{identity, std::move(inputs), inst_.describe(sum), inst_.describe(b),
                         inst_.distance(sum, b)};
    }

    Json in1(const char* k1, const E& e1) {
        Json j = Json::object();
        j[k1] = inst_.describe(e1);
        return j;
    }

    std::optional<Violation> dispatch(std::size_t law_index, Trial& t) {
        switch (law_index) {
            case 0: return l1(t);
            case 1: return l2(t);
            case 2: return l3(t);
            case 3: return l4(t);
            case 4: return l5(t);
            case 5: return l6(t);
            case 6: return l7(t);
            case 7: return l8(t);
            case 8: return l9(t);
            case 9: return l10(t);
            case 10: return l11(t);
            case 11: return l12(t);
            case 12: return l13(t);
            case 13: return l14(t);
            case 14: return l15(t);
            case 15: return l16(t);
            case 16: return l17(t);
            case 17: return l18(t);
            case 18: return l19(t);
        }
        throw InstanceError("no check bound to catalog index " + std::to_string(law_index));
    }

    std::optional<Violation> l1(Trial& t) {
        E a = t.element();
        return expect_eq("A * 1 = A", inst_.scale(a, 1.0), a, in1("A", a));
    }

    std::optional<Violation> l2(Trial& t) {
        E a = t.element();
        const double x = t.lambda();
        const double y = t.lambda();
        Json in = in1("A", a);
        in["a"] = x;
        in["b"] = y;
        return expect_eq("A*a | A*b = A*max(a,b)", inst_.add(inst_.scale(a, x), inst_.scale(a, y)),
                         inst_.scale(a, std::max(x, y)), std::move(in));
    }

    std::optional<Violation> l3(Trial& t) {
        E a = t.element();
        E b = t.element();
        const double x = t.lambda();
        Json in = in1("A", a);
        in["B"] = inst_.describe(b);
        in["a"] = x;
        return expect_eq("(A | B)*a = A*a | B*a", inst_.scale(inst_.add(a, b), x),
                         inst_.add(inst_.scale(a, x), inst_.scale(b, x)), std::move(in));
    }

    std::optional<Violation> l4(Trial& t) {
        E a = t.element();
        const double x = t.lambda();
        const double y = t.lambda();
        Json in = in1("A", a);
        in["a"] = x;
        in["b"] = y;
        return expect_eq("(A*a)*b = A*(a*b)", inst_.scale(inst_.scale(a, x), y), inst_.scale(a, x * y),
                         std::move(in));
    }

    std::optional<Violation> l5(Trial& t) {
        E a = t.element();
        return expect_eq("A | A = A", inst_.add(a, a), a, in1("A", a));
    }

    std::optional<Violation> l6(Trial& t) {
        E a = t.element();
        E b = t.element();
        if (auto v = expect_leq("EMPTY <= A", inst_.zero(), a, in1("A", a))) return v;
        Json in = in1("A", a);
        in["B"] = inst_.describe(b);
        return expect_leq("A <= A | B", a, inst_.add(a, b), std::move(in));
    }

    std::optional<Violation> l7(Trial& t) {
        E a = t.element();
        const double x = t.lambda();
        Json in = in1("A", a);
        in["a"] = x;
        if (x <= 1.0) return expect_leq("A*a <= A when a <= 1", inst_.scale(a, x), a, std::move(in));
        return expect_leq("A <= A*a when a >= 1", a, inst_.scale(a, x), std::move(in));
    }

    std::optional<Violation> l8(Trial& t) {
        double x = t.lambda();
        if (x > 1.0) x = 1.0 / x;  // fold into (0, 1]
        Json in = Json::object();
        in["a"] = x;
        return expect_eq("EMPTY*a = EMPTY for 0 < a <= 1", inst_.scale(inst_.zero(), x), inst_.zero(),
                         std::move(in));
    }

    std::optional<Violation> l9(Trial& t) {
        E a = t.element();
        return expect_eq("~~A = A", inst_.complement(inst_.complement(a)), a, in1("A", a));
    }

    std::optional<Violation> l10(Trial&) {
        return expect_eq("~FULL = EMPTY", inst_.complement(inst_.top()), inst_.zero(), Json::object());
    }

    std::optional<Violation> l11(Trial& t) {
        E a = t.element();
        const double x = t.lambda();
        Json in = in1("A", a);
        in["a"] = x;
        return expect_eq("~(A*a) = (~A)*(1/a)", inst_.complement(inst_.scale(a, x)),
                         inst_.scale(inst_.complement(a), 1.0 / x), std::move(in));
    }

    std::optional<Violation> l12(Trial& t) {
        E a = t.element();
        E c = t.element();
        E b = inst_.add(a, c);  // a <= b by construction
        Json in = in1("A", a);
        in["C"] = inst_.describe(c);
        in["B = A | C"] = inst_.describe(b);
        return expect_leq("A <= B implies ~B <= ~A", inst_.complement(b), inst_.complement(a), std::move(in));
    }

    std::optional<Violation> l13(Trial& t) {
        double x = t.lambda();
        x = std::max(x, 1.0 / x);  // fold into [1, inf)
        Json in = Json::object();
        in["a"] = x;
        return expect_eq("FULL*a = FULL for a >= 1", inst_.scale(inst_.top(), x), inst_.top(), std::move(in));
    }

    std::optional<Violation> l14(Trial& t) {
        E a = t.element();
        E b = t.element();
        E m = de_morgan_meet(inst_, a, b);
        Json in = in1("A", a);
        in["B"] = inst_.describe(b);
        in["A & B"] = inst_.describe(m);
        if (auto v = expect_leq("A & B <= A", m, a, in)) return v;
        return expect_leq("A & B <= B", m, b, std::move(in));
    }

    std::optional<Violation> l15(Trial& t) {
        E a = t.element();
        E b = t.element();
        const double x = t.lambda();
        Json in = in1("A", a);
        in["B"] = inst_.describe(b);
        in["a"] = x;
        return expect_eq("A*a & B*a = (A & B)*a",
                         de_morgan_meet(inst_, inst_.scale(a, x), inst_.scale(b, x)),
                         inst_.scale(de_morgan_meet(inst_, a, b), x), std::move(in));
    }

    std::optional<Violation> l16(Trial& t) {
        E a = t.element();
        return expect_eq("A & A = A", de_morgan_meet(inst_, a, a), a, in1("A", a));
    }

    std::optional<Violation> l17(Trial& t) {
        E a = t.element();
        E b = t.element();
        Json in = in1("A", a);
        in["B"] = inst_.describe(b);
        if (auto v = expect_eq("A | (A & B) = A", inst_.add(a, de_morgan_meet(inst_, a, b)), a, in)) return v;
        return expect_eq("A & (A | B) = A", de_morgan_meet(inst_, a, inst_.add(a, b)), a, std::move(in));
    }

    std::optional<Violation> l18(Trial& t) {
        E a = t.element();
        E b = t.element();
        E c = t.element();
        Json in = in1("A", a);
        in["B"] = inst_.describe(b);
        in["C"] = inst_.describe(c);
        if (auto v = expect_eq("A | B = B | A", inst_.add(a, b), inst_.add(b, a), in)) return v;
        if (auto v = expect_eq("(A | B) | C = A | (B | C)", inst_.add(inst_.add(a, b), c),
                               inst_.add(a, inst_.add(b, c)), in))
            return v;
        if (auto v = expect_eq("A & B = B & A", de_morgan_meet(inst_, a, b), de_morgan_meet(inst_, b, a), in))
            return v;
        return expect_eq("(A & B) & C = A & (B & C)",
                         de_morgan_meet(inst_, de_morgan_meet(inst_, a, b), c),
                         de_morgan_meet(inst_, a, de_morgan_meet(inst_, b, c)), std::move(in));
    }

    std::optional<Violation> l19(Trial& t) {
        E a = t.element();
        const double k = t.rng.log_uniform(0.1, 5.0);
        const double n = t.rng.log_uniform(0.05, 4.0);
        Json in = in1("A", a);
        in["k"] = k;
        in["n"] = n;
        if (auto v = expect_eq("c(A,k)^n = c(A,k*n)", inst_.power(inst_.complement_family(a, k), n),
                               inst_.complement_family(a, k * n), in))
            return v;
        return expect_eq("c(A^n,k) = c(A,k/n)", inst_.complement_family(inst_.power(a, n), k),
                         inst_.complement_family(a, k / n), std::move(in));
    }

    const MnesorInstance<E>& inst_;
    CheckOptions opt_;
};

}  // namespace detail

/// Run every applicable law of the catalog against an instance with
/// `cases` randomized trials per law. Deterministic in (instance, options);
/// laws out of the instance's scope are reported "skipped", not failed.
template <class E>
CheckReport check(const MnesorInstance<E>& inst, const CheckOptions& opt = {}) {
    return detail::LawChecker<E>(inst, opt).run();
}

}  // namespace mnesor
