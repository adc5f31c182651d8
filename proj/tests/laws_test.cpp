#include <doctest.h>

#include <set>
#include <string>

#include "mnesor/instances.hpp"
#include "mnesor/laws.hpp"
#include "mnesor/mutants.hpp"

using namespace mnesor;

namespace {

const LawResult& law_of(const CheckReport& rep, const std::string& id) {
    const LawResult* lr = rep.result_for(id);
    REQUIRE(lr != nullptr);
    return *lr;
}

}  // namespace

TEST_CASE("the catalog is the fixed list L1..L19") {
    const auto& catalog = law_catalog();
    REQUIRE(catalog.size() == 19);
    std::set<std::string> ids;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        CHECK(catalog[i].id == "L" + std::to_string(i + 1));
        ids.insert(catalog[i].id);
    }
    CHECK(ids.size() == 19);

    CHECK(find_law("L9")->scope == LawScope::Complement);
    CHECK(find_law("L19")->scope == LawScope::PowerFamily);
    CHECK(find_law("L2")->element_arity == 1);
    CHECK(find_law("L2")->scalar_arity == 2);
    CHECK(find_law("L18")->element_arity == 3);
    CHECK(find_law("nope") == nullptr);
}

TEST_CASE("leq is the addition-induced order") {
    const auto inst = grade_instance();
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const Grade a = sample_grade(rng);
        const Grade b = sample_grade(rng);
        CHECK(leq(inst, inst.zero(), a, 0.0));
        CHECK(leq(inst, a, a, 0.0));
        CHECK(leq(inst, a, inst.add(a, b), 0.0));
    }
}

TEST_CASE("the three built-in instances pass every applicable law") {
    const CheckOptions opt{300, 42, 1e-9};

    const CheckReport d = check(discrete_instance(), opt);
    CHECK(d.pass);
    for (const auto& lr : d.laws) {
        if (lr.id == "L19") {
            CHECK(lr.status == "skipped");
            CHECK(lr.run == 0);
        } else {
            CHECK(lr.status == "checked");
            CHECK(lr.run == 300);
        }
        CHECK(lr.failures == 0);
        CHECK(lr.counterexample.is_null());
    }

    const CheckReport s = check(sampled_instance(), opt);
    CHECK(s.pass);
    CHECK(law_of(s, "L19").status == "skipped");

    const CheckReport g = check(grade_instance(), opt);
    CHECK(g.pass);
    for (const auto& lr : g.laws) CHECK(lr.status == "checked");  // the family is in scope
}

TEST_CASE("reports are deterministic in (instance, cases, seed, tol)") {
    const CheckOptions opt{50, 7, 1e-9};
    const auto a = check(discrete_instance(), opt).to_json().dump(2);
    const auto b = check(discrete_instance(), opt).to_json().dump(2);
    CHECK(a == b);

    const CheckOptions other{50, 8, 1e-9};
    CHECK(a != check(discrete_instance(), other).to_json().dump(2));
}

TEST_CASE("complement-free instances skip the complement laws, not fail them") {
    auto inst = grade_instance();
    inst.complement = nullptr;
    inst.complement_family = nullptr;
    inst.power = nullptr;
    inst.top = nullptr;

    const CheckReport rep = check(inst, CheckOptions{100, 42, 1e-9});
    CHECK(rep.pass);
    for (const auto& lr : rep.laws) {
        const Law* law = find_law(lr.id);
        if (law->scope == LawScope::Base) {
            CHECK(lr.status == "checked");
        } else {
            CHECK(lr.status == "skipped");
            CHECK(lr.run == 0);
            CHECK(lr.failures == 0);
        }
    }
}

TEST_CASE("every reference mutant is caught") {
    const CheckOptions opt{1000, 42, 1e-9};

    const CheckReport raw = check(mutant_scale_raw_exponent(), opt);
    CHECK_FALSE(raw.pass);
    CHECK(law_of(raw, "L2").failures > 0);
    CHECK(law_of(raw, "L7").failures > 0);

    const CheckReport lin = check(mutant_one_minus_complement(), opt);
    CHECK_FALSE(lin.pass);
    CHECK(law_of(lin, "L11").failures > 0);
    CHECK(law_of(lin, "L19").failures > 0);

    const CheckReport mn = check(mutant_min_addition(), opt);
    CHECK_FALSE(mn.pass);
    CHECK(law_of(mn, "L6").failures > 0);

    const CheckReport comp = check(mutant_composed_complement(), opt);
    CHECK_FALSE(comp.pass);
    CHECK(law_of(comp, "L9").failures > 0);
    CHECK(law_of(comp, "L10").failures > 0);
}

TEST_CASE("counterexamples carry the failing trial in full") {
    const CheckReport rep = check(mutant_scale_raw_exponent(), CheckOptions{200, 42, 1e-9});
    const LawResult& l2 = law_of(rep, "L2");
    REQUIRE(l2.failures > 0);
    REQUIRE_FALSE(l2.counterexample.is_null());
    const Json& c = l2.counterexample;
    CHECK(c.contains("trial"));
    CHECK(c.contains("identity"));
    CHECK(c.contains("inputs"));
    CHECK(c.contains("lhs"));
    CHECK(c.contains("rhs"));
    CHECK(c.contains("deviation"));
    CHECK(c["deviation"].get<double>() > 1e-9);
}

TEST_CASE("the report serializes to the documented schema") {
    const CheckReport rep = check(grade_instance(), CheckOptions{10, 42, 1e-9});
    const Json j = rep.to_json();
    CHECK(j["seed"] == 42);
    CHECK(j["cases"] == 10);
    CHECK(j["tol"] == 1e-9);
    CHECK(j["verdict"] == "pass");
    REQUIRE(j["laws"].is_array());
    REQUIRE(j["laws"].size() == 19);
    for (const auto& e : j["laws"]) {
        CHECK(e.contains("id"));
        CHECK(e.contains("run"));
        CHECK(e.contains("failures"));
        CHECK(e.contains("counterexample"));
        CHECK((e["status"] == "checked" || e["status"] == "skipped"));
    }
}

TEST_CASE("checker preconditions and instance failures") {
    CHECK_THROWS_AS(check(grade_instance(), CheckOptions{0, 42, 1e-9}), DomainError);
    CHECK_THROWS_AS(check(grade_instance(), CheckOptions{10, 42, -1.0}), DomainError);

    auto topless = grade_instance();
    topless.top = nullptr;
    CHECK_THROWS_AS(check(topless, CheckOptions{10, 42, 1e-9}), InstanceError);

    auto broken = grade_instance();
    broken.sample = [](Rng&) -> Grade { throw std::runtime_error("generator exploded"); };
    CHECK_THROWS_AS(check(broken, CheckOptions{10, 42, 1e-9}), InstanceError);

    auto incomplete = grade_instance();
    incomplete.add = nullptr;
    CHECK_THROWS_AS(check(incomplete, CheckOptions{10, 42, 1e-9}), InstanceError);
}
