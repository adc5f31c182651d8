#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mnesor/errors.hpp"
#include "mnesor/fuzzy_set.hpp"
#include "mnesor/shapes.hpp"

namespace mnesor {

using Json = nlohmann::ordered_json;

using AnyFuzzySet = std::variant<DiscreteFuzzySet, SampledFuzzySet>;

/// In-memory form of a set-definition file:
///
///   {
///     "universe": ["label", ...],                // optional
///     "sets": {
///       "A": {"type": "discrete", "grades": {"label": number, ...}},
///       "S": {"type": "sampled", "lo": num, "hi": num, "n": int,
///             "samples": [numbers]},
///       "H": {"type": "shape", "kind": "ramp-up" | "ramp-down" |
///             "triangle" | "trapezoid" | "constant",
///             "params": [numbers], "lo": num, "hi": num, "n": int}
///     }
///   }
///
/// All grade numbers must lie in [0,1]; violations are load-time errors
/// naming the offending set and label/index. Shapes are sampled onto their
/// grid at load time.
struct SetFile {
    std::optional<DiscreteCarrier> universe;
    std::vector<std::pair<std::string, AnyFuzzySet>> sets;

    const AnyFuzzySet* find(std::string_view name) const {
        for (const auto& [n, s] : sets)
            if (n == name) return &s;
        return nullptr;
    }

    Json to_json() const;
};

inline Json descriptor(const DiscreteFuzzySet& s) {
    Json grades = Json::object();
    const auto& labels = s.carrier().labels();
    for (std::size_t i = 0; i < labels.size(); ++i) grades[labels[i]] = s[i].value();
    Json d = Json::object();
    d["type"] = "discrete";
    d["grades"] = std::move(grades);
    return d;
}

inline Json descriptor(const SampledFuzzySet& s) {
    Json samples = Json::array();
    for (Grade g : s.grades()) samples.push_back(g.value());
    Json d = Json::object();
    d["type"] = "sampled";
    d["lo"] = s.carrier().lo();
    d["hi"] = s.carrier().hi();
    d["n"] = s.carrier().n();
    d["samples"] = std::move(samples);
    return d;
}

inline Json SetFile::to_json() const {
    Json doc = Json::object();
    if (universe) {
        Json u = Json::array();
        for (const auto& l : universe->labels()) u.push_back(l);
        doc["universe"] = std::move(u);
    }
    Json obj = Json::object();
    for (const auto& [name, s] : sets)
        obj[name] = std::visit([](const auto& x) { return descriptor(x); }, s);
    doc["sets"] = std::move(obj);
    return doc;
}

namespace detail {

inline double number_field(const Json& d, const char* key, const std::string& ctx) {
    if (!d.contains(key) || !d[key].is_number())
        throw FormatError(ctx + ": missing or non-numeric \"" + key + "\"");
    return d[key].get<double>();
}

inline int integer_field(const Json& d, const char* key, const std::string& ctx) {
    if (!d.contains(key) || !d[key].is_number_integer())
        throw FormatError(ctx + ": missing or non-integer \"" + key + "\"");
    return d[key].get<int>();
}

inline AnyFuzzySet parse_descriptor(const std::string& name, const Json& d,
                                    const std::optional<DiscreteCarrier>& universe) {
    const std::string ctx = "set '" + name + "'";
    if (!d.is_object() || !d.contains("type") || !d["type"].is_string())
        throw FormatError(ctx + ": descriptor needs a \"type\" string");
    const std::string type = d["type"].get<std::string>();

    if (type == "discrete") {
        if (!universe) throw FormatError(ctx + ": discrete sets need a top-level \"universe\"");
        if (!d.contains("grades") || !d["grades"].is_object())
            throw FormatError(ctx + ": discrete descriptor needs a \"grades\" object");
        std::vector<Grade> grades(universe->size(), Grade::zero());
        for (auto it = d["grades"].begin(); it != d["grades"].end(); ++it) {
            auto idx = universe->index_of(it.key());
            if (!idx) throw FormatError(ctx + ": label '" + it.key() + "' is not in the universe");
            if (!it.value().is_number())
                throw FormatError(ctx + ": grade for label '" + it.key() + "' must be a number");
            const double v = it.value().get<double>();
            if (!(v >= 0.0 && v <= 1.0))
                throw FormatError(ctx + ": grade for label '" + it.key() + "' out of range [0,1]: " +
                                  std::to_string(v));
            grades[*idx] = Grade::from_linear(v);
        }
        return DiscreteFuzzySet(*universe, std::move(grades));
    }

    if (type == "sampled") {
        const double lo = number_field(d, "lo", ctx);
        const double hi = number_field(d, "hi", ctx);
        const int n = integer_field(d, "n", ctx);
        if (!d.contains("samples") || !d["samples"].is_array())
            throw FormatError(ctx + ": sampled descriptor needs a \"samples\" array");
        const Json& samples = d["samples"];
        if (static_cast<int>(samples.size()) != n)
            throw FormatError(ctx + ": expected " + std::to_string(n) + " samples, got " +
                              std::to_string(samples.size()));
        std::vector<Grade> grades;
        grades.reserve(samples.size());
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (!samples[i].is_number())
                throw FormatError(ctx + ": sample " + std::to_string(i) + " must be a number");
            const double v = samples[i].get<double>();
            if (!(v >= 0.0 && v <= 1.0))
                throw FormatError(ctx + ": sample " + std::to_string(i) + " out of range [0,1]: " +
                                  std::to_string(v));
            grades.push_back(Grade::from_linear(v));
        }
        try {
            return SampledFuzzySet(GridCarrier(lo, hi, n), std::move(grades));
        } catch (const DomainError& e) {
            throw FormatError(ctx + ": " + e.what());
        }
    }

    if (type == "shape") {
        if (!d.contains("kind") || !d["kind"].is_string())
            throw FormatError(ctx + ": shape descriptor needs a \"kind\" string");
        const std::string kind = d["kind"].get<std::string>();
        if (!d.contains("params") || !d["params"].is_array())
            throw FormatError(ctx + ": shape descriptor needs a \"params\" array");
        std::vector<double> p;
        for (const auto& v : d["params"]) {
            if (!v.is_number()) throw FormatError(ctx + ": shape parameters must be numbers");
            p.push_back(v.get<double>());
        }
        const double lo = number_field(d, "lo", ctx);
        const double hi = number_field(d, "hi", ctx);
        const int n = integer_field(d, "n", ctx);
        auto arity = [&](std::size_t want) {
            if (p.size() != want)
                throw FormatError(ctx + ": kind '" + kind + "' takes " + std::to_string(want) +
                                  " parameters, got " + std::to_string(p.size()));
        };
        try {
            if (kind == "ramp-up") {
                arity(2);
                return Shape::ramp_up(p[0], p[1]).sample(lo, hi, n);
            }
            if (kind == "ramp-down") {
                arity(2);
                return Shape::ramp_down(p[0], p[1]).sample(lo, hi, n);
            }
            if (kind == "triangle") {
                arity(3);
                return Shape::triangle(p[0], p[1], p[2]).sample(lo, hi, n);
            }
            if (kind == "trapezoid") {
                arity(4);
                return Shape::trapezoid(p[0], p[1], p[2], p[3]).sample(lo, hi, n);
            }
            if (kind == "constant") {
                arity(1);
                return Shape::constant(p[0]).sample(lo, hi, n);
            }
        } catch (const DomainError& e) {
            throw FormatError(ctx + ": " + e.what());
        }
        throw FormatError(ctx + ": unknown shape kind '" + kind + "'");
    }

    throw FormatError(ctx + ": unknown type '" + type + "'");
}

}  // namespace detail

inline SetFile parse_set_file(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("top level must be an object");

    SetFile file;
    if (doc.contains("universe")) {
        const Json& u = doc["universe"];
        if (!u.is_array()) throw FormatError("\"universe\" must be an array of labels");
        std::vector<std::string> labels;
        for (const auto& l : u) {
            if (!l.is_string()) throw FormatError("universe labels must be strings");
            labels.push_back(l.get<std::string>());
        }
        try {
            file.universe = DiscreteCarrier(std::move(labels));
        } catch (const DomainError& e) {
            throw FormatError(e.what());
        }
    }
    if (doc.contains("sets")) {
        const Json& sets = doc["sets"];
        if (!sets.is_object()) throw FormatError("\"sets\" must be an object");
        for (auto it = sets.begin(); it != sets.end(); ++it)
            file.sets.emplace_back(it.key(), detail::parse_descriptor(it.key(), it.value(), file.universe));
    }
    return file;
}

inline std::string dump_set_file(const SetFile& file) { return file.to_json().dump(2) + "\n"; }

inline SetFile load_set_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_set_file(ss.str());
}

inline void save_set_file(const SetFile& file, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + path.string() + "'");
    out << dump_set_file(file);
}

}  // namespace mnesor
