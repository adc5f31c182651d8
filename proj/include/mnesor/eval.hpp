#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "mnesor/errors.hpp"
#include "mnesor/expr.hpp"
#include "mnesor/fuzzy_set.hpp"
#include "mnesor/grade.hpp"

namespace mnesor {

/// Variable bindings on one shared carrier, plus the complement parameter.
template <class Set>
class Env {
public:
    using carrier_type = typename Set::carrier_type;

    explicit Env(carrier_type carrier, ComplementConfig cfg = {})
        : carrier_(std::move(carrier)), cfg_(cfg) {
        detail::require_positive_finite(cfg_.k, "complement parameter k");
    }

    void bind(std::string name, Set set) {
        if (!(set.carrier() == carrier_))
            throw CarrierMismatch("set '" + name + "' is not on the environment's carrier");
        vars_.insert_or_assign(std::move(name), std::move(set));
    }

    const Set* find(std::string_view name) const {
        auto it = vars_.find(name);
        return it == vars_.end() ? nullptr : &it->second;
    }

    const carrier_type& carrier() const noexcept { return carrier_; }
    ComplementConfig config() const noexcept { return cfg_; }
    std::size_t bindings() const noexcept { return vars_.size(); }

private:
    carrier_type carrier_;
    ComplementConfig cfg_;
    std::map<std::string, Set, std::less<>> vars_;
};

template <class Set>
Set eval(const ExprPtr& e, const Env<Set>& env) {
    if (!e) throw DomainError("null expression");
    switch (e->kind) {
        case ExprKind::Variable: {
            const Set* s = env.find(e->name);
            if (!s) throw NameError("unbound variable " + e->name);
            return *s;
        }
        case ExprKind::Union:
            return set_union(eval(e->left, env), eval(e->right, env));
        case ExprKind::Intersect:
            return intersect(eval(e->left, env), eval(e->right, env), env.config());
        case ExprKind::Complement:
            return complement(eval(e->left, env), env.config());
        case ExprKind::Scale:
            return scale(eval(e->left, env), e->factor);
        case ExprKind::Empty:
            return Set::empty(env.carrier());
        case ExprKind::Full:
            return Set::full(env.carrier());
    }
    throw Error("corrupt expression node");
}

}  // namespace mnesor
