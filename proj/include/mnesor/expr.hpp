#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "mnesor/errors.hpp"

namespace mnesor {

enum class ExprKind { Variable, Union, Intersect, Complement, Scale, Empty, Full };

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree over named sets. `left` holds the only child
/// of unary nodes; `factor` is the positive literal of a Scale node.
class Expr {
public:
    const ExprKind kind;
    const std::string name;  // Variable only
    const double factor;     // Scale only
    const ExprPtr left;
    const ExprPtr right;

    static bool valid_identifier(std::string_view s) {
        if (s.empty() || s == "EMPTY" || s == "FULL") return false;
        auto head = [](unsigned char c) { return std::isalpha(c) != 0 || c == '_'; };
        auto tail = [](unsigned char c) { return std::isalnum(c) != 0 || c == '_'; };
        if (!head(static_cast<unsigned char>(s[0]))) return false;
        for (char c : s.substr(1))
            if (!tail(static_cast<unsigned char>(c))) return false;
        return true;
    }

    static ExprPtr variable(std::string name) {
        if (!valid_identifier(name)) throw DomainError("invalid variable name '" + name + "'");
        return node(ExprKind::Variable, std::move(name), 0.0, nullptr, nullptr);
    }

    static ExprPtr empty() {
        static const ExprPtr e = node(ExprKind::Empty, "", 0.0, nullptr, nullptr);
        return e;
    }

    static ExprPtr full() {
        static const ExprPtr e = node(ExprKind::Full, "", 0.0, nullptr, nullptr);
        return e;
    }

    static ExprPtr make_union(ExprPtr l, ExprPtr r) {
        require_child(l);
        require_child(r);
        return node(ExprKind::Union, "", 0.0, std::move(l), std::move(r));
    }

    static ExprPtr make_intersect(ExprPtr l, ExprPtr r) {
        require_child(l);
        require_child(r);
        return node(ExprKind::Intersect, "", 0.0, std::move(l), std::move(r));
    }

    static ExprPtr make_complement(ExprPtr child) {
        require_child(child);
        return node(ExprKind::Complement, "", 0.0, std::move(child), nullptr);
    }

    static ExprPtr make_scale(ExprPtr child, double factor) {
        require_child(child);
        if (!(factor > 0.0) || !std::isfinite(factor))
            throw DomainError("scale literal must be a positive finite number");
        return node(ExprKind::Scale, "", factor, std::move(child), nullptr);
    }

private:
    static void require_child(const ExprPtr& e) {
        if (!e) throw DomainError("expression node needs a child");
    }

    static ExprPtr node(ExprKind k, std::string n, double f, ExprPtr l, ExprPtr r) {
        return ExprPtr(new Expr(k, std::move(n), f, std::move(l), std::move(r)));
    }

    Expr(ExprKind k, std::string n, double f, ExprPtr l, ExprPtr r)
        : kind(k), name(std::move(n)), factor(f), left(std::move(l)), right(std::move(r)) {}
};

inline bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::Variable:
            return a->name == b->name;
        case ExprKind::Empty:
        case ExprKind::Full:
            return true;
        case ExprKind::Complement:
            return structurally_equal(a->left, b->left);
        case ExprKind::Scale:
            return a->factor == b->factor && structurally_equal(a->left, b->left);
        case ExprKind::Union:
        case ExprKind::Intersect:
            return structurally_equal(a->left, b->left) && structurally_equal(a->right, b->right);
    }
    return false;
}

inline std::size_t node_count(const ExprPtr& e) {
    if (!e) return 0;
    return 1 + node_count(e->left) + node_count(e->right);
}

namespace detail {

inline int precedence(ExprKind k) {
    switch (k) {
        case ExprKind::Union:
            return 1;
        case ExprKind::Intersect:
            return 2;
        case ExprKind::Complement:
            return 3;
        case ExprKind::Scale:
            return 4;
        default:
            return 5;
    }
}

// Shortest fixed-notation string that parses back to the same double.
inline std::string format_factor(double v) {
    char buf[512];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
    return std::string(buf, res.ptr);
}

inline void print_node(const ExprPtr& e, std::string& out);

inline void print_child(const ExprPtr& e, int min_prec, std::string& out) {
    if (precedence(e->kind) < min_prec) {
        out += '(';
        print_node(e, out);
        out += ')';
    } else {
        print_node(e, out);
    }
}

inline void print_node(const ExprPtr& e, std::string& out) {
    switch (e->kind) {
        case ExprKind::Variable:
            out += e->name;
            break;
        case ExprKind::Empty:
            out += "EMPTY";
            break;
        case ExprKind::Full:
            out += "FULL";
            break;
        case ExprKind::Union:
            print_child(e->left, 1, out);
            out += " | ";
            print_child(e->right, 2, out);
            break;
        case ExprKind::Intersect:
            print_child(e->left, 2, out);
            out += " & ";
            print_child(e->right, 3, out);
            break;
        case ExprKind::Complement:
            out += '~';
            print_child(e->left, 3, out);
            break;
        case ExprKind::Scale:
            print_child(e->left, 4, out);
            out += " * ";
            out += format_factor(e->factor);
            break;
    }
}

}  // namespace detail

/// Canonical form with minimal parentheses; reparses to the same tree.
inline std::string to_string(const ExprPtr& e) {
    if (!e) throw DomainError("null expression");
    std::string s;
    detail::print_node(e, s);
    return s;
}

}  // namespace mnesor
