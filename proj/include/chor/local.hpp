#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chor/arity.hpp"
#include "chor/errors.hpp"
#include "chor/value.hpp"

namespace chor {

// First-order, loop-free expression language for the local computations of a
// node. No recursion and no effects, so evaluation is total on well-formed
// input and a single deterministic step for the network semantics.
class LocalTerm {
public:
    struct Lit {
        Value value;
    };
    struct Var {
        std::string name;
    };
    struct PrimApp {
        std::string prim;
        std::vector<LocalTerm> args;
    };
    struct Let {
        std::string name;
        std::shared_ptr<const LocalTerm> bound;
        std::shared_ptr<const LocalTerm> body;
    };

    static LocalTerm lit(Value v) { return LocalTerm(Rep(Lit{std::move(v)})); }
    static LocalTerm var(std::string name) { return LocalTerm(Rep(Var{std::move(name)})); }
    static LocalTerm prim_app(std::string prim, std::vector<LocalTerm> args) {
        return LocalTerm(Rep(PrimApp{std::move(prim), std::move(args)}));
    }
    static LocalTerm let(std::string name, LocalTerm bound, LocalTerm body) {
        return LocalTerm(Rep(Let{std::move(name), std::make_shared<const LocalTerm>(std::move(bound)),
                                 std::make_shared<const LocalTerm>(std::move(body))}));
    }

    template <typename F>
    auto visit(F&& f) const {
        return std::visit(std::forward<F>(f), rep_);
    }

    friend bool operator==(const LocalTerm& a, const LocalTerm& b) {
        if (a.rep_.index() != b.rep_.index()) return false;
        if (const auto* l = std::get_if<Lit>(&a.rep_))
            return l->value == std::get<Lit>(b.rep_).value;
        if (const auto* v = std::get_if<Var>(&a.rep_)) return v->name == std::get<Var>(b.rep_).name;
        if (const auto* p = std::get_if<PrimApp>(&a.rep_)) {
            const auto& q = std::get<PrimApp>(b.rep_);
            return p->prim == q.prim && p->args == q.args;
        }
        const auto& x = std::get<Let>(a.rep_);
        const auto& y = std::get<Let>(b.rep_);
        return x.name == y.name && *x.bound == *y.bound && *x.body == *y.body;
    }

    std::string show() const {
        return visit([](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Lit>) {
                return node.value.show();
            } else if constexpr (std::is_same_v<T, Var>) {
                return node.name;
            } else if constexpr (std::is_same_v<T, PrimApp>) {
                std::string out = "(" + node.prim;
                for (const auto& a : node.args) out += " " + a.show();
                return out + ")";
            } else {
                return "(let " + node.name + " " + node.bound->show() + " " + node.body->show() +
                       ")";
            }
        });
    }

private:
    using Rep = std::variant<Lit, Var, PrimApp, Let>;
    explicit LocalTerm(Rep rep) : rep_(std::move(rep)) {}
    Rep rep_;
};

using Env = std::map<std::string, Value>;

inline void collect_free_vars(const LocalTerm& t, std::set<std::string>& bound,
                              std::set<std::string>& out) {
    t.visit([&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LocalTerm::Var>) {
            if (!bound.count(node.name)) out.insert(node.name);
        } else if constexpr (std::is_same_v<T, LocalTerm::PrimApp>) {
            for (const auto& a : node.args) collect_free_vars(a, bound, out);
        } else if constexpr (std::is_same_v<T, LocalTerm::Let>) {
            collect_free_vars(*node.bound, bound, out);
            bool fresh = bound.insert(node.name).second;
            collect_free_vars(*node.body, bound, out);
            if (fresh) bound.erase(node.name);
        }
    });
}

inline std::set<std::string> free_vars(const LocalTerm& t) {
    std::set<std::string> bound, out;
    collect_free_vars(t, bound, out);
    return out;
}

// Registered primitives are pure: same arguments, same result. The one
// observation channel is the logs_result flag, which makes the evaluator
// append the result to the caller's observation sink (how showResults-style
// output is modelled without real I/O).
struct Primitive {
    std::size_t arity = 0;
    std::function<Value(const std::vector<Value>&)> fn;
    ResponseDomain result_domain = ResponseDomain::any();
    bool logs_result = false;
};

class PrimitiveRegistry {
public:
    PrimitiveRegistry with(const std::string& name, std::size_t arity,
                           std::function<Value(const std::vector<Value>&)> fn,
                           ResponseDomain result_domain = ResponseDomain::any(),
                           bool logs_result = false) const {
        if (table_.count(name)) throw duplicate_primitive(name);
        PrimitiveRegistry next = *this;
        next.table_[name] = Primitive{arity, std::move(fn), result_domain, logs_result};
        return next;
    }

    // Zero-argument primitive returning a fixed value; how configured inputs
    // enter the otherwise closed world.
    PrimitiveRegistry with_constant(const std::string& name, Value v) const {
        ResponseDomain dom = domain_of_kind(v.kind());
        return with(name, 0, [v](const std::vector<Value>&) { return v; }, dom);
    }

    bool contains(const std::string& name) const { return table_.count(name) != 0; }

    const Primitive& lookup(const std::string& name) const {
        auto it = table_.find(name);
        if (it == table_.end()) throw unknown_primitive(name);
        return it->second;
    }

    static ResponseDomain domain_of_kind(Value::Kind k) {
        switch (k) {
        case Value::Kind::Unit: return ResponseDomain::unit();
        case Value::Kind::Bool: return ResponseDomain::boolean();
        case Value::Kind::Int: return ResponseDomain::any_int();
        case Value::Kind::Str: return ResponseDomain::str();
        default: return ResponseDomain::any();
        }
    }

    static PrimitiveRegistry standard() {
        PrimitiveRegistry reg;
        auto int2 = [](const char* name, auto op) {
            return [name, op](const std::vector<Value>& args) {
                for (const auto& a : args)
                    if (a.kind() != Value::Kind::Int)
                        throw type_error(name, "expected int, got " + a.show());
                // Wrapping 64-bit arithmetic.
                std::uint64_t x = static_cast<std::uint64_t>(args[0].as_int());
                std::uint64_t y = static_cast<std::uint64_t>(args[1].as_int());
                return Value::integer(static_cast<std::int64_t>(op(x, y)));
            };
        };
        reg = reg.with("add", 2, int2("add", [](std::uint64_t x, std::uint64_t y) { return x + y; }),
                       ResponseDomain::any_int());
        reg = reg.with("sub", 2, int2("sub", [](std::uint64_t x, std::uint64_t y) { return x - y; }),
                       ResponseDomain::any_int());
        reg = reg.with("mul", 2, int2("mul", [](std::uint64_t x, std::uint64_t y) { return x * y; }),
                       ResponseDomain::any_int());
        reg = reg.with(
            "eq", 2, [](const std::vector<Value>& args) { return Value::boolean(args[0] == args[1]); },
            ResponseDomain::boolean());
        reg = reg.with(
            "concat", 2,
            [](const std::vector<Value>& args) {
                if (args[0].kind() != Value::Kind::Str || args[1].kind() != Value::Kind::Str)
                    throw type_error("concat", "expected two strings");
                return Value::str(args[0].as_str() + args[1].as_str());
            },
            ResponseDomain::str());
        reg = reg.with("pair", 2, [](const std::vector<Value>& args) {
            return Value::pair(args[0], args[1]);
        });
        auto component = [](const char* name, bool first) {
            return [name, first](const std::vector<Value>& args) {
                if (args[0].kind() != Value::Kind::Pair)
                    throw type_error(name, "expected a pair, got " + args[0].show());
                return first ? args[0].first() : args[0].second();
            };
        };
        reg = reg.with("fst", 1, component("fst", true));
        reg = reg.with("snd", 1, component("snd", false));
        // Identity with an observation: the result is also logged at the
        // evaluating location.
        reg = reg.with(
            "show", 1, [](const std::vector<Value>& args) { return args[0]; },
            ResponseDomain::any(), /*logs_result=*/true);
        return reg;
    }

private:
    std::map<std::string, Primitive> table_;
};

// Big-step evaluation. Deterministic, never mutates env or reg; results
// logged by logs_result primitives are appended to sink when given.
inline Value eval_local(const LocalTerm& t, const Env& env, const PrimitiveRegistry& reg,
                        std::vector<Value>* sink = nullptr) {
    return t.visit([&](const auto& node) -> Value {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LocalTerm::Lit>) {
            return node.value;
        } else if constexpr (std::is_same_v<T, LocalTerm::Var>) {
            auto it = env.find(node.name);
            if (it == env.end()) throw unbound_variable(node.name);
            return it->second;
        } else if constexpr (std::is_same_v<T, LocalTerm::PrimApp>) {
            const Primitive& prim = reg.lookup(node.prim);
            if (prim.arity != node.args.size())
                throw arity_mismatch(node.prim, prim.arity, node.args.size());
            std::vector<Value> args;
            args.reserve(node.args.size());
            for (const auto& a : node.args) args.push_back(eval_local(a, env, reg, sink));
            Value result = prim.fn(args);
            if (prim.logs_result && sink) sink->push_back(result);
            return result;
        } else {
            Env extended = env;
            extended[node.name] = eval_local(*node.bound, env, reg, sink);
            return eval_local(*node.body, extended, reg, sink);
        }
    });
}

// Result domain of an expression, as far as it can be read off statically.
// Primitive applications use the registered result domain; anything opaque
// stays at the top descriptor.
inline ResponseDomain infer_result_domain(const LocalTerm& t, const PrimitiveRegistry& reg) {
    return t.visit([&](const auto& node) -> ResponseDomain {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LocalTerm::Lit>) {
            return PrimitiveRegistry::domain_of_kind(node.value.kind());
        } else if constexpr (std::is_same_v<T, LocalTerm::Var>) {
            return ResponseDomain::any();
        } else if constexpr (std::is_same_v<T, LocalTerm::PrimApp>) {
            return reg.contains(node.prim) ? reg.lookup(node.prim).result_domain
                                           : ResponseDomain::any();
        } else {
            return infer_result_domain(*node.body, reg);
        }
    });
}

// An expression closed over the values it needs: the payload carried by
// operations. Keeping the term symbolic and the bindings alongside is what
// lets projected traces print the expression as written.
struct Closure {
    LocalTerm term;
    Env env;

    friend bool operator==(const Closure& a, const Closure& b) {
        return a.term == b.term && a.env == b.env;
    }
};

inline Value eval_closure(const Closure& c, const PrimitiveRegistry& reg,
                          std::vector<Value>* sink = nullptr) {
    return eval_local(c.term, c.env, reg, sink);
}

} // namespace chor
