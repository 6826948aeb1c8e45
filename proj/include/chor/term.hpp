#pragma once

#include <concepts>
#include <functional>
#include <memory>
#include <optional>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "chor/arity.hpp"
#include "chor/errors.hpp"
#include "chor/value.hpp"

namespace chor {

// A signature is an operation payload type together with a response arity
// descriptor for each payload, exposed as a free function found by ADL.
template <typename Op>
concept Signature = requires(const Op& o) {
    { response_domain(o) } -> std::convertible_to<ResponseDomain>;
};

// Free-monad term over an operation payload type Op: either a finished
// result or an operation waiting for a handler's answer. V is the value
// currency at operation boundaries (plain Value for processes, a located
// value for choreographies). Terms are immutable and cheap to copy.
template <typename Op, typename V = Value>
class Term {
public:
    using op_type = Op;
    using value_type = V;
    using Cont = std::function<Term(const V&)>;

    static Term leaf(V result) { return Term(Rep(std::move(result))); }
    static Term node(Op op, Cont k) { return Term(Rep(NodeRep{std::move(op), std::move(k)})); }

    bool is_leaf() const { return rep_->index() == 0; }

    const V& result() const { return std::get<0>(*rep_); }
    const Op& op() const { return std::get<1>(*rep_).op; }

    // Feed the handler's answer to the head operation.
    Term continue_with(const V& response) const { return std::get<1>(*rep_).k(response); }

    // Stable identity of the head node within one run; leaves have none.
    // Lets interpreters memoize continuation application.
    const void* node_identity() const { return is_leaf() ? nullptr : rep_.get(); }

private:
    struct NodeRep {
        Op op;
        Cont k;
    };
    using Rep = std::variant<V, NodeRep>;

    explicit Term(Rep rep) : rep_(std::make_shared<const Rep>(std::move(rep))) {}

    std::shared_ptr<const Rep> rep_;
};

template <typename Op, typename V = Value>
Term<Op, V> pure(V result) {
    return Term<Op, V>::leaf(std::move(result));
}

// Sequencing: graft f onto every leaf of t. Lazy on nodes, so cost is paid
// only along the path an interpreter actually walks.
template <typename Op, typename V, typename F>
Term<Op, V> bind(Term<Op, V> t, F f) {
    if (t.is_leaf()) return f(t.result());
    return Term<Op, V>::node(t.op(), [t = std::move(t), f = std::move(f)](const V& r) {
        return bind(t.continue_with(r), f);
    });
}

// One operation whose answer becomes the result.
template <typename Op, typename V = Value>
Term<Op, V> perform(Op op) {
    return Term<Op, V>::node(std::move(op), [](const V& r) { return Term<Op, V>::leaf(r); });
}

// Fold a term through an algebra: leaves go through var_map, operations
// through alg together with the interpreted continuation.
template <typename Op, typename V, typename Alg, typename VarMap>
auto interp(const Alg& alg, const VarMap& var_map, const Term<Op, V>& t)
    -> std::invoke_result_t<VarMap, const V&> {
    using X = std::invoke_result_t<VarMap, const V&>;
    if (t.is_leaf()) return var_map(t.result());
    return alg(t.op(), std::function<X(const V&)>([alg, var_map, t](const V& r) {
                   return interp(alg, var_map, t.continue_with(r));
               }));
}

// Ordered list of answers to feed successive operations while probing.
using ResponseScript = std::vector<Value>;

template <typename Op>
struct ProbeOutcome {
    std::vector<Op> trace;
    std::optional<Value> result; // nullopt: script ran out before a leaf
    bool starved() const { return !result.has_value(); }
};

template <typename Op>
bool operator==(const ProbeOutcome<Op>& a, const ProbeOutcome<Op>& b) {
    return a.trace == b.trace && a.result == b.result;
}

// Walk a term feeding scripted answers; the emitted operation sequence plus
// the outcome is the term's observable behaviour under that script. Equality
// of terms is probe equality over all scripts of a finite domain — never
// structural, since continuations are functions.
template <Signature Op>
ProbeOutcome<Op> probe(const Term<Op>& t, const ResponseScript& script) {
    ProbeOutcome<Op> out;
    Term<Op> cur = t;
    std::size_t i = 0;
    while (!cur.is_leaf()) {
        out.trace.push_back(cur.op());
        if (i == script.size()) return out; // starved
        ResponseDomain dom = response_domain(cur.op());
        if (!dom.admits(script[i]))
            throw script_type_mismatch(dom.show(), script[i].show());
        cur = cur.continue_with(script[i]);
        ++i;
    }
    out.result = cur.result();
    return out;
}

// All scripts over the given answers with length <= max_len, in a fixed
// order. The exhaustive fuel for probe-equality checks.
inline std::vector<ResponseScript> enumerate_scripts(const std::vector<Value>& answers,
                                                     std::size_t max_len) {
    std::vector<ResponseScript> out{{}};
    std::vector<ResponseScript> frontier{{}};
    for (std::size_t n = 0; n < max_len; ++n) {
        std::vector<ResponseScript> next;
        for (const auto& s : frontier) {
            for (const auto& a : answers) {
                ResponseScript extended = s;
                extended.push_back(a);
                next.push_back(extended);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

template <Signature Op>
bool probe_equal(const Term<Op>& a, const Term<Op>& b, const std::vector<Value>& answers,
                 std::size_t max_len) {
    for (const auto& script : enumerate_scripts(answers, max_len)) {
        if (!(probe(a, script) == probe(b, script))) return false;
    }
    return true;
}

} // namespace chor
