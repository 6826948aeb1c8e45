#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chor/errors.hpp"
#include "chor/local.hpp"
#include "chor/located.hpp"
#include "chor/term.hpp"

namespace chor {

// The choreography signature has a single operation: location s evaluates a
// computation and location r owns the result. s = r is a plain local step.
// The computation closure is owned by the sender; views that are not the
// sender never look inside it.
struct ChoreoOp {
    Loc sender;
    Loc receiver;
    Closure computation;
    ResponseDomain result_domain = ResponseDomain::any();

    bool is_self() const { return sender == receiver; }

    friend bool operator==(const ChoreoOp& a, const ChoreoOp& b) {
        return a.sender == b.sender && a.receiver == b.receiver &&
               a.computation == b.computation && a.result_domain == b.result_domain;
    }
};

// A choreography is a free-monad term over ChoreoOp whose value currency is
// located values. One term serves every view: interpreters decide which
// located values flow into the continuations.
using Choreo = Term<ChoreoOp, LocatedValue>;

inline Choreo comm(Loc sender, Loc receiver, Closure computation,
                   ResponseDomain result_domain = ResponseDomain::any()) {
    return perform<ChoreoOp, LocatedValue>(
        ChoreoOp{std::move(sender), std::move(receiver), std::move(computation), result_domain});
}

inline Choreo comm(Loc sender, Loc receiver, LocalTerm term,
                   ResponseDomain result_domain = ResponseDomain::any()) {
    return comm(std::move(sender), std::move(receiver), Closure{std::move(term), {}},
                result_domain);
}

// Local computation at s; identical to a self-communication.
inline Choreo local_at(Loc at, Closure computation,
                       ResponseDomain result_domain = ResponseDomain::any()) {
    Loc receiver = at;
    return comm(std::move(at), std::move(receiver), std::move(computation), result_domain);
}

inline Choreo local_at(Loc at, LocalTerm term,
                       ResponseDomain result_domain = ResponseDomain::any()) {
    return local_at(std::move(at), Closure{std::move(term), {}}, result_domain);
}

// ---------------------------------------------------------------------------
// Statement form. Parsed files and the random generator both describe a
// choreography as a list of bindings and compile it with build_choreo, so
// there is exactly one way variables get threaded through continuations.
// ---------------------------------------------------------------------------

struct ChorStatement {
    std::string binder; // empty: result not bound
    Loc sender;
    Loc receiver; // == sender for a local step
    LocalTerm expr;
    ResponseDomain domain = ResponseDomain::any();
};

namespace detail {

using LocatedEnv = std::map<std::string, LocatedValue>;

inline Closure close_over(const LocalTerm& expr, const Loc& sender, const LocatedEnv& env) {
    Closure closure{expr, {}};
    for (const auto& name : free_vars(expr)) {
        auto it = env.find(name);
        if (it == env.end()) throw unbound_variable(name);
        if (it->second.owner() != sender)
            throw error("variable " + name + " is owned by " + it->second.owner() +
                        " but used in a computation at " + sender);
        if (it->second.present()) closure.env.emplace(name, it->second.payload());
        // Erased bindings are simply left out: this closure belongs to a view
        // that will never evaluate it.
    }
    return closure;
}

inline Choreo build_from(std::shared_ptr<const std::vector<ChorStatement>> stmts, std::size_t i,
                         LocatedEnv env) {
    if (i == stmts->size()) return Choreo::leaf(LocatedValue::absent(""));
    const ChorStatement& st = (*stmts)[i];
    ChoreoOp op{st.sender, st.receiver, close_over(st.expr, st.sender, env), st.domain};
    bool last = i + 1 == stmts->size();
    std::string binder = st.binder;
    return Choreo::node(std::move(op),
                        [stmts, i, env = std::move(env), binder, last](const LocatedValue& lv) {
                            if (last) return Choreo::leaf(lv);
                            LocatedEnv next = env;
                            if (!binder.empty()) next.insert_or_assign(binder, lv);
                            return build_from(stmts, i + 1, std::move(next));
                        });
}

} // namespace detail

inline Choreo build_choreo(std::vector<ChorStatement> statements) {
    auto stmts = std::make_shared<const std::vector<ChorStatement>>(std::move(statements));
    return detail::build_from(stmts, 0, {});
}

// ---------------------------------------------------------------------------
// The head spine of a choreography: the operations in program order, walked
// under the all-present view with placeholder payloads (nothing is
// evaluated). Control flow in this fragment never inspects an answer, so the
// spine is complete.
// ---------------------------------------------------------------------------

inline std::vector<ChoreoOp> choreo_spine(const Choreo& c) {
    std::vector<ChoreoOp> out;
    Choreo cur = c;
    while (!cur.is_leaf()) {
        out.push_back(cur.op());
        const ChoreoOp& op = out.back();
        cur = cur.continue_with(
            LocatedValue::present(op.receiver, op.result_domain.default_value()));
    }
    return out;
}

// Locations in order of first mention.
inline std::vector<Loc> mentioned_locations(const Choreo& c) {
    std::vector<Loc> out;
    std::set<Loc> seen;
    for (const auto& op : choreo_spine(c)) {
        for (const Loc& l : {op.sender, op.receiver})
            if (seen.insert(l).second) out.push_back(l);
    }
    return out;
}

inline std::size_t count_cross_comms(const Choreo& c) {
    std::size_t n = 0;
    for (const auto& op : choreo_spine(c))
        if (!op.is_self()) ++n;
    return n;
}

// ---------------------------------------------------------------------------
// Choreographic semantics: deterministic head reduction. Evaluate the head
// computation at its sender, hand the value to the receiver atomically,
// continue. The reference behaviour every projected network is checked
// against.
// ---------------------------------------------------------------------------

struct ChoreoOutcome {
    std::map<Loc, std::vector<Value>> observations; // per-location logged values
    LocatedValue result = LocatedValue::absent("");
};

inline ChoreoOutcome choreo_eval(const Choreo& c, const PrimitiveRegistry& reg) {
    ChoreoOutcome out;
    Choreo cur = c;
    while (!cur.is_leaf()) {
        const ChoreoOp op = cur.op();
        Value v;
        try {
            v = eval_closure(op.computation, reg, &out.observations[op.sender]);
        } catch (const error& e) {
            throw eval_error_at(op.sender, e.what());
        }
        cur = cur.continue_with(LocatedValue::present(op.receiver, std::move(v)));
    }
    out.result = cur.result();
    return out;
}

} // namespace chor
