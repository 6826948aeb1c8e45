#pragma once

#include <string>
#include <variant>
#include <vector>

#include "chor/local.hpp"
#include "chor/term.hpp"

namespace chor {

// Locations name the nodes of the system. Any type with decidable equality
// would do; strings keep files and traces readable.
using Loc = std::string;

// The process signature: the target language of projection. A process can
// run a local computation, send an already-evaluated value, or wait for a
// value of an expected shape.
struct ProcessOp {
    struct Locally {
        Closure computation;
    };
    struct Send {
        Loc to;
        Value payload;
    };
    struct Recv {
        Loc from;
        ResponseDomain expected;
    };

    std::variant<Locally, Send, Recv> rep;

    bool is_locally() const { return rep.index() == 0; }
    bool is_send() const { return rep.index() == 1; }
    bool is_recv() const { return rep.index() == 2; }
    const Locally& as_locally() const { return std::get<Locally>(rep); }
    const Send& as_send() const { return std::get<Send>(rep); }
    const Recv& as_recv() const { return std::get<Recv>(rep); }

    friend bool operator==(const ProcessOp& a, const ProcessOp& b) {
        if (a.rep.index() != b.rep.index()) return false;
        if (a.is_locally())
            return a.as_locally().computation == b.as_locally().computation;
        if (a.is_send())
            return a.as_send().to == b.as_send().to && a.as_send().payload == b.as_send().payload;
        return a.as_recv().from == b.as_recv().from && a.as_recv().expected == b.as_recv().expected;
    }

    std::string show() const {
        if (is_locally()) return "locally " + as_locally().computation.term.show();
        if (is_send()) return "send " + as_send().to + " " + as_send().payload.show();
        return "recv " + as_recv().from;
    }
};

inline ResponseDomain response_domain(const ProcessOp& op) {
    if (op.is_send()) return ResponseDomain::unit();
    if (op.is_recv()) return op.as_recv().expected;
    return ResponseDomain::any(); // a local computation may produce anything
}

using Process = Term<ProcessOp>;

inline Process locally(Closure computation) {
    return perform(ProcessOp{ProcessOp::Locally{std::move(computation)}});
}
inline Process locally(LocalTerm term) { return locally(Closure{std::move(term), {}}); }

inline Process send(Loc to, Value payload) {
    return perform(ProcessOp{ProcessOp::Send{std::move(to), std::move(payload)}});
}

inline Process recv(Loc from, ResponseDomain expected) {
    return perform(ProcessOp{ProcessOp::Recv{std::move(from), expected}});
}

// Operation spine of a process, walked with default answers. Projected
// processes in this fragment never branch on an answer, so the spine is the
// full behaviour; payload expressions stay symbolic because closures keep
// the original term.
inline std::vector<ProcessOp> process_spine(const Process& p) {
    std::vector<ProcessOp> out;
    Process cur = p;
    while (!cur.is_leaf()) {
        out.push_back(cur.op());
        cur = cur.continue_with(response_domain(cur.op()).default_value());
    }
    return out;
}

// One operation per line; the golden-test surface.
inline std::string show_process_trace(const Process& p) {
    std::string out;
    for (const auto& op : process_spine(p)) out += op.show() + "\n";
    return out;
}

} // namespace chor
