#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "chor/errors.hpp"
#include "chor/local.hpp"
#include "chor/process.hpp"
#include "chor/value.hpp"

namespace chor {

// How many times an absent payload was read. Interpreters are built so this
// never moves; test suites assert it stays at zero.
inline std::atomic<std::uint64_t> absent_payload_reads{0};

// A value owned by one location. When a choreography is viewed from location
// l, a value owned by s carries a payload iff l = s; everywhere else it is
// erased to a placeholder. There is deliberately no unchecked unwrap: code
// either asks present() first or goes through combinators that do.
class LocatedValue {
public:
    static LocatedValue present(Loc owner, Value v) {
        return LocatedValue(std::move(owner), std::move(v));
    }
    static LocatedValue absent(Loc owner) { return LocatedValue(std::move(owner), std::nullopt); }

    const Loc& owner() const { return owner_; }
    bool present() const { return content_.has_value(); }

    const Value& payload() const {
        if (!content_) {
            absent_payload_reads.fetch_add(1, std::memory_order_relaxed);
            throw absent_payload_access();
        }
        return *content_;
    }

    // The payload as a literal, or a placeholder literal when erased. The
    // placeholder can only end up in expressions that are never evaluated at
    // this view, so it is safe by construction.
    LocalTerm to_literal() const {
        return present() ? LocalTerm::lit(*content_) : LocalTerm::lit(Value::unit());
    }

    friend bool operator==(const LocatedValue& a, const LocatedValue& b) {
        if (a.owner_ != b.owner_ || a.present() != b.present()) return false;
        return !a.present() || *a.content_ == *b.content_;
    }

    std::string show() const {
        return present() ? owner_ + ":" + content_->show() : owner_ + ":<absent>";
    }

private:
    LocatedValue(Loc owner, std::optional<Value> content)
        : owner_(std::move(owner)), content_(std::move(content)) {}

    Loc owner_;
    std::optional<Value> content_;
};

// The located-value monad at a fixed owner: identity behaviour on present
// values, unit behaviour on erased ones.
inline LocatedValue located_pure(Loc owner, Value v) {
    return LocatedValue::present(std::move(owner), std::move(v));
}

template <typename F>
LocatedValue located_bind(const LocatedValue& lv, F f) {
    if (!lv.present()) return LocatedValue::absent(lv.owner());
    return f(lv.payload());
}

template <typename F>
LocatedValue located_map(const LocatedValue& lv, F f) {
    return located_bind(lv, [&](const Value& v) { return located_pure(lv.owner(), f(v)); });
}

} // namespace chor
