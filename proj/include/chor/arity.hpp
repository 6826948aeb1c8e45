#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "chor/value.hpp"

namespace chor {

// Response arity descriptor: the set of values a handler may answer an
// operation with. Descriptors are what makes operation boundaries dynamically
// checkable without a dependent type system.
class ResponseDomain {
public:
    enum class Kind { Unit, Bool, IntRange, Str, Any };

    static ResponseDomain unit() { return ResponseDomain(Kind::Unit); }
    static ResponseDomain boolean() { return ResponseDomain(Kind::Bool); }
    static ResponseDomain int_range(std::int64_t lo, std::int64_t hi) {
        ResponseDomain d(Kind::IntRange);
        d.lo_ = lo;
        d.hi_ = hi;
        return d;
    }
    // Default checking domain for ints: {0,1,2,3}.
    static ResponseDomain small_int() { return int_range(0, 3); }
    static ResponseDomain any_int() {
        return int_range(std::numeric_limits<std::int64_t>::min(),
                         std::numeric_limits<std::int64_t>::max());
    }
    static ResponseDomain str() { return ResponseDomain(Kind::Str); }
    static ResponseDomain any() { return ResponseDomain(Kind::Any); }

    Kind kind() const { return kind_; }
    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return hi_; }

    bool admits(const Value& v) const {
        switch (kind_) {
        case Kind::Unit: return v.kind() == Value::Kind::Unit;
        case Kind::Bool: return v.kind() == Value::Kind::Bool;
        case Kind::IntRange:
            return v.kind() == Value::Kind::Int && v.as_int() >= lo_ && v.as_int() <= hi_;
        case Kind::Str: return v.kind() == Value::Kind::Str;
        case Kind::Any: return true;
        }
        return false;
    }

    // Deterministic representative, used when walking a term without caring
    // about the answer (trace printing, location scans).
    Value default_value() const {
        switch (kind_) {
        case Kind::Unit: return Value::unit();
        case Kind::Bool: return Value::boolean(false);
        case Kind::IntRange: return Value::integer(lo_);
        case Kind::Str: return Value::str("a");
        case Kind::Any: return Value::unit();
        }
        return Value::unit();
    }

    // Finite set of answers the probing and fingerprinting machinery feeds.
    // Exact for unit/bool and small int ranges; a fixed sample otherwise.
    std::vector<Value> sample_values() const {
        switch (kind_) {
        case Kind::Unit:
            return {Value::unit()};
        case Kind::Bool:
            return {Value::boolean(false), Value::boolean(true)};
        case Kind::IntRange: {
            std::vector<Value> out;
            if (hi_ >= lo_ && static_cast<std::uint64_t>(hi_ - lo_) < 8) {
                for (std::int64_t i = lo_; i <= hi_; ++i) out.push_back(Value::integer(i));
            } else {
                for (std::int64_t i = 0; i <= 3; ++i) out.push_back(Value::integer(i));
            }
            return out;
        }
        case Kind::Str:
            return {Value::str("a"), Value::str("b")};
        case Kind::Any:
            return {Value::unit(), Value::boolean(true), Value::integer(0), Value::integer(1),
                    Value::integer(2),  Value::integer(3),  Value::str("a"), Value::str("b")};
        }
        return {};
    }

    std::string show() const {
        switch (kind_) {
        case Kind::Unit: return "unit";
        case Kind::Bool: return "bool";
        case Kind::IntRange:
            if (lo_ == std::numeric_limits<std::int64_t>::min() &&
                hi_ == std::numeric_limits<std::int64_t>::max())
                return "int";
            return "int[" + std::to_string(lo_) + ".." + std::to_string(hi_) + "]";
        case Kind::Str: return "str";
        case Kind::Any: return "value";
        }
        return "?";
    }

    friend bool operator==(const ResponseDomain& a, const ResponseDomain& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == Kind::IntRange) return a.lo_ == b.lo_ && a.hi_ == b.hi_;
        return true;
    }

private:
    explicit ResponseDomain(Kind k) : kind_(k) {}

    Kind kind_;
    std::int64_t lo_ = 0;
    std::int64_t hi_ = 0;
};

} // namespace chor
