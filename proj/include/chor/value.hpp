#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace chor {

// Dynamic value universe of the local language. Everything that crosses a
// channel is one of these. Values are immutable; copies share structure.
class Value {
public:
    enum class Kind { Unit, Bool, Int, Str, Pair, List };

    Value() : rep_(UnitRep{}) {}

    static Value unit() { return Value(); }
    static Value boolean(bool b) { return Value(Rep(b)); }
    static Value integer(std::int64_t i) { return Value(Rep(i)); }
    static Value str(std::string s) { return Value(Rep(std::move(s))); }
    static Value pair(Value a, Value b) {
        return Value(Rep(PairRep{std::make_shared<Value>(std::move(a)),
                                 std::make_shared<Value>(std::move(b))}));
    }
    static Value list(std::vector<Value> elems) {
        return Value(Rep(ListRep{std::make_shared<std::vector<Value>>(std::move(elems))}));
    }

    Kind kind() const { return static_cast<Kind>(rep_.index()); }

    bool is_unit() const { return kind() == Kind::Unit; }
    bool as_bool() const { return std::get<bool>(rep_); }
    std::int64_t as_int() const { return std::get<std::int64_t>(rep_); }
    const std::string& as_str() const { return std::get<std::string>(rep_); }
    const Value& first() const { return *std::get<PairRep>(rep_).first; }
    const Value& second() const { return *std::get<PairRep>(rep_).second; }
    const std::vector<Value>& elements() const { return *std::get<ListRep>(rep_).elems; }

    friend bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Value& a, const Value& b) { return compare(a, b) != 0; }
    friend bool operator<(const Value& a, const Value& b) { return compare(a, b) < 0; }

    // Total order: kind rank first, then contents. Used for canonical state
    // keys and map keys, not exposed as a semantic ordering.
    static int compare(const Value& a, const Value& b) {
        if (a.rep_.index() != b.rep_.index())
            return a.rep_.index() < b.rep_.index() ? -1 : 1;
        switch (a.kind()) {
        case Kind::Unit:
            return 0;
        case Kind::Bool:
            return int(a.as_bool()) - int(b.as_bool());
        case Kind::Int:
            return a.as_int() < b.as_int() ? -1 : a.as_int() > b.as_int() ? 1 : 0;
        case Kind::Str:
            return a.as_str().compare(b.as_str());
        case Kind::Pair: {
            int c = compare(a.first(), b.first());
            return c != 0 ? c : compare(a.second(), b.second());
        }
        case Kind::List: {
            const auto& xs = a.elements();
            const auto& ys = b.elements();
            for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
                int c = compare(xs[i], ys[i]);
                if (c != 0) return c;
            }
            return xs.size() < ys.size() ? -1 : xs.size() > ys.size() ? 1 : 0;
        }
        }
        return 0;
    }

    // Round-trippable text form; matches the literal syntax the parsers accept.
    std::string show() const {
        switch (kind()) {
        case Kind::Unit:
            return "unit";
        case Kind::Bool:
            return as_bool() ? "true" : "false";
        case Kind::Int:
            return std::to_string(as_int());
        case Kind::Str:
            return quote(as_str());
        case Kind::Pair:
            return "(pair " + first().show() + " " + second().show() + ")";
        case Kind::List: {
            std::string out = "(list";
            for (const auto& e : elements()) out += " " + e.show();
            return out + ")";
        }
        }
        return "?";
    }

    static const char* kind_name(Kind k) {
        switch (k) {
        case Kind::Unit: return "unit";
        case Kind::Bool: return "bool";
        case Kind::Int: return "int";
        case Kind::Str: return "str";
        case Kind::Pair: return "pair";
        case Kind::List: return "list";
        }
        return "?";
    }

private:
    struct UnitRep {};
    struct PairRep {
        std::shared_ptr<Value> first;
        std::shared_ptr<Value> second;
    };
    struct ListRep {
        std::shared_ptr<std::vector<Value>> elems;
    };
    using Rep = std::variant<UnitRep, bool, std::int64_t, std::string, PairRep, ListRep>;

    explicit Value(Rep rep) : rep_(std::move(rep)) {}

    static std::string quote(const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    }

    Rep rep_;
};

} // namespace chor
