#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chor {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- term / probing ---------------------------------------------------------

struct script_type_mismatch : error {
    script_type_mismatch(const std::string& expected, const std::string& got)
        : error("response script entry does not fit the operation arity: expected " + expected +
                ", got " + got) {}
};

// -- local language ---------------------------------------------------------

struct unbound_variable : error {
    explicit unbound_variable(const std::string& name) : error("unbound variable: " + name) {}
};

struct unknown_primitive : error {
    explicit unknown_primitive(const std::string& name) : error("unknown primitive: " + name) {}
};

struct arity_mismatch : error {
    arity_mismatch(const std::string& name, std::size_t expected, std::size_t got)
        : error("primitive " + name + " expects " + std::to_string(expected) + " argument(s), got " +
                std::to_string(got)) {}
};

struct type_error : error {
    type_error(const std::string& primitive, const std::string& detail)
        : error("type error in " + primitive + ": " + detail) {}
};

struct duplicate_primitive : error {
    explicit duplicate_primitive(const std::string& name)
        : error("primitive already registered: " + name) {}
};

// Local evaluation failure tagged with the location it happened at.
struct eval_error_at : error {
    eval_error_at(const std::string& location, const std::string& detail)
        : error("at " + location + ": " + detail), location(location) {}
    std::string location;
};

// -- located values ---------------------------------------------------------

struct absent_payload_access : error {
    absent_payload_access() : error("read of an absent located value payload") {}
};

// -- projection -------------------------------------------------------------

struct missing_location : error {
    explicit missing_location(const std::string& loc)
        : error("choreography mentions location not in the given set: " + loc), location(loc) {}
    std::string location;
};

// -- checker ----------------------------------------------------------------

struct limit_exceeded : error {
    enum class which { states, depth };
    limit_exceeded(which w, std::size_t limit)
        : error(std::string("exploration limit exceeded: ") +
                (w == which::states ? "states" : "depth") + " > " + std::to_string(limit)),
          exceeded(w) {}
    which exceeded;
};

// -- runtime / transport ----------------------------------------------------

struct recv_type_mismatch : error {
    recv_type_mismatch(const std::string& at, const std::string& from, const std::string& expected,
                       const std::string& got)
        : error("recv at " + at + " from " + from + ": expected " + expected + ", got " + got) {}
};

struct hung_runtime : error {
    explicit hung_runtime(const std::string& detail) : error("runtime hung: " + detail) {}
};

struct connect_failed : error {
    connect_failed(const std::string& peer, const std::string& cause)
        : error("connect to " + peer + " failed: " + cause) {}
};

struct frame_too_large : error {
    explicit frame_too_large(std::uint64_t size)
        : error("frame payload of " + std::to_string(size) + " bytes exceeds the 16 MiB cap") {}
};

struct decode_error : error {
    explicit decode_error(const std::string& detail) : error("value decode failed: " + detail) {}
};

struct handshake_mismatch : error {
    explicit handshake_mismatch(const std::string& detail) : error("bad handshake: " + detail) {}
};

// -- parsing ----------------------------------------------------------------

struct parse_error : error {
    parse_error(int line, int column, const std::string& detail)
        : error(std::to_string(line) + ":" + std::to_string(column) + ": " + detail),
          line(line),
          column(column) {}
    int line;
    int column;
};

} // namespace chor
