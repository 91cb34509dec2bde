#pragma once

#include <stdexcept>
#include <string>

namespace cog {

enum class errc {
    invalid_argument,
    parse_error,
    alphabet_mismatch,
    arity_mismatch,
    degree_violation,
    cap_exceeded,
    precondition_failed,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_argument:    return "invalid_argument";
        case errc::parse_error:         return "parse_error";
        case errc::alphabet_mismatch:   return "alphabet_mismatch";
        case errc::arity_mismatch:      return "arity_mismatch";
        case errc::degree_violation:    return "degree_violation";
        case errc::cap_exceeded:        return "cap_exceeded";
        case errc::precondition_failed: return "precondition_failed";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void require(bool ok, errc c, const std::string& msg) {
    if (!ok) fail(c, msg);
}

} // namespace cog
