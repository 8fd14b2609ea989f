#pragma once

#include <stdexcept>
#include <string>

namespace bireg {

// Error categories map 1:1 onto CLI exit codes (2 / 3 / 4).
enum class ErrorKind {
    Schema,        // malformed input files or descriptors
    Precondition,  // mathematically invalid request (even m, bad index, parity)
    Math           // certification or internal consistency failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error schema_error(const std::string& msg) { return Error(ErrorKind::Schema, msg); }
inline Error precondition_error(const std::string& msg) { return Error(ErrorKind::Precondition, msg); }
inline Error math_error(const std::string& msg) { return Error(ErrorKind::Math, msg); }

}  // namespace bireg
