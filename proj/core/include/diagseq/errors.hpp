#pragma once

#include <stdexcept>
#include <string>

namespace diagseq {

enum class ErrorKind {
    ParseError,       // malformed text input or bad argument
    NotSorted,        // partition parts rise somewhere
    NonPositivePart,  // partition contains a part <= 0
    BadShape,         // sequence is not a valid diagonal sequence
    NotStrict,        // strictly decreasing parts required
    WeightMismatch,   // operands partition different numbers
    InvalidPeel,      // first-row removal is not admissible here
    EmptyStratum,     // no class member has the requested part count
    BoundExceeded,    // input exceeds the configured hard bound
    CapExceeded,      // enumeration refused: result larger than the cap
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace diagseq
