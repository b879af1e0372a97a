#pragma once

#include <stdexcept>
#include <string>

namespace jseq {

// Argument outside the contract of an operation (n below a bound's validity,
// log of a nonpositive enclosure, inversion of a non-unit series, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by an enclosure that contains zero.
struct DivisionError : DomainError {
    using DomainError::DomainError;
};

// Malformed input file; carries the 1-based line where parsing stopped.
struct ParseError : std::runtime_error {
    long line;
    ParseError(const std::string& msg, long line_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ")"), line(line_) {}
};

// Well-formed file whose checksum does not match its payload.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent computation routes disagree; verification must halt.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Concurrent-writer lock is held, or other usage-level misuse.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace jseq
