#ifndef SGC_ERRORS_HPP
#define SGC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sgc {

// Base error. `code()` is the machine-readable identifier the CLI emits in
// JSON mode.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Invalid domain data: bad endpoints, dimension mismatch, non-bijective
// permutation, and the like.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error("validation", msg) {}
protected:
    ValidationError(std::string code, const std::string& msg) : Error(std::move(code), msg) {}
};

// Malformed input text; carries a 1-based line number when known.
class ParseError : public ValidationError {
public:
    ParseError(int line, const std::string& msg)
        : ValidationError("parse", "line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An operation was asked to exceed a configured enumeration bound or
// brute-force budget. Never silently approximated.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& msg) : Error("capacity", msg) {}
};

// Free loops and positive loops have no hyperplane; operations that need the
// arrangement reject them with this.
class UnsupportedEdgeError : public ValidationError {
public:
    explicit UnsupportedEdgeError(const std::string& msg)
        : ValidationError("unsupported-edge", msg) {}
};

// A quantity that must be integral (e.g. a Burnside average) was not.
// Indicates a bug, not a data condition.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error("internal", msg) {}
};

} // namespace sgc

#endif
