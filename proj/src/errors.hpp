#pragma once

#include <stdexcept>
#include <string>

namespace hsx {

// Error categories mirror the process exit-code contract:
// parse/argument errors map to 2, domain-precondition violations to 3,
// file I/O failures to 4.
enum class ErrorKind { parse = 2, domain = 3, io = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct ParseError : Error {
    explicit ParseError(std::string msg) : Error(ErrorKind::parse, std::move(msg)) {}
};

struct ZeroDenominatorError : ParseError {
    explicit ZeroDenominatorError(std::string msg) : ParseError(std::move(msg)) {}
};

struct DomainError : Error {
    explicit DomainError(std::string msg) : Error(ErrorKind::domain, std::move(msg)) {}
};

struct DuplicateNodeError : DomainError {
    explicit DuplicateNodeError(std::string msg) : DomainError(std::move(msg)) {}
};

struct EnumerationTooLargeError : DomainError {
    explicit EnumerationTooLargeError(std::string msg) : DomainError(std::move(msg)) {}
};

struct ArityError : DomainError {
    explicit ArityError(std::string msg) : DomainError(std::move(msg)) {}
};

struct IndexOutOfRangeError : DomainError {
    explicit IndexOutOfRangeError(std::string msg) : DomainError(std::move(msg)) {}
};

struct IoError : Error {
    explicit IoError(std::string msg) : Error(ErrorKind::io, std::move(msg)) {}
};

}  // namespace hsx
