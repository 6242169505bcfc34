#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgr {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Violated precondition: mismatched fields, off-curve points, bad moduli.
class DomainError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public DomainError {
public:
    DivisionByZeroError() : DomainError("division by zero") {}
};

/// Syntax error; `position` is the byte offset into the input text.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Input polynomial mixes terms of different total degree.
class HomogeneityError : public Error {
public:
    using Error::Error;
};

class EmptyPolynomialError : public Error {
public:
    EmptyPolynomialError() : Error("polynomial has no terms") {}
};

/// An exhaustive search would exceed the configured guard. `required_guard`
/// is the smallest guard value that would let the operation proceed.
class FeasibilityError : public Error {
public:
    FeasibilityError(const std::string& msg, std::uint64_t required_guard)
        : Error(msg), required_(required_guard) {}
    std::uint64_t required_guard() const { return required_; }

private:
    std::uint64_t required_;
};

/// Point is not in the image of the Veronese embedding (A-matrix rank >= 2).
class NotInImageError : public DomainError {
public:
    using DomainError::DomainError;
};

/// All components of a rational map vanish at the point.
class UndefinedAtPointError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Transported map lands outside the target Grassmannian.
class NotAMorphismError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedCharacteristicError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Rejected representation document; `cause` names the violated invariant.
class SerializationError : public Error {
public:
    explicit SerializationError(const std::string& cause)
        : Error("invalid representation document: " + cause), cause_(cause) {}
    const std::string& cause() const { return cause_; }

private:
    std::string cause_;
};

} // namespace qgr
