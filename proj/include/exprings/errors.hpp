#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exprings {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition or domain restriction was violated
/// (division by zero, mismatched arity, bad index, refused extension).
class DomainError : public Error {
public:
    using Error::Error;
};

/// E was applied outside its domain of definition.
class PartialityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A Gröbner computation ran out of its reduction-step budget.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(std::size_t budget)
        : Error("budget exceeded (" + std::to_string(budget) + " reduction steps)"), budget_(budget) {}
    std::size_t budget() const { return budget_; }

private:
    std::size_t budget_;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace exprings
