// error.hpp -- exception hierarchy shared by all modules

#ifndef MVS_ERROR_HPP
#define MVS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// The carrier exceeds the configured size cap.
class CarrierTooLarge : public Error {
public:
  using Error::Error;
};

/// The class of the neutral element under a congruence is not a singleton,
/// so no quotient MVS exists.
class NeutralClassNotTrivial : public Error {
public:
  using Error::Error;
};

/// An operation that requires a commutative value set was handed a
/// non-commutative one.
class NotCommutative : public Error {
public:
  using Error::Error;
};

/// Composition or transformation attempted across mismatched carriers.
class DomainMismatch : public Error {
public:
  using Error::Error;
};

/// Inversion of a map that is not a bijection.
class NotBijective : public Error {
public:
  using Error::Error;
};

/// Two quasimetric tables over different point sets were compared.
class PointSetMismatch : public Error {
public:
  using Error::Error;
};

/// An open ball was requested with the neutral element as radius.
class NeutralRadius : public Error {
public:
  using Error::Error;
};

/// A search would exceed its configured node budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// A bounded word computation was asked for a bound below the minimum.
class BoundTooSmall : public Error {
public:
  using Error::Error;
};

/// The bounded word universe would exceed the configured budget.
class SizeExceeded : public Error {
public:
  using Error::Error;
};

/// Words over different alphabets were combined.
class AlphabetMismatch : public Error {
public:
  using Error::Error;
};

/// Malformed document text; positions are 1-based.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t line, std::size_t col, const std::string& message)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + message),
        line_(line),
        col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

private:
  std::size_t line_;
  std::size_t col_;
};

/// Well-formed text that does not describe a valid object.
class SemanticError : public Error {
public:
  using Error::Error;
};

} // namespace mvs

#endif // MVS_ERROR_HPP
