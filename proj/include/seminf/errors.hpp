#ifndef SEMINF_ERRORS_HPP
#define SEMINF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seminf {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Multiplication table is not associative; (a,b,c) is the first violating
/// triple in index order.
class NonAssociativeError : public Error {
public:
  NonAssociativeError(int a, int b, int c, const std::string& what)
      : Error(what), a(a), b(b), c(c) {}
  int a, b, c;
};

class BadIndexError : public Error {
public:
  using Error::Error;
};

class DuplicateNameError : public Error {
public:
  using Error::Error;
};

/// Some element has no inverse at all.
class NoInverseError : public Error {
public:
  NoInverseError(int element, const std::string& what)
      : Error(what), element(element) {}
  int element;
};

/// Some element has at least two inverses; `first` and `second` are the two
/// smallest witnesses.
class NonUniqueInverseError : public Error {
public:
  NonUniqueInverseError(int element, int first, int second,
                        const std::string& what)
      : Error(what), element(element), first(first), second(second) {}
  int element, first, second;
};

/// x^n = x^{n+1} fails for `witness` at the requested exponent.
class ExponentTooSmallError : public Error {
public:
  ExponentTooSmallError(int witness, const std::string& what)
      : Error(what), witness(witness) {}
  int witness;
};

/// No exponent up to |S| satisfies x^n = x^{n+1}; the algebra contains a
/// nontrivial subgroup.
class NotAperiodicError : public Error {
public:
  NotAperiodicError(int witness, const std::string& what)
      : Error(what), witness(witness) {}
  int witness;
};

class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

/// Union of two partial injections would place two ones in one row or column.
class OverlapError : public Error {
public:
  using Error::Error;
};

class ClosureBudgetError : public Error {
public:
  ClosureBudgetError(std::size_t budget, const std::string& what)
      : Error(what), budget(budget) {}
  std::size_t budget;
};

/// Syntax error in a term, identity or algebra file.
class ParseError : public Error {
public:
  ParseError(std::size_t offset, std::string expected, const std::string& what)
      : Error(what), offset(offset), expected(std::move(expected)) {}
  std::size_t offset;    // byte offset into the input
  std::string expected;  // human-readable expected-token set
};

class MissingVariableError : public Error {
public:
  MissingVariableError(std::string variable, const std::string& what)
      : Error(what), variable(std::move(variable)) {}
  std::string variable;
};

/// A term uses an operation the target algebra does not carry.
class SignatureMismatchError : public Error {
public:
  using Error::Error;
};

/// Enumeration budget (term count) exhausted.
class BudgetExceededError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace seminf

#endif  // SEMINF_ERRORS_HPP
