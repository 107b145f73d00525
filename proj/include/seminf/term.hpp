#ifndef SEMINF_TERM_HPP
#define SEMINF_TERM_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seminf/algebra.hpp"
#include "seminf/errors.hpp"

namespace seminf {

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable term over the signature {., ^-1, +} plus variables. Subtrees
/// may be shared. The size of a term counts variable occurrences and
/// inversion marks; the binary operation nodes are free, so the size of a
/// plain product is its length as a word.
class Term {
public:
  enum class Kind { var, mul, inv, add };

  static TermPtr make_var(std::string name);
  static TermPtr make_mul(TermPtr lhs, TermPtr rhs);
  static TermPtr make_inv(TermPtr child);
  static TermPtr make_add(TermPtr lhs, TermPtr rhs);

  Kind kind() const { return kind_; }
  const std::string& var_name() const { return var_; }
  const TermPtr& left() const { return lhs_; }    // also the child of inv
  const TermPtr& right() const { return rhs_; }

  int size() const { return size_; }
  bool uses_inv() const { return uses_inv_; }
  bool uses_add() const { return uses_add_; }

  /// Variable names in first-occurrence order.
  std::vector<std::string> variables() const;

  bool equals(const Term& other) const;

private:
  Term() = default;

  Kind kind_ = Kind::var;
  std::string var_;
  TermPtr lhs_, rhs_;
  int size_ = 1;
  bool uses_inv_ = false;
  bool uses_add_ = false;
};

struct Identity {
  TermPtr lhs, rhs;

  /// Union of both sides' variables, lhs first, in first-occurrence order.
  std::vector<std::string> variables() const;
};

/// Fully parenthesized canonical text; parse(print(t)) == t.
std::string print_term(const Term& t);
std::string print_term(const TermPtr& t);
std::string print_identity(const Identity& id);

/// Grammar:
///   identity := term '=' term
///   term     := sum
///   sum      := prod ( '+' prod )*
///   prod     := factor ( '*' factor )*
///   factor   := atom ( '\'' )*
///   atom     := IDENT | '(' term ')'
///   IDENT    := [A-Za-z][A-Za-z0-9_]*
/// Whitespace between tokens is insignificant; '+' and '*' are
/// left-associative. Throws ParseError with byte offset and expected set.
TermPtr parse_term(std::string_view text);
Identity parse_identity(std::string_view text);

/// Term when the input has no top-level '=', Identity otherwise.
std::variant<TermPtr, Identity> parse(std::string_view text);

/// Replaces every a + b by (a.b^-1)^n.a bottom-up, the n-fold product
/// associated to the left. The result has no addition node.
TermPtr eliminate_addition(const TermPtr& t, int n);

/// Structural fold through the algebra's tables. Throws
/// MissingVariableError or SignatureMismatchError.
int evaluate(const Term& t, const FiniteAlgebra& s,
             const std::map<std::string, int>& assignment);

}  // namespace seminf

#endif  // SEMINF_TERM_HPP
