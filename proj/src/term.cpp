#include "seminf/term.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "strings.hpp"

namespace seminf {

TermPtr Term::make_var(std::string name) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = Kind::var;
  t->var_ = std::move(name);
  t->size_ = 1;
  return t;
}

TermPtr Term::make_mul(TermPtr lhs, TermPtr rhs) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = Kind::mul;
  t->size_ = lhs->size() + rhs->size();
  t->uses_inv_ = lhs->uses_inv() || rhs->uses_inv();
  t->uses_add_ = lhs->uses_add() || rhs->uses_add();
  t->lhs_ = std::move(lhs);
  t->rhs_ = std::move(rhs);
  return t;
}

TermPtr Term::make_inv(TermPtr child) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = Kind::inv;
  t->size_ = child->size() + 1;
  t->uses_inv_ = true;
  t->uses_add_ = child->uses_add();
  t->lhs_ = std::move(child);
  return t;
}

TermPtr Term::make_add(TermPtr lhs, TermPtr rhs) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = Kind::add;
  t->size_ = lhs->size() + rhs->size();
  t->uses_inv_ = lhs->uses_inv() || rhs->uses_inv();
  t->uses_add_ = true;
  t->lhs_ = std::move(lhs);
  t->rhs_ = std::move(rhs);
  return t;
}

namespace {

void collect_variables(const Term& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::var:
      if (std::find(out.begin(), out.end(), t.var_name()) == out.end())
        out.push_back(t.var_name());
      return;
    case Term::Kind::inv:
      collect_variables(*t.left(), out);
      return;
    case Term::Kind::mul:
    case Term::Kind::add:
      collect_variables(*t.left(), out);
      collect_variables(*t.right(), out);
      return;
  }
}

}  // namespace

std::vector<std::string> Term::variables() const {
  std::vector<std::string> out;
  collect_variables(*this, out);
  return out;
}

bool Term::equals(const Term& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::var:
      return var_ == other.var_;
    case Kind::inv:
      return lhs_->equals(*other.lhs_);
    case Kind::mul:
    case Kind::add:
      return lhs_->equals(*other.lhs_) && rhs_->equals(*other.rhs_);
  }
  return false;
}

std::vector<std::string> Identity::variables() const {
  std::vector<std::string> out = lhs->variables();
  for (const auto& v : rhs->variables())
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

namespace {

void print_to(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::var:
      out += t.var_name();
      return;
    case Term::Kind::mul:
      out += '(';
      print_to(*t.left(), out);
      out += '*';
      print_to(*t.right(), out);
      out += ')';
      return;
    case Term::Kind::add:
      out += '(';
      print_to(*t.left(), out);
      out += '+';
      print_to(*t.right(), out);
      out += ')';
      return;
    case Term::Kind::inv:
      out += '(';
      print_to(*t.left(), out);
      out += "')";
      return;
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_to(t, out);
  return out;
}

std::string print_term(const TermPtr& t) { return print_term(*t); }

std::string print_identity(const Identity& id) {
  return print_term(id.lhs) + " = " + print_term(id.rhs);
}

namespace {

/// Recursive-descent parser for the fixed grammar; tracks byte offsets for
/// error reporting.
class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::variant<TermPtr, Identity> parse_any() {
    TermPtr lhs = parse_sum();
    skip_ws();
    if (eof()) return lhs;
    if (peek() == '=') {
      ++pos_;
      TermPtr rhs = parse_sum();
      expect_eof();
      return Identity{std::move(lhs), std::move(rhs)};
    }
    throw error("'=' or end of input");
  }

  TermPtr parse_term_only() {
    TermPtr t = parse_sum();
    expect_eof();
    return t;
  }

  Identity parse_identity_only() {
    TermPtr lhs = parse_sum();
    skip_ws();
    if (eof() || peek() != '=') throw error("'='");
    ++pos_;
    TermPtr rhs = parse_sum();
    expect_eof();
    return Identity{std::move(lhs), std::move(rhs)};
  }

private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  ParseError error(const std::string& expected) const {
    std::string found =
        eof() ? "end of input" : concat("'", text_[pos_], "'");
    return ParseError(pos_, expected,
                      concat("parse error at offset ", pos_, ": expected ",
                             expected, ", found ", found));
  }

  void expect_eof() {
    skip_ws();
    if (!eof()) throw error("end of input");
  }

  TermPtr parse_sum() {
    TermPtr t = parse_prod();
    while (true) {
      skip_ws();
      if (eof() || peek() != '+') return t;
      ++pos_;
      t = Term::make_add(std::move(t), parse_prod());
    }
  }

  TermPtr parse_prod() {
    TermPtr t = parse_factor();
    while (true) {
      skip_ws();
      if (eof() || peek() != '*') return t;
      ++pos_;
      t = Term::make_mul(std::move(t), parse_factor());
    }
  }

  TermPtr parse_factor() {
    TermPtr t = parse_atom();
    while (true) {
      skip_ws();
      if (eof() || peek() != '\'') return t;
      ++pos_;
      t = Term::make_inv(std::move(t));
    }
  }

  TermPtr parse_atom() {
    skip_ws();
    if (eof()) throw error("identifier or '('");
    if (peek() == '(') {
      ++pos_;
      TermPtr t = parse_sum();
      skip_ws();
      if (eof() || peek() != ')') throw error("')'");
      ++pos_;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      ++pos_;
      while (!eof() &&
             (std::isalnum(static_cast<unsigned char>(peek())) ||
              peek() == '_'))
        ++pos_;
      return Term::make_var(std::string(text_.substr(start, pos_ - start)));
    }
    throw error("identifier or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(std::string_view text) {
  return Parser(text).parse_term_only();
}

Identity parse_identity(std::string_view text) {
  return Parser(text).parse_identity_only();
}

std::variant<TermPtr, Identity> parse(std::string_view text) {
  return Parser(text).parse_any();
}

TermPtr eliminate_addition(const TermPtr& t, int n) {
  if (n < 1) throw Error("eliminate_addition: exponent must be positive");
  if (!t->uses_add()) return t;
  switch (t->kind()) {
    case Term::Kind::var:
    case Term::Kind::inv: {
      if (t->kind() == Term::Kind::inv)
        return Term::make_inv(eliminate_addition(t->left(), n));
      return t;
    }
    case Term::Kind::mul:
      return Term::make_mul(eliminate_addition(t->left(), n),
                            eliminate_addition(t->right(), n));
    case Term::Kind::add: {
      const TermPtr a = eliminate_addition(t->left(), n);
      const TermPtr b = eliminate_addition(t->right(), n);
      const TermPtr unit = Term::make_mul(a, Term::make_inv(b));
      TermPtr acc = unit;
      for (int i = 1; i < n; ++i) acc = Term::make_mul(std::move(acc), unit);
      return Term::make_mul(std::move(acc), a);
    }
  }
  return t;
}

int evaluate(const Term& t, const FiniteAlgebra& s,
             const std::map<std::string, int>& assignment) {
  switch (t.kind()) {
    case Term::Kind::var: {
      auto it = assignment.find(t.var_name());
      if (it == assignment.end())
        throw MissingVariableError(t.var_name(),
                                   concat("variable ", t.var_name(),
                                          " is not assigned"));
      if (it->second < 0 || it->second >= s.size())
        throw BadIndexError(concat("assignment of ", t.var_name(),
                                   " out of range"));
      return it->second;
    }
    case Term::Kind::mul:
      return s.product(evaluate(*t.left(), s, assignment),
                       evaluate(*t.right(), s, assignment));
    case Term::Kind::inv:
      if (!s.has_inv())
        throw SignatureMismatchError(
            concat("algebra ", s.name, " has no inverse map"));
      return s.inverse(evaluate(*t.left(), s, assignment));
    case Term::Kind::add:
      if (!s.has_add())
        throw SignatureMismatchError(
            concat("algebra ", s.name, " has no addition table"));
      return s.sum(evaluate(*t.left(), s, assignment),
                   evaluate(*t.right(), s, assignment));
  }
  throw Error("unreachable");
}

}  // namespace seminf
