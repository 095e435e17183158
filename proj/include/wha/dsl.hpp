#ifndef WHA_DSL_HPP
#define WHA_DSL_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wha/mor.hpp"

namespace wha::dsl {

/// AST for the morphism expression language.
///
/// Grammar (ASCII only, `o` binds looser than `*`, both left-associative):
///   expr := term { "o" term }
///   term := atom { "*" atom }
///   atom := NAME | "id[" names "]" | "c[" NAME "," NAME "]" | "(" expr ")"
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Node { gen, id, sym, comp, tens };
  Node node;
  std::string name;                 // gen
  std::vector<std::string> objects; // id (comma-separated object list)
  std::string a, b;                 // sym
  ExprPtr left, right;              // comp / tens

  static ExprPtr gen(std::string n);
  static ExprPtr id(std::vector<std::string> objs);
  static ExprPtr sym(std::string a, std::string b);
  static ExprPtr comp(ExprPtr l, ExprPtr r); // l after r
  static ExprPtr tens(ExprPtr l, ExprPtr r);
};

bool equal(const Expr& x, const Expr& y);

/// Declared dom/cod of a generator as lists of object names.
struct GenSig {
  std::vector<std::string> dom, cod;
};

struct Env {
  FieldSpec field = FieldSpec::Q();
  std::map<std::string, int> objects;  // object name -> dimension
  std::map<std::string, Mor> gens;
  std::map<std::string, GenSig> sigs;  // optional, per generator

  /// Checks that each generator with a signature factors through declared
  /// object dimensions.
  void validate() const;
};

/// Throws SyntaxError carrying the byte offset of the failure.
ExprPtr parse(const std::string& text);

/// Returns (dom, cod) dimensions. Throws UnboundName / TypeMismatch.
std::pair<int, int> typecheck(const Expr& e, const Env& env);

Mor eval(const Expr& e, const Env& env);

/// Canonical printer; parse(print(e)) reproduces e structurally.
std::string print(const Expr& e);

} // namespace wha::dsl

#endif
