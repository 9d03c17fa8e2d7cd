#ifndef QHOL_EXPR_HPP
#define QHOL_EXPR_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qhol/error.hpp"
#include "qhol/scalar.hpp"

namespace qhol {

/// Expression tree produced by parse_expr.
struct ExprAst {
  enum class Kind { sum, difference, product, negate, power, generator, literal };

  Kind kind = Kind::literal;
  std::size_t offset = 0;     // byte offset of the node's first token
  Complex value{0.0};         // literal
  std::string family;         // generator: name prefix, e.g. "f"
  std::vector<int> indices;   // generator: e.g. {2} for f2, {1, 3} for x1_3
  long exponent = 1;          // power
  std::vector<ExprAst> children;
};

/// A generator family: `name` followed by `arity` indices (digits, the
/// second one after '_'); `valid` decides which index tuples exist.
struct GeneratorFamily {
  std::string name;
  std::vector<int> arities;  // accepted index counts, e.g. {1} or {1, 2}
  std::function<bool(const std::vector<int>&)> valid;
};

struct ParseOptions {
  std::vector<GeneratorFamily> families;
  bool allow_negative_powers = false;
  long max_exponent = 4096;
  int max_depth = 200;
};

/// `name1 .. nameN` with 1-based indices bounded by n.
GeneratorFamily indexed_family(std::string name, int n);
/// A single generator spelled `name` with no index.
GeneratorFamily plain_generator(std::string name);

/// Grammar, loosest binding first:
///   expr    := term (('+' | '-') term)*
///   term    := prefix ('*' prefix)*
///   prefix  := ('-' | '+') prefix | power
///   power   := atom ('^' ['-'|'+'] integer | '^' '(' ['-'|'+'] integer ')')?
///   atom    := number ['i'] | 'i' | generator | '(' expr ')'
/// Juxtaposition is rejected. Throws SyntaxError (with byte offset),
/// UnknownGenerator, NegativePowerNotAllowed, or TooLarge.
ExprAst parse_expr(std::string_view text, const ParseOptions& options);

/// Operations used to evaluate an ExprAst in a concrete algebra.
template <typename Element>
struct Lowering {
  std::function<Element(Complex)> constant;
  std::function<Element(const ExprAst&)> generator;
  std::function<Element(const Element&, const Element&)> mul;
  /// Optional; negative powers fail with NotInvertible when absent.
  std::function<Element(const Element&)> invert;
  /// Optional term counter used to stop runaway expansions.
  std::function<std::size_t(const Element&)> size;
  std::size_t max_terms = 200000;
};

template <typename Element>
Element lower(const ExprAst& ast, const Lowering<Element>& ops) {
  auto guard = [&](Element e) {
    if (ops.size && ops.size(e) > ops.max_terms) {
      throw Error(ErrorCode::TooLarge, "expansion exceeds " + std::to_string(ops.max_terms) + " terms", ast.offset);
    }
    return e;
  };
  switch (ast.kind) {
    case ExprAst::Kind::literal: return ops.constant(ast.value);
    case ExprAst::Kind::generator: return ops.generator(ast);
    case ExprAst::Kind::negate: {
      Element e = lower(ast.children.at(0), ops);
      e *= Complex(-1.0);
      return e;
    }
    case ExprAst::Kind::sum:
    case ExprAst::Kind::difference: {
      Element e = lower(ast.children.at(0), ops);
      const Element rhs = lower(ast.children.at(1), ops);
      if (ast.kind == ExprAst::Kind::sum) e += rhs; else e -= rhs;
      return e;
    }
    case ExprAst::Kind::product:
      return guard(ops.mul(lower(ast.children.at(0), ops), lower(ast.children.at(1), ops)));
    case ExprAst::Kind::power: {
      Element base = lower(ast.children.at(0), ops);
      long e = ast.exponent;
      if (e < 0) {
        if (!ops.invert) throw Error(ErrorCode::NotInvertible, "negative powers are not available here", ast.offset);
        base = ops.invert(base);
        e = -e;
      }
      Element out = ops.constant(1.0);
      for (long i = 0; i < e; ++i) out = guard(ops.mul(out, base));
      return out;
    }
  }
  throw Error(ErrorCode::SyntaxError, "malformed expression tree", ast.offset);
}

}  // namespace qhol

#endif
