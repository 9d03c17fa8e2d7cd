#include "qhol/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace qhol {

GeneratorFamily indexed_family(std::string name, int n) {
  return GeneratorFamily{std::move(name), {1}, [n](const std::vector<int>& idx) { return idx[0] >= 1 && idx[0] <= n; }};
}

GeneratorFamily plain_generator(std::string name) {
  return GeneratorFamily{std::move(name), {0}, [](const std::vector<int>&) { return true; }};
}

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), opt_(options) {}

  ExprAst run() {
    skip_space();
    if (at_end()) fail("empty expression");
    ExprAst e = parse_sum();
    skip_space();
    if (!at_end()) {
      if (starts_atom()) fail("missing '*' between factors (juxtaposition is not allowed)");
      fail(std::string("unexpected character '") + peek() + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, ErrorCode code = ErrorCode::SyntaxError) const { fail_at(pos_, msg, code); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg, ErrorCode code = ErrorCode::SyntaxError) const {
    throw Error(code, msg + " at byte " + std::to_string(at), at);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r')) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool starts_atom() const {
    const char c = peek();
    return is_digit(c) || c == '.' || is_alpha(c) || c == '(';
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > p.opt_.max_depth) p.fail("expression nested too deeply", ErrorCode::TooLarge);
    }
    ~DepthGuard() { --p.depth_; }
  };

  static ExprAst binary(ExprAst::Kind kind, std::size_t at, ExprAst lhs, ExprAst rhs) {
    ExprAst node;
    node.kind = kind;
    node.offset = at;
    node.children.push_back(std::move(lhs));
    node.children.push_back(std::move(rhs));
    return node;
  }

  ExprAst parse_sum() {
    DepthGuard guard(*this);
    ExprAst lhs = parse_term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(ExprAst::Kind::sum, at, std::move(lhs), parse_term());
      } else if (accept('-')) {
        lhs = binary(ExprAst::Kind::difference, at, std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  ExprAst parse_term() {
    ExprAst lhs = parse_prefix();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('*')) return lhs;
      lhs = binary(ExprAst::Kind::product, at, std::move(lhs), parse_prefix());
    }
  }

  ExprAst parse_prefix() {
    DepthGuard guard(*this);
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) {
      ExprAst node;
      node.kind = ExprAst::Kind::negate;
      node.offset = at;
      node.children.push_back(parse_prefix());
      return node;
    }
    if (accept('+')) return parse_prefix();
    return parse_power();
  }

  ExprAst parse_power() {
    ExprAst base = parse_atom();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_space();
    const bool paren = accept('(');
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    skip_space();
    const std::size_t digits_at = pos_;
    long value = 0;
    while (is_digit(peek())) {
      value = value * 10 + (peek() - '0');
      if (value > opt_.max_exponent) fail_at(digits_at, "exponent too large", ErrorCode::TooLarge);
      ++pos_;
    }
    if (pos_ == digits_at) fail("expected an integer exponent");
    if (paren && !accept(')')) fail("expected ')' after exponent");
    if (negative && value != 0 && !opt_.allow_negative_powers) {
      fail_at(at, "negative powers are only allowed in Laurent contexts", ErrorCode::NegativePowerNotAllowed);
    }
    skip_space();
    if (peek() == '^') fail("chained powers need parentheses");
    ExprAst node;
    node.kind = ExprAst::Kind::power;
    node.offset = at;
    node.exponent = negative ? -value : value;
    node.children.push_back(std::move(base));
    return node;
  }

  ExprAst parse_number() {
    const std::size_t at = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && is_digit(text_[end])) ++end;
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() && is_digit(text_[end])) ++end;
    }
    if (end == at + 1 && text_[at] == '.') fail("malformed number");
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t e = end + 1;
      if (e < text_.size() && (text_[e] == '+' || text_[e] == '-')) ++e;
      if (e < text_.size() && is_digit(text_[e])) {
        while (e < text_.size() && is_digit(text_[e])) ++e;
        end = e;
      } else {
        fail_at(end, "malformed exponent in number");
      }
    }
    double v = 0.0;
    const std::string token(text_.substr(at, end - at));
    char* stop = nullptr;
    v = std::strtod(token.c_str(), &stop);
    if (stop != token.c_str() + token.size()) fail_at(at, "malformed number");
    pos_ = end;
    ExprAst node;
    node.kind = ExprAst::Kind::literal;
    node.offset = at;
    // A trailing 'i' not followed by an identifier character makes it imaginary.
    if (peek() == 'i' && !(pos_ + 1 < text_.size() && (is_alpha(text_[pos_ + 1]) || is_digit(text_[pos_ + 1])))) {
      ++pos_;
      node.value = Complex(0.0, v);
    } else {
      node.value = Complex(v, 0.0);
    }
    return node;
  }

  ExprAst parse_generator() {
    const std::size_t at = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && is_alpha(text_[end])) ++end;
    std::string name(text_.substr(at, end - at));
    pos_ = end;
    std::vector<int> indices;
    auto read_index = [&]() {
      const std::size_t start = pos_;
      long value = 0;
      while (is_digit(peek())) {
        value = value * 10 + (peek() - '0');
        if (value > 1000000) fail_at(start, "generator index too large", ErrorCode::UnknownGenerator);
        ++pos_;
      }
      indices.push_back(static_cast<int>(value));
    };
    if (is_digit(peek())) {
      read_index();
      while (peek() == '_') {
        ++pos_;
        if (!is_digit(peek())) fail("expected digits after '_'");
        read_index();
      }
    }
    if (name == "i" && indices.empty()) {
      ExprAst node;
      node.kind = ExprAst::Kind::literal;
      node.offset = at;
      node.value = Complex(0.0, 1.0);
      return node;
    }
    for (const auto& fam : opt_.families) {
      if (fam.name != name) continue;
      bool arity_ok = false;
      for (int a : fam.arities) arity_ok = arity_ok || static_cast<std::size_t>(a) == indices.size();
      if (!arity_ok || (fam.valid && !fam.valid(indices))) {
        fail_at(at, "unknown generator '" + std::string(text_.substr(at, pos_ - at)) + "'", ErrorCode::UnknownGenerator);
      }
      ExprAst node;
      node.kind = ExprAst::Kind::generator;
      node.offset = at;
      node.family = std::move(name);
      node.indices = std::move(indices);
      return node;
    }
    fail_at(at, "unknown generator '" + std::string(text_.substr(at, pos_ - at)) + "'", ErrorCode::UnknownGenerator);
  }

  ExprAst parse_atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (is_digit(c) || c == '.') return parse_number();
    if (is_alpha(c)) return parse_generator();
    if (c == '(') {
      ++pos_;
      ExprAst inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const ParseOptions& opt_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

ExprAst parse_expr(std::string_view text, const ParseOptions& options) { return Parser(text, options).run(); }

}  // namespace qhol
