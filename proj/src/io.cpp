#include "qhol/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "json_util.hpp"

namespace qhol {

std::string_view to_string(SessionMode m) noexcept {
  switch (m) {
    case SessionMode::free: return "free";
    case SessionMode::free_polydisk: return "free_polydisk";
    case SessionMode::q_polydisk: return "q_polydisk";
    case SessionMode::q_laurent: return "q_laurent";
  }
  return "unknown";
}

// ---------------------------------------------------------------- config

void SessionConfig::validate() const {
  if (n < 1) throw Error(ErrorCode::BadParams, "n must be positive");
  if (q.size() != n) throw Error(ErrorCode::InvalidQMatrix, "q must be n x n");
  if (mode == SessionMode::q_laurent && !q.is_unimodular()) {
    auto report = validate_qmatrix(q.entries(), QMatrixMode::unimodular);
    std::string msg = "Laurent mode needs |q_ij| = 1:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw Error(ErrorCode::InvalidQMatrix, msg);
  }
  if (!R.empty() && R.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::BadParams, "R needs n entries");
  if (!r.empty() && r.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::BadParams, "r needs n entries");
  for (std::size_t i = 0; i < R.size(); ++i) {
    if (!(R[i] > 0.0)) throw Error(ErrorCode::BadParams, "R entries must be positive");
    if (!r.empty() && !(r[i] < R[i])) throw Error(ErrorCode::BadParams, "r < R must hold componentwise");
  }
  for (double ri : r) {
    if (!(ri >= 0.0)) throw Error(ErrorCode::BadParams, "r entries must be nonnegative");
  }
  if (!(tol > 0.0)) throw Error(ErrorCode::BadParams, "tol must be positive");
}

namespace {

using namespace detail;

SessionMode parse_mode(const std::string& s) {
  for (auto m : {SessionMode::free, SessionMode::free_polydisk, SessionMode::q_polydisk, SessionMode::q_laurent}) {
    if (to_string(m) == s) return m;
  }
  throw Error(ErrorCode::FormatError, "unknown mode '" + s + "'");
}

}  // namespace

SessionConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::FormatError, std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::FormatError, "config must be a JSON object");
  SessionConfig cfg;
  try {
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw Error(ErrorCode::FormatError, "config needs an integer \"n\"");
    cfg.n = doc["n"].get<int>();
    if (cfg.n < 1 || cfg.n > 64) throw Error(ErrorCode::FormatError, "n must lie in 1..64");
    if (doc.contains("mode")) cfg.mode = parse_mode(doc["mode"].get<std::string>());
    cfg.q = QMatrix::commutative(cfg.n);
    if (doc.contains("q")) {
      cfg.q = json_qmatrix(doc["q"], cfg.n);
    }
    for (auto [key, dest] : {std::pair{"R", &cfg.R}, std::pair{"r", &cfg.r}}) {
      if (!doc.contains(key)) continue;
      if (!doc[key].is_array()) throw Error(ErrorCode::FormatError, std::string(key) + " must be an array");
      for (const auto& v : doc[key]) dest->push_back(json_radius(v));
    }
    if (doc.contains("caps") && doc["caps"].contains("permutations")) {
      const auto cap = doc["caps"]["permutations"].get<long long>();
      if (cap < 1) throw Error(ErrorCode::FormatError, "permutation cap must be positive");
      cfg.permutation_cap = static_cast<std::size_t>(cap);
    }
    if (doc.contains("tol")) cfg.tol = doc["tol"].get<double>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::FormatError, std::string("bad config field: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

SessionConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FormatError, "cannot read config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

// ---------------------------------------------------------------- parsing

ParseOptions parse_options(const SessionConfig& config) {
  ParseOptions opt;
  opt.families.push_back(indexed_family(config.is_free() ? "f" : "z", config.n));
  opt.allow_negative_powers = config.mode == SessionMode::q_laurent;
  return opt;
}

ExprAst parse_expr(std::string_view text, const SessionConfig& config) {
  return parse_expr(text, parse_options(config));
}

namespace {

void require_family(const ExprAst& g, std::string_view family) {
  if (g.family != family) {
    throw Error(ErrorCode::ModeMismatch, "generator family '" + g.family + "' does not belong to this algebra", g.offset);
  }
}

Lowering<FreeSeries> free_lowering(int n) {
  Lowering<FreeSeries> ops;
  ops.constant = [n](Complex c) { return FreeSeries::constant(n, c); };
  ops.generator = [n](const ExprAst& g) {
    require_family(g, "f");
    return FreeSeries::generator(n, g.indices.at(0));
  };
  ops.mul = [](const FreeSeries& a, const FreeSeries& b) { return fmul(a, b); };
  ops.size = [](const FreeSeries& a) { return a.terms().size(); };
  return ops;
}

Lowering<QSeries> q_lowering(const QMatrix& q, Support support, const std::string& family = "z") {
  Lowering<QSeries> ops;
  ops.constant = [q, support](Complex c) { return QSeries::constant(q, c, support); };
  ops.generator = [q, support, family](const ExprAst& g) {
    require_family(g, family);
    return QSeries::generator(q, g.indices.at(0), support);
  };
  ops.mul = [](const QSeries& a, const QSeries& b) { return qmul(a, b); };
  if (support == Support::integer) ops.invert = [](const QSeries& a) { return qpow(a, -1); };
  ops.size = [](const QSeries& a) { return a.terms().size(); };
  return ops;
}

}  // namespace

SessionElement lower_ast(const ExprAst& ast, const SessionConfig& config) {
  if (config.is_free()) return lower(ast, free_lowering(config.n));
  return lower(ast, q_lowering(config.q, config.support()));
}

SessionElement parse_element(std::string_view text, const SessionConfig& config) {
  return lower_ast(parse_expr(text, config), config);
}

FreeSeries parse_free(std::string_view text, int n) {
  ParseOptions opt;
  opt.families.push_back(indexed_family("f", n));
  return lower(parse_expr(text, opt), free_lowering(n));
}

QSeries parse_q(std::string_view text, const QMatrix& q, Support support, const std::string& family) {
  ParseOptions opt;
  opt.families.push_back(indexed_family(family, q.size()));
  opt.allow_negative_powers = support == Support::integer;
  return lower(parse_expr(text, opt), q_lowering(q, support, family));
}

namespace {

GeneratorFamily ore_coefficient_family(const OreNames& names, int m) {
  if (names.plain && m == 1) return plain_generator(names.coefficient);
  return indexed_family(names.coefficient, m);
}

}  // namespace

OrePoly parse_ore(std::string_view text, std::shared_ptr<const OreSpec> spec, const OreNames& names) {
  const int m = spec->q.size();
  ParseOptions opt;
  opt.families.push_back(ore_coefficient_family(names, m));
  opt.families.push_back(plain_generator(names.variable));
  Lowering<OrePoly> ops;
  ops.constant = [spec](Complex c) { return OrePoly::coefficient(spec, QSeries::constant(spec->q, c)); };
  ops.generator = [spec, names](const ExprAst& g) {
    if (g.family == names.variable) return OrePoly::variable(spec);
    const int i = g.indices.empty() ? 1 : g.indices[0];
    return OrePoly::coefficient(spec, QSeries::generator(spec->q, i));
  };
  ops.mul = [](const OrePoly& a, const OrePoly& b) { return ore_mul(a, b); };
  ops.size = [](const OrePoly& a) {
    std::size_t s = 0;
    for (const auto& [d, c] : a.coefficients()) s += c.terms().size();
    return s;
  };
  return lower(parse_expr(text, opt), ops);
}

SmashElement parse_smash(std::string_view text, std::shared_ptr<const SmashSpec> spec, const SmashNames& names) {
  ParseOptions opt;
  opt.families.push_back(indexed_family(names.left, spec->a_q.size()));
  opt.families.push_back(indexed_family(names.right, spec->b_q.size()));
  opt.allow_negative_powers = spec->a_support == Support::integer || spec->b_support == Support::integer;
  Lowering<SmashElement> ops;
  ops.constant = [spec](Complex c) {
    SmashElement u = SmashElement::unit(spec);
    u *= c;
    return u;
  };
  ops.generator = [spec, names](const ExprAst& g) {
    if (g.family == names.left) return SmashElement::left(spec, QSeries::generator(spec->a_q, g.indices[0], spec->a_support));
    return SmashElement::right(spec, QSeries::generator(spec->b_q, g.indices[0], spec->b_support));
  };
  ops.mul = [](const SmashElement& a, const SmashElement& b) { return smash_mul(a, b); };
  ops.invert = [spec](const SmashElement& u) {
    if (u.terms().size() == 1) {
      const auto& [key, c] = *u.terms().begin();
      if (key.second.is_zero() && spec->a_support == Support::integer) {
        return SmashElement::left(spec, qpow(QSeries::monomial(spec->a_q, key.first, c, Support::integer), -1));
      }
      if (key.first.is_zero() && spec->b_support == Support::integer) {
        return SmashElement::right(spec, qpow(QSeries::monomial(spec->b_q, key.second, c, Support::integer), -1));
      }
    }
    throw Error(ErrorCode::NotInvertible, "only Laurent monomials of one tensor side can be inverted");
  };
  ops.size = [](const SmashElement& a) { return a.terms().size(); };
  return lower(parse_expr(text, opt), ops);
}

FreeProductElement parse_freeprod(std::string_view text, std::vector<QMatrix> factors) {
  const FreeProductElement zero(std::move(factors));
  std::vector<int> sizes;
  for (const auto& q : zero.factors()) sizes.push_back(q.size());
  ParseOptions opt;
  opt.families.push_back(GeneratorFamily{"x", {1, 2}, [sizes](const std::vector<int>& idx) {
                                           if (idx[0] < 1 || idx[0] > static_cast<int>(sizes.size())) return false;
                                           const int m = sizes[idx[0] - 1];
                                           return idx.size() == 1 ? m == 1 : idx[1] >= 1 && idx[1] <= m;
                                         }});
  Lowering<FreeProductElement> ops;
  ops.constant = [zero](Complex c) {
    FreeProductElement u = zero;
    u.add_term({}, c);
    return u;
  };
  ops.generator = [zero](const ExprAst& g) {
    return freeprod_generator(zero, g.indices[0], g.indices.size() > 1 ? g.indices[1] : 1);
  };
  ops.mul = [](const FreeProductElement& a, const FreeProductElement& b) { return freeprod_mul(a, b); };
  ops.size = [](const FreeProductElement& a) { return a.terms().size(); };
  return lower(parse_expr(text, opt), ops);
}

// ---------------------------------------------------------- serialization

std::string format_complex(Complex c) {
  char re[64], im[64];
  std::snprintf(re, sizeof re, "%.17g", c.real());
  std::snprintf(im, sizeof im, "%.17g", std::abs(c.imag()));
  return std::string(re) + (std::signbit(c.imag()) ? "-" : "+") + im + "i";
}

namespace {

std::string power_factor(const std::string& name, int e) {
  return e == 1 ? "*" + name : "*" + name + "^" + std::to_string(e);
}

std::string monomial_factors(const std::string& family, const ExponentVector& k) {
  std::string out;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] != 0) out += power_factor(family + std::to_string(i + 1), k[i]);
  return out;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) out += " + " + terms[i];
  return out;
}

}  // namespace

std::string serialize(const FreeSeries& f) {
  std::vector<std::string> terms;
  for (const auto& [w, c] : f.terms()) {
    std::string t = format_complex(c);
    for (int letter : w) t += "*f" + std::to_string(letter);
    terms.push_back(std::move(t));
  }
  return join_terms(terms);
}

std::string serialize(const QSeries& a) {
  std::vector<std::string> terms;
  for (const auto& [k, c] : a.terms()) terms.push_back(format_complex(c) + monomial_factors("z", k));
  return join_terms(terms);
}

std::string serialize(const FreeProductElement& u) {
  std::vector<std::string> terms;
  for (const auto& [w, c] : u.terms()) {
    std::string t = format_complex(c);
    for (const auto& blk : w) {
      for (std::size_t j = 0; j < blk.monomial.size(); ++j) {
        if (blk.monomial[j] != 0) {
          t += power_factor("x" + std::to_string(blk.factor) + "_" + std::to_string(j + 1), blk.monomial[j]);
        }
      }
    }
    terms.push_back(std::move(t));
  }
  return join_terms(terms);
}

std::string serialize(const OrePoly& p, const OreNames& names) {
  std::vector<std::string> terms;
  const int m = p.spec()->q.size();
  for (const auto& [d, a] : p.coefficients()) {
    for (const auto& [k, c] : a.terms()) {
      std::string t = format_complex(c);
      if (names.plain && m == 1) {
        if (k[0] != 0) t += power_factor(names.coefficient, k[0]);
      } else {
        t += monomial_factors(names.coefficient, k);
      }
      if (d != 0) t += power_factor(names.variable, d);
      terms.push_back(std::move(t));
    }
  }
  return join_terms(terms);
}

std::string serialize(const SmashElement& u, const SmashNames& names) {
  std::vector<std::string> terms;
  for (const auto& [key, c] : u.terms()) {
    terms.push_back(format_complex(c) + monomial_factors(names.left, key.first) + monomial_factors(names.right, key.second));
  }
  return join_terms(terms);
}

std::string serialize(const SessionElement& e) {
  return std::visit([](const auto& x) { return serialize(x); }, e);
}

// -------------------------------------------------------- deserialization

namespace {

struct CanonicalFactor {
  std::string name;
  std::vector<int> indices;
  int exponent = 1;
};

struct CanonicalTerm {
  Complex coefficient;
  std::vector<CanonicalFactor> factors;
};

[[noreturn]] void format_error(const std::string& msg) { throw Error(ErrorCode::FormatError, msg); }

double parse_double(std::string_view s) {
  if (s.empty()) format_error("empty number");
  const std::string token(s);
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size()) format_error("malformed number '" + token + "'");
  return v;
}

Complex parse_coefficient(std::string_view s) {
  if (s.size() < 2 || s.back() != 'i') format_error("coefficient must look like re+imi");
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
  }
  if (split == std::string_view::npos) format_error("coefficient must look like re+imi");
  const double re = parse_double(s.substr(0, split));
  double im = parse_double(s.substr(split + 1, s.size() - split - 2));
  if (s[split] == '-') im = -im;
  return {re, im};
}

CanonicalFactor parse_factor(std::string_view s) {
  CanonicalFactor f;
  std::size_t p = 0;
  while (p < s.size() && std::isalpha(static_cast<unsigned char>(s[p]))) ++p;
  if (p == 0) format_error("factor must start with a generator name");
  f.name = std::string(s.substr(0, p));
  auto read_int = [&](bool allow_sign) {
    const std::size_t start = p;
    if (allow_sign && p < s.size() && s[p] == '-') ++p;
    const std::size_t digits = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == digits || p - digits > 9) format_error("malformed integer in factor '" + std::string(s) + "'");
    return std::stoi(std::string(s.substr(start, p - start)));
  };
  if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
    f.indices.push_back(read_int(false));
    while (p < s.size() && s[p] == '_') {
      ++p;
      f.indices.push_back(read_int(false));
    }
  }
  if (p < s.size() && s[p] == '^') {
    ++p;
    f.exponent = read_int(true);
    if (f.exponent == 0) format_error("zero exponents are not canonical");
  }
  if (p != s.size()) format_error("trailing characters in factor '" + std::string(s) + "'");
  return f;
}

std::vector<CanonicalTerm> parse_canonical(std::string_view text) {
  std::vector<CanonicalTerm> terms;
  if (text == "0") return terms;
  if (text.empty()) format_error("empty element text");
  std::size_t start = 0;
  for (;;) {
    const std::size_t sep = text.find(" + ", start);
    const std::string_view chunk = text.substr(start, sep == std::string_view::npos ? std::string_view::npos : sep - start);
    CanonicalTerm term;
    std::size_t p = 0;
    bool first = true;
    for (;;) {
      const std::size_t star = chunk.find('*', p);
      const std::string_view piece = chunk.substr(p, star == std::string_view::npos ? std::string_view::npos : star - p);
      if (first) {
        term.coefficient = parse_coefficient(piece);
        first = false;
      } else {
        term.factors.push_back(parse_factor(piece));
      }
      if (star == std::string_view::npos) break;
      p = star + 1;
    }
    terms.push_back(std::move(term));
    if (sep == std::string_view::npos) break;
    start = sep + 3;
  }
  return terms;
}

/// Reads an increasing run of `family{i}^e` factors starting at `pos`.
ExponentVector read_monomial(const std::vector<CanonicalFactor>& factors, std::size_t& pos, const std::string& family,
                             int n, bool allow_negative) {
  ExponentVector k(static_cast<std::size_t>(n));
  int last = 0;
  while (pos < factors.size() && factors[pos].name == family) {
    const auto& f = factors[pos];
    if (f.indices.size() != 1 || f.indices[0] <= last || f.indices[0] > n) {
      format_error("generator indices of '" + family + "' must increase within 1.." + std::to_string(n));
    }
    if (f.exponent < 0 && !allow_negative) format_error("negative exponent outside Laurent support");
    last = f.indices[0];
    k[last - 1] = f.exponent;
    ++pos;
  }
  return k;
}

template <typename Fn>
auto rethrow_as_format(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::FormatError) throw;
    throw Error(ErrorCode::FormatError, e.what());
  }
}

}  // namespace

FreeSeries deserialize_free(std::string_view text, int n) {
  return rethrow_as_format([&] {
    FreeSeries out(n);
    for (const auto& t : parse_canonical(text)) {
      std::vector<int> letters;
      for (const auto& f : t.factors) {
        if (f.name != "f" || f.indices.size() != 1 || f.exponent < 1) format_error("free terms are products of f generators");
        letters.insert(letters.end(), static_cast<std::size_t>(f.exponent), f.indices[0]);
      }
      out.add_term(Word(std::move(letters)), t.coefficient);
    }
    return out;
  });
}

QSeries deserialize_q(std::string_view text, const QMatrix& q, Support support) {
  return rethrow_as_format([&] {
    QSeries out(q, support);
    for (const auto& t : parse_canonical(text)) {
      std::size_t pos = 0;
      const ExponentVector k = read_monomial(t.factors, pos, "z", q.size(), support == Support::integer);
      if (pos != t.factors.size()) format_error("unexpected factor '" + t.factors[pos].name + "'");
      out.add_term(k, t.coefficient);
    }
    return out;
  });
}

FreeProductElement deserialize_freeprod(std::string_view text, std::vector<QMatrix> factors) {
  return rethrow_as_format([&] {
    FreeProductElement out(std::move(factors));
    for (const auto& t : parse_canonical(text)) {
      AlternatingWord w;
      int last_var = 0;
      for (const auto& f : t.factors) {
        if (f.name != "x" || f.indices.size() != 2 || f.exponent < 1) format_error("free product factors look like x{i}_{j}^e");
        const int i = f.indices[0], j = f.indices[1];
        if (i < 1 || i > out.factor_count()) format_error("factor index out of range");
        const int m = out.factors()[i - 1].size();
        if (j < 1 || j > m) format_error("variable index out of range");
        if (w.empty() || w.back().factor != i) {
          w.push_back(Block{i, ExponentVector(static_cast<std::size_t>(m))});
          last_var = 0;
        }
        if (j <= last_var) format_error("variable indices must increase within a block");
        last_var = j;
        w.back().monomial[j - 1] = f.exponent;
      }
      out.add_term(w, t.coefficient);
    }
    return out;
  });
}

OrePoly deserialize_ore(std::string_view text, std::shared_ptr<const OreSpec> spec, const OreNames& names) {
  return rethrow_as_format([&] {
    OrePoly out(spec);
    const int m = spec->q.size();
    for (const auto& t : parse_canonical(text)) {
      std::size_t pos = 0;
      ExponentVector k(static_cast<std::size_t>(m));
      if (names.plain && m == 1) {
        if (pos < t.factors.size() && t.factors[pos].name == names.coefficient) {
          if (!t.factors[pos].indices.empty() || t.factors[pos].exponent < 1) format_error("malformed coefficient factor");
          k[0] = t.factors[pos++].exponent;
        }
      } else {
        k = read_monomial(t.factors, pos, names.coefficient, m, false);
      }
      int d = 0;
      if (pos < t.factors.size() && t.factors[pos].name == names.variable && t.factors[pos].indices.empty()) {
        d = t.factors[pos++].exponent;
        if (d < 1) format_error("negative power of the Ore variable");
      }
      if (pos != t.factors.size()) format_error("unexpected factor '" + t.factors[pos].name + "'");
      out.add(d, QSeries::monomial(spec->q, k, t.coefficient));
    }
    return out;
  });
}

SmashElement deserialize_smash(std::string_view text, std::shared_ptr<const SmashSpec> spec, const SmashNames& names) {
  return rethrow_as_format([&] {
    SmashElement out(spec);
    for (const auto& t : parse_canonical(text)) {
      std::size_t pos = 0;
      const ExponentVector a = read_monomial(t.factors, pos, names.left, spec->a_q.size(), spec->a_support == Support::integer);
      const ExponentVector b = read_monomial(t.factors, pos, names.right, spec->b_q.size(), spec->b_support == Support::integer);
      if (pos != t.factors.size()) format_error("unexpected factor '" + t.factors[pos].name + "'");
      out.add_term(a, b, t.coefficient);
    }
    return out;
  });
}

SessionElement deserialize(std::string_view text, const SessionConfig& config) {
  if (config.is_free()) return deserialize_free(text, config.n);
  return deserialize_q(text, config.q, config.support());
}

}  // namespace qhol
