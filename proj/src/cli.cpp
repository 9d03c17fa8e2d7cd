#include "qhol/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "json_util.hpp"
#include "qhol/cocycle.hpp"
#include "qhol/io.hpp"
#include "qhol/ore.hpp"
#include "qhol/qcalculus.hpp"
#include "qhol/seminorms.hpp"
#include "qhol/smash.hpp"
#include "qhol/suites.hpp"

namespace qhol {

namespace {

using detail::json;

struct Options {
  std::string config_path;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::optional<int> max_degree;
  std::string k;
  std::string rho;
  std::string tau;
  std::string matrices;
  int cutoff = 0;
  double t = 1.0;
  std::vector<std::string> positional;
};

std::string number_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size()) {
      throw Error(ErrorCode::FormatError, std::string("malformed ") + what + " entry '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  for (double v : parse_list(text, what)) {
    if (v != std::floor(v) || std::abs(v) > 1e6) {
      throw Error(ErrorCode::FormatError, std::string(what) + " entries must be integers");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

/// Emits either plain text lines or a single JSON document.
class Output {
 public:
  Output(std::ostream& out, bool json_mode, std::string command) : out_(out), json_(json_mode) {
    doc_["command"] = std::move(command);
  }
  void field(const std::string& key, json value, const std::string& text) {
    doc_[key] = std::move(value);
    if (!json_ && !text.empty()) out_ << text << '\n';
  }
  void line(const std::string& text) {
    if (!json_) out_ << text << '\n';
  }
  json& doc() { return doc_; }
  void finish() {
    if (json_) out_ << doc_.dump() << '\n';
  }

 private:
  std::ostream& out_;
  bool json_;
  json doc_;
};

struct Context {
  Options opt;
  std::optional<SessionConfig> config;
  json raw;

  const SessionConfig& cfg() const {
    if (!config) throw Error(ErrorCode::BadParams, "this command needs -c/--config");
    return *config;
  }
  const SessionConfig& q_cfg() const {
    const SessionConfig& c = cfg();
    if (c.is_free()) throw Error(ErrorCode::ModeMismatch, "this command needs a q_polydisk or q_laurent config");
    return c;
  }
  const std::vector<std::string>& exprs(std::size_t min_count) const {
    if (opt.positional.size() < min_count) {
      throw Error(ErrorCode::BadParams, "expected at least " + std::to_string(min_count) + " expression argument(s)");
    }
    return opt.positional;
  }
  ExponentVector k_vector() const {
    if (opt.k.empty()) throw Error(ErrorCode::BadParams, "this command needs -k k1,...,kn");
    ExponentVector k(parse_int_list(opt.k, "-k"));
    if (static_cast<int>(k.size()) != cfg().n) throw Error(ErrorCode::LengthMismatch, "-k needs n entries");
    if (!k.is_nonnegative()) throw Error(ErrorCode::NegativeExponent, "-k entries must be nonnegative");
    return k;
  }
};

json word_json(const Word& w) { return json(w.letters()); }
json exponent_json(const ExponentVector& k) { return json(k.entries()); }

// ------------------------------------------------------------ sections

std::shared_ptr<const OreSpec> ore_spec_from(const Context& ctx, OreNames& names) {
  if (!ctx.raw.contains("ore")) throw Error(ErrorCode::BadParams, "config needs an \"ore\" section");
  const json& sec = ctx.raw["ore"];
  if (sec.is_string() && sec.get<std::string>() == "ug") {
    names = OreNames{"y", "x", true};
    return ug_spec();
  }
  if (!sec.is_object() || !sec.contains("sigma")) {
    throw Error(ErrorCode::FormatError, "\"ore\" must be \"ug\" or {\"sigma\": [...], \"delta\": [...]}");
  }
  const SessionConfig& c = ctx.cfg();
  auto spec = std::make_shared<OreSpec>();
  spec->q = c.q;
  auto images = [&](const char* key) {
    std::vector<QSeries> out;
    if (!sec.contains(key)) {
      out.assign(static_cast<std::size_t>(c.n), QSeries(c.q));
      return out;
    }
    for (const auto& e : sec[key]) out.push_back(parse_q(e.get<std::string>(), c.q, Support::nonnegative, names.coefficient));
    return out;
  };
  spec->sigma = images("sigma");
  spec->delta = images("delta");
  spec->check();
  if (!validate_sigma_derivation(*spec, 2)) {
    throw Error(ErrorCode::IncompatibleSpecs, "sigma is not an endomorphism or delta is not a sigma-derivation");
  }
  return spec;
}

std::shared_ptr<const SmashSpec> smash_spec_from(const Context& ctx, const SmashNames& names) {
  if (!ctx.raw.contains("smash")) throw Error(ErrorCode::BadParams, "config needs a \"smash\" section");
  const json& sec = ctx.raw["smash"];
  const SessionConfig& c = ctx.cfg();
  if (!sec.is_object()) throw Error(ErrorCode::FormatError, "\"smash\" must be an object");
  if (sec.contains("qproduct")) {
    const json& qp = sec["qproduct"];
    const int cols = qp.is_array() && !qp.empty() && qp[0].is_array() ? static_cast<int>(qp[0].size()) : 0;
    const Support mode = sec.value("group", false) ? Support::integer : Support::nonnegative;
    return make_qproduct_spec(detail::json_matrix(qp, c.n, cols), mode);
  }
  auto spec = std::make_shared<SmashSpec>();
  spec->a_q = c.q;
  spec->a_support = c.support();
  const int p = sec.value("b_n", 1);
  if (p < 1) throw Error(ErrorCode::FormatError, "b_n must be positive");
  spec->b_q = sec.contains("b_q") ? detail::json_qmatrix(sec["b_q"], p) : QMatrix::commutative(p);
  spec->b_support = sec.value("b_mode", std::string("polydisk")) == "laurent" ? Support::integer : Support::nonnegative;
  if (!sec.contains("action") || !sec["action"].is_array()) throw Error(ErrorCode::FormatError, "smash needs \"action\"");
  for (const auto& row : sec["action"]) {
    std::vector<QSeries> images;
    for (const auto& e : row) images.push_back(parse_q(e.get<std::string>(), c.q, spec->a_support, names.left));
    spec->action.push_back(std::move(images));
  }
  spec->check();
  return spec;
}

std::vector<QMatrix> factors_from(const Context& ctx) {
  if (!ctx.raw.contains("factors")) throw Error(ErrorCode::BadParams, "config needs a \"factors\" section");
  const json& sec = ctx.raw["factors"];
  if (sec.is_number_integer()) {
    const int count = sec.get<int>();
    if (count < 1) throw Error(ErrorCode::FormatError, "factor count must be positive");
    return FreeProductElement::univariate_factors(count);
  }
  std::vector<QMatrix> out;
  if (!sec.is_array() || sec.empty()) throw Error(ErrorCode::FormatError, "\"factors\" must be a count or a list");
  for (const auto& f : sec) {
    const int n = f.value("n", 1);
    if (n < 1) throw Error(ErrorCode::FormatError, "factor sizes must be positive");
    out.push_back(f.contains("q") ? detail::json_qmatrix(f["q"], n) : QMatrix::commutative(n));
  }
  return out;
}

// ------------------------------------------------------------ commands

template <typename Element, typename Parse, typename Mul, typename Ser>
void product_command(const Context& ctx, Output& o, Parse parse, Mul mul, Ser ser) {
  const auto& args = ctx.exprs(1);
  Element acc = parse(args[0]);
  for (std::size_t i = 1; i < args.size(); ++i) acc = mul(acc, parse(args[i]));
  o.field("result", ser(acc), ser(acc));
}

void cmd_mul(const Context& ctx, Output& o) {
  const SessionConfig& c = ctx.cfg();
  const auto& args = ctx.exprs(1);
  SessionElement acc = parse_element(args[0], c);
  for (std::size_t i = 1; i < args.size(); ++i) {
    SessionElement next = parse_element(args[i], c);
    if (c.is_free()) acc = fmul(std::get<FreeSeries>(acc), std::get<FreeSeries>(next));
    else acc = qmul(std::get<QSeries>(acc), std::get<QSeries>(next));
  }
  o.field("result", serialize(acc), serialize(acc));
}

void cmd_normalize(const Context& ctx, Output& o) {
  const SessionConfig& c = ctx.q_cfg();
  const auto& args = ctx.exprs(1);
  for (const auto& a : args) {
    const Word w(parse_int_list(a, "word"));
    w.check_alphabet(c.n);
    const NormalForm nf = normal_form_word(c.q, w);
    const std::string text = serialize(QSeries::monomial(c.q, nf.k, nf.coefficient, c.support()));
    o.doc()["results"].push_back({{"word", word_json(w)},
                                  {"coefficient", detail::complex_json(nf.coefficient)},
                                  {"k", exponent_json(nf.k)},
                                  {"result", text}});
    o.line(text);
  }
}

void cmd_weight(const Context& ctx, Output& o) {
  const SessionConfig& c = ctx.cfg();
  const ExponentVector k = ctx.k_vector();
  const Weight w = weight_wq(c.q, k);
  o.field("weight", w.value, number_text(w.value));
  o.field("method", std::string(to_string(w.method)), "method: " + std::string(to_string(w.method)));
}

void cmd_minwords(const Context& ctx, Output& o) {
  const SessionConfig& c = ctx.cfg();
  const MinimizingWords mw = minimizing_words(c.q, ctx.k_vector(), c.permutation_cap);
  o.field("weight", mw.weight, "weight: " + number_text(mw.weight));
  json words = json::array();
  for (const auto& w : mw.words) {
    words.push_back(word_json(w));
    o.line(to_string(w));
  }
  o.doc()["words"] = std::move(words);
}

void cmd_compact_word(const Context& ctx, Output& o) {
  const SessionConfig& c = ctx.cfg();
  const ExponentVector k = ctx.k_vector();
  const Word w = compact_word(c.q, k);
  o.field("word", word_json(w), to_string(w));
  const CompactificationTrace trace = compactify(c.q, k);
  std::string steps;
  for (int s : trace.steps) steps += (steps.empty() ? "" : ",") + std::to_string(s);
  o.field("trace", {{"start", word_json(trace.start)}, {"result", word_json(trace.result)}, {"steps", trace.steps}},
          "compactified " + to_string(trace.start) + " -> " + to_string(trace.result) + " (steps per letter: " + steps +
              ")");
}

void cmd_pi(const Context& ctx, Output& o) {
  const SessionConfig& c = ctx.q_cfg();
  const QSeries a = project_pi(parse_free(ctx.exprs(1)[0], c.n), c.q);
  o.field("result", serialize(a), serialize(a));
}

void cmd_kappa(const Context& ctx, Output& o) {
  const SessionConfig& c = ctx.q_cfg();
  if (c.mode == SessionMode::q_laurent) throw Error(ErrorCode::ModeMismatch, "kappa is defined on polynomials");
  const FreeSeries f = section_kappa(parse_q(ctx.exprs(1)[0], c.q));
  o.field("result", serialize(f), serialize(f));
}

void cmd_abelianize(const Context& ctx, Output& o) {
  const SessionConfig& c = ctx.cfg();
  const QSeries a = abelianize(parse_free(ctx.exprs(1)[0], c.n));
  o.field("result", serialize(a), serialize(a));
}

void cmd_norm(const Context& ctx, Output& o) {
  const auto& args = ctx.exprs(2);
  NormParams p;
  p.variant = parse_norm_variant(args[0]);
  const std::string& text = args[1];
  const std::vector<double> rho = parse_list(ctx.opt.rho, "--rho"), tau = parse_list(ctx.opt.tau, "--tau");
  p.rho = to_vector(rho);
  p.tau = to_vector(tau);
  double value = 0.0;
  switch (p.variant) {
    case NormVariant::free_entire:
    case NormVariant::free_polydisk:
      value = norm(p, parse_free(text, ctx.cfg().n));
      break;
    case NormVariant::q_polydisk:
    case NormVariant::q_polyannulus: {
      const SessionConfig& c = ctx.q_cfg();
      value = norm(p, parse_q(text, c.q, c.support()));
      break;
    }
    case NormVariant::free_product: {
      const std::vector<QMatrix> factors = factors_from(ctx);
      std::size_t pos = 0;
      for (const auto& q : factors) {
        const auto m = static_cast<std::size_t>(q.size());
        if (pos + m > rho.size()) throw Error(ErrorCode::LengthMismatch, "--rho must list every factor variable");
        p.factor_rho.push_back(to_vector(std::vector<double>(rho.begin() + pos, rho.begin() + pos + m)));
        pos += m;
      }
      if (pos != rho.size()) throw Error(ErrorCode::LengthMismatch, "--rho must list every factor variable");
      value = norm(p, parse_freeprod(text, factors));
      break;
    }
    case NormVariant::ug_envelope:
      value = norm_ug(parse_ore(text, ug_spec(), OreNames{"y", "x", true}), ctx.opt.cutoff, ctx.opt.t);
      break;
  }
  o.field("variant", std::string(to_string(p.variant)), "");
  o.field("norm", value, number_text(value));
}

void cmd_eval(const Context& ctx, Output& o) {
  const SessionConfig& c = ctx.cfg();
  if (ctx.opt.matrices.empty()) throw Error(ErrorCode::BadParams, "eval needs --matrices FILE");
  std::ifstream in(ctx.opt.matrices);
  if (!in) throw Error(ErrorCode::FormatError, "cannot read " + ctx.opt.matrices);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::FormatError, std::string("matrix file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw Error(ErrorCode::FormatError, "matrix file must list the matrices");
  MatrixTuple tuple;
  for (const auto& m : doc) {
    if (!m.is_array() || m.empty()) throw Error(ErrorCode::FormatError, "matrices must be nonempty row lists");
    const int size = static_cast<int>(m.size());
    tuple.push_back(detail::json_matrix(m, size, size));
  }
  const Eigen::MatrixXcd value = eval_matrices(parse_free(ctx.exprs(1)[0], c.n), tuple);
  json rows = json::array();
  for (Eigen::Index i = 0; i < value.rows(); ++i) {
    json row = json::array();
    std::string line;
    for (Eigen::Index j = 0; j < value.cols(); ++j) {
      row.push_back(detail::complex_json(value(i, j)));
      line += (j ? " " : "") + format_complex(value(i, j));
    }
    rows.push_back(std::move(row));
    o.line(line);
  }
  o.doc()["matrix"] = std::move(rows);
}

void cmd_superpose(const Context& ctx, Output& o) {
  const SessionConfig& c = ctx.cfg();
  const auto& args = ctx.exprs(2);
  std::vector<FreeSeries> inner;
  for (std::size_t i = 1; i < args.size(); ++i) inner.push_back(parse_free(args[i], c.n));
  const FreeSeries g = parse_free(args[0], static_cast<int>(inner.size()));
  const FreeSeries result = superpose(g, inner);
  o.field("result", serialize(result), serialize(result));
}

void cmd_ore_mul(const Context& ctx, Output& o) {
  OreNames names;
  const auto spec = ore_spec_from(ctx, names);
  product_command<OrePoly>(
      ctx, o, [&](const std::string& s) { return parse_ore(s, spec, names); }, ore_mul,
      [&](const OrePoly& p) { return serialize(p, names); });
}

void cmd_smash_mul(const Context& ctx, Output& o) {
  const SmashNames names;
  const auto spec = smash_spec_from(ctx, names);
  product_command<SmashElement>(
      ctx, o, [&](const std::string& s) { return parse_smash(s, spec, names); }, smash_mul,
      [&](const SmashElement& u) { return serialize(u, names); });
}

void cmd_freeprod_mul(const Context& ctx, Output& o) {
  const auto factors = factors_from(ctx);
  product_command<FreeProductElement>(
      ctx, o, [&](const std::string& s) { return parse_freeprod(s, factors); }, freeprod_mul,
      [](const FreeProductElement& u) { return serialize(u); });
}

void cmd_flatten(const Context& ctx, Output& o) {
  const FreeSeries f = freeprod_flatten(parse_freeprod(ctx.exprs(1)[0], factors_from(ctx)));
  o.field("result", serialize(f), serialize(f));
}

int cmd_check(const Context& ctx, Output& o) {
  const auto& args = ctx.exprs(1);
  SuiteOptions so;
  so.seed = ctx.opt.seed;
  so.max_degree = ctx.opt.max_degree;
  so.config = ctx.config;
  bool all = true;
  json reports = json::array();
  for (const auto& name : args) {
    const SuiteReport r = run_suite(name, so);
    all = all && r.passed;
    reports.push_back({{"suite", r.suite},
                       {"passed", r.passed},
                       {"instances", r.instances},
                       {"worst", r.worst},
                       {"worst_instance", r.worst_instance},
                       {"notes", r.notes}});
    o.line("suite " + r.suite + ": " + (r.passed ? "PASS" : "FAIL") + " (" + std::to_string(r.instances) +
           " instances, worst " + number_text(r.worst) + ")");
    for (const auto& note : r.notes) o.line("  " + note);
    if (!r.passed) o.line("  worst instance: " + r.worst_instance);
  }
  o.doc()["suites"] = std::move(reports);
  o.doc()["passed"] = all;
  return all ? kExitSuccess : kExitSuiteFailure;
}

struct Command {
  const char* name;
  const char* help;
  const char* positional;
  std::function<int(const Context&, Output&)> run;
};

template <typename Fn>
std::function<int(const Context&, Output&)> simple(Fn fn) {
  return [fn](const Context& c, Output& o) {
    fn(c, o);
    return kExitSuccess;
  };
}

const std::vector<Command>& commands() {
  static const std::vector<Command> list = {
      {"mul", "multiply expressions in the configured algebra", "EXPR...", simple(cmd_mul)},
      {"normalize", "q normal form of words given as letter lists", "WORD...", simple(cmd_normalize)},
      {"weight", "weight w_q(k) and the method used", "", simple(cmd_weight)},
      {"minwords", "all minimizing rearrangements W(k)", "", simple(cmd_minwords)},
      {"compact-word", "compact minimizing word for k", "", simple(cmd_compact_word)},
      {"pi", "project a free polynomial to the q-polynomial algebra", "EXPR", simple(cmd_pi)},
      {"kappa", "section from q-polynomials to the free algebra", "EXPR", simple(cmd_kappa)},
      {"abelianize", "commutative image of a free polynomial", "EXPR", simple(cmd_abelianize)},
      {"norm", "evaluate a seminorm: norm VARIANT EXPR", "VARIANT EXPR", simple(cmd_norm)},
      {"eval", "evaluate a free polynomial on a matrix tuple", "EXPR", simple(cmd_eval)},
      {"superpose", "substitute free polynomials into G: superpose G F1 ... Fm", "G F...", simple(cmd_superpose)},
      {"ore-mul", "multiply in the configured Ore extension", "EXPR...", simple(cmd_ore_mul)},
      {"smash-mul", "multiply in the configured smash product", "EXPR...", simple(cmd_smash_mul)},
      {"freeprod-mul", "multiply in the configured free product", "EXPR...", simple(cmd_freeprod_mul)},
      {"flatten", "free product of univariate factors to the free algebra", "EXPR", simple(cmd_flatten)},
      {"check", "run property suites", "SUITE...", cmd_check},
  };
  return list;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noncommutative holomorphic function algebras: arithmetic, seminorms and property checks", "qhol"};
  app.require_subcommand(1, 1);
  Options opt;
  app.add_option("-c,--config", opt.config_path, "JSON session config");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "seed for property suites");
  app.add_option("--max-degree", opt.max_degree, "degree bound for property suites")->check(CLI::Range(0, 64));
  app.add_option("-k", opt.k, "exponent vector k1,...,kn");
  app.add_option("--rho", opt.rho, "radii rho1,...,rhon");
  app.add_option("--tau", opt.tau, "tau (or outer radii for q_polyannulus)");
  app.add_option("--matrices", opt.matrices, "JSON file with a matrix tuple (eval)");
  app.add_option("--cutoff", opt.cutoff, "cutoff n of the U(g) seminorm")->check(CLI::NonNegativeNumber);
  app.add_option("--t", opt.t, "parameter t of the U(g) seminorm");

  const Command* chosen = nullptr;
  for (const auto& cmd : commands()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->fallthrough();
    if (*cmd.positional) sub->add_option("args", opt.positional, cmd.positional);
    sub->callback([&chosen, &cmd] { chosen = &cmd; });
  }

  std::vector<std::string> storage = args;
  storage.insert(storage.begin(), "qhol");
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? kExitSuccess : kExitUsage;
  }
  if (!chosen) return kExitUsage;

  Output output(out, opt.format == "json", chosen->name);
  try {
    Context ctx{opt, std::nullopt, json::object()};
    if (!opt.config_path.empty()) {
      std::ifstream in(opt.config_path);
      if (!in) throw Error(ErrorCode::FormatError, "cannot read config " + opt.config_path);
      std::stringstream buf;
      buf << in.rdbuf();
      ctx.config = parse_config(buf.str());
      ctx.raw = json::parse(buf.str());
    }
    const int code = chosen->run(ctx, output);
    output.finish();
    return code;
  } catch (const Error& e) {
    std::string msg = "error: " + std::string(to_string(e.code())) + ": " + e.what();
    err << msg << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: FormatError: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qhol
