#ifndef QHOL_IO_HPP
#define QHOL_IO_HPP

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qhol/cocycle.hpp"
#include "qhol/expr.hpp"
#include "qhol/free_product.hpp"
#include "qhol/free_series.hpp"
#include "qhol/ore.hpp"
#include "qhol/qseries.hpp"
#include "qhol/smash.hpp"

namespace qhol {

enum class SessionMode { free, free_polydisk, q_polydisk, q_laurent };

std::string_view to_string(SessionMode m) noexcept;

/// Session settings read from a JSON document:
///   { "n": 2, "mode": "q_polydisk", "q": [[[1,0],[0.5,0]],[[2,0],[1,0]]],
///     "R": [1, "+inf"], "r": [0, 0], "caps": {"permutations": 50000},
///     "tol": 1e-9 }
/// "q" may also be a single number or [re, im] pair, meaning q_ij = q for
/// i < j. Missing "q" means the commutative matrix.
struct SessionConfig {
  int n = 1;
  SessionMode mode = SessionMode::free;
  QMatrix q = QMatrix::commutative(1);
  std::vector<double> R;  // outer radii, +inf allowed; empty when absent
  std::vector<double> r;  // inner radii; empty when absent
  std::size_t permutation_cap = kDefaultPermutationCap;
  double tol = kRelativeTolerance;

  bool is_free() const noexcept { return mode == SessionMode::free || mode == SessionMode::free_polydisk; }
  Support support() const noexcept { return mode == SessionMode::q_laurent ? Support::integer : Support::nonnegative; }
  /// Throws InvalidQMatrix / BadParams.
  void validate() const;
};

/// Throws FormatError on malformed JSON or schema violations.
SessionConfig parse_config(std::string_view json_text);
SessionConfig load_config(const std::filesystem::path& path);

/// Generators `f1..fN` in free modes, `z1..zN` in q modes; negative powers
/// only in q_laurent mode.
ParseOptions parse_options(const SessionConfig& config);
ExprAst parse_expr(std::string_view text, const SessionConfig& config);

using SessionElement = std::variant<FreeSeries, QSeries>;

/// Evaluates the tree in the configured algebra, associating left to right.
/// Throws ModeMismatch if the tree uses generators of another algebra.
SessionElement lower_ast(const ExprAst& ast, const SessionConfig& config);
/// parse_expr followed by lower_ast.
SessionElement parse_element(std::string_view text, const SessionConfig& config);
FreeSeries parse_free(std::string_view text, int n);
QSeries parse_q(std::string_view text, const QMatrix& q, Support support = Support::nonnegative,
                const std::string& family = "z");

/// Names used for the generators of the two-sided constructions.
struct OreNames {
  std::string coefficient = "a";  // a1..am; a plain name when m == 1 and `plain` is set
  std::string variable = "z";
  bool plain = false;
};
struct SmashNames {
  std::string left = "a";
  std::string right = "b";
};

OrePoly parse_ore(std::string_view text, std::shared_ptr<const OreSpec> spec, const OreNames& names = {});
SmashElement parse_smash(std::string_view text, std::shared_ptr<const SmashSpec> spec, const SmashNames& names = {});
/// Generators x{i}_{j} (factor i, variable j); x{i} abbreviates x{i}_1.
FreeProductElement parse_freeprod(std::string_view text, std::vector<QMatrix> factors);

/// Canonical text: terms in (degree, lexicographic) order joined by " + ",
/// each written as `re+imi` (17 significant digits) followed by `*`-joined
/// generator factors; the zero element is "0".
std::string serialize(const FreeSeries& f);
std::string serialize(const QSeries& a);
std::string serialize(const FreeProductElement& u);
std::string serialize(const OrePoly& p, const OreNames& names = {});
std::string serialize(const SmashElement& u, const SmashNames& names = {});
std::string serialize(const SessionElement& e);
std::string format_complex(Complex c);

/// Inverses of serialize; bit-exact on canonical text. Throw FormatError.
FreeSeries deserialize_free(std::string_view text, int n);
QSeries deserialize_q(std::string_view text, const QMatrix& q, Support support = Support::nonnegative);
FreeProductElement deserialize_freeprod(std::string_view text, std::vector<QMatrix> factors);
OrePoly deserialize_ore(std::string_view text, std::shared_ptr<const OreSpec> spec, const OreNames& names = {});
SmashElement deserialize_smash(std::string_view text, std::shared_ptr<const SmashSpec> spec, const SmashNames& names = {});
SessionElement deserialize(std::string_view text, const SessionConfig& config);

}  // namespace qhol

#endif
