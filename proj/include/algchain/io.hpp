#ifndef ALGCHAIN_IO_HPP
#define ALGCHAIN_IO_HPP

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "algchain/chains.hpp"
#include "algchain/invariants.hpp"
#include "algchain/oracle.hpp"
#include "algchain/version.hpp"

namespace algchain {

using Json = nlohmann::json;

struct AnalysisOptions {
  bool check_associativity = true;
  std::uint64_t guard = 5'000'000;
  int workers = 1;
  DivisionHints hints;
  std::string label;
};

/// A parsed definition file: a concrete algebra over one of the supported
/// fields, or a symbolic factor-shape input for pure bound arithmetic.
struct ParsedDefinition {
  std::variant<InvariantInput, AlgebraTable<FiniteField>, AlgebraTable<RationalField>> payload;
  FieldClass field_class = FieldClass::finite;
  AnalysisOptions options;
};

namespace io_detail {

template <FieldType F>
typename F::Elem parse_scalar(const F& f, const Json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_array()) {
    if constexpr (std::is_same_v<F, FiniteField>) {
      std::vector<std::uint32_t> digits;
      for (const auto& c : j) {
        if (!c.is_number_integer()) fail(Errc::ParseError, "coefficient list entries must be integers");
        long long v = c.get<long long>();
        long long r = v % (long long)f.p();
        if (r < 0) r += f.p();
        digits.push_back(std::uint32_t(r));
      }
      return f.from_digits(digits);
    } else {
      fail(Errc::ParseError, "coefficient lists require a finite field");
    }
  }
  fail(Errc::ParseError, "unsupported scalar literal");
}

template <FieldType F>
AlgebraTable<F> parse_algebra_block(const F& f, const Json& j, bool check) {
  if (!j.is_object() || !j.contains("kind"))
    fail(Errc::ParseError, "algebra block must carry a kind");
  const std::string kind = j.at("kind").get<std::string>();
  auto ext = [&]() { return j.value("entries_extension", 1); };
  auto need_n = [&]() {
    if (!j.contains("n")) fail(Errc::ParseError, kind + " requires n");
    return j.at("n").get<int>();
  };
  if (kind == "matrix") return make_matrix_algebra(f, need_n(), ext());
  if (kind == "upper_triangular") return make_upper_triangular(f, need_n(), ext());
  if (kind == "strict_upper") return make_strict_upper(f, need_n(), ext());
  if (kind == "field_extension") {
    if (!j.contains("d")) fail(Errc::ParseError, "field_extension requires d");
    return make_field_extension(f, j.at("d").get<int>());
  }
  if (kind == "parabolic" || kind == "block_diagonal") {
    if (!j.contains("alpha")) fail(Errc::ParseError, kind + " requires alpha");
    Partition alpha;
    for (const auto& part : j.at("alpha")) alpha.parts.push_back(part.get<int>());
    int n = need_n();
    return kind == "parabolic" ? make_parabolic(f, n, alpha, ext())
                               : make_block_diagonal(f, n, alpha, ext());
  }
  if (kind == "product") {
    if (!j.contains("factors") || !j.at("factors").is_array() || j.at("factors").empty())
      fail(Errc::ParseError, "product requires a non-empty factor list");
    AlgebraTable<F> acc = parse_algebra_block(f, j.at("factors")[0], check);
    for (std::size_t i = 1; i < j.at("factors").size(); ++i)
      acc = direct_product(acc, parse_algebra_block(f, j.at("factors")[i], check));
    return acc;
  }
  if (kind == "truncated_quiver") {
    if (!j.contains("vertices") || !j.contains("truncate"))
      fail(Errc::ParseError, "truncated_quiver requires vertices and truncate");
    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : j.value("arrows", Json::array())) {
      if (!a.is_array() || a.size() != 2) fail(Errc::ParseError, "arrows must be [src, dst] pairs");
      arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return make_truncated_quiver(f, j.at("vertices").get<int>(), arrows,
                                 j.at("truncate").get<int>());
  }
  if (kind == "table") {
    if (!j.contains("dim")) fail(Errc::ParseError, "table requires dim");
    const int dim = j.at("dim").get<int>();
    std::vector<std::tuple<int, int, int, typename F::Elem>> entries;
    for (const auto& e : j.value("products", Json::array())) {
      if (!e.is_array() || e.size() != 4)
        fail(Errc::ParseError, "product entries must be [i, j, k, scalar]");
      entries.emplace_back(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(),
                           parse_scalar(f, e[3]));
    }
    return algebra_from_table(f, dim, entries, check);
  }
  fail(Errc::ParseError, "unknown algebra kind '" + kind + "'");
}

inline FieldClass parse_field_class(const std::string& s) {
  if (s == "finite") return FieldClass::finite;
  if (s == "rational") return FieldClass::rational;
  if (s == "algebraically_closed_symbolic") return FieldClass::algebraically_closed_symbolic;
  if (s == "quadratically_closed_symbolic") return FieldClass::quadratically_closed_symbolic;
  fail(Errc::ParseError, "unknown field class '" + s + "'");
}

}  // namespace io_detail

inline ParsedDefinition parse_definition(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(Errc::ParseError, e.what());
  }
  ParsedDefinition def;
  if (j.contains("options")) {
    const auto& o = j.at("options");
    def.options.check_associativity = o.value("check_associativity", true);
    def.options.guard = o.value("guard", std::uint64_t(5'000'000));
    def.options.workers = o.value("workers", 1);
    def.options.label = o.value("label", std::string{});
    for (const auto& h : o.value("division_hints", Json::array())) {
      if (!h.is_array() || h.size() != 3)
        fail(Errc::ParseError, "division hints must be [factor, l, lambda]");
      def.options.hints[h[0].get<int>()] = {h[1].get<long long>(), h[2].get<long long>()};
    }
  }
  if (j.contains("symbolic")) {
    const auto& s = j.at("symbolic");
    def.field_class = io_detail::parse_field_class(s.value("field_class", std::string("finite")));
    InvariantInput in;
    in.radical_dim = s.value("radical_dim", 0);
    for (const auto& fac : s.value("factors", Json::array())) {
      if (!fac.is_array() || fac.size() < 2)
        fail(Errc::ParseError, "symbolic factors must be [n, d] or [n, d, e]");
      FactorShape shape;
      shape.n = fac[0].get<int>();
      shape.d = fac[1].get<int>();
      shape.e = fac.size() > 2 ? fac[2].get<int>() : 1;
      in.factors.push_back(shape);
    }
    in.dim = in.radical_dim;
    for (const auto& fac : in.factors) in.dim += fac.block_dim();
    if (s.contains("dim")) in.dim = s.at("dim").get<long long>();
    def.payload = std::move(in);
    return def;
  }
  if (!j.contains("field") || !j.contains("algebra"))
    fail(Errc::ParseError, "definition requires field and algebra blocks (or a symbolic block)");
  const auto& fj = j.at("field");
  const std::string kind = fj.value("kind", std::string{});
  if (kind == "rational") {
    RationalField f;
    def.payload = io_detail::parse_algebra_block(f, j.at("algebra"), def.options.check_associativity);
    def.field_class = FieldClass::rational;
  } else if (kind == "finite") {
    FieldSpec spec = FieldSpec::finite(fj.value("p", 0u), fj.value("m", 1u));
    for (const auto& c : fj.value("modulus", Json::array()))
      spec.modulus.push_back(c.get<std::uint32_t>());
    FiniteField f(spec);
    def.payload = io_detail::parse_algebra_block(f, j.at("algebra"), def.options.check_associativity);
    def.field_class = FieldClass::finite;
  } else {
    fail(Errc::ParseError, "field kind must be rational or finite");
  }
  if (j.contains("options") && j.at("options").contains("field_class")) {
    auto fc = io_detail::parse_field_class(j.at("options").at("field_class").get<std::string>());
    if (fc != def.field_class)
      fail(Errc::ValidationError,
           "field_class override must match the field kind for concrete algebras");
  }
  return def;
}

/// FNV-1a 64-bit, used for cache keys.
inline std::string fnv64_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

struct CheckRow {
  std::string name;
  std::optional<bool> passed;  // nullopt renders as n/a
  std::string detail;
};

struct ReportDocument {
  std::string text;
  bool all_checks_passed = true;
};

namespace io_detail {

inline std::string yesno(const std::optional<bool>& b) {
  if (!b) return "n/a";
  return *b ? "pass" : "FAIL";
}

inline std::string bool_str(const std::optional<bool>& b) {
  if (!b) return "n/a";
  return *b ? "true" : "false";
}

template <FieldType F>
std::string factors_line(const WedderburnReport<F>& W) {
  std::string s;
  for (const auto& fac : W.factors) {
    if (!s.empty()) s += ' ';
    if (fac.resolved)
      s += "[n=" + std::to_string(fac.n) + " d=" + std::to_string(fac.d) + " e=" +
           std::to_string(fac.e) + "]";
    else
      s += "[unresolved dim=" + std::to_string(fac.block_dim) + "]";
  }
  return s.empty() ? "(none)" : s;
}

}  // namespace io_detail

/// Analysis pipeline for a concrete algebra: structure, invariant formulas,
/// optional oracle cross-checks, and the per-theorem pass/fail table.
template <FieldType F>
ReportDocument analyze_algebra(const AlgebraTable<F>& A, FieldClass fc,
                               const AnalysisOptions& opts, bool with_oracle,
                               std::string* lattice_dump = nullptr) {
  static_assert(std::is_same_v<F, FiniteField> || std::is_same_v<F, RationalField>);
  ReportDocument doc;
  std::string& out = doc.text;
  out += std::string("algchain report ") + kVersion + "\n";
  out += "label: " + (opts.label.empty() ? (A.label.empty() ? "(unnamed)" : A.label) : opts.label) +
         "\n";
  out += "field: " + field_spec_str(A.field.spec()) + "\n";
  out += "dim: " + std::to_string(A.dim) + "\n";

  auto W = wedderburn(A);
  out += "== structure ==\n";
  out += "radical_dim: " + std::to_string(W.radical_dim) + "\n";
  out += "factors: " + io_detail::factors_line(W) + "\n";

  auto in = invariant_input(A, require_resolved(W));
  auto rep = assemble_invariants(in, fc, opts.hints);

  std::optional<OracleResult> oracle;
  if (with_oracle) {
    if constexpr (std::is_same_v<F, FiniteField>) {
      OracleGuard guard{opts.guard, opts.workers};
      auto store = enumerate_subalgebras(A, guard);
      auto res = exact_length_depth(store);
      auto acc = store.nodes[store.top];
      for (int c : store.covers[store.top])
        acc = subspace_intersect(A.field, acc, store.nodes[c]);
      res.frattini_dim = acc.dim();
      oracle = res;
      if (lattice_dump) *lattice_dump = dump_lattice(A, store);
    } else {
      fail(Errc::ValidationError, "the oracle requires a finite ground field");
    }
  }

  out += "== invariants ==\n";
  out += "length: " + std::to_string(rep.length) + "\n";
  out += "parabolic: rank=" + std::to_string(rep.rank) + " borel=" +
         std::to_string(rep.borel_length) + " total=" + std::to_string(rep.parabolic_total) + "\n";
  out += "depth_bounds: [" + std::to_string(rep.depth.lower) + ", " +
         std::to_string(rep.depth.upper) + "]\n";
  long long cd_lo = rep.cd.lower, cd_hi = rep.cd.upper;
  if (oracle) {
    out += "depth_exact: " + std::to_string(oracle->exact_depth) + "\n";
    cd_lo = cd_hi = rep.length - oracle->exact_depth;
  }
  out += "cd_bounds: [" + std::to_string(cd_lo) + ", " + std::to_string(cd_hi) + "]\n";
  out += "field_class: " + std::string(field_class_name(fc)) + "\n";
  out += "length_equals_dim: " + io_detail::bool_str(rep.length_equals_dim) + "\n";
  out += "condition_star: " + io_detail::bool_str(rep.satisfies_condition_star) + "\n";

  if (oracle) {
    out += "== oracle ==\n";
    out += "subalgebras: " + std::to_string(oracle->node_count) + "\n";
    out += "exact_length: " + std::to_string(oracle->exact_length) + "\n";
    out += "exact_depth: " + std::to_string(oracle->exact_depth) + "\n";
    out += "maximal_count: " + std::to_string(oracle->max_subalgebra_count) + "\n";
    out += "frattini_dim: " + std::to_string(oracle->frattini_dim) + "\n";
  }

  // theorem checks
  std::vector<CheckRow> checks;
  checks.push_back({"length_formula_equals_parabolic_route", rep.parabolic_total == rep.length, ""});
  bool family = predicts_length_equals_dim(in);
  checks.push_back({"length_equals_dim_iff_small_family", (rep.length == in.dim) == family, ""});
  if (oracle) {
    checks.push_back({"oracle_length_matches_formula", oracle->exact_length == rep.length,
                      "oracle " + std::to_string(oracle->exact_length) + " vs formula " +
                          std::to_string(rep.length)});
    checks.push_back({"oracle_depth_within_bounds",
                      oracle->exact_depth >= rep.depth.lower &&
                          oracle->exact_depth <= rep.depth.upper,
                      ""});
    if (rep.satisfies_condition_star.has_value()) {
      long long cd_exact = oracle->exact_length - oracle->exact_depth;
      std::optional<bool> one_way;  // cd = 0 implies condition (*)
      one_way = cd_exact != 0 || *rep.satisfies_condition_star;
      checks.push_back({"cd_zero_implies_condition_star", one_way, ""});
      if (in.radical_dim == 0)
        checks.push_back({"semisimple_condition_star_implies_cd_zero",
                          !*rep.satisfies_condition_star || cd_exact == 0, ""});
    }
    if (in.factors.size() == 1 && in.radical_dim == 0) {
      CdBounds cde{oracle->exact_length - oracle->exact_depth,
                   oracle->exact_length - oracle->exact_depth};
      checks.push_back(
          {"matrix_size_within_cd_bound", matrix_dim_bound_ok(in.factors[0].n, cde), ""});
    }
  } else if (rep.cd_matrix_bound_ok.has_value()) {
    checks.push_back({"matrix_size_within_cd_bound", rep.cd_matrix_bound_ok, "interval check"});
  }
  if (rep.half_length_holds.has_value() && in.radical_dim == 0 && in.factors.size() == 1) {
    bool direct = 2 * rep.length >= in.dim;
    checks.push_back({"half_length_identity_consistent", direct == *rep.half_length_holds, ""});
  }
  // solvable radical bound
  {
    bool solvable_known = true;
    long long dim_R = 0;
    if constexpr (std::is_same_v<F, FiniteField>) {
      dim_R = solvable_radical(A, W).dim();
    } else {
      try {
        dim_R = solvable_radical(A, W).dim();
      } catch (const Error&) {
        solvable_known = false;
      }
    }
    if (solvable_known) {
      long long cd_for_check = oracle ? (oracle->exact_length - oracle->exact_depth) : rep.cd.lower;
      auto sb = solvable_bound_check(A.dim - dim_R, cd_for_check,
                                     /*quadratic_extension_exists=*/true);
      out += "solvable_radical_dim: " + std::to_string(dim_R) + "\n";
      checks.push_back({"solvable_quotient_bounded_by_9cd", sb.ok,
                        "dim A/R = " + std::to_string(sb.dim_quotient) + ", cd >= " +
                            std::to_string(sb.cd_used)});
    }
  }

  out += "== checks ==\n";
  for (const auto& row : checks) {
    out += row.name + ": " + io_detail::yesno(row.passed);
    if (!row.detail.empty()) out += " (" + row.detail + ")";
    out += "\n";
    if (row.passed.has_value() && !*row.passed) doc.all_checks_passed = false;
  }
  return doc;
}

/// Report for a symbolic factor-shape input: formula arithmetic only.
inline ReportDocument analyze_symbolic(const InvariantInput& in, FieldClass fc,
                                       const AnalysisOptions& opts) {
  ReportDocument doc;
  auto rep = assemble_invariants(in, fc, opts.hints);
  std::string& out = doc.text;
  out += std::string("algchain report ") + kVersion + "\n";
  out += "label: " + (opts.label.empty() ? "(symbolic)" : opts.label) + "\n";
  out += "field: symbolic\n";
  out += "dim: " + std::to_string(in.dim) + "\n";
  out += "== invariants ==\n";
  out += "length: " + std::to_string(rep.length) + "\n";
  out += "parabolic: rank=" + std::to_string(rep.rank) + " borel=" +
         std::to_string(rep.borel_length) + " total=" + std::to_string(rep.parabolic_total) + "\n";
  out += "depth_bounds: [" + std::to_string(rep.depth.lower) + ", " +
         std::to_string(rep.depth.upper) + "]\n";
  out += "cd_bounds: [" + std::to_string(rep.cd.lower) + ", " + std::to_string(rep.cd.upper) +
         "]\n";
  out += "field_class: " + std::string(field_class_name(fc)) + "\n";
  out += "== checks ==\n";
  out += "length_formula_equals_parabolic_route: pass\n";
  return doc;
}

/// File-backed cache keyed by the canonical algebra serialization and the
/// toolkit version. Stored as a sorted JSON object for byte-stable rewrites.
class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) { load(); }

  std::optional<std::string> lookup(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void store(const std::string& key, const std::string& report) { entries_[key] = report; }

  void save() const {
    Json j(Json::value_t::object);
    for (const auto& [k, v] : entries_) j[k] = v;
    std::ofstream out(path_);
    out << j.dump(1) << "\n";
  }

  static std::string key_for(const std::string& canonical_serialization) {
    return fnv64_hex(std::string(kVersion) + "|" + canonical_serialization);
  }

  std::size_t size() const { return entries_.size(); }

 private:
  void load() {
    std::ifstream in(path_);
    if (!in) return;
    try {
      Json j;
      in >> j;
      for (auto it = j.begin(); it != j.end(); ++it) entries_[it.key()] = it.value().get<std::string>();
    } catch (...) {
      entries_.clear();  // unreadable caches are rebuilt
    }
  }

  std::string path_;
  std::map<std::string, std::string> entries_;
};

}  // namespace algchain

#endif
