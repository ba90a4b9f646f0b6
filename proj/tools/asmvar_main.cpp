// Command-line surface: enumeration, queries, weak-order operators,
// polynomials, poset export, and the theorem-verification harness.
//
// Exit codes: 0 success, 1 verification failure (or violated internal
// invariant), 2 malformed input, 3 feasibility bound exceeded.
//
// All canonical output goes to stdout and is byte-identical across identical
// invocations; timing and other advisory chatter goes to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "asmvar/asmvar.hpp"

namespace {

using namespace asmvar;

struct Input {
  std::variant<Asm, Antichain> value;

  bool is_antichain() const { return std::holds_alternative<Antichain>(value); }
  const Antichain& antichain() const { return std::get<Antichain>(value); }

  // The ASM view; antichains must have a single-variety realization.
  Asm matrix() const {
    if (const Asm* a = std::get_if<Asm>(&value)) return *a;
    const auto a = try_to_asm(std::get<Antichain>(value));
    if (!a) throw std::invalid_argument("antichain " + canonical_string(std::get<Antichain>(value)) + " is not the component set of a single matrix");
    return *a;
  }

  int n() const { return is_antichain() ? antichain().n() : std::get<Asm>(value).n(); }
};

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Inline JSON ({"rows"/"perms"/"oneline"}), compact antichain "{213,132}",
// semicolon ASM rows, one-line permutation, or a path to a file holding any
// of those.
Input parse_input(const std::string& raw, bool allow_file = true) {
  const std::string s = trimmed(raw);
  if (s.empty()) throw std::invalid_argument("input: empty");
  if (s.front() == '{') {
    if (s.find(':') != std::string::npos) {
      const json j = json::parse(s);
      if (j.contains("rows")) return {asm_from_json(j)};
      if (j.contains("perms")) return {antichain_from_json(j)};
      if (j.contains("oneline")) return {perm_to_asm(perm_from_json(j))};
      throw std::invalid_argument("input json: expected a \"rows\", \"perms\", or \"oneline\" object");
    }
    return {parse_antichain(s)};
  }
  if (s.find(';') != std::string::npos) return {parse_asm_rows(s)};
  if (s.find_first_not_of("0123456789,- ") == std::string::npos) return {perm_to_asm(parse_perm(s))};
  if (!allow_file) throw std::invalid_argument("input: cannot parse '" + s + "'");
  std::ifstream in(s);
  if (!in) throw std::invalid_argument("input: cannot read file '" + s + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str(), /*allow_file=*/false);
}

// Result rendering: permutation matrices print as one-line notation.
std::string asm_text(const Asm& a) {
  if (const auto w = asm_to_perm(a)) return canonical_string(*w);
  return canonical_string(a);
}

void emit(const std::string& format, const std::string& text, const json& j) {
  if (format == "json") std::cout << j.dump() << "\n";
  else std::cout << text << "\n";
}

std::string cache_file(const std::string& dir) { return dir + "/poly-cache.jsonl"; }

int cmd_enumerate(const std::string& kind, int n) {
  long long count = 0;
  if (kind == "asm") {
    for (const Asm& a : enumerate_asms(n)) {
      std::cout << to_json(a).dump() << "\n";
      ++count;
    }
  } else {
    for (const Antichain& a : enumerate_antichains(n)) {
      std::cout << to_json(a).dump() << "\n";
      ++count;
    }
  }
  std::cout << "count " << count << "\n";
  return 0;
}

int cmd_query(const std::string& what, const std::string& input, const std::string& format, bool cm) {
  const Input in = parse_input(input);

  if (what == "perm-set") {
    const auto members = in.is_antichain() ? in.antichain().perms() : perm_set(in.matrix());
    json j = json::array();
    std::string text = "{";
    for (size_t t = 0; t < members.size(); ++t) {
      j.push_back(to_json(members[t]));
      if (t > 0) text += ",";
      text += canonical_string(members[t]);
    }
    text += "}";
    emit(format, text, j);
  } else if (what == "codim") {
    const int c = in.is_antichain() ? codim_anti(in.antichain()) : codim(in.matrix());
    emit(format, std::to_string(c), json(c));
  } else if (what == "descents") {
    const auto d = in.is_antichain() ? descents(in.antichain()) : descents(in.matrix());
    std::string text;
    for (size_t t = 0; t < d.size(); ++t) text += (t ? " " : "") + std::to_string(d[t]);
    emit(format, text, json(d));
  } else if (what == "maj") {
    const int m = in.is_antichain() ? maj(in.antichain()) : maj(in.matrix());
    emit(format, std::to_string(m), json(m));
  } else if (what == "rank") {
    const RankMatrix r = rank_matrix(in.matrix());
    std::string text;
    for (int i = 0; i <= r.n(); ++i) {
      if (i > 0) text += "\n";
      for (int j = 0; j <= r.n(); ++j) text += (j ? " " : "") + std::to_string(r.at(i, j));
    }
    emit(format, text, to_json(r));
  } else if (what == "diagram" || what == "essential") {
    const auto cells = what == "diagram" ? rothe_diagram(in.matrix()) : essential_set(in.matrix());
    std::string text;
    for (size_t t = 0; t < cells.size(); ++t) text += (t ? " " : "") + detail::cell_str(cells[t].row, cells[t].col);
    if (cells.empty()) text = "(empty)";
    emit(format, text, to_json(cells));
  } else if (what == "bigrass") {
    const auto triples = bigrass_decomposition(in.matrix());
    json j = json::array();
    std::string text;
    for (size_t t = 0; t < triples.size(); ++t) {
      j.push_back(to_json(triples[t]));
      text += (t ? "\n" : "") + detail::cell_str(triples[t].row, triples[t].col) + " rank=" + std::to_string(triples[t].rank);
    }
    if (triples.empty()) text = "(empty)";
    emit(format, text, j);
  } else {  // ideal-generators: display-only presentation metadata
    const Asm a = in.matrix();
    const RankMatrix r = rank_matrix(a);
    json j = json::array();
    std::string text;
    bool first = true;
    for (const Cell& c : essential_set(a)) {
      const int size = r.at(c.row, c.col) + 1;
      j.push_back(json{{"cell", json::array({c.row, c.col})}, {"minor_size", size}, {"submatrix", json::array({c.row, c.col})}});
      text += (first ? "" : "\n") + std::string("cell=") + detail::cell_str(c.row, c.col) + " minor_size=" + std::to_string(size) + " submatrix=" +
              std::to_string(c.row) + "x" + std::to_string(c.col);
      first = false;
    }
    if (first) text = "(empty)";
    emit(format, text, j);
  }

  if (cm) {
    // Combinatorial criterion only; no Cohen-Macaulayness is computed.
    if (all_chains_equal_length(in.matrix()))
      std::cout << "conjecturally CM: all saturated chain words have equal length (combinatorial criterion only)\n";
    else
      std::cout << "not conjecturally CM: saturated chain words of unequal length exist\n";
  }
  return 0;
}

int cmd_pi(const std::string& flavor, const std::string& input, const std::vector<int>& word, const std::string& format) {
  const Input in = parse_input(input);
  const int n = in.n();
  for (int i : word)
    if (i < 1 || i >= n) throw std::invalid_argument("pi: index " + std::to_string(i) + " out of range [1," + std::to_string(n - 1) + "]");

  // Words act right-to-left: the last listed index is applied first.
  if (in.is_antichain()) {
    Antichain a = in.antichain();
    for (auto it = word.rbegin(); it != word.rend(); ++it) a = flavor == "col" ? pi_col_anti(a, *it) : pi_anti(a, *it);
    emit(format, canonical_string(a), to_json(a));
  } else {
    Asm a = in.matrix();
    for (auto it = word.rbegin(); it != word.rend(); ++it) a = flavor == "col" ? pi_col(a, *it) : pi(a, *it);
    emit(format, asm_text(a), to_json(a));
  }
  return 0;
}

int cmd_poly(const std::string& family, const std::string& variant, const std::string& input, const std::string& format, std::optional<int> nmax,
             PolyCache& cache) {
  const Input in = parse_input(input);
  const int bound = nmax.value_or(5);
  if (in.n() > bound) throw bound_error("poly: n = " + std::to_string(in.n()) + " exceeds bound " + std::to_string(bound) + " (raise with --nmax)");

  MultiPoly p = MultiPoly::zero(std::max(in.n(), 1));
  if (in.is_antichain() && !try_to_asm(in.antichain())) {
    if (family == "schub") throw std::invalid_argument("poly: schub is defined for matrices, not general antichains");
    p = variant == "single" ? groth_anti_single(in.antichain(), cache) : groth_anti(in.antichain(), cache);
  } else {
    const Asm a = in.matrix();
    if (family == "groth") p = variant == "single" ? groth_asm_single(a, cache) : groth_asm(a, cache);
    else p = variant == "single" ? schub_asm_single(a, cache) : schub_asm(a, cache);
  }

  // Default prints both renderings; --format selects one.
  if (format.empty()) {
    std::cout << poly_to_text(p) << "\n" << to_json(p).dump() << "\n";
  } else {
    emit(format, poly_to_text(p), to_json(p));
  }
  return 0;
}

int cmd_poset(const std::string& order, const std::string& kind, std::optional<int> n, const std::string& format, const std::string& root) {
  PosetGraph g;
  std::string name;
  if (!root.empty()) {
    if (order != "weak" || kind != "asm") throw std::invalid_argument("poset: --root exports the weak-order interval below a matrix (order=weak kind=asm)");
    const Input in = parse_input(root);
    g = weak_interval_below(in.matrix());
    name = "weak_interval";
  } else {
    if (!n) throw std::invalid_argument("poset: give a size n or a --root element");
    if (kind == "asm") g = order == "weak" ? weak_poset(*n) : strong_hasse(*n);
    else g = order == "weak" ? weak_poset_anti(*n) : strong_hasse_anti(*n);
    name = order + "_" + kind + "_" + std::to_string(*n);
  }
  if (format == "json") std::cout << to_json(g).dump() << "\n";
  else std::cout << poset_to_dot(g, name);
  return 0;
}

int cmd_verify(const std::string& suite, std::optional<int> nmax, const std::string& format, PolyCache& cache) {
  std::vector<VerifyReport> reports;
  if (suite == "all") reports = run_all_suites(nmax, &cache);
  else reports.push_back(run_suite(suite, nmax, &cache));

  bool all_pass = true;
  double total = 0.0;
  for (const VerifyReport& r : reports) {
    all_pass = all_pass && r.passed();
    total += r.elapsed_seconds;
    std::cerr << "# " << r.suite << " elapsed " << r.elapsed_seconds << "s\n";
    if (format == "json") {
      std::cout << to_json(r).dump() << "\n";
      continue;
    }
    std::cout << report_line(r) << "\n";
    const size_t shown = std::min<size_t>(r.failures.size(), 20);
    for (size_t t = 0; t < shown; ++t) std::cout << "  counterexample: " << r.failures[t] << "\n";
    if (r.failures.size() > shown) std::cout << "  ... and " << (r.failures.size() - shown) << " more\n";
  }
  std::cerr << "# total elapsed " << total << "s\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for alternating sign matrices: Bruhat orders, weak-order operators, Grothendieck/Schubert polynomials, antichains"};
  app.require_subcommand(1);

  const auto format_choice = CLI::IsMember({"text", "json"});

  auto* enumerate = app.add_subcommand("enumerate", "stream all elements of ASM(n) or anti(n) as JSON, then a count line");
  std::string enum_kind;
  int enum_n = 0;
  enumerate->add_option("kind", enum_kind, "element kind")->required()->check(CLI::IsMember({"asm", "antichain"}));
  enumerate->add_option("n,--nmax", enum_n, "universe size")->required();

  auto* query = app.add_subcommand("query", "compute one datum of a matrix or antichain");
  std::string query_what, query_input, query_format = "text";
  bool query_cm = false;
  query->add_option("what", query_what, "which datum")
      ->required()
      ->check(CLI::IsMember({"rank", "diagram", "essential", "perm-set", "codim", "descents", "maj", "bigrass", "ideal-generators"}));
  query->add_option("input", query_input, "element (JSON, compact text, or file path)")->required();
  query->add_option("--format", query_format, "output format")->check(format_choice);
  query->add_flag("--cm", query_cm, "also report the equal-chain-length criterion (conjectural CM indicator; no Cohen-Macaulayness is computed)");

  auto* pi_cmd = app.add_subcommand("pi", "apply a weak-order operator word (right-to-left) to an element");
  std::string pi_flavor, pi_input, pi_format = "text";
  std::vector<int> pi_word;
  pi_cmd->add_option("flavor", pi_flavor, "row or column operators")->required()->check(CLI::IsMember({"row", "col"}));
  pi_cmd->add_option("input", pi_input, "element (JSON, compact text, or file path)")->required();
  pi_cmd->add_option("word", pi_word, "operator indices, applied right-to-left")->required()->expected(-1);
  pi_cmd->add_option("--format", pi_format, "output format")->check(format_choice);

  auto* poly = app.add_subcommand("poly", "Grothendieck or Schubert polynomial of an element");
  std::string poly_family, poly_variant, poly_input, poly_format, poly_cache_dir;
  std::optional<int> poly_nmax;
  poly->add_option("family", poly_family, "polynomial family")->required()->check(CLI::IsMember({"groth", "schub"}));
  poly->add_option("variant", poly_variant, "single (x only) or double (x and y)")->required()->check(CLI::IsMember({"single", "double"}));
  poly->add_option("input", poly_input, "element (JSON, compact text, or file path)")->required();
  poly->add_option("--format", poly_format, "output format (default prints both text and JSON)")->check(format_choice);
  poly->add_option("--nmax", poly_nmax, "feasibility bound override (default 5)");
  poly->add_option("--cache-dir", poly_cache_dir, "directory for the on-disk polynomial cache");

  auto* poset = app.add_subcommand("poset", "export a poset as DOT or JSON");
  std::string poset_order, poset_kind, poset_format = "dot", poset_root;
  std::optional<int> poset_n;
  poset->add_option("order", poset_order, "strong Hasse diagram or weak operator graph")->required()->check(CLI::IsMember({"strong", "weak"}));
  poset->add_option("kind", poset_kind, "element kind")->required()->check(CLI::IsMember({"asm", "antichain"}));
  poset->add_option("n,--nmax", poset_n, "universe size");
  poset->add_option("format,--format", poset_format, "output format")->check(CLI::IsMember({"dot", "json"}));
  poset->add_option("--root", poset_root, "export the weak-order interval below this matrix instead");

  auto* verify = app.add_subcommand("verify", "run a theorem-verification suite (or \"all\")");
  std::string verify_suite, verify_format = "text", verify_cache_dir;
  std::optional<int> verify_nmax;
  std::string suite_help = "suite id or \"all\"; ids:";
  for (const VerifySuite& s : verify_suites()) suite_help += " " + s.id;
  verify->add_option("suite", verify_suite, suite_help)->required();
  verify->add_option("nmax,--nmax", verify_nmax, "universe size (default per suite)");
  verify->add_option("--format", verify_format, "output format")->check(format_choice);
  verify->add_option("--cache-dir", verify_cache_dir, "directory for the on-disk polynomial cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad arguments are malformed input
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(enum_kind, enum_n);
    if (query->parsed()) return cmd_query(query_what, query_input, query_format, query_cm);
    if (pi_cmd->parsed()) return cmd_pi(pi_flavor, pi_input, pi_word, pi_format);
    if (poly->parsed()) {
      PolyCache cache;
      if (!poly_cache_dir.empty()) load_poly_cache(cache, cache_file(poly_cache_dir));
      const int code = cmd_poly(poly_family, poly_variant, poly_input, poly_format, poly_nmax, cache);
      if (!poly_cache_dir.empty()) save_poly_cache(cache, cache_file(poly_cache_dir));
      return code;
    }
    if (poset->parsed()) return cmd_poset(poset_order, poset_kind, poset_n, poset_format, poset_root);
    if (verify->parsed()) {
      PolyCache cache;
      if (!verify_cache_dir.empty()) load_poly_cache(cache, cache_file(verify_cache_dir));
      const int code = cmd_verify(verify_suite, verify_nmax, verify_format, cache);
      if (!verify_cache_dir.empty()) save_poly_cache(cache, cache_file(verify_cache_dir));
      return code;
    }
  } catch (const bound_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
