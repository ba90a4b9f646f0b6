#pragma once

// Serialization: JSON encodings for every public value type, the canonical
// polynomial text rendering, DOT export of poset graphs, text parsing of the
// compact command-line forms, and the on-disk polynomial cache.

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "asmvar/antichain.hpp"

namespace asmvar {

using json = nlohmann::json;

inline json to_json(const Asm& a) {
  json rows = json::array();
  for (int i = 1; i <= a.n(); ++i) {
    json row = json::array();
    for (int j = 1; j <= a.n(); ++j) row.push_back(a.at(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"n", a.n()}, {"rows", std::move(rows)}};
}

inline Asm asm_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rows")) throw std::invalid_argument("asm json: expected {\"n\": ..., \"rows\": [[...]]}");
  const int n = j.at("n").get<int>();
  const auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
  return validate_asm(n, rows);
}

inline json to_json(const Permutation& w) {
  return json{{"n", w.n()}, {"oneline", w.oneline()}};
}

inline Permutation perm_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("oneline")) throw std::invalid_argument("permutation json: expected {\"n\": ..., \"oneline\": [...]}");
  auto v = j.at("oneline").get<std::vector<int>>();
  if (static_cast<int>(v.size()) != j.at("n").get<int>()) throw std::invalid_argument("permutation json: oneline length disagrees with n");
  return Permutation(std::move(v));
}

inline json to_json(const RankMatrix& r) {
  json values = json::array();
  for (int i = 0; i <= r.n(); ++i) {
    json row = json::array();
    for (int j = 0; j <= r.n(); ++j) row.push_back(r.at(i, j));
    values.push_back(std::move(row));
  }
  return json{{"n", r.n()}, {"values", std::move(values)}};
}

inline json to_json(const Antichain& a) {
  json perms = json::array();
  for (const Permutation& w : a.perms()) perms.push_back(w.oneline());
  return json{{"n", a.n()}, {"perms", std::move(perms)}};
}

inline Antichain antichain_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("perms")) throw std::invalid_argument("antichain json: expected {\"n\": ..., \"perms\": [[...]]}");
  const int n = j.at("n").get<int>();
  std::vector<Permutation> perms;
  for (const auto& row : j.at("perms")) {
    auto v = row.get<std::vector<int>>();
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("antichain json: member length disagrees with n");
    perms.push_back(Permutation(std::move(v)));
  }
  return Antichain::of(std::move(perms));
}

inline json to_json(const std::vector<Cell>& cells) {
  json out = json::array();
  for (const Cell& c : cells) out.push_back(json::array({c.row, c.col}));
  return out;
}

inline json to_json(const BigrassTriple& t) {
  return json{{"row", t.row}, {"col", t.col}, {"rank", t.rank}, {"n", t.n}};
}

// Coefficients are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise, so nothing silently truncates.
inline json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json coef;
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) coef = static_cast<long long>(c);
    else coef = c.str();
    terms.push_back(json{{"exp", e}, {"coef", std::move(coef)}});
  }
  return json{{"n", p.block_size()}, {"terms", std::move(terms)}};
}

inline MultiPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms")) throw std::invalid_argument("poly json: expected {\"n\": ..., \"terms\": [...]}");
  const int n = j.at("n").get<int>();
  MultiPoly p = MultiPoly::zero(n);
  for (const auto& term : j.at("terms")) {
    auto exp = term.at("exp").get<std::vector<int>>();
    if (static_cast<int>(exp.size()) != 2 * n) throw std::invalid_argument("poly json: exponent vector has wrong length");
    const auto& cj = term.at("coef");
    const BigInt c = cj.is_string() ? BigInt(cj.get<std::string>()) : BigInt(cj.get<long long>());
    p.add_term(exp, c);
  }
  return p;
}

inline json to_json(const PosetGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back(json::array({e[0], e[1], e[2]}));
  return json{{"n", g.n}, {"nodes", g.nodes}, {"edges", std::move(edges)}};
}

inline json to_json(const ChainWord& w) { return json(w); }

// Canonical polynomial text, terms in the graded-lexicographic map order:
// "2*x1 + x2 - x1^2 - 2*x1*x2 + x1^2*x2", constants bare, unit coefficients
// dropped.
inline std::string poly_to_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  const int n = p.block_size();
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    std::string mono;
    for (int t = 0; t < 2 * n; ++t) {
      const int exp = e[static_cast<size_t>(t)];
      if (exp == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += (t < n ? "x" + std::to_string(t + 1) : "y" + std::to_string(t - n + 1));
      if (exp > 1) mono += "^" + std::to_string(exp);
    }
    std::string body;
    if (mono.empty()) body = mag.str();
    else if (mag == 1) body = mono;
    else body = mag.str() + "*" + mono;
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
  }
  return out;
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

// DOT digraph; nodes are numbered and carry their canonical string as the
// label, weak-order edges carry the operator index as label="i" (strong
// Hasse edges, label 0, are left unlabeled).
inline std::string poset_to_dot(const PosetGraph& g, const std::string& name = "poset") {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (size_t t = 0; t < g.nodes.size(); ++t) out << "  n" << t << " [label=" << detail::dot_quote(g.nodes[t]) << "];\n";
  for (const auto& e : g.edges) {
    out << "  n" << e[0] << " -> n" << e[1];
    if (e[2] != 0) out << " [label=\"" << e[2] << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

// "0,1,0;1,-1,1;0,1,0" -> Asm.
inline Asm parse_asm_rows(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<int> entries;
    std::stringstream rs(row);
    std::string tok;
    while (std::getline(rs, tok, ',')) {
      size_t pos = 0;
      int v;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("asm text: bad entry '" + tok + "'");
      }
      if (pos != tok.size()) throw std::invalid_argument("asm text: bad entry '" + tok + "'");
      entries.push_back(v);
    }
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw std::invalid_argument("asm text: empty");
  return validate_asm(static_cast<int>(rows.size()), rows);
}

// "31524" (digits, n <= 9) or "3,1,5,2,4" -> Permutation.
inline Permutation parse_perm(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("permutation text: empty");
  std::vector<int> v;
  if (text.find(',') == std::string::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("permutation text: bad character '" + std::string(1, c) + "'");
      v.push_back(c - '0');
    }
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      size_t pos = 0;
      int x;
      try {
        x = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("permutation text: bad entry '" + tok + "'");
      }
      if (pos != tok.size()) throw std::invalid_argument("permutation text: bad entry '" + tok + "'");
      v.push_back(x);
    }
  }
  return Permutation(std::move(v));
}

// "{213,132}" -> Antichain.
inline Antichain parse_antichain(const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') throw std::invalid_argument("antichain text: expected {w1,w2,...}");
  const std::string inner = text.substr(1, text.size() - 2);
  std::vector<Permutation> perms;
  std::stringstream ss(inner);
  std::string tok;
  while (std::getline(ss, tok, ',')) perms.push_back(parse_perm(tok));
  return Antichain::of(std::move(perms));
}

// On-disk cache: JSON-lines, first line a header with the format version,
// then one {"key": ..., "poly": ...} object per line, sorted by key.
inline constexpr int kPolyCacheVersion = 1;

inline void save_poly_cache(const PolyCache& cache, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cache: cannot write " + path);
  out << json{{"format", "asmvar-poly-cache"}, {"version", kPolyCacheVersion}}.dump() << "\n";
  for (const auto& [key, poly] : cache.snapshot()) out << json{{"key", key}, {"poly", to_json(poly)}}.dump() << "\n";
}

inline void load_poly_cache(PolyCache& cache, const std::string& path) {
  std::ifstream in(path);
  if (!in) return;  // absent cache files are simply cold
  std::string line;
  if (!std::getline(in, line)) return;
  const json header = json::parse(line);
  if (header.value("format", "") != "asmvar-poly-cache" || header.value("version", -1) != kPolyCacheVersion)
    throw std::invalid_argument("cache: unrecognized header in " + path);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json entry = json::parse(line);
    cache.insert(entry.at("key").get<std::string>(), poly_from_json(entry.at("poly")));
  }
}

}  // namespace asmvar
