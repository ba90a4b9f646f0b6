#pragma once

// Core value types for alternating sign matrices (ASMs): the matrices
// themselves, their corner-sum (rank) matrices, permutations, and the
// combinatorial cell data attached to them (inversions, essential set,
// bigrassmannian permutations).
//
// Conventions used throughout the library:
//   * matrix rows/columns are 1-based, row 1 at the top;
//   * rank matrices live on the (n+1)x(n+1) grid [0,n]^2, 0-based;
//   * a permutation w embeds as the matrix with 1s in cells (i, w(i));
//   * composition is (v*w)(i) = v(w(i)), so matrices satisfy
//     M(v*w) = M(w) * M(v).

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace asmvar {

// Thrown when a request exceeds a configured feasibility bound (the CLI maps
// this to its own exit code, distinct from malformed input).
struct bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

namespace detail {

inline std::string cell_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace detail

class Permutation {
 public:
  // One-line notation, 1-based values; validates that it is a bijection.
  explicit Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
    const int n = static_cast<int>(oneline_.size());
    if (n == 0) throw std::invalid_argument("permutation: empty one-line notation");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : oneline_) {
      if (v < 1 || v > n) throw std::invalid_argument("permutation: value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("permutation: repeated value " + std::to_string(v));
      seen[static_cast<size_t>(v)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  // The longest element n, n-1, ..., 1.
  static Permutation longest(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(v));
  }

  // Simple transposition s_i swapping i and i+1, for 1 <= i <= n-1.
  static Permutation simple(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple transposition index out of range");
    Permutation w = identity(n);
    std::swap(w.oneline_[static_cast<size_t>(i - 1)], w.oneline_[static_cast<size_t>(i)]);
    return w;
  }

  int n() const { return static_cast<int>(oneline_.size()); }
  int operator()(int i) const { return oneline_[static_cast<size_t>(i - 1)]; }
  const std::vector<int>& oneline() const { return oneline_; }

  Permutation inverse() const {
    std::vector<int> v(oneline_.size());
    for (int i = 1; i <= n(); ++i) v[static_cast<size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(v));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.oneline_ == b.oneline_; }
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.oneline_ <=> b.oneline_; }

 private:
  std::vector<int> oneline_;
};

// (v*w)(i) = v(w(i)).  Right multiplication by s_i swaps positions i, i+1 of
// the one-line word; left multiplication swaps the values i, i+1.
inline Permutation compose(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> r(static_cast<size_t>(v.n()));
  for (int i = 1; i <= v.n(); ++i) r[static_cast<size_t>(i - 1)] = v(w(i));
  return Permutation(std::move(r));
}

inline Permutation right_times_simple(const Permutation& w, int i) {
  std::vector<int> v = w.oneline();
  if (i < 1 || i >= w.n()) throw std::invalid_argument("simple transposition index out of range");
  std::swap(v[static_cast<size_t>(i - 1)], v[static_cast<size_t>(i)]);
  return Permutation(std::move(v));
}

inline Permutation left_times_simple(int i, const Permutation& w) {
  std::vector<int> v = w.oneline();
  if (i < 1 || i >= w.n()) throw std::invalid_argument("simple transposition index out of range");
  for (auto& x : v) {
    if (x == i) x = i + 1;
    else if (x == i + 1) x = i;
  }
  return Permutation(std::move(v));
}

// Coxeter length = number of inversions of the one-line word.
inline int coxeter_length(const Permutation& w) {
  int len = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++len;
  return len;
}

// Right descents {i : w(i) > w(i+1)}, ascending.
inline std::vector<int> descents(const Permutation& w) {
  std::vector<int> d;
  for (int i = 1; i < w.n(); ++i)
    if (w(i) > w(i + 1)) d.push_back(i);
  return d;
}

class RankMatrix;

class Asm {
 public:
  int n() const { return n_; }
  int at(int i, int j) const { return e_[static_cast<size_t>((i - 1) * n_ + (j - 1))]; }

  friend bool operator==(const Asm& a, const Asm& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
  friend auto operator<=>(const Asm& a, const Asm& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.e_ <=> b.e_;
  }

  friend Asm validate_asm(int n, const std::vector<std::vector<int>>& rows);

 private:
  Asm(int n, std::vector<int> e) : n_(n), e_(std::move(e)) {}
  int n_;
  std::vector<int> e_;  // row-major
};

// Checks the three ASM conditions and reports the first violation with its
// location: entries lie in {-1,0,1}, every row/column prefix sum lies in
// {0,1}, and every row/column sums to 1.
inline Asm validate_asm(int n, const std::vector<std::vector<int>>& rows) {
  if (n < 1) throw std::invalid_argument("asm: n must be >= 1");
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("asm: expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
  std::vector<int> e;
  e.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto& row = rows[static_cast<size_t>(i - 1)];
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("asm: row " + std::to_string(i) + " has length " + std::to_string(row.size()) + ", expected " + std::to_string(n));
    for (int j = 1; j <= n; ++j) {
      const int v = row[static_cast<size_t>(j - 1)];
      if (v < -1 || v > 1) throw std::invalid_argument("asm: entry " + detail::cell_str(i, j) + " is " + std::to_string(v) + ", not in {-1,0,1}");
      e.push_back(v);
    }
  }
  for (int i = 1; i <= n; ++i) {
    int p = 0;
    for (int j = 1; j <= n; ++j) {
      p += e[static_cast<size_t>((i - 1) * n + (j - 1))];
      if (p < 0 || p > 1) throw std::invalid_argument("asm: row " + std::to_string(i) + " prefix sum through column " + std::to_string(j) + " is " + std::to_string(p) + ", not in {0,1}");
    }
    if (p != 1) throw std::invalid_argument("asm: row " + std::to_string(i) + " sums to " + std::to_string(p) + ", expected 1");
  }
  for (int j = 1; j <= n; ++j) {
    int p = 0;
    for (int i = 1; i <= n; ++i) {
      p += e[static_cast<size_t>((i - 1) * n + (j - 1))];
      if (p < 0 || p > 1) throw std::invalid_argument("asm: column " + std::to_string(j) + " prefix sum through row " + std::to_string(i) + " is " + std::to_string(p) + ", not in {0,1}");
    }
    if (p != 1) throw std::invalid_argument("asm: column " + std::to_string(j) + " sums to " + std::to_string(p) + ", expected 1");
  }
  return Asm(n, std::move(e));
}

// Corner-sum matrix rk(i,j) = sum of entries in the top-left i x j submatrix,
// defined on [0,n]^2.  An (n+1)x(n+1) integer grid is a rank matrix of an ASM
// iff rk(i,0) = rk(0,i) = 0, rk(i,n) = rk(n,i) = i, and all unit steps (right
// or down) change the value by 0 or 1; the ASM is recovered as the second
// difference.
class RankMatrix {
 public:
  static RankMatrix from_values(const std::vector<std::vector<int>>& values) {
    const int rows = static_cast<int>(values.size());
    if (rows < 2) throw std::invalid_argument("rank: expected an (n+1)x(n+1) grid with n >= 1");
    const int n = rows - 1;
    std::vector<int> v;
    v.reserve(static_cast<size_t>(rows) * static_cast<size_t>(rows));
    for (int i = 0; i <= n; ++i) {
      const auto& row = values[static_cast<size_t>(i)];
      if (static_cast<int>(row.size()) != rows) throw std::invalid_argument("rank: row " + std::to_string(i) + " has length " + std::to_string(row.size()) + ", expected " + std::to_string(rows));
      v.insert(v.end(), row.begin(), row.end());
    }
    return from_flat(n, std::move(v));
  }

  int n() const { return n_; }
  int at(int i, int j) const { return v_[static_cast<size_t>(i * (n_ + 1) + j)]; }

  friend bool operator==(const RankMatrix& a, const RankMatrix& b) { return a.n_ == b.n_ && a.v_ == b.v_; }

  friend RankMatrix rank_matrix(const Asm& a);
  friend Asm asm_from_rank(const RankMatrix& r);
  static RankMatrix from_flat(int n, std::vector<int> v) {
    RankMatrix r(n, std::move(v));
    r.validate();
    return r;
  }

 private:
  RankMatrix(int n, std::vector<int> v) : n_(n), v_(std::move(v)) {}

  void validate() const {
    for (int i = 0; i <= n_; ++i) {
      if (at(i, 0) != 0) throw std::invalid_argument("rank: boundary value at " + detail::cell_str(i, 0) + " is " + std::to_string(at(i, 0)) + ", expected 0");
      if (at(0, i) != 0) throw std::invalid_argument("rank: boundary value at " + detail::cell_str(0, i) + " is " + std::to_string(at(0, i)) + ", expected 0");
      if (at(i, n_) != i) throw std::invalid_argument("rank: boundary value at " + detail::cell_str(i, n_) + " is " + std::to_string(at(i, n_)) + ", expected " + std::to_string(i));
      if (at(n_, i) != i) throw std::invalid_argument("rank: boundary value at " + detail::cell_str(n_, i) + " is " + std::to_string(at(n_, i)) + ", expected " + std::to_string(i));
    }
    for (int i = 0; i <= n_; ++i) {
      for (int j = 1; j <= n_; ++j) {
        const int d = at(i, j) - at(i, j - 1);
        if (d < 0 || d > 1) throw std::invalid_argument("rank: step from " + detail::cell_str(i, j - 1) + " to " + detail::cell_str(i, j) + " changes by " + std::to_string(d) + ", expected 0 or 1");
      }
    }
    for (int j = 0; j <= n_; ++j) {
      for (int i = 1; i <= n_; ++i) {
        const int d = at(i, j) - at(i - 1, j);
        if (d < 0 || d > 1) throw std::invalid_argument("rank: step from " + detail::cell_str(i - 1, j) + " to " + detail::cell_str(i, j) + " changes by " + std::to_string(d) + ", expected 0 or 1");
      }
    }
  }

  int n_;
  std::vector<int> v_;  // (n+1)x(n+1), row-major
};

inline RankMatrix rank_matrix(const Asm& a) {
  const int n = a.n();
  std::vector<int> v(static_cast<size_t>(n + 1) * static_cast<size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      v[static_cast<size_t>(i * (n + 1) + j)] =
          a.at(i, j) + v[static_cast<size_t>((i - 1) * (n + 1) + j)] + v[static_cast<size_t>(i * (n + 1) + j - 1)] - v[static_cast<size_t>((i - 1) * (n + 1) + j - 1)];
  return RankMatrix(n, std::move(v));
}

inline Asm asm_from_rank(const RankMatrix& r) {
  const int n = r.n();
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = r.at(i, j) - r.at(i - 1, j) - r.at(i, j - 1) + r.at(i - 1, j - 1);
  return validate_asm(n, rows);
}

inline Asm perm_to_asm(const Permutation& w) {
  const int n = w.n();
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 1; i <= n; ++i) rows[static_cast<size_t>(i - 1)][static_cast<size_t>(w(i)) - 1] = 1;
  return validate_asm(n, rows);
}

// Inverse of perm_to_asm when the matrix has no -1 entries.
inline std::optional<Permutation> asm_to_perm(const Asm& a) {
  std::vector<int> oneline(static_cast<size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i) {
    int col = 0;
    for (int j = 1; j <= a.n(); ++j) {
      if (a.at(i, j) == -1) return std::nullopt;
      if (a.at(i, j) == 1) col = j;
    }
    oneline[static_cast<size_t>(i - 1)] = col;
  }
  return Permutation(std::move(oneline));
}

inline Asm transpose(const Asm& a) {
  const int n = a.n();
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = a.at(j, i);
  return validate_asm(n, rows);
}

// Inversions of an ASM: cells (i,j) whose row prefix sum through column j and
// column prefix sum through row i both vanish.  Equivalently (asserted here)
// rk(i,j) = rk(i,j-1) = rk(i-1,j).  Cells carrying a -1 entry are always
// inversions; the remaining inversions have entry 0.
inline std::vector<Cell> inversions(const Asm& a) {
  const int n = a.n();
  const RankMatrix r = rank_matrix(a);
  std::vector<Cell> out;
  for (int i = 1; i <= n; ++i) {
    int rowpref = 0;
    for (int j = 1; j <= n; ++j) {
      rowpref += a.at(i, j);
      int colpref = 0;
      for (int k = 1; k <= i; ++k) colpref += a.at(k, j);
      const bool by_sums = rowpref == 0 && colpref == 0;
      const bool by_rank = r.at(i, j) == r.at(i, j - 1) && r.at(i, j) == r.at(i - 1, j);
      if (by_sums != by_rank) throw std::logic_error("inversions: prefix-sum and rank characterizations disagree at " + detail::cell_str(i, j));
      if (by_sums) out.push_back({i, j});
    }
  }
  return out;
}

// Cells with entry -1.
inline std::vector<Cell> negatives(const Asm& a) {
  std::vector<Cell> out;
  for (int i = 1; i <= a.n(); ++i)
    for (int j = 1; j <= a.n(); ++j)
      if (a.at(i, j) == -1) out.push_back({i, j});
  return out;
}

// Inversions with entry 0 (for a permutation matrix this is its Rothe diagram).
inline std::vector<Cell> rothe_diagram(const Asm& a) {
  std::vector<Cell> out;
  for (const Cell& c : inversions(a))
    if (a.at(c.row, c.col) == 0) out.push_back(c);
  return out;
}

// Essential cells: inversions whose right and lower neighbours are not
// inversions.  Cross-checked against the rank-matrix characterization
// rk(i,j) = rk(i,j-1) = rk(i-1,j) = rk(i,j+1) - 1 = rk(i+1,j) - 1.
inline std::vector<Cell> essential_set(const Asm& a) {
  const int n = a.n();
  const auto inv = inversions(a);
  const auto is_inv = [&inv](int i, int j) {
    return std::binary_search(inv.begin(), inv.end(), Cell{i, j});
  };
  const RankMatrix r = rank_matrix(a);
  std::vector<Cell> out;
  for (const Cell& c : inv) {
    const bool by_neighbours = !is_inv(c.row + 1, c.col) && !is_inv(c.row, c.col + 1);
    // Inversions never occur in row n or column n, so c.row+1, c.col+1 <= n.
    const int v = r.at(c.row, c.col);
    const bool by_rank = v == r.at(c.row, c.col - 1) && v == r.at(c.row - 1, c.col) && v == r.at(c.row, c.col + 1) - 1 && v == r.at(c.row + 1, c.col) - 1;
    if (by_neighbours != by_rank) throw std::logic_error("essential_set: neighbour and rank characterizations disagree at " + detail::cell_str(c.row, c.col));
    if (by_neighbours) out.push_back(c);
  }
  return out;
}

// Bigrassmannian permutation [(i,j), r]_b in S_n: the unique minimal
// permutation whose rank matrix has value r at (i,j).
struct BigrassTriple {
  int row = 0;
  int col = 0;
  int rank = 0;
  int n = 0;
  friend auto operator<=>(const BigrassTriple&, const BigrassTriple&) = default;
};

inline Permutation bigrassmannian(const BigrassTriple& t) {
  const int i = t.row, j = t.col, r = t.rank, n = t.n;
  if (i < 1 || j < 1) throw std::invalid_argument("bigrassmannian: need i,j >= 1");
  if (r < 0 || r >= std::min(i, j)) throw std::invalid_argument("bigrassmannian: need 0 <= r < min(i,j)");
  if (i + j - r > n) throw std::invalid_argument("bigrassmannian: need i + j - r <= n");
  std::vector<int> v(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    int img;
    if (k <= r) img = k;
    else if (k <= i) img = j + (k - r);
    else if (k <= i + j - r) img = r + (k - i);
    else img = k;
    v[static_cast<size_t>(k - 1)] = img;
  }
  return Permutation(std::move(v));
}

// Canonical text encodings: ASMs as semicolon-separated rows of
// comma-separated entries; permutations as the one-line word (digits
// concatenated for n <= 9, comma-separated otherwise).
inline std::string canonical_string(const Asm& a) {
  std::string s;
  for (int i = 1; i <= a.n(); ++i) {
    if (i > 1) s += ';';
    for (int j = 1; j <= a.n(); ++j) {
      if (j > 1) s += ',';
      s += std::to_string(a.at(i, j));
    }
  }
  return s;
}

inline std::string canonical_string(const Permutation& w) {
  std::string s;
  for (int i = 1; i <= w.n(); ++i) {
    if (w.n() > 9 && i > 1) s += ',';
    s += std::to_string(w(i));
  }
  return s;
}

}  // namespace asmvar
