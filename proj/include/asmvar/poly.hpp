#pragma once

// Multivariate polynomials over Z in x_1..x_n, y_1..y_n, exact arithmetic.
// Terms are keyed by exponent vectors of length 2n (x-block first) and held
// in graded-lexicographic order: ascending total degree, ties broken by the
// lexicographically larger exponent vector first.  That order is also the
// canonical serialization order.
//
// The divided difference is computed termwise by the telescoping identity
//   (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a) / (x_i - x_{i+1})
//     = sign * (x_i x_{i+1})^min(a,b) * sum_k x_i^{d-1-k} x_{i+1}^k,
// so no polynomial division happens; the defining identity
// delta_i(f) * (x_i - x_{i+1}) = f - s_i(f) is asserted on every call.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace asmvar {

using BigInt = boost::multiprecision::cpp_int;

struct GradedLexOrder {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<std::vector<int>, BigInt, GradedLexOrder>;

  explicit MultiPoly(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("poly: n must be >= 1");
  }

  static MultiPoly zero(int n) { return MultiPoly(n); }

  static MultiPoly constant(int n, BigInt c) {
    MultiPoly p(n);
    if (c != 0) p.terms_.emplace(std::vector<int>(static_cast<size_t>(2 * n), 0), std::move(c));
    return p;
  }

  static MultiPoly monomial(int n, std::vector<int> exp, BigInt c) {
    if (static_cast<int>(exp.size()) != 2 * n) throw std::invalid_argument("poly: exponent vector must have length 2n");
    for (int e : exp)
      if (e < 0) throw std::invalid_argument("poly: negative exponent");
    MultiPoly p(n);
    if (c != 0) p.terms_.emplace(std::move(exp), std::move(c));
    return p;
  }

  static MultiPoly x(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("poly: x index out of range");
    std::vector<int> e(static_cast<size_t>(2 * n), 0);
    e[static_cast<size_t>(i - 1)] = 1;
    return monomial(n, std::move(e), 1);
  }

  static MultiPoly y(int n, int j) {
    if (j < 1 || j > n) throw std::invalid_argument("poly: y index out of range");
    std::vector<int> e(static_cast<size_t>(2 * n), 0);
    e[static_cast<size_t>(n + j - 1)] = 1;
    return monomial(n, std::move(e), 1);
  }

  int block_size() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  BigInt coef(const std::vector<int>& exp) const {
    const auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  // Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }

  void add_term(const std::vector<int>& exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(exp, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    check_same(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    check_same(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same(a, b);
    MultiPoly r(a.n_);
    std::vector<int> e(static_cast<size_t>(2 * a.n_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (size_t t = 0; t < e.size(); ++t) e[t] = ea[t] + eb[t];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend MultiPoly operator*(const BigInt& c, const MultiPoly& a) {
    MultiPoly r(a.n_);
    if (c == 0) return r;
    for (const auto& [e, k] : a.terms_) r.terms_.emplace(e, c * k);
    return r;
  }

 private:
  static void check_same(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("poly: variable block size mismatch");
  }

  int n_;
  TermMap terms_;
};

// f with x_i and x_{i+1} exchanged.
inline MultiPoly swap_x(const MultiPoly& f, int i) {
  const int n = f.block_size();
  if (i < 1 || i >= n) throw std::invalid_argument("swap_x: index out of range");
  MultiPoly r(n);
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> e2 = e;
    std::swap(e2[static_cast<size_t>(i - 1)], e2[static_cast<size_t>(i)]);
    r.add_term(e2, c);
  }
  return r;
}

// delta_i(f) = (f - s_i(f)) / (x_i - x_{i+1}).
inline MultiPoly divided_difference(const MultiPoly& f, int i) {
  const int n = f.block_size();
  if (i < 1 || i >= n) throw std::invalid_argument("divided_difference: index out of range");
  MultiPoly r(n);
  const size_t pi = static_cast<size_t>(i - 1), qi = static_cast<size_t>(i);
  for (const auto& [e, c] : f.terms()) {
    const int a = e[pi], b = e[qi];
    if (a == b) continue;
    const int lo = std::min(a, b), d = std::abs(a - b);
    const BigInt s = a > b ? c : -c;
    std::vector<int> e2 = e;
    for (int k = 0; k < d; ++k) {
      e2[pi] = lo + d - 1 - k;
      e2[qi] = lo + k;
      r.add_term(e2, s);
    }
  }
  // Structural check, always on: the quotient must clear the denominator.
  const MultiPoly lhs = r * (MultiPoly::x(n, i) - MultiPoly::x(n, i + 1));
  if (!(lhs == f - swap_x(f, i))) throw std::logic_error("divided_difference: result times (x_i - x_{i+1}) does not equal f - s_i(f)");
  return r;
}

// K-theoretic operator pi_i(f) = delta_i((1 - x_{i+1}) * f).
inline MultiPoly k_divided_difference(const MultiPoly& f, int i) {
  const int n = f.block_size();
  if (i < 1 || i >= n) throw std::invalid_argument("k_divided_difference: index out of range");
  const MultiPoly g = (MultiPoly::constant(n, 1) - MultiPoly::x(n, i + 1)) * f;
  return divided_difference(g, i);
}

// Sum of partial derivatives with respect to every x variable.
inline MultiPoly nabla(const MultiPoly& f) {
  const int n = f.block_size();
  MultiPoly r(n);
  for (const auto& [e, c] : f.terms()) {
    for (int i = 0; i < n; ++i) {
      const int a = e[static_cast<size_t>(i)];
      if (a == 0) continue;
      std::vector<int> e2 = e;
      e2[static_cast<size_t>(i)] = a - 1;
      r.add_term(e2, c * a);
    }
  }
  return r;
}

// Euler operator sum_i x_i d/dx_i: scales each term by its total x-degree.
inline MultiPoly euler(const MultiPoly& f) {
  const int n = f.block_size();
  MultiPoly r(n);
  for (const auto& [e, c] : f.terms()) {
    const int xd = std::accumulate(e.begin(), e.begin() + n, 0);
    if (xd != 0) r.add_term(e, c * xd);
  }
  return r;
}

// f with every y_j set to 0 (drops all terms of positive y-degree).
inline MultiPoly substitute_y_zero(const MultiPoly& f) {
  const int n = f.block_size();
  MultiPoly r(n);
  for (const auto& [e, c] : f.terms()) {
    const int yd = std::accumulate(e.begin() + n, e.end(), 0);
    if (yd == 0) r.add_term(e, c);
  }
  return r;
}

// f(x, -y): each term picks up (-1)^(total y-degree).
inline MultiPoly negate_y(const MultiPoly& f) {
  const int n = f.block_size();
  MultiPoly r(n);
  for (const auto& [e, c] : f.terms()) {
    const int yd = std::accumulate(e.begin() + n, e.end(), 0);
    r.add_term(e, yd % 2 == 0 ? c : -c);
  }
  return r;
}

// Homogeneous component of minimal total degree (zero for the zero poly).
inline MultiPoly lowest_degree_part(const MultiPoly& f) {
  MultiPoly r(f.block_size());
  if (f.is_zero()) return r;
  // The term map is graded, so the first term has minimal total degree.
  const int d = std::accumulate(f.terms().begin()->first.begin(), f.terms().begin()->first.end(), 0);
  for (const auto& [e, c] : f.terms()) {
    if (std::accumulate(e.begin(), e.end(), 0) != d) break;
    r.add_term(e, c);
  }
  return r;
}

// f(t, t, ..., t, y = 0) as a dense univariate coefficient list, index = degree.
inline std::vector<BigInt> substitute_x_all_t(const MultiPoly& f) {
  const int n = f.block_size();
  std::vector<BigInt> out;
  for (const auto& [e, c] : f.terms()) {
    const int yd = std::accumulate(e.begin() + n, e.end(), 0);
    if (yd != 0) continue;
    const int xd = std::accumulate(e.begin(), e.begin() + n, 0);
    if (static_cast<int>(out.size()) <= xd) out.resize(static_cast<size_t>(xd) + 1, BigInt(0));
    out[static_cast<size_t>(xd)] += c;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace asmvar
