#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ellft/classfun.hpp"
#include "ellft/cyclotomic.hpp"
#include "ellft/group.hpp"

namespace ellft {

struct CharacterTable {
  FiniteGroup group;
  std::vector<ClassFunction> rows;       // canonical order: degree, then lexicographic values
  std::vector<std::string> names;        // one display name per row
  std::vector<std::string> class_names;  // class representatives as generator words

  const ClassFunction& by_name(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return rows[i];
    throw std::invalid_argument("no character named " + name);
  }

  long degree(std::size_t row) const {
    // class 0 is the identity class
    return rows[row].values[0].rational_value().get_num().get_si();
  }

  nlohmann::json serialize() const {
    nlohmann::json classes = nlohmann::json::array();
    for (std::size_t c = 0; c < group.class_count(); ++c)
      classes.push_back({{"rep", class_names[c]}, {"size", group.class_size(static_cast<int>(c))}});
    nlohmann::json chars = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      nlohmann::json vals = nlohmann::json::array();
      for (const auto& v : rows[i].values) vals.push_back(v.serialize());
      chars.push_back({{"name", names[i]}, {"values", vals}});
    }
    return {{"order", group.order()}, {"classes", classes}, {"characters", chars}};
  }
};

namespace detail {

// Arithmetic mod a small prime.
struct Fp {
  long p;
  long add(long a, long b) const { return (a + b) % p; }
  long sub(long a, long b) const { return ((a - b) % p + p) % p; }
  long mul(long a, long b) const { return a * b % p; }
  long pow(long a, long e) const {
    long r = 1; a %= p; if (a < 0) a += p;
    while (e > 0) { if (e & 1) r = mul(r, a); a = mul(a, a); e >>= 1; }
    return r;
  }
  long inv(long a) const { return pow(a, p - 2); }
};

inline long find_dixon_prime(long exponent, long order) {
  double bound = 2.0 * std::sqrt(static_cast<double>(order));
  for (long l = exponent + 1;; l += exponent) {
    if (l <= bound || order % l == 0) continue;
    bool prime = l > 1;
    for (long d = 2; d * d <= l; ++d)
      if (l % d == 0) { prime = false; break; }
    if (prime) return l;
  }
}

inline long primitive_root(long p) {
  std::vector<long> fac;
  long m = p - 1;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) { fac.push_back(d); while (m % d == 0) m /= d; }
  if (m > 1) fac.push_back(m);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    Fp f{p};
    for (long q : fac)
      if (f.pow(g, (p - 1) / q) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

using FpMat = std::vector<std::vector<long>>;

// Column space of b (columns = basis vectors); returns kernel basis of m as columns.
inline std::vector<std::vector<long>> fp_kernel(const FpMat& m, const Fp& f) {
  std::size_t n = m.size(), cols = m.empty() ? 0 : m[0].size();
  FpMat a = m;
  std::vector<long> pivot_col;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < n; ++j) {
    std::size_t piv = r;
    while (piv < n && a[piv][j] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[r]);
    long d = f.inv(a[r][j]);
    for (std::size_t jj = 0; jj < cols; ++jj) a[r][jj] = f.mul(a[r][jj], d);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][j] == 0) continue;
      long c = a[i][j];
      for (std::size_t jj = 0; jj < cols; ++jj) a[i][jj] = f.sub(a[i][jj], f.mul(c, a[r][jj]));
    }
    pivot_col.push_back(static_cast<long>(j));
    ++r;
  }
  std::vector<std::vector<long>> kernel;
  std::vector<char> is_pivot(cols, 0);
  for (long j : pivot_col) is_pivot[j] = 1;
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<long> v(cols, 0);
    v[j] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = f.sub(0, a[i][j]);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace detail

/// Exact irreducible character table by Dixon's method: split the class
/// algebra over F_l for a prime l = 1 mod exp(G), l > 2*sqrt(|G|), then lift
/// each value to a sum of roots of unity via the discrete Fourier formula.
/// Deterministic: the splitting walks class matrices in canonical class
/// order and eigenvalues in increasing order.
inline CharacterTable character_table(const FiniteGroup& g) {
  if (g.order() > 2000) throw std::invalid_argument("character_table: group order above the 2000 bound");
  const int k = static_cast<int>(g.class_count());
  const long n = g.order();
  const long e = g.exponent();
  const long l = detail::find_dixon_prime(e, n);
  detail::Fp f{l};

  // structure constants: (M_i)_{j,m} = #{(x,y) in C_i x C_j : x*y = rep_m}
  std::vector<detail::FpMat> cm(k, detail::FpMat(k, std::vector<long>(k, 0)));
  std::vector<std::vector<int>> class_elems(k);
  for (int a = 0; a < n; ++a) class_elems[g.class_of(a)].push_back(a);
  for (int i = 0; i < k; ++i)
    for (int m = 0; m < k; ++m) {
      int rep = g.class_rep(m);
      for (int x : class_elems[i]) {
        int y = g.mul(g.inv(x), rep);
        cm[i][g.class_of(y)][m] = f.add(cm[i][g.class_of(y)][m], 1);
      }
    }

  // split F_l^k into common eigenspaces of all class matrices
  std::vector<std::vector<std::vector<long>>> spaces;  // each: list of basis columns (length k)
  {
    std::vector<std::vector<long>> full;
    for (int i = 0; i < k; ++i) {
      std::vector<long> v(k, 0);
      v[i] = 1;
      full.push_back(v);
    }
    spaces.push_back(full);
  }
  for (int i = 1; i < k; ++i) {
    std::vector<std::vector<std::vector<long>>> next;
    for (auto& sp : spaces) {
      if (sp.size() == 1) { next.push_back(sp); continue; }
      // restrict M_i to span(sp): columns of M_i * B expressed in B-coordinates
      std::size_t d = sp.size();
      // solve B * A = M*B column by column via echelon form of B
      detail::FpMat bmat(k, std::vector<long>(d));
      for (std::size_t c = 0; c < d; ++c)
        for (int r = 0; r < k; ++r) bmat[r][c] = sp[c][r];
      detail::FpMat mb(k, std::vector<long>(d, 0));
      for (std::size_t c = 0; c < d; ++c)
        for (int r = 0; r < k; ++r) {
          long s = 0;
          for (int t = 0; t < k; ++t) s = f.add(s, f.mul(cm[i][r][t], sp[c][t]));
          mb[r][c] = s;
        }
      // gaussian elimination on [B | MB]
      detail::FpMat aug(k, std::vector<long>(2 * d));
      for (int r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < d; ++c) aug[r][c] = bmat[r][c];
        for (std::size_t c = 0; c < d; ++c) aug[r][d + c] = mb[r][c];
      }
      std::size_t rr = 0;
      for (std::size_t j = 0; j < d && rr < static_cast<std::size_t>(k); ++j) {
        std::size_t piv = rr;
        while (piv < static_cast<std::size_t>(k) && aug[piv][j] == 0) ++piv;
        if (piv == static_cast<std::size_t>(k)) throw std::logic_error("subspace basis is rank deficient");
        std::swap(aug[piv], aug[rr]);
        long dd = f.inv(aug[rr][j]);
        for (std::size_t jj = 0; jj < 2 * d; ++jj) aug[rr][jj] = f.mul(aug[rr][jj], dd);
        for (std::size_t r2 = 0; r2 < static_cast<std::size_t>(k); ++r2) {
          if (r2 == rr || aug[r2][j] == 0) continue;
          long c2 = aug[r2][j];
          for (std::size_t jj = 0; jj < 2 * d; ++jj) aug[r2][jj] = f.sub(aug[r2][jj], f.mul(c2, aug[rr][jj]));
        }
        ++rr;
      }
      detail::FpMat a(d, std::vector<long>(d));
      for (std::size_t r2 = 0; r2 < d; ++r2)
        for (std::size_t c = 0; c < d; ++c) a[r2][c] = aug[r2][d + c];
      // eigen-split A by scanning eigenvalues in increasing order
      bool split_any = false;
      for (long lam = 0; lam < l; ++lam) {
        detail::FpMat shifted = a;
        for (std::size_t r2 = 0; r2 < d; ++r2) shifted[r2][r2] = f.sub(shifted[r2][r2], lam);
        auto ker = detail::fp_kernel(shifted, f);
        if (ker.empty()) continue;
        split_any = true;
        std::vector<std::vector<long>> sub;
        for (auto& coord : ker) {
          std::vector<long> v(k, 0);
          for (std::size_t c = 0; c < d; ++c)
            for (int r2 = 0; r2 < k; ++r2) v[r2] = f.add(v[r2], f.mul(coord[c], sp[c][r2]));
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
      if (!split_any) throw std::logic_error("class matrix has no eigenvalues over F_l");
    }
    spaces = std::move(next);
    bool done = true;
    for (auto& sp : spaces)
      if (sp.size() != 1) { done = false; break; }
    if (done) break;
  }
  if (static_cast<int>(spaces.size()) != k) throw std::logic_error("class algebra did not split into k characters");

  // inverse-class map
  std::vector<int> inv_class(k);
  for (int c = 0; c < k; ++c) inv_class[c] = g.class_of(g.inv(g.class_rep(c)));

  const long w0 = detail::primitive_root(l);

  // power maps and lift data per class
  std::vector<ClassFunction> rows;
  for (auto& sp : spaces) {
    std::vector<long> omega = sp[0];
    if (omega[0] == 0) throw std::logic_error("eigenvector vanishes at the identity class");
    long norm = f.inv(omega[0]);
    for (auto& x : omega) x = f.mul(x, norm);
    // degree: d^2 = |G| / sum_c omega_c * omega_{c^-1} / |C_c|
    long s = 0;
    for (int c = 0; c < k; ++c)
      s = f.add(s, f.mul(f.mul(omega[c], omega[inv_class[c]]), f.inv(g.class_size(c) % l)));
    long d2 = f.mul(n % l, f.inv(s));
    long deg = -1;
    for (long d = 1; 2 * d < l; ++d)
      if (f.mul(d, d) == d2) { deg = d; break; }
    if (deg < 0) throw std::logic_error("character degree is not a small square root");
    // chi(rep_c) mod l
    std::vector<long> chi_mod(k);
    for (int c = 0; c < k; ++c) chi_mod[c] = f.mul(f.mul(deg, omega[c]), f.inv(g.class_size(c) % l));
    // lift each value: chi(g) = sum_s a_s zeta_m^s with
    // a_s = (1/m) sum_i chi(g^i) z^{-is}, z = w0^{(l-1)/m}
    ClassFunction row(g);
    for (int c = 0; c < k; ++c) {
      int rep = g.class_rep(c);
      long m = g.element_order(rep);
      long z = f.pow(w0, (l - 1) / m);
      long zinv = f.inv(z);
      Cyclotomic val;
      long minv = f.inv(m % l);
      for (long sexp = 0; sexp < m; ++sexp) {
        long acc = 0;
        int p = 0;  // g^i
        for (long i = 0; i < m; ++i) {
          acc = f.add(acc, f.mul(chi_mod[g.class_of(p)], f.pow(zinv, (i * sexp) % (l - 1))));
          p = g.mul(p, rep);
        }
        long a_s = f.mul(acc, minv);
        if (a_s != 0) val += Cyclotomic(a_s) * Cyclotomic::root_of_unity(m, sexp);
      }
      row.values[c] = val;
    }
    rows.push_back(std::move(row));
  }

  // canonical row order: degree, then lexicographic on values
  std::sort(rows.begin(), rows.end(), [](const ClassFunction& a, const ClassFunction& b) {
    if (a.values[0] != b.values[0])
      return a.values[0].rational_value() < b.values[0].rational_value();
    return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(), b.values.end());
  });

  CharacterTable t;
  t.group = g;
  t.rows = std::move(rows);
  for (std::size_t i = 0; i < t.rows.size(); ++i) t.names.push_back("chi" + std::to_string(i));
  for (int c = 0; c < k; ++c) t.class_names.push_back(g.word(g.class_rep(c)));

  // internal consistency: sum of squared degrees
  long sum = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) sum += t.degree(i) * t.degree(i);
  if (sum != n) throw std::logic_error("character degrees do not satisfy sum d^2 = |G|");
  return t;
}

/// Attaches display names to table rows by matching value vectors.
/// Unmatched rows keep their default names; a requested name that matches no
/// row throws.
inline void bind_row_names(CharacterTable& t,
                           const std::vector<std::pair<std::string, std::vector<Cyclotomic>>>& bindings) {
  for (const auto& [name, values] : bindings) {
    bool found = false;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      if (t.rows[i].values == values) {
        t.names[i] = name;
        found = true;
        break;
      }
    if (!found) throw std::logic_error("no character row matches value vector for " + name);
  }
}

}  // namespace ellft
