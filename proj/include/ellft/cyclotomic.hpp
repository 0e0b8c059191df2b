#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ellft/rational.hpp"

namespace ellft {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

inline std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int v = 0;
      while (n % p == 0) { n /= p; ++v; }
      f.push_back({p, v});
    }
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

inline long gcd_long(long a, long b) { return std::gcd(a, b); }

inline long inv_mod(long a, long m) {
  long t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::logic_error("inv_mod: not invertible");
  return ((t % m) + m) % m;
}

// Precomputed data for one conductor n: prime decomposition, the CRT digit
// extractors, and the Zumbroich basis membership test.
struct ConductorInfo {
  long n = 1;
  struct PrimePart {
    long p, v, pv;       // p^v || n
    long cofactor;       // n / p^v
    long digit_mul;      // (n/p^v)^{-1} mod p^v, so digit = j*digit_mul mod p^v
    long pv1;            // p^{v-1}
  };
  std::vector<PrimePart> parts;
  std::vector<long> basis;          // sorted Zumbroich basis exponents
  std::vector<long> basis_index;    // exponent -> index into basis, or -1

  explicit ConductorInfo(long conductor) : n(conductor) {
    for (auto [p, v] : factorize(n)) {
      PrimePart pp;
      pp.p = p;
      pp.v = v;
      pp.pv = 1;
      for (int i = 0; i < v; ++i) pp.pv *= p;
      pp.cofactor = n / pp.pv;
      pp.digit_mul = inv_mod(pp.cofactor % pp.pv == 0 ? 1 : pp.cofactor, pp.pv);
      pp.pv1 = pp.pv / p;
      parts.push_back(pp);
    }
    basis_index.assign(n, -1);
    for (long j = 0; j < n; ++j) {
      if (is_basis_exponent(j)) {
        basis_index[j] = static_cast<long>(basis.size());
        basis.push_back(j);
      }
    }
  }

  long digit(long j, const PrimePart& pp) const { return (j % pp.pv) * pp.digit_mul % pp.pv; }

  // Zumbroich basis: for odd p^v || n the p-digit d must satisfy d >= p^{v-1}
  // (i.e. the leading base-p digit is nonzero); for 2^v (v>=2) it must satisfy
  // d < 2^{v-1}.
  bool is_basis_exponent(long j) const {
    for (const auto& pp : parts) {
      long d = digit(j, pp);
      if (pp.p == 2) {
        if (d >= pp.pv1) return false;
      } else {
        if (d < pp.pv1) return false;
      }
    }
    return true;
  }
};

// Rewrite of a single power zeta_n^j into the Zumbroich basis. All
// coefficients in the rewrite are +-1.
using BaseRow = std::vector<std::pair<long, int>>;

struct ConductorCache {
  ConductorInfo info;
  std::vector<BaseRow> rows;       // per exponent 0..n-1, lazily filled
  std::vector<char> rows_ready;
  explicit ConductorCache(long n) : info(n), rows(n), rows_ready(n, 0) {}
};

inline ConductorCache& conductor_cache(long n) {
  static std::mutex mu;
  static std::map<long, ConductorCache*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, new ConductorCache(n)).first;
  return *it->second;
}

inline const BaseRow& base_row(long n, long j) {
  ConductorCache& cc = conductor_cache(n);
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  j = ((j % n) + n) % n;
  if (cc.rows_ready[j]) return cc.rows[j];
  const ConductorInfo& ci = cc.info;
  // worklist of (exponent, sign)
  std::vector<std::pair<long, int>> work{{j, 1}};
  std::map<long, int> out;
  while (!work.empty()) {
    auto [e, s] = work.back();
    work.pop_back();
    const ConductorInfo::PrimePart* bad = nullptr;
    for (const auto& pp : ci.parts) {
      long d = ci.digit(e, pp);
      bool ok = (pp.p == 2) ? (d < pp.pv1) : (d >= pp.pv1);
      if (!ok) { bad = &pp; break; }
    }
    if (bad == nullptr) {
      out[e] += s;
      continue;
    }
    if (bad->p == 2) {
      // zeta^(e) = -zeta^(e - n/2)
      work.push_back({(e + n / 2) % n, -s});
    } else {
      // leading p-digit is zero: zeta^e = -sum_{b=1}^{p-1} zeta^{e + b n/p}
      for (long b = 1; b < bad->p; ++b) work.push_back({(e + b * (n / bad->p)) % n, -s});
    }
  }
  BaseRow row;
  for (auto [e, s] : out)
    if (s != 0) row.push_back({e, s});
  cc.rows[j] = std::move(row);
  cc.rows_ready[j] = 1;
  return cc.rows[j];
}

}  // namespace detail

/// An element of the universal cyclotomic field Q^ab, stored as a sparse
/// coefficient vector over the Zumbroich basis of Q(zeta_n) for the minimal
/// conductor n. Representation is unique: two values are equal iff their
/// (conductor, terms) data are identical. Rationals always have conductor 1.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long v) { if (v != 0) { n_ = 1; c_[0] = Rational(v); } }
  Cyclotomic(const Rational& q) {
    Rational v = q;
    v.canonicalize();  // two-argument mpq_class construction does not reduce
    if (v != 0) { n_ = 1; c_[0] = v; }
  }

  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return Cyclotomic(1); }

  /// zeta_n^k in canonical form.
  static Cyclotomic root_of_unity(long n, long k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: n must be >= 1");
    k = ((k % n) + n) % n;
    // strip zeta_{2m} with m odd via zeta_{2m} = -zeta_m^{(m+1)/2}
    long sign = 1;
    while (n % 2 == 0 && (n / 2) % 2 == 1) {
      long m = n / 2;
      if (k % 2 == 1) sign = -sign;
      k = (k % 2 == 1) ? (k * ((m + 1) / 2)) % m : (k / 2) % m;
      n = m;
    }
    std::map<long, Rational> raw;
    raw[k] = Rational(sign);
    return from_raw(n, std::move(raw));
  }

  long conductor() const { return n_; }
  const std::map<long, Rational>& terms() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return n_ == 1; }
  bool is_real() const { return conj() == *this; }

  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("value is not rational");
    return c_.empty() ? Rational(0) : c_.begin()->second;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    long N = std::lcm(a.n_, b.n_);
    std::map<long, Rational> raw;
    a.lift_into(N, raw, Rational(1));
    b.lift_into(N, raw, Rational(1));
    return from_raw(N, std::move(raw));
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    long N = std::lcm(a.n_, b.n_);
    std::map<long, Rational> raw;
    a.lift_into(N, raw, Rational(1));
    b.lift_into(N, raw, Rational(-1));
    return from_raw(N, std::move(raw));
  }

  Cyclotomic operator-() const {
    Cyclotomic r(*this);
    for (auto& [e, q] : r.c_) q = -q;
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    if (a.is_rational()) return b.scaled(a.rational_value());
    if (b.is_rational()) return a.scaled(b.rational_value());
    long N = std::lcm(a.n_, b.n_);
    long sa = N / a.n_, sb = N / b.n_;
    std::map<long, Rational> raw;
    for (const auto& [ea, qa] : a.c_)
      for (const auto& [eb, qb] : b.c_) {
        Rational q = qa * qb;
        for (const auto& [e, s] : detail::base_row(N, ea * sa + eb * sb))
          accumulate(raw, e, s > 0 ? q : -q);
      }
    return from_raw_based(N, std::move(raw));
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Multiplicative inverse, computed via the product of Galois conjugates:
  /// a * prod_{k != 1} sigma_k(a) is the (rational) field norm.
  Cyclotomic inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) return Cyclotomic(Rational(1) / rational_value());
    Cyclotomic prod = one();
    for (long k = 2; k < n_; ++k)
      if (std::gcd(k, n_) == 1) prod *= galois(k);
    Cyclotomic norm = *this * prod;
    if (!norm.is_rational()) throw std::logic_error("field norm must be rational");
    return prod.scaled(Rational(1) / norm.rational_value());
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }

  /// Image under the Galois automorphism zeta_n -> zeta_n^k, gcd(k, n) = 1.
  Cyclotomic galois(long k) const {
    if (n_ == 1) return *this;
    k = ((k % n_) + n_) % n_;
    if (std::gcd(k, n_) != 1) throw std::invalid_argument("galois: k not coprime to conductor");
    std::map<long, Rational> raw;
    for (const auto& [e, q] : c_)
      for (const auto& [e2, s] : detail::base_row(n_, e * k % n_))
        accumulate(raw, e2, s > 0 ? q : -q);
    // an automorphism preserves the conductor; skip the reduction scan
    Cyclotomic r;
    r.n_ = n_;
    r.c_ = std::move(raw);
    r.prune();
    if (r.c_.empty()) r.n_ = 1;
    return r;
  }

  /// Complex conjugation (zeta_n -> zeta_n^{-1}).
  Cyclotomic conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

  /// Positive real square root of a positive rational, inside Q^ab.
  /// sqrt(2) = zeta_8 - zeta_8^3; for odd primes the quadratic Gauss sum
  /// G_p = sum_a (a|p) zeta_p^a equals sqrt(p) for p = 1 mod 4 and
  /// i*sqrt(p) for p = 3 mod 4.
  static Cyclotomic sqrt_rational(const Rational& q) {
    if (q <= 0) throw std::domain_error("sqrt of nonpositive rational");
    // sqrt(a/b) = sqrt(a*b)/b
    mpz_class ab = q.get_num() * q.get_den();
    mpz_class s = 1, m = 1;
    for (mpz_class p = 2; p * p <= ab; ++p) {
      while (ab % (p * p) == 0) { s *= p; ab /= p * p; }
      if (ab % p == 0) { m *= p; ab /= p; }
    }
    m *= ab;  // squarefree part
    Cyclotomic r(Rational(s) / Rational(q.get_den()));
    if (mpz_class rem = m % 2; rem == 0) {
      r *= root_of_unity(8, 1) - root_of_unity(8, 3);
      m /= 2;
    }
    for (mpz_class p = 3; p <= m; p += 2) {
      if (m % p != 0) continue;
      m /= p;
      long pl = p.get_si();
      Cyclotomic g;
      for (long a = 1; a < pl; ++a)
        g += Cyclotomic(legendre(a, pl)) * root_of_unity(pl, a);
      if (pl % 4 == 3) g *= root_of_unity(4, 3);  // divide out i
      r *= g;
    }
    return r;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Arbitrary deterministic total order, used only for canonical sorting.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    auto ia = a.c_.begin(), ib = b.c_.begin();
    for (; ia != a.c_.end() && ib != b.c_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      int c = cmp(ia->second, ib->second);
      if (c != 0) return c < 0;
    }
    return ia == a.c_.end() && ib != b.c_.end();
  }

  nlohmann::json serialize() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, q] : c_) terms.push_back({e, rat_to_string(q)});
    return {{"conductor", n_}, {"terms", terms}};
  }

  static Cyclotomic parse(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("conductor") || !j.contains("terms"))
      throw ParseError("expected object with \"conductor\" and \"terms\"", 0);
    if (!j["conductor"].is_number_integer()) throw ParseError("conductor must be an integer", 0);
    long n = j["conductor"].get<long>();
    if (n < 1) throw ParseError("conductor must be positive", 0);
    std::map<long, Rational> raw;
    long prev = -1;
    for (const auto& t : j["terms"]) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
        throw ParseError("each term must be [exponent, rational-string]", 0);
      long e = t[0].get<long>();
      if (e < 0 || e >= n) throw ParseError("exponent out of range", 0);
      if (e <= prev) throw ParseError("exponents must be strictly increasing", 0);
      prev = e;
      Rational q;
      try {
        q = rat_from_string(t[1].get<std::string>());
      } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what(), 0);
      }
      if (q == 0) throw ParseError("zero coefficient in terms", 0);
      raw[e] = q;
    }
    if (n % 4 == 2) throw ParseError("conductor 2 mod 4 is not canonical", 0);
    return from_raw(n, std::move(raw));
  }

  static Cyclotomic parse(const std::string& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
      throw ParseError(ex.what(), ex.byte);
    }
    return parse(j);
  }

  /// Floating-point evaluation under zeta_n -> exp(2*pi*i/n). Debugging and
  /// sanity checks only; never used by the exact core.
  std::complex<double> approx() const {
    std::complex<double> z = 0;
    for (const auto& [e, q] : c_) {
      double ang = 2.0 * 3.14159265358979323846 * static_cast<double>(e) / static_cast<double>(n_);
      z += q.get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
  }

 private:
  long n_ = 1;
  std::map<long, Rational> c_;

  static int legendre(long a, long p) {
    long r = 1, b = a % p, e = (p - 1) / 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r == 1 ? 1 : -1;
  }

  static void accumulate(std::map<long, Rational>& m, long e, const Rational& q) {
    auto it = m.find(e);
    if (it == m.end()) {
      if (q != 0) m.emplace(e, q);
    } else {
      it->second += q;
      if (it->second == 0) m.erase(it);
    }
  }

  void prune() {
    for (auto it = c_.begin(); it != c_.end();)
      it = (it->second == 0) ? c_.erase(it) : std::next(it);
  }

  // Add scale * (this lifted to conductor N, in base form) into raw.
  void lift_into(long N, std::map<long, Rational>& raw, const Rational& scale) const {
    long s = N / n_;
    for (const auto& [e, q] : c_) {
      Rational sq = scale * q;
      for (const auto& [e2, sgn] : detail::base_row(N, e * s))
        accumulate(raw, e2, sgn > 0 ? sq : -sq);
    }
  }

  Cyclotomic scaled(const Rational& q) const {
    if (q == 0) return zero();
    Cyclotomic r(*this);
    for (auto& [e, c] : r.c_) c *= q;
    return r;
  }

  // raw terms at level n, exponents arbitrary: rewrite into basis, then
  // minimize the conductor.
  static Cyclotomic from_raw(long n, std::map<long, Rational> raw) {
    std::map<long, Rational> based;
    for (const auto& [e, q] : raw)
      for (const auto& [e2, s] : detail::base_row(n, e))
        accumulate(based, e2, s > 0 ? q : -q);
    return from_raw_based(n, std::move(based));
  }

  static Cyclotomic from_raw_based(long n, std::map<long, Rational> based) {
    Cyclotomic r;
    r.n_ = n;
    r.c_ = std::move(based);
    r.prune();
    r.reduce_conductor();
    return r;
  }

  void reduce_conductor() {
    if (c_.empty()) { n_ = 1; return; }
    bool again = true;
    while (again && n_ > 1) {
      again = false;
      std::vector<long> candidates;
      long v2 = 0, t = n_;
      while (t % 2 == 0) { t /= 2; ++v2; }
      if (v2 == 2) candidates.push_back(n_ / 4);
      if (v2 >= 3) candidates.push_back(n_ / 2);
      for (auto [p, v] : detail::factorize(n_))
        if (p != 2) candidates.push_back(n_ / p);
      for (long m : candidates) {
        if (!fixed_by_gal(m)) continue;
        convert_down(m);
        again = true;
        break;
      }
    }
  }

  // True iff the value is fixed by Gal(Q(zeta_n)/Q(zeta_m)), i.e. lies in
  // Q(zeta_m). Checks every automorphism k = 1 mod m, gcd(k, n) = 1.
  bool fixed_by_gal(long m) const {
    for (long k = 1 + m; k < n_; k += m) {
      if (std::gcd(k, n_) != 1) continue;
      if (galois(k) != *this) return false;
    }
    return true;
  }

  // Re-express the value in the basis of Q(zeta_m), m | n. Solves the linear
  // system whose columns are the level-n basis expansions of B(m).
  void convert_down(long m) {
    const detail::ConductorInfo& cm = detail::conductor_cache(m).info;
    const detail::ConductorInfo& cn = detail::conductor_cache(n_).info;
    std::size_t rows = cn.basis.size(), cols = cm.basis.size();
    // dense augmented matrix [A | x]
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1, Rational(0)));
    long scale = n_ / m;
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto& [e, s] : detail::base_row(n_, cm.basis[j] * scale))
        a[cn.basis_index[e]][j] = Rational(s);
    for (const auto& [e, q] : c_) a[cn.basis_index[e]][cols] = q;

    std::vector<long> pivot_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
      std::size_t piv = r;
      while (piv < rows && a[piv][j] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[piv], a[r]);
      Rational d = a[r][j];
      for (std::size_t jj = j; jj <= cols; ++jj) a[r][jj] /= d;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || a[i][j] == 0) continue;
        Rational f = a[i][j];
        for (std::size_t jj = j; jj <= cols; ++jj) a[i][jj] -= f * a[r][jj];
      }
      pivot_of_col[j] = static_cast<long>(r);
      ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
      if (a[i][cols] != 0) throw std::logic_error("convert_down: inconsistent system");
    std::map<long, Rational> out;
    for (std::size_t j = 0; j < cols; ++j) {
      if (pivot_of_col[j] < 0) continue;
      const Rational& q = a[pivot_of_col[j]][cols];
      if (q != 0) out[cm.basis[j]] = q;
    }
    n_ = m;
    c_ = std::move(out);
  }
};

inline Cyclotomic operator*(const Rational& q, const Cyclotomic& a) { return Cyclotomic(q) * a; }

}  // namespace ellft
