#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ellft/chartable.hpp"
#include "ellft/classfun.hpp"
#include "ellft/cyclotomic.hpp"
#include "ellft/group.hpp"
#include "ellft/matrix.hpp"

namespace ellft {

/// One orbit representative (x, sigma) of Lusztig's set M(Gamma): x is the
/// canonical representative of its conjugacy class and sigma an irreducible
/// character of its centralizer.
struct MPair {
  int x;                 // element id in gamma
  Subgroup cent;         // centralizer of x
  ClassFunction sigma;   // on cent.group
  std::string x_name;
  std::string sigma_name;

  std::string name() const { return "(" + x_name + "," + sigma_name + ")"; }
};

struct MSet {
  FiniteGroup gamma;
  std::vector<MPair> pairs;

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& p : pairs) out.push_back(p.name());
    return out;
  }

  int index_of(const std::string& nm) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i].name() == nm) return static_cast<int>(i);
    throw std::invalid_argument("no M-pair named " + nm);
  }
};

namespace detail {

// Human names for the characters of the small centralizers: 1/r/eps for S3,
// 1/eps for Z2, 1/theta/theta^2 for the cyclic centralizer of a 3-element.
// The theta convention is global: theta is the character with value zeta_3
// at x itself. Everything else falls back to chi{row}.
inline std::string sigma_display_name(const Subgroup& cent, int x, const ClassFunction& sigma,
                                      std::size_t row) {
  const FiniteGroup& z = cent.group;
  const Cyclotomic one = Cyclotomic::one();
  if (z.order() == 1) return "1";
  bool all_trivial = true;
  for (const auto& v : sigma.values)
    if (v != one) { all_trivial = false; break; }
  if (all_trivial) return "1";
  if (z.order() == 2) return "eps";
  if (z.order() == 6 && z.class_count() == 3) {
    if (sigma.values[0] == Cyclotomic(2)) return "r";
    return "eps";
  }
  if (z.order() == 3) {
    int xs = cent.restrict_id(x);
    const Cyclotomic& vx = sigma.at_element(xs);
    if (vx == Cyclotomic::root_of_unity(3, 1)) return "theta";
    if (vx == Cyclotomic::root_of_unity(3, 2)) return "theta^2";
  }
  return "chi" + std::to_string(row);
}

inline int sigma_name_rank(const std::string& nm) {
  if (nm == "1") return 0;
  if (nm == "r") return 1;
  if (nm == "eps") return 2;
  if (nm == "theta") return 3;
  if (nm == "theta^2") return 4;
  return 5;
}

inline std::string x_display_name(const FiniteGroup& gamma, int x) {
  if (x == 0) return "1";
  // customary names in S3: g2 a transposition, g3 a 3-cycle
  if (gamma.order() == 6 && gamma.class_count() == 3) {
    int o = gamma.element_order(x);
    if (o == 2) return "g2";
    if (o == 3) return "g3";
  }
  return gamma.word(x);
}

}  // namespace detail

/// M(Gamma) in canonical order: conjugacy classes of x in canonical class
/// order; within a class, sigma ordered by the display-name convention
/// (1, r, eps, theta, theta^2) with generic characters after, in table row
/// order. For S3 this reproduces the ordered set (1,1), (1,r), (1,eps),
/// (g2,1), (g2,eps), (g3,1), (g3,theta), (g3,theta^2).
inline MSet m_set(const FiniteGroup& gamma) {
  if (gamma.order() > 2000) throw std::invalid_argument("m_set: group order above the 2000 bound");
  MSet out;
  out.gamma = gamma;
  for (std::size_t c = 0; c < gamma.class_count(); ++c) {
    int x = gamma.class_rep(static_cast<int>(c));
    Subgroup z = centralizer(gamma, x);
    CharacterTable zt = character_table(z.group);
    std::vector<MPair> block;
    for (std::size_t row = 0; row < zt.rows.size(); ++row) {
      MPair p;
      p.x = x;
      p.cent = z;
      p.sigma = zt.rows[row];
      p.x_name = detail::x_display_name(gamma, x);
      p.sigma_name = detail::sigma_display_name(z, x, zt.rows[row], row);
      block.push_back(std::move(p));
    }
    std::stable_sort(block.begin(), block.end(), [](const MPair& a, const MPair& b) {
      return detail::sigma_name_rank(a.sigma_name) < detail::sigma_name_rank(b.sigma_name);
    });
    for (auto& p : block) out.pairs.push_back(std::move(p));
  }
  return out;
}

/// Lusztig's pairing {(x,sigma),(y,tau)} =
///   (1/(|Z(x)||Z(y)|)) sum_{g in Gamma, x g y g^-1 = g y g^-1 x}
///   sigma(g y g^-1) conj(tau(g^-1 x g)).
inline Cyclotomic fourier_pairing(const FiniteGroup& gamma, const MPair& a, const MPair& b) {
  if (!a.cent.parent.same_as(gamma) || !b.cent.parent.same_as(gamma))
    throw std::invalid_argument("fourier_pairing: pair not built from this group");
  Cyclotomic s;
  for (int g = 0; g < gamma.order(); ++g) {
    int gyg = gamma.conj_elem(g, b.x);
    if (gamma.mul(a.x, gyg) != gamma.mul(gyg, a.x)) continue;
    int gxg = gamma.conj_elem(gamma.inv(g), a.x);
    s += a.sigma.at_element(a.cent.restrict_id(gyg)) *
         b.sigma.at_element(b.cent.restrict_id(gxg)).conj();
  }
  return s * Cyclotomic(Rational(1, static_cast<long>(a.cent.group.order()) * b.cent.group.order()));
}

/// Matrix of the nonabelian Fourier transform on M(Gamma); entry (a, b) is
/// {a,b} * Delta(b). Delta defaults to +1 everywhere (the only case with
/// built-in data; the exceptional E7/E8 signs can be passed explicitly).
inline CycMatrix fourier_matrix(const MSet& ms, const std::vector<int>* delta = nullptr) {
  std::size_t n = ms.pairs.size();
  if (delta != nullptr && delta->size() != n)
    throw std::invalid_argument("fourier_matrix: delta size mismatch");
  CycMatrix m(ms.names(), ms.names());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Cyclotomic v = fourier_pairing(ms.gamma, ms.pairs[i], ms.pairs[j]);
      if (delta != nullptr && (*delta)[j] < 0) v = -v;
      m(i, j) = v;
    }
  return m;
}

inline CycMatrix fourier_matrix(const FiniteGroup& gamma) { return fourier_matrix(m_set(gamma)); }

}  // namespace ellft
