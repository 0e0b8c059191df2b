#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ellft/classfun.hpp"
#include "ellft/cyclotomic.hpp"
#include "ellft/fourier.hpp"
#include "ellft/matrix.hpp"
#include "ellft/weyl.hpp"

namespace ellft {

/// One family of unipotent character labels with its finite group Gamma_F
/// and the injection of the labels into M(Gamma_F).
struct Family {
  std::vector<int> labels;   // label indices within the space
  FiniteGroup gamma;
  MSet mset;
  std::vector<int> pair_of;  // parallel to labels: index into mset.pairs
};

/// The span R_u of the unipotent characters of a finite reductive group,
/// modeled as an abstract inner-product space: the labels are an orthonormal
/// basis (they are distinct irreducible characters), and the Fourier/family
/// combinatorics is the only structure carried. Principal-series labels are
/// keyed to Irr W of the attached Weyl group; the rest are cuspidal.
struct UnipotentSpace {
  std::string name;
  std::vector<std::string> labels;
  ReflectionRep weyl;
  std::vector<int> ps_label_of_irr;  // Irr W row -> label index
  std::vector<int> cuspidal_labels;  // label indices
  std::vector<Family> families;
  std::vector<int> delta;            // sign per label, +1 unless stated otherwise

  int label_index(const std::string& nm) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == nm) return static_cast<int>(i);
    throw std::invalid_argument("no unipotent label named " + nm);
  }
};

/// A formal linear combination of the labels, coordinates in label order.
struct UniChar {
  std::vector<Cyclotomic> coords;

  UniChar() = default;
  explicit UniChar(std::size_t n) : coords(n) {}

  friend UniChar operator+(const UniChar& a, const UniChar& b) {
    if (a.coords.size() != b.coords.size()) throw std::invalid_argument("UniChar size mismatch");
    UniChar r(a.coords.size());
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = a.coords[i] + b.coords[i];
    return r;
  }
  friend UniChar operator-(const UniChar& a, const UniChar& b) {
    if (a.coords.size() != b.coords.size()) throw std::invalid_argument("UniChar size mismatch");
    UniChar r(a.coords.size());
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = a.coords[i] - b.coords[i];
    return r;
  }
  bool is_zero() const {
    for (const auto& c : coords)
      if (!c.is_zero()) return false;
    return true;
  }
};

inline UniChar uni_scale(const Cyclotomic& s, const UniChar& v) {
  UniChar r(v.coords.size());
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = s * v.coords[i];
  return r;
}

/// <u, v> with the labels orthonormal.
inline Cyclotomic uni_pairing(const UniChar& a, const UniChar& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("UniChar size mismatch");
  Cyclotomic s;
  for (std::size_t i = 0; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i].conj();
  return s;
}

inline UniChar apply_matrix(const CycMatrix& m, const UniChar& v) {
  if (m.cols() != v.coords.size()) throw std::invalid_argument("apply_matrix: shape mismatch");
  UniChar r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v.coords[j].is_zero()) r.coords[i] += m(i, j) * v.coords[j];
  return r;
}

namespace detail {

inline Family singleton_family(int label) {
  Family f;
  f.labels = {label};
  f.gamma = make_trivial();
  f.mset = m_set(f.gamma);
  f.pair_of = {0};
  return f;
}

inline UnipotentSpace principal_series_space(std::string name, ReflectionRep rep,
                                             std::vector<std::string> labels) {
  UnipotentSpace s;
  s.name = std::move(name);
  s.labels = std::move(labels);
  s.weyl = std::move(rep);
  s.ps_label_of_irr.resize(s.weyl.table.names.size());
  for (std::size_t r = 0; r < s.weyl.table.names.size(); ++r)
    s.ps_label_of_irr[r] = s.label_index(s.weyl.table.names[r]);
  for (std::size_t i = 0; i < s.labels.size(); ++i)
    s.families.push_back(singleton_family(static_cast<int>(i)));
  s.delta.assign(s.labels.size(), 1);
  return s;
}

}  // namespace detail

/// G2(F_q): six principal-series labels keyed to Irr W(G2) plus the four
/// cuspidal unipotent characters. Three families with Gamma = 1, S3, 1; the
/// middle family carries Lusztig's pairing with M(S3) given below.
inline UnipotentSpace build_g2q() {
  UnipotentSpace s;
  s.name = "g2q";
  s.labels = {"phi_{1,0}", "phi_{1,3}'", "phi_{1,3}''", "phi_{1,6}", "phi_{2,1}", "phi_{2,2}",
              "G2[1]", "G2[-1]", "G2[theta]", "G2[theta^2]"};
  s.weyl = wg2_reflection_rep();
  s.ps_label_of_irr.resize(6);
  for (std::size_t r = 0; r < 6; ++r) s.ps_label_of_irr[r] = s.label_index(s.weyl.table.names[r]);
  s.cuspidal_labels = {6, 7, 8, 9};
  s.delta.assign(10, 1);

  s.families.push_back(detail::singleton_family(s.label_index("phi_{1,0}")));

  Family mid;
  mid.gamma = make_symmetric(3);
  mid.mset = m_set(mid.gamma);
  const std::vector<std::pair<std::string, std::string>> assignment = {
      {"phi_{2,1}", "(1,1)"},      {"phi_{1,3}'", "(1,r)"},
      {"phi_{1,3}''", "(g3,1)"},   {"phi_{2,2}", "(g2,1)"},
      {"G2[1]", "(1,eps)"},        {"G2[-1]", "(g2,eps)"},
      {"G2[theta]", "(g3,theta)"}, {"G2[theta^2]", "(g3,theta^2)"},
  };
  for (const auto& [label, pair] : assignment) {
    mid.labels.push_back(s.label_index(label));
    mid.pair_of.push_back(mid.mset.index_of(pair));
  }
  s.families.push_back(std::move(mid));

  s.families.push_back(detail::singleton_family(s.label_index("phi_{1,6}")));
  return s;
}

/// (A1 + A1~)(F_q): four principal-series labels, all families singleton.
inline UnipotentSpace build_a1a1q() {
  return detail::principal_series_space(
      "a1a1q", a1xa1_reflection_rep(),
      {"triv0*triv2", "triv0*sgn2", "sgn0*triv2", "sgn0*sgn2"});
}

/// A2(F_q): three principal-series labels, all families singleton.
inline UnipotentSpace build_a2q() {
  return detail::principal_series_space("a2q", a2_reflection_rep(), {"triv", "refl", "sgn"});
}

inline UnipotentSpace build_space(const std::string& key) {
  if (key == "g2q") return build_g2q();
  if (key == "a1a1q") return build_a1a1q();
  if (key == "a2q") return build_a2q();
  throw std::invalid_argument("unknown unipotent space key: " + key);
}

/// The full nonabelian Fourier transform: block diagonal over the families,
/// each block the Fourier matrix of Gamma_F pulled back through the
/// label -> M(Gamma_F) map, with the Delta signs applied per column.
inline CycMatrix ft_full(const UnipotentSpace& s) {
  CycMatrix m(s.labels, s.labels);
  for (const Family& f : s.families) {
    std::vector<int> fdelta;
    for (int l : f.labels) fdelta.push_back(s.delta[l]);
    // permute the family's delta signs into m_set order for fourier_matrix
    std::vector<int> mdelta(f.mset.pairs.size(), 1);
    for (std::size_t a = 0; a < f.labels.size(); ++a) mdelta[f.pair_of[a]] = fdelta[a];
    CycMatrix block = fourier_matrix(f.mset, &mdelta);
    for (std::size_t a = 0; a < f.labels.size(); ++a)
      for (std::size_t b = 0; b < f.labels.size(); ++b)
        m(f.labels[a], f.labels[b]) = block(f.pair_of[a], f.pair_of[b]);
  }
  return m;
}

/// The isometric injection R(W) -> R_u: Irr-expansion coefficients placed at
/// the principal-series labels, zero at the cuspidal ones.
inline UniChar embed_weyl(const UnipotentSpace& s, const ClassFunction& f) {
  if (!f.group.same_as(s.weyl.group))
    throw std::invalid_argument("embed_weyl: class function on a different group");
  UniChar v(s.labels.size());
  for (std::size_t r = 0; r < s.weyl.table.rows.size(); ++r)
    v.coords[s.ps_label_of_irr[r]] = character_pairing(f, s.weyl.table.rows[r]);
  return v;
}

struct EllipticBasis {
  std::vector<std::string> names;
  std::vector<UniChar> vectors;
};

namespace detail {

inline std::string elliptic_class_display_name(const ReflectionRep& rep, int c) {
  // for W(G2) the customary names c, c^2, c^3; bound by the value of
  // det(1 - w), which separates the three elliptic classes (1, 3, 4)
  if (rep.group.order() == 12 && rep.dim == 2) {
    Cyclotomic d = alt_sum_character(rep).values[c];
    if (d == Cyclotomic(1)) return "c";
    if (d == Cyclotomic(3)) return "c^2";
    if (d == Cyclotomic(4)) return "c^3";
  }
  return rep.group.word(rep.group.class_rep(c));
}

inline std::string indicator_display_name(const ReflectionRep& rep, int c) {
  long ratio = rep.group.order() / rep.group.class_size(c);
  long r = 1;
  while (r * r < ratio) ++r;
  std::string prefix = (r * r == ratio) ? std::to_string(r) : "sqrt(" + std::to_string(ratio) + ")";
  return prefix + "*rho_{" + elliptic_class_display_name(rep, c) + "}";
}

}  // namespace detail

/// Orthonormal basis of the elliptic subspace: the embedded normalized
/// indicators of the elliptic classes (canonical class order), followed by
/// the cuspidal labels as unit vectors.
inline EllipticBasis elliptic_basis(const UnipotentSpace& s) {
  EllipticBasis b;
  for (int c : elliptic_classes(s.weyl)) {
    b.names.push_back(detail::indicator_display_name(s.weyl, c));
    b.vectors.push_back(embed_weyl(s, normalized_indicator(s.weyl, c)));
  }
  for (int l : s.cuspidal_labels) {
    b.names.push_back(s.labels[l]);
    UniChar v(s.labels.size());
    v.coords[l] = Cyclotomic::one();
    b.vectors.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < b.vectors.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Cyclotomic p = uni_pairing(b.vectors[i], b.vectors[j]);
      if (p != (i == j ? Cyclotomic::one() : Cyclotomic::zero()))
        throw std::logic_error("elliptic basis is not orthonormal");
    }
  return b;
}

/// Coordinates of v with respect to the (orthonormal) elliptic basis; this
/// is also the coordinate vector of the elliptic projection of v.
inline std::vector<Cyclotomic> elliptic_coords(const EllipticBasis& b, const UniChar& v) {
  std::vector<Cyclotomic> out;
  for (const UniChar& e : b.vectors) out.push_back(uni_pairing(v, e));
  return out;
}

/// Orthogonal projection onto the elliptic subspace.
inline UniChar elliptic_projection(const UnipotentSpace& s, const UniChar& v) {
  EllipticBasis b = elliptic_basis(s);
  UniChar r(s.labels.size());
  for (const UniChar& e : b.vectors) r = r + uni_scale(uni_pairing(v, e), e);
  return r;
}

/// The Fourier transform truncated to the elliptic subspace, in elliptic
/// basis coordinates. Throws if the transform of some basis vector fails to
/// lie in the elliptic span exactly (it never does; that is the point).
inline CycMatrix ft_elliptic(const UnipotentSpace& s) {
  CycMatrix f = ft_full(s);
  EllipticBasis b = elliptic_basis(s);
  CycMatrix m(b.names, b.names);
  for (std::size_t j = 0; j < b.vectors.size(); ++j) {
    UniChar w = apply_matrix(f, b.vectors[j]);
    std::vector<Cyclotomic> coords = elliptic_coords(b, w);
    UniChar back(s.labels.size());
    for (std::size_t i = 0; i < coords.size(); ++i) back = back + uni_scale(coords[i], b.vectors[i]);
    if (!(w - back).is_zero())
      throw std::logic_error("Fourier transform does not preserve the elliptic subspace");
    for (std::size_t i = 0; i < coords.size(); ++i) m(i, j) = coords[i];
  }
  return m;
}

}  // namespace ellft
