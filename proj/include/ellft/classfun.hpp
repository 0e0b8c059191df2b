#pragma once

#include <stdexcept>
#include <vector>

#include "ellft/cyclotomic.hpp"
#include "ellft/group.hpp"

namespace ellft {

/// A complex class function, one exact value per conjugacy class in the
/// group's canonical class order.
struct ClassFunction {
  FiniteGroup group;
  std::vector<Cyclotomic> values;

  ClassFunction() = default;
  explicit ClassFunction(const FiniteGroup& g) : group(g), values(g.class_count()) {}

  const Cyclotomic& at_class(int c) const { return values[c]; }
  const Cyclotomic& at_element(int a) const { return values[group.class_of(a)]; }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group.same_as(b.group) && a.values == b.values;
  }
};

inline void require_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group.same_as(b.group)) throw std::invalid_argument("class functions on different groups");
}

/// <chi, psi> = (1/|G|) sum_g chi(g) conj(psi(g)).
inline Cyclotomic character_pairing(const ClassFunction& chi, const ClassFunction& psi) {
  require_same_group(chi, psi);
  const FiniteGroup& g = chi.group;
  Cyclotomic s;
  for (std::size_t c = 0; c < g.class_count(); ++c)
    s += Cyclotomic(g.class_size(static_cast<int>(c))) * chi.values[c] * psi.values[c].conj();
  return s * Cyclotomic(Rational(1, g.order()));
}

inline ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  ClassFunction r(a.group);
  for (std::size_t c = 0; c < r.values.size(); ++c) r.values[c] = a.values[c] * b.values[c];
  return r;
}

inline ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  ClassFunction r(a.group);
  for (std::size_t c = 0; c < r.values.size(); ++c) r.values[c] = a.values[c] + b.values[c];
  return r;
}

inline ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  ClassFunction r(a.group);
  for (std::size_t c = 0; c < r.values.size(); ++c) r.values[c] = a.values[c] - b.values[c];
  return r;
}

inline ClassFunction scale(const Cyclotomic& s, const ClassFunction& a) {
  ClassFunction r(a.group);
  for (std::size_t c = 0; c < r.values.size(); ++c) r.values[c] = s * a.values[c];
  return r;
}

inline ClassFunction trivial_character(const FiniteGroup& g) {
  ClassFunction r(g);
  for (auto& v : r.values) v = Cyclotomic::one();
  return r;
}

inline ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& h) {
  if (!chi.group.same_as(h.parent)) throw std::invalid_argument("restrict: subgroup of a different group");
  ClassFunction r(h.group);
  for (std::size_t c = 0; c < h.group.class_count(); ++c)
    r.values[c] = chi.at_element(h.embed(h.group.class_rep(static_cast<int>(c))));
  return r;
}

/// Induction: (ind psi)(g) = (1/|H|) sum_{x in G, x^-1 g x in H} psi(x^-1 g x).
inline ClassFunction induce_from(const ClassFunction& psi, const Subgroup& h) {
  if (!psi.group.same_as(h.group)) throw std::invalid_argument("induce: class function not on the subgroup");
  const FiniteGroup& g = h.parent;
  ClassFunction r(g);
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    int rep = g.class_rep(static_cast<int>(c));
    Cyclotomic s;
    for (int x = 0; x < g.order(); ++x) {
      int y = g.mul(g.mul(g.inv(x), rep), x);
      if (h.contains(y)) s += psi.at_element(h.restrict_id(y));
    }
    r.values[c] = s * Cyclotomic(Rational(1, h.group.order()));
  }
  return r;
}

}  // namespace ellft
