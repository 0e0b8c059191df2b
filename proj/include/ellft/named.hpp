#pragma once

#include <string>
#include <vector>

#include "ellft/chartable.hpp"
#include "ellft/classfun.hpp"
#include "ellft/group.hpp"
#include "ellft/matrix.hpp"

namespace ellft {

/// Builders and verified character data for the specific small groups the
/// toolkit ships with. Display names are bound to table rows by value
/// vector, never by computation order; bind_row_names throws if a computed
/// table disagrees with the expected values, so the bindings double as a
/// cross-check of the generic algorithm.

inline std::vector<Cyclotomic> value_vector(const FiniteGroup& g,
                                            const std::vector<std::pair<int, long>>& at) {
  // at: (element id, rational value); every class must be covered
  std::vector<Cyclotomic> v(g.class_count());
  std::vector<char> seen(g.class_count(), 0);
  for (auto [elem, val] : at) {
    v[g.class_of(elem)] = Cyclotomic(val);
    seen[g.class_of(elem)] = 1;
  }
  for (char s : seen)
    if (!s) throw std::logic_error("value_vector: class not covered");
  return v;
}

inline CharacterTable wg2_character_table(const FiniteGroup& w) {
  int s1 = w.generators()[0], s2 = w.generators()[1];
  int c = w.mul(s1, s2), c2 = w.mul(c, c), c3 = w.mul(c2, c);
  CharacterTable t = character_table(w);
  auto vec = [&](long v1, long vs1, long vs2, long vc, long vc2, long vc3) {
    return value_vector(w, {{0, v1}, {s1, vs1}, {s2, vs2}, {c, vc}, {c2, vc2}, {c3, vc3}});
  };
  bind_row_names(t, {
      {"phi_{1,0}", vec(1, 1, 1, 1, 1, 1)},
      {"phi_{1,3}'", vec(1, -1, 1, -1, 1, -1)},
      {"phi_{1,3}''", vec(1, 1, -1, -1, 1, -1)},
      {"phi_{1,6}", vec(1, -1, -1, 1, 1, 1)},
      {"phi_{2,1}", vec(2, 0, 0, 1, -1, -2)},
      {"phi_{2,2}", vec(2, 0, 0, -1, -1, 2)},
  });
  return t;
}

inline CharacterTable s3_character_table(const FiniteGroup& g) {
  int t12 = g.generators()[0];
  int c3 = g.mul(g.generators()[0], g.generators()[1]);
  CharacterTable t = character_table(g);
  bind_row_names(t, {
      {"triv", value_vector(g, {{0, 1}, {t12, 1}, {c3, 1}})},
      {"sgn", value_vector(g, {{0, 1}, {t12, -1}, {c3, 1}})},
      {"refl", value_vector(g, {{0, 2}, {t12, 0}, {c3, -1}})},
  });
  return t;
}

inline CharacterTable z2_character_table(const FiniteGroup& g) {
  CharacterTable t = character_table(g);
  bind_row_names(t, {
      {"triv", value_vector(g, {{0, 1}, {1, 1}})},
      {"sgn", value_vector(g, {{0, 1}, {1, -1}})},
  });
  return t;
}

inline CharacterTable z3_character_table(const FiniteGroup& g) {
  CharacterTable t = character_table(g);
  Cyclotomic th = Cyclotomic::root_of_unity(3, 1);
  Cyclotomic th2 = Cyclotomic::root_of_unity(3, 2);
  // element 1 is the generator g
  auto vec3 = [&](Cyclotomic vg) {
    std::vector<Cyclotomic> v(3);
    v[g.class_of(0)] = Cyclotomic::one();
    v[g.class_of(1)] = vg;
    v[g.class_of(g.mul(1, 1))] = vg * vg;
    return v;
  };
  bind_row_names(t, {
      {"triv", vec3(Cyclotomic::one())},
      {"theta", vec3(th)},
      {"theta^2", vec3(th2)},
  });
  return t;
}

/// W(A1) x W(A1); first factor corresponds to the affine root alpha_0,
/// second to alpha_2, matching the subscripts triv0/sgn0, triv2/sgn2.
inline CharacterTable a1xa1_character_table(const FiniteGroup& g) {
  int a = g.generators()[0];  // first factor
  int b = g.generators()[1];
  CharacterTable t = character_table(g);
  auto vec = [&](long va, long vb) {
    return value_vector(g, {{0, 1}, {a, va}, {b, vb}, {g.mul(a, b), va * vb}});
  };
  bind_row_names(t, {
      {"triv0*triv2", vec(1, 1)},
      {"triv0*sgn2", vec(1, -1)},
      {"sgn0*triv2", vec(-1, 1)},
      {"sgn0*sgn2", vec(-1, -1)},
  });
  return t;
}

inline CharacterTable wg2_character_table() { return wg2_character_table(make_dihedral(12)); }
inline CharacterTable s3_character_table() { return s3_character_table(make_symmetric(3)); }
inline CharacterTable z2_character_table() { return z2_character_table(make_cyclic(2)); }
inline CharacterTable z3_character_table() { return z3_character_table(make_cyclic(3)); }
inline CharacterTable a1xa1_character_table() {
  return a1xa1_character_table(make_product(make_cyclic(2), make_cyclic(2)));
}

inline CharacterTable named_character_table(const std::string& key) {
  if (key == "wg2") return wg2_character_table();
  if (key == "s3") return s3_character_table();
  if (key == "z2") return z2_character_table();
  if (key == "z3") return z3_character_table();
  if (key == "a1xa1") return a1xa1_character_table();
  throw std::invalid_argument("unknown group key: " + key);
}

inline CycMatrix int_matrix2(long a, long b, long c, long d) {
  CycMatrix m(2, 2);
  m(0, 0) = Cyclotomic(a);
  m(0, 1) = Cyclotomic(b);
  m(1, 0) = Cyclotomic(c);
  m(1, 1) = Cyclotomic(d);
  return m;
}

}  // namespace ellft
