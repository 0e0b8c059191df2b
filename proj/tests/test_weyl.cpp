#include <catch2/catch_amalgamated.hpp>

#include "ellft/weyl.hpp"

using namespace ellft;

namespace {

ClassFunction rep_character(const ReflectionRep& rep) {
  ClassFunction f(rep.group);
  for (std::size_t c = 0; c < rep.group.class_count(); ++c) {
    const CycMatrix& m = rep.matrices[rep.group.class_rep(static_cast<int>(c))];
    Cyclotomic t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    f.values[c] = t;
  }
  return f;
}

}  // namespace

TEST_CASE("generator matrices define the reflection character") {
  ReflectionRep wg2 = wg2_reflection_rep();
  CHECK(rep_character(wg2) == wg2.table.by_name("phi_{2,1}"));
  ReflectionRep a2 = a2_reflection_rep();
  CHECK(rep_character(a2) == a2.table.by_name("refl"));
  ReflectionRep a1a1 = a1xa1_reflection_rep();
  CHECK(rep_character(a1a1) ==
        a1a1.table.by_name("triv0*sgn2") + a1a1.table.by_name("sgn0*triv2"));
  // a non-homomorphic assignment is rejected (this second matrix has
  // infinite order, so it cannot be the image of an involution)
  FiniteGroup w = make_dihedral(12);
  CHECK_THROWS_AS(build_reflection_rep(w, {int_matrix2(-1, 1, 0, 1), int_matrix2(1, 1, 0, 1)},
                                       wg2_character_table(w), {}),
                  std::logic_error);
}

TEST_CASE("alternating sum character det(1-w)") {
  ReflectionRep wg2 = wg2_reflection_rep();
  ClassFunction a = alt_sum_character(wg2);
  const FiniteGroup& w = wg2.group;
  int c = w.mul(w.generators()[0], w.generators()[1]);
  int c3 = w.mul(w.mul(c, c), c);
  CHECK(a.at_element(0) == Cyclotomic());
  CHECK(a.at_element(c3) == Cyclotomic(4));  // (s1 s2)^3 acts as -I
  CHECK(a.at_element(c) == Cyclotomic(1));   // rotation by 60 degrees
}

TEST_CASE("two routes to det(1-w) agree") {
  for (const char* key : {"wg2", "a2", "a1", "a1xa1"}) {
    ReflectionRep rep = named_reflection_rep(key);
    ClassFunction a = alt_sum_character(rep);
    for (int g = 0; g < rep.group.order(); ++g) {
      std::vector<Cyclotomic> e = exterior_power_traces(rep.matrices[g]);
      Cyclotomic alt;
      for (std::size_t i = 0; i < e.size(); ++i) alt += (i % 2 == 0) ? e[i] : -e[i];
      CHECK(alt == a.at_element(g));
    }
  }
}

TEST_CASE("elliptic classes") {
  ReflectionRep wg2 = wg2_reflection_rep();
  CHECK(elliptic_classes(wg2) == std::vector<int>{3, 4, 5});  // c, c^2, c^3

  ReflectionRep a1 = a1_reflection_rep();
  CHECK(elliptic_classes(a1) == std::vector<int>{1});

  ReflectionRep a2 = a2_reflection_rep();
  std::vector<int> ec = elliptic_classes(a2);
  REQUIRE(ec.size() == 1);
  CHECK(a2.group.element_order(a2.group.class_rep(ec[0])) == 3);
}

TEST_CASE("elliptic pairing values and radical membership") {
  ReflectionRep wg2 = wg2_reflection_rep();
  ClassFunction triv = trivial_character(wg2.group);
  CHECK(elliptic_pairing(wg2, triv, triv) == Cyclotomic(1));

  // characters induced from a proper parabolic lie in the radical
  Subgroup p = subgroup_generated_by(wg2.group, {wg2.group.generators()[0]});
  ClassFunction ind = induce_from(trivial_character(p.group), p);
  for (const ClassFunction& chi : wg2.table.rows) {
    CHECK(elliptic_pairing(wg2, ind, chi).is_zero());
    CHECK(elliptic_pairing(wg2, chi, ind).is_zero());
  }

  // cross-check against the tensor-product route
  const ClassFunction& phi21 = wg2.table.by_name("phi_{2,1}");
  CHECK(elliptic_pairing(wg2, phi21, phi21) ==
        character_pairing(phi21, tensor(phi21, alt_sum_character(wg2))));
}

TEST_CASE("normalized elliptic indicators of W(G2)") {
  ReflectionRep wg2 = wg2_reflection_rep();
  std::vector<int> ec = elliptic_classes(wg2);
  REQUIRE(ec == std::vector<int>{3, 4, 5});

  // expansion coefficients in Irr, keyed by name: the indicator of an
  // elliptic class C expands as sum chi(rep(C)) * |C|/|W| * chi
  auto coeff = [&](const ClassFunction& f, const std::string& name) {
    return character_pairing(f, wg2.table.by_name(name));
  };
  ClassFunction one_c(wg2.group), one_c2(wg2.group), one_c3(wg2.group);
  one_c.values[3] = Cyclotomic(1);
  one_c2.values[4] = Cyclotomic(1);
  one_c3.values[5] = Cyclotomic(1);
  Rational sixth(1, 6), twelfth(1, 12);
  // 1_c = (1/6)(phi10 - phi13' - phi13'' + phi16 + phi21 - phi22)
  CHECK(coeff(one_c, "phi_{1,0}") == Cyclotomic(sixth));
  CHECK(coeff(one_c, "phi_{1,3}'") == Cyclotomic(-sixth));
  CHECK(coeff(one_c, "phi_{1,3}''") == Cyclotomic(-sixth));
  CHECK(coeff(one_c, "phi_{1,6}") == Cyclotomic(sixth));
  CHECK(coeff(one_c, "phi_{2,1}") == Cyclotomic(sixth));
  CHECK(coeff(one_c, "phi_{2,2}") == Cyclotomic(-sixth));
  // 1_{c^2} = (1/6)(phi10 + phi13' + phi13'' + phi16 - phi21 - phi22)
  CHECK(coeff(one_c2, "phi_{1,0}") == Cyclotomic(sixth));
  CHECK(coeff(one_c2, "phi_{1,3}'") == Cyclotomic(sixth));
  CHECK(coeff(one_c2, "phi_{1,3}''") == Cyclotomic(sixth));
  CHECK(coeff(one_c2, "phi_{1,6}") == Cyclotomic(sixth));
  CHECK(coeff(one_c2, "phi_{2,1}") == Cyclotomic(-sixth));
  CHECK(coeff(one_c2, "phi_{2,2}") == Cyclotomic(-sixth));
  // 1_{c^3} = (1/12)(phi10 - phi13' - phi13'' + phi16 - 2 phi21 + 2 phi22)
  CHECK(coeff(one_c3, "phi_{1,0}") == Cyclotomic(twelfth));
  CHECK(coeff(one_c3, "phi_{1,3}'") == Cyclotomic(-twelfth));
  CHECK(coeff(one_c3, "phi_{1,3}''") == Cyclotomic(-twelfth));
  CHECK(coeff(one_c3, "phi_{1,6}") == Cyclotomic(twelfth));
  CHECK(coeff(one_c3, "phi_{2,1}") == Cyclotomic(Rational(-2, 12)));
  CHECK(coeff(one_c3, "phi_{2,2}") == Cyclotomic(Rational(2, 12)));

  // normalized versions are orthonormal
  std::vector<ClassFunction> basis;
  for (int c : ec) basis.push_back(normalized_indicator(wg2, c));
  CHECK(basis[0].values[3] == Cyclotomic::sqrt_rational(Rational(6)));
  CHECK(basis[2].values[5] == Cyclotomic::sqrt_rational(Rational(12)));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      CHECK(character_pairing(basis[i], basis[j]) ==
            (i == j ? Cyclotomic(1) : Cyclotomic()));

  CHECK_THROWS_AS(normalized_indicator(wg2, 0), std::invalid_argument);
  CHECK_THROWS_AS(normalized_indicator(wg2, 99), std::invalid_argument);
}

TEST_CASE("indicators span the functions supported on elliptic classes") {
  ReflectionRep wg2 = wg2_reflection_rep();
  // a class function vanishing off elliptic classes is an exact linear
  // combination of the indicators; one supported elsewhere is not
  ClassFunction f(wg2.group);
  f.values[3] = Cyclotomic(2);
  f.values[5] = Cyclotomic(Rational(-1, 3));
  ClassFunction recon(wg2.group);
  for (int c : elliptic_classes(wg2)) {
    ClassFunction ind = normalized_indicator(wg2, c);
    recon = recon + scale(character_pairing(f, ind), ind);
  }
  CHECK(recon == f);
}

TEST_CASE("radical of the elliptic pairing is the induced span") {
  EllipticRadicalReport wg2 = elliptic_radical_check(wg2_reflection_rep());
  CHECK(wg2.irr_count == 6);
  CHECK(wg2.radical_dim == 3);
  CHECK(wg2.quotient_dim == 3);
  CHECK(wg2.induced_span_dim == 3);
  CHECK(wg2.radical_matches_induced);

  EllipticRadicalReport a1 = elliptic_radical_check(a1_reflection_rep());
  CHECK(a1.radical_dim == 1);
  CHECK(a1.quotient_dim == 1);
  CHECK(a1.radical_matches_induced);

  for (const char* key : {"wg2", "a2", "a1", "a1xa1"}) {
    ReflectionRep rep = named_reflection_rep(key);
    EllipticRadicalReport r = elliptic_radical_check(rep);
    CHECK(r.quotient_dim == elliptic_classes(rep).size());
    CHECK(r.radical_matches_induced);
  }
}
