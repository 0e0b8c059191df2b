#include <catch2/catch_amalgamated.hpp>

#include "ellft/fourier.hpp"
#include "reference_data.hpp"

using namespace ellft;

TEST_CASE("M(Gamma) sizes and canonical order") {
  CHECK(m_set(make_trivial()).pairs.size() == 1);
  CHECK(m_set(make_trivial()).pairs[0].name() == "(1,1)");
  CHECK(m_set(make_cyclic(2)).pairs.size() == 4);

  MSet s3 = m_set(make_symmetric(3));
  REQUIRE(s3.pairs.size() == 8);
  CHECK(s3.names() == std::vector<std::string>{"(1,1)", "(1,r)", "(1,eps)", "(g2,1)", "(g2,eps)",
                                               "(g3,1)", "(g3,theta)", "(g3,theta^2)"});
  // sizes agree with the sum over classes of #Irr of the centralizer
  for (const FiniteGroup& g : {make_cyclic(3), make_symmetric(4)}) {
    std::size_t expect = 0;
    for (std::size_t c = 0; c < g.class_count(); ++c)
      expect += character_table(centralizer(g, g.class_rep(static_cast<int>(c))).group).rows.size();
    CHECK(m_set(g).pairs.size() == expect);
  }
}

TEST_CASE("pairing values") {
  MSet s3 = m_set(make_symmetric(3));
  auto pairing = [&](const std::string& a, const std::string& b) {
    return fourier_pairing(s3.gamma, s3.pairs[s3.index_of(a)], s3.pairs[s3.index_of(b)]);
  };
  CHECK(pairing("(1,1)", "(1,1)") == Cyclotomic(Rational(1, 6)));
  CHECK(pairing("(g3,theta)", "(g3,theta)") == Cyclotomic(Rational(2, 3)));

  MSet triv = m_set(make_trivial());
  CHECK(fourier_pairing(triv.gamma, triv.pairs[0], triv.pairs[0]) == Cyclotomic(1));

  // Hermitian symmetry on every pair of several groups
  for (const FiniteGroup& g : {make_cyclic(3), make_symmetric(3)}) {
    MSet ms = m_set(g);
    for (const auto& a : ms.pairs)
      for (const auto& b : ms.pairs)
        CHECK(fourier_pairing(g, a, b) == fourier_pairing(g, b, a).conj());
  }
}

TEST_CASE("S3 Fourier matrix") {
  CycMatrix m = fourier_matrix(make_symmetric(3));
  CHECK(m.same_entries(refdata::s3_fourier()));
  CHECK(m.is_symmetric());
  CHECK((m * m).is_identity());
  CHECK((m * m.conj_transpose()).is_identity());
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) CHECK(m(i, j).is_rational());
}

TEST_CASE("Z2 Fourier matrix from the defining formula") {
  FiniteGroup z2 = make_cyclic(2);
  MSet ms = m_set(z2);
  CycMatrix m = fourier_matrix(ms);
  REQUIRE(m.rows() == 4);
  CHECK(m.is_symmetric());
  // entries are (1/2) sigma(y) conj(tau(x)) since the group is abelian
  CharacterTable t = character_table(z2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const MPair& a = ms.pairs[i];
      const MPair& b = ms.pairs[j];
      CHECK(m(i, j) == Cyclotomic(Rational(1, 2)) * a.sigma.at_element(b.x) *
                           b.sigma.at_element(a.x).conj());
    }
  CHECK(m(0, 0) == Cyclotomic(Rational(1, 2)));
}

TEST_CASE("unitarity of the Fourier matrix") {
  for (const FiniteGroup& g : {make_trivial(), make_cyclic(2), make_cyclic(3),
                               make_product(make_cyclic(2), make_cyclic(2)), make_symmetric(3),
                               make_symmetric(4)}) {
    CycMatrix m = fourier_matrix(g);
    CHECK((m * m.conj_transpose()).is_identity());
  }
}

TEST_CASE("pairing is independent of the orbit representative") {
  FiniteGroup g = make_symmetric(3);
  MSet ms = m_set(g);
  for (int h = 0; h < g.order(); ++h) {
    for (const MPair& p : ms.pairs) {
      // transport (x, sigma) to (h x h^-1, sigma( h^-1 . h ))
      MPair moved;
      moved.x = g.conj_elem(h, p.x);
      moved.cent = centralizer(g, moved.x);
      moved.sigma = ClassFunction(moved.cent.group);
      for (std::size_t c = 0; c < moved.cent.group.class_count(); ++c) {
        int rep = moved.cent.embed(moved.cent.group.class_rep(static_cast<int>(c)));
        moved.sigma.values[c] = p.sigma.at_element(p.cent.restrict_id(g.conj_elem(g.inv(h), rep)));
      }
      for (const MPair& q : ms.pairs) {
        CHECK(fourier_pairing(g, moved, q) == fourier_pairing(g, p, q));
        CHECK(fourier_pairing(g, q, moved) == fourier_pairing(g, q, p));
      }
    }
  }
}

TEST_CASE("delta signs flip columns") {
  MSet ms = m_set(make_cyclic(2));
  std::vector<int> delta = {1, -1, 1, -1};
  CycMatrix plain = fourier_matrix(ms);
  CycMatrix signed_m = fourier_matrix(ms, &delta);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(signed_m(i, j) == (delta[j] < 0 ? -plain(i, j) : plain(i, j)));
  std::vector<int> bad = {1, 1};
  CHECK_THROWS_AS(fourier_matrix(ms, &bad), std::invalid_argument);
}
