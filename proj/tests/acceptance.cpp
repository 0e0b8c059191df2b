// End-to-end acceptance harness: prints one PASS/FAIL line per criterion
// and exits nonzero if any criterion fails. Everything is checked with
// exact arithmetic; there are no tolerances anywhere.

#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "ellft/padic.hpp"
#include "reference_data.hpp"

using namespace ellft;

namespace {

int failures = 0;

void criterion(int num, const char* what, const std::function<bool()>& check) {
  bool ok = false;
  try {
    ok = check();
  } catch (const std::exception& e) {
    std::cout << "FAIL  " << num << ". " << what << " (exception: " << e.what() << ")\n";
    ++failures;
    return;
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  " << num << ". " << what << "\n";
  if (!ok) ++failures;
}

bool check_wg2_table() {
  FiniteGroup w = make_dihedral(12);
  CharacterTable t = wg2_character_table(w);
  int s1 = w.generators()[0], s2 = w.generators()[1];
  int c = w.mul(s1, s2);
  std::vector<int> reps = {0, s1, s2, c, w.mul(c, c), w.mul(w.mul(c, c), c)};
  std::vector<int> sizes = {1, 3, 3, 2, 2, 1};
  for (std::size_t j = 0; j < 6; ++j) {
    if (w.class_of(reps[j]) != static_cast<int>(j)) return false;
    if (w.class_size(static_cast<int>(j)) != sizes[j]) return false;
  }
  if (t.rows.size() != 6) return false;
  for (const auto& [name, values] : refdata::wg2_table()) {
    const ClassFunction& row = t.by_name(name);
    for (std::size_t j = 0; j < 6; ++j)
      if (row.at_element(reps[j]) != Cyclotomic(values[j])) return false;
  }
  return true;
}

bool check_s3_fourier() {
  CycMatrix m = fourier_matrix(make_symmetric(3));
  return m.same_entries(refdata::s3_fourier()) && m.is_symmetric() &&
         (m * m.conj_transpose()).is_identity() && (m * m).is_identity();
}

bool check_indicators() {
  ReflectionRep wg2 = wg2_reflection_rep();
  if (elliptic_classes(wg2) != std::vector<int>{3, 4, 5}) return false;
  // expansions of 1_c, 1_{c^2}, 1_{c^3} in Irr W(G2)
  const std::vector<std::vector<Rational>> expect = {
      {{1, 6}, {-1, 6}, {-1, 6}, {1, 6}, {1, 6}, {-1, 6}},
      {{1, 6}, {1, 6}, {1, 6}, {1, 6}, {-1, 6}, {-1, 6}},
      {{1, 12}, {-1, 12}, {-1, 12}, {1, 12}, {-2, 12}, {2, 12}},
  };
  const std::vector<const char*> names = {"phi_{1,0}", "phi_{1,3}'", "phi_{1,3}''",
                                          "phi_{1,6}", "phi_{2,1}", "phi_{2,2}"};
  std::vector<ClassFunction> normalized;
  for (int k = 0; k < 3; ++k) {
    ClassFunction ind(wg2.group);
    ind.values[3 + k] = Cyclotomic(1);
    for (int i = 0; i < 6; ++i)
      if (character_pairing(ind, wg2.table.by_name(names[i])) != Cyclotomic(expect[k][i]))
        return false;
    normalized.push_back(normalized_indicator(wg2, 3 + k));
  }
  if (normalized[0].values[3] != Cyclotomic::sqrt_rational(Rational(6))) return false;
  if (normalized[2].values[5] != Cyclotomic::sqrt_rational(Rational(12))) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (character_pairing(normalized[i], normalized[j]) !=
          (i == j ? Cyclotomic(1) : Cyclotomic()))
        return false;
  return true;
}

bool check_ft_elliptic() {
  CycMatrix m = ft_elliptic(build_g2q());  // throws on closure violation
  return m.same_entries(refdata::g2_ft_elliptic()) && m.is_symmetric() &&
         (m * m.transpose()).is_identity();
}

bool check_res_matrix() {
  CycMatrix m = res_matrix();
  return m.same_entries(refdata::res()) && (m.transpose() * m).is_identity();
}

bool check_diagram() {
  DiagramReport r = verify_diagram();
  if (!r.commutes || !r.printed_identity || !r.residual.is_zero()) return false;
  // finite side: blocks of sizes 7, 1, 1
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      bool same_block = (i < 7 && j < 7) || (i == j);
      if (!same_block && !r.ft_u_el(i, j).is_zero()) return false;
    }
  // p-adic side: blocks of sizes 1, 8
  for (std::size_t j = 1; j < 9; ++j)
    if (!r.ft_dual(0, j).is_zero() || !r.ft_dual(j, 0).is_zero()) return false;
  return r.ft_dual(0, 0) == Cyclotomic(1);
}

bool check_properties() {
  // cyclotomic field axioms on random samples
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> nd(1, 24), ed(0, 23), cd(-6, 6), td(1, 3);
  auto random_cyc = [&]() {
    long n = nd(rng);
    Cyclotomic x;
    long terms = td(rng);
    for (long t = 0; t < terms; ++t) {
      long c = cd(rng);
      if (c != 0) x += Cyclotomic(Rational(c, 1 + (t % 3))) * Cyclotomic::root_of_unity(n, ed(rng) % n);
    }
    return x;
  };
  for (int i = 0; i < 10000; ++i) {
    Cyclotomic a = random_cyc(), b = random_cyc(), c = random_cyc();
    if ((a + b) + c != a + (b + c)) return false;
    if ((a * b) * c != a * (b * c)) return false;
    if (a * (b + c) != a * b + a * c) return false;
    if (!(a + (-a)).is_zero()) return false;
    if (i < 1000 && !a.is_zero() && a * a.inv() != Cyclotomic(1)) return false;
  }
  for (long n = 1; n <= 50; ++n) {
    Cyclotomic r = Cyclotomic::sqrt_rational(Rational(n));
    if (r * r != Cyclotomic(n)) return false;
  }
  // Fourier unitarity
  for (const FiniteGroup& g : {make_trivial(), make_cyclic(2), make_cyclic(3),
                               make_product(make_cyclic(2), make_cyclic(2)), make_symmetric(3),
                               make_symmetric(4)}) {
    CycMatrix m = fourier_matrix(g);
    if (!(m * m.conj_transpose()).is_identity()) return false;
  }
  // elliptic radical = induced span
  for (const char* key : {"wg2", "a1"}) {
    EllipticRadicalReport r = elliptic_radical_check(named_reflection_rep(key));
    if (!r.radical_matches_induced) return false;
    if (r.quotient_dim != elliptic_classes(named_reflection_rep(key)).size()) return false;
  }
  // Frobenius reciprocity on random class functions
  FiniteGroup w = make_dihedral(12);
  Subgroup h = subgroup_generated_by(w, {w.generators()[0]});
  std::uniform_int_distribution<long> vd(-4, 4);
  for (int i = 0; i < 25; ++i) {
    ClassFunction chi(w), psi(h.group);
    for (auto& v : chi.values) v = Cyclotomic(vd(rng));
    for (auto& v : psi.values) v = Cyclotomic(vd(rng));
    if (character_pairing(induce_from(psi, h), chi) !=
        character_pairing(psi, restrict_to(chi, h)))
      return false;
  }
  // partition classifier implications, exhaustively
  for (long n2 = 2; n2 <= 12; n2 += 2)
    for (const auto& p : partitions_of(n2)) {
      TypeCPartitionClass c = classify_type_c_partition(p);
      if (c.is_distinguished && !c.is_quasidistinguished) return false;
      if (c.is_quasidistinguished && !c.in_u_el) return false;
      if (c.in_u_el && !c.is_unipotent_class) return false;
    }
  // every single-entry perturbation of the restriction matrix is detected
  CycMatrix fu = ft_u_elliptic(), fd = dual_ft(), res = res_matrix();
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      CycMatrix p = res;
      p(i, j) += Cyclotomic(1);
      DiagramReport rep = verify_diagram_with(fu, fd, p);
      if (rep.commutes && rep.printed_identity) return false;
    }
  return true;
}

}  // namespace

int main() {
  criterion(1, "W(G2) character table matches the reference table", check_wg2_table);
  criterion(2, "S3 Fourier matrix: all 64 entries, symmetric, orthogonal, squares to identity",
            check_s3_fourier);
  criterion(3, "elliptic indicator decompositions and orthonormality", check_indicators);
  criterion(4, "7x7 elliptic Fourier matrix: exact entries, orthogonal, symmetric, closed",
            check_ft_elliptic);
  criterion(5, "9x9 restriction matrix: exact entries and exact orthogonality", check_res_matrix);
  criterion(6, "commutative diagram with zero residual and stated block sizes", check_diagram);
  criterion(7, "property suites: field axioms, square roots, unitarity, radical, reciprocity, "
               "partitions, corruption detection",
            check_properties);
  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
