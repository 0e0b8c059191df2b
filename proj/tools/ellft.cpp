// Command-line driver: dumps the exact character tables, Fourier matrices,
// elliptic bases and restriction data, and runs the commutative-diagram
// verification. Exit codes: 0 success, 1 verification failure, 2 usage.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellft/padic.hpp"

using namespace ellft;

namespace {

// Renders an exact cyclotomic compactly: rationals as p/q, rational
// multiples of sqrt(n) in surd form, single basis terms as r*z{n}^k;
// anything else falls back to the JSON term list.
std::string pretty_cyc(const Cyclotomic& x) {
  if (x.is_zero()) return "0";
  if (x.is_rational()) return rat_to_string(x.rational_value());
  for (long n : {2, 3, 5, 6, 7, 10, 11}) {
    Cyclotomic q = x * Cyclotomic::sqrt_rational(Rational(1, n));
    if (!q.is_rational()) continue;
    Rational r = q.rational_value();
    std::string num = (r.get_num() == 1)    ? ""
                      : (r.get_num() == -1) ? "-"
                                            : (r.get_num().get_str() + "*");
    std::string s = num + "sqrt(" + std::to_string(n) + ")";
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
  }
  if (x.terms().size() == 1) {
    auto [e, r] = *x.terms().begin();
    std::string root = "z" + std::to_string(x.conductor());
    if (e != 1) root += "^" + std::to_string(e);
    if (r == 1) return root;
    if (r == -1) return "-" + root;
    return rat_to_string(r) + "*" + root;
  }
  return x.serialize().dump();
}

void print_matrix(std::ostream& os, const CycMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows() + 1);
  cells[0].push_back("");
  for (const auto& c : m.col_labels()) cells[0].push_back(c);
  if (cells[0].size() == 1) cells[0].resize(m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    cells[i + 1].push_back(i < m.row_labels().size() ? m.row_labels()[i] : "");
    for (std::size_t j = 0; j < m.cols(); ++j) cells[i + 1].push_back(pretty_cyc(m(i, j)));
  }
  std::vector<std::size_t> w(m.cols() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) w[j] = std::max(w[j], row[j].size());
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j)
      os << std::string(w[j] - row[j].size(), ' ') << row[j] << (j + 1 < row.size() ? "  " : "");
    os << "\n";
  }
}

struct Output {
  std::string format = "pretty";
  std::string out_path;

  int emit(const nlohmann::json& j, const std::function<void(std::ostream&)>& pretty) const {
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) {
        std::cerr << "cannot open " << out_path << "\n";
        return 2;
      }
      f << j.dump(2) << "\n";
    }
    if (format == "json")
      std::cout << j.dump(2) << "\n";
    else
      pretty(std::cout);
    return 0;
  }
};

FiniteGroup gamma_by_key(const std::string& key) {
  if (key == "trivial") return make_trivial();
  if (key == "z2") return make_cyclic(2);
  if (key == "z3") return make_cyclic(3);
  if (key == "s3") return make_symmetric(3);
  if (key == "s4") return make_symmetric(4);
  throw CLI::ValidationError("gamma", "unknown group key: " + key);
}

nlohmann::json basis_json(const UnipotentSpace& s, const EllipticBasis& b) {
  nlohmann::json vecs = nlohmann::json::array();
  for (std::size_t i = 0; i < b.vectors.size(); ++i) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : b.vectors[i].coords) coords.push_back(c.serialize());
    vecs.push_back({{"name", b.names[i]}, {"coords", coords}});
  }
  return {{"space", s.name}, {"labels", s.labels}, {"basis", vecs}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact nonabelian Fourier transforms, elliptic pairings, and the "
               "restriction-diagram verification for G2"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --format/--out after the subcommand name
  Output out;
  app.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "pretty"}))
      ->capture_default_str();
  app.add_option("--out", out.out_path, "Also write the JSON artifact to this path");

  std::string chartab_key, fourier_key, basis_key, ftel_key;
  long two_n = 0;
  auto* c_chartab = app.add_subcommand("chartab", "Character table of a named Weyl group");
  c_chartab->add_option("group", chartab_key, "wg2|s3|z2|z3|a1xa1")->required();
  auto* c_fourier = app.add_subcommand("fourier", "Fourier matrix of M(Gamma)");
  c_fourier->add_option("gamma", fourier_key, "trivial|z2|z3|s3|s4")->required();
  auto* c_basis = app.add_subcommand("elliptic-basis", "Orthonormal elliptic basis of a space");
  c_basis->add_option("space", basis_key, "g2q|a1a1q|a2q")->required();
  auto* c_ftel = app.add_subcommand("ft-el", "Fourier transform on the elliptic subspace");
  c_ftel->add_option("space", ftel_key, "g2q|a1a1q|a2q")->required();
  auto* c_res = app.add_subcommand("res-matrix", "Matrix of the elliptic restriction map");
  auto* c_dual = app.add_subcommand("dual-ft", "Dual Fourier transform on span(v1..v9)");
  auto* c_verify = app.add_subcommand("verify", "Verify the commutative diagram");
  auto* c_parts = app.add_subcommand("partitions-c", "Classify type-C partitions of 2n");
  c_parts->add_option("2n", two_n, "even positive integer")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (c_chartab->parsed()) {
      CharacterTable t = named_character_table(chartab_key);
      CycMatrix m(t.names, t.class_names);
      for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.class_names.size(); ++j) m(i, j) = t.rows[i].values[j];
      return out.emit(t.serialize(), [&](std::ostream& os) { print_matrix(os, m); });
    }
    if (c_fourier->parsed()) {
      CycMatrix m = fourier_matrix(gamma_by_key(fourier_key));
      return out.emit(m.serialize(), [&](std::ostream& os) { print_matrix(os, m); });
    }
    if (c_basis->parsed()) {
      UnipotentSpace s = build_space(basis_key);
      EllipticBasis b = elliptic_basis(s);
      return out.emit(basis_json(s, b), [&](std::ostream& os) {
        for (std::size_t i = 0; i < b.vectors.size(); ++i) {
          os << b.names[i] << " =";
          for (std::size_t l = 0; l < s.labels.size(); ++l)
            if (!b.vectors[i].coords[l].is_zero())
              os << " " << pretty_cyc(b.vectors[i].coords[l]) << "*" << s.labels[l];
          os << "\n";
        }
      });
    }
    if (c_ftel->parsed()) {
      CycMatrix m = ft_elliptic(build_space(ftel_key));
      return out.emit(m.serialize(), [&](std::ostream& os) { print_matrix(os, m); });
    }
    if (c_res->parsed()) {
      CycMatrix m = res_matrix();
      return out.emit(m.serialize(), [&](std::ostream& os) { print_matrix(os, m); });
    }
    if (c_dual->parsed()) {
      CycMatrix m = dual_ft();
      return out.emit(m.serialize(), [&](std::ostream& os) { print_matrix(os, m); });
    }
    if (c_verify->parsed()) {
      DiagramReport r = verify_diagram();
      bool ok = r.commutes && r.printed_identity;
      int rc = out.emit(r.serialize(), [&](std::ostream& os) {
        os << "FT_u_el (blocks 7,1,1):\n";
        print_matrix(os, r.ft_u_el);
        os << "\nres matrix:\n";
        print_matrix(os, r.res);
        os << "\ndual FT:\n";
        print_matrix(os, r.ft_dual);
        os << "\ncommutes: " << (r.commutes ? "true" : "false")
           << "\nres^T * FT_u_el * res == dual FT: " << (r.printed_identity ? "true" : "false")
           << "\n";
      });
      return rc != 0 ? rc : (ok ? 0 : 1);
    }
    if (c_parts->parsed()) {
      if (two_n <= 0 || two_n % 2 != 0) throw std::invalid_argument("2n must be even and positive");
      nlohmann::json arr = nlohmann::json::array();
      std::vector<std::pair<std::vector<long>, TypeCPartitionClass>> rows;
      for (const auto& p : partitions_of(two_n)) {
        TypeCPartitionClass c = classify_type_c_partition(p);
        arr.push_back({{"partition", p},
                       {"is_unipotent_class", c.is_unipotent_class},
                       {"is_distinguished", c.is_distinguished},
                       {"is_quasidistinguished", c.is_quasidistinguished},
                       {"in_u_el", c.in_u_el}});
        rows.emplace_back(p, c);
      }
      return out.emit(arr, [&](std::ostream& os) {
        for (const auto& [p, c] : rows) {
          os << "[";
          for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
          os << "]: unipotent=" << (c.is_unipotent_class ? "T" : "F")
             << " distinguished=" << (c.is_distinguished ? "T" : "F")
             << " quasidistinguished=" << (c.is_quasidistinguished ? "T" : "F")
             << " in_u_el=" << (c.in_u_el ? "T" : "F") << "\n";
        }
      });
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
