#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellft {

/// A finite group stored by its full multiplication table. Elements are ids
/// 0..order-1, id 0 is the identity. Elements are enumerated breadth-first
/// over the named generators, so ids (and everything derived from them, in
/// particular the canonical conjugacy-class order) are deterministic.
class FiniteGroup {
 public:
  struct Data {
    int order = 1;
    std::vector<int> mul;                  // order x order, row-major
    std::vector<int> inv;
    std::vector<int> gens;                 // generator element ids
    std::vector<std::string> gen_names;
    std::vector<std::vector<int>> words;   // BFS word (generator indices) per element
    // conjugacy data, canonical order: classes sorted by minimal element id
    std::vector<int> class_of;             // element -> class index
    std::vector<int> class_rep;            // class -> representative (minimal id)
    std::vector<int> class_size;
  };

  FiniteGroup() : d_(trivial_data()) {}
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  int order() const { return d_->order; }
  int mul(int a, int b) const { return d_->mul[a * d_->order + b]; }
  int inv(int a) const { return d_->inv[a]; }
  int conj_elem(int g, int x) const { return mul(mul(g, x), inv(g)); }

  int element_order(int a) const {
    int n = 1, p = a;
    while (p != 0) { p = mul(p, a); ++n; }
    return n;
  }

  int exponent() const {
    long e = 1;
    for (int a = 0; a < order(); ++a) e = std::lcm(e, (long)element_order(a));
    return static_cast<int>(e);
  }

  const std::vector<int>& generators() const { return d_->gens; }
  const std::vector<std::string>& generator_names() const { return d_->gen_names; }

  std::string word(int a) const {
    if (a == 0) return "1";
    std::string s;
    for (int gi : d_->words[a]) {
      if (!s.empty()) s += "*";
      s += d_->gen_names[gi];
    }
    return s;
  }

  std::size_t class_count() const { return d_->class_rep.size(); }
  int class_of(int a) const { return d_->class_of[a]; }
  int class_rep(int c) const { return d_->class_rep[c]; }
  int class_size(int c) const { return d_->class_size[c]; }

  /// Same underlying group object (identity, not isomorphism).
  bool same_as(const FiniteGroup& o) const { return d_ == o.d_; }

  const std::shared_ptr<const Data>& data() const { return d_; }

  /// Builds a group from its multiplication table pieces; fills in inverse
  /// and conjugacy data.
  static FiniteGroup from_table(std::vector<int> mul, int order, std::vector<int> gens,
                                std::vector<std::string> gen_names,
                                std::vector<std::vector<int>> words) {
    auto d = std::make_shared<Data>();
    d->order = order;
    d->mul = std::move(mul);
    d->gens = std::move(gens);
    d->gen_names = std::move(gen_names);
    d->words = std::move(words);
    d->inv.assign(order, -1);
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        if (d->mul[a * order + b] == 0) { d->inv[a] = b; break; }
    for (int a = 0; a < order; ++a)
      if (d->inv[a] < 0) throw std::logic_error("element without inverse");
    // conjugacy classes, ordered by minimal element id
    d->class_of.assign(order, -1);
    for (int a = 0; a < order; ++a) {
      if (d->class_of[a] >= 0) continue;
      int c = static_cast<int>(d->class_rep.size());
      d->class_rep.push_back(a);
      int size = 0;
      for (int g = 0; g < order; ++g) {
        int x = d->mul[d->mul[g * order + a] * order + d->inv[g]];
        if (d->class_of[x] < 0) { d->class_of[x] = c; ++size; }
      }
      d->class_size.push_back(size);
    }
    return FiniteGroup(std::move(d));
  }

 private:
  std::shared_ptr<const Data> d_;

  static std::shared_ptr<const Data> trivial_data() {
    static std::shared_ptr<const Data> d = [] {
      auto t = std::make_shared<Data>();
      t->order = 1;
      t->mul = {0};
      t->inv = {0};
      t->words = {{}};
      t->class_of = {0};
      t->class_rep = {0};
      t->class_size = {1};
      return t;
    }();
    return d;
  }
};

namespace detail {

using Perm = std::vector<int>;

inline Perm perm_mul(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

/// BFS enumeration of the group generated by permutations; right
/// multiplication by generators in the given order.
inline FiniteGroup group_from_perms(const std::vector<Perm>& gen_perms,
                                    std::vector<std::string> gen_names) {
  std::size_t deg = gen_perms.at(0).size();
  Perm id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
  std::map<Perm, int> index;
  std::vector<Perm> elems{id};
  std::vector<std::vector<int>> words{{}};
  index[id] = 0;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t gi = 0; gi < gen_perms.size(); ++gi) {
      Perm next = perm_mul(elems[head], gen_perms[gi]);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(next);
        auto w = words[head];
        w.push_back(static_cast<int>(gi));
        words.push_back(std::move(w));
      }
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a * n + b] = index.at(perm_mul(elems[a], elems[b]));
  std::vector<int> gens;
  for (const auto& g : gen_perms) gens.push_back(index.at(g));
  return FiniteGroup::from_table(std::move(mul), n, std::move(gens), std::move(gen_names),
                                 std::move(words));
}

}  // namespace detail

inline FiniteGroup make_trivial() { return FiniteGroup(); }

inline FiniteGroup make_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("make_cyclic: n must be >= 1");
  if (n == 1) return make_trivial();
  detail::Perm g(n);
  for (int i = 0; i < n; ++i) g[i] = (i + 1) % n;
  return detail::group_from_perms({g}, {"g"});
}

inline FiniteGroup make_symmetric(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("make_symmetric: need 1 <= n <= 6");
  if (n == 1) return make_trivial();
  std::vector<detail::Perm> gens;
  std::vector<std::string> names;
  for (int i = 0; i + 1 < n; ++i) {
    detail::Perm t(n);
    for (int j = 0; j < n; ++j) t[j] = j;
    std::swap(t[i], t[i + 1]);
    gens.push_back(t);
    names.push_back("s" + std::to_string(i + 1));
  }
  return detail::group_from_perms(gens, names);
}

/// Dihedral group of the given (even) order, generated by two reflections
/// s1, s2 with s1*s2 of order m = order/2. For order 12 this is W(G2); by
/// convention s1 is the long reflection and s2 the short one.
inline FiniteGroup make_dihedral(int order) {
  if (order < 4 || order % 2 != 0) throw std::invalid_argument("make_dihedral: order must be even and >= 4");
  int m = order / 2;
  detail::Perm s1(m), s2(m);
  for (int i = 0; i < m; ++i) {
    s1[i] = ((m - i) % m + m) % m;      // i -> -i
    s2[i] = ((1 - i) % m + m) % m;      // i -> 1-i
  }
  return detail::group_from_perms({s1, s2}, {"s1", "s2"});
}

inline FiniteGroup make_product(const FiniteGroup& g, const FiniteGroup& h) {
  int ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ga = a / nh, ha = a % nh, gb = b / nh, hb = b % nh;
      mul[a * n + b] = g.mul(ga, gb) * nh + h.mul(ha, hb);
    }
  std::vector<int> gens;
  std::vector<std::string> gen_names;
  std::vector<std::vector<int>> words(n);
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    gens.push_back(g.generators()[i] * nh);
    gen_names.push_back(g.generator_names()[i] + "[1]");
  }
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    gens.push_back(h.generators()[i]);
    gen_names.push_back(h.generator_names()[i] + "[2]");
  }
  for (int a = 0; a < n; ++a) {
    int ga = a / nh, ha = a % nh;
    // word of (ga, ha): g-part generators then h-part generators
    for (int gi : g.data()->words[ga]) words[a].push_back(gi);
    int off = static_cast<int>(g.generators().size());
    for (int hi : h.data()->words[ha]) words[a].push_back(off + hi);
  }
  return FiniteGroup::from_table(std::move(mul), n, std::move(gens), std::move(gen_names),
                                 std::move(words));
}

/// A subgroup materialized as a standalone group plus the embedding into the
/// parent. Subgroup element ids follow ascending parent ids, so id 0 is the
/// identity.
struct Subgroup {
  FiniteGroup parent;
  FiniteGroup group;
  std::vector<int> to_parent;    // subgroup id -> parent id
  std::vector<int> from_parent;  // parent id -> subgroup id or -1

  int embed(int sub_id) const { return to_parent[sub_id]; }
  bool contains(int parent_id) const { return from_parent[parent_id] >= 0; }
  int restrict_id(int parent_id) const {
    int s = from_parent[parent_id];
    if (s < 0) throw std::invalid_argument("element not in subgroup");
    return s;
  }
};

/// Subgroup from an explicit, multiplication-closed element set.
inline Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  Subgroup s;
  s.parent = g;
  s.to_parent = std::move(elems);
  s.from_parent.assign(g.order(), -1);
  for (std::size_t i = 0; i < s.to_parent.size(); ++i) s.from_parent[s.to_parent[i]] = static_cast<int>(i);
  int n = static_cast<int>(s.to_parent.size());
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = g.mul(s.to_parent[a], s.to_parent[b]);
      int sid = s.from_parent[p];
      if (sid < 0) throw std::invalid_argument("element set is not closed under multiplication");
      mul[a * n + b] = sid;
    }
  std::vector<std::vector<int>> words(n);  // no canonical generators; words unused
  s.group = FiniteGroup::from_table(std::move(mul), n, {}, {}, std::move(words));
  return s;
}

inline Subgroup subgroup_generated_by(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> elems{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (int s : gens) {
      int x = g.mul(elems[head], s);
      if (!seen[x]) { seen[x] = 1; elems.push_back(x); }
    }
  return subgroup_from_elements(g, std::move(elems));
}

/// Centralizer {h : hx = xh} of an element.
inline Subgroup centralizer(const FiniteGroup& g, int x) {
  if (x < 0 || x >= g.order()) throw std::invalid_argument("centralizer: bad element id");
  std::vector<int> elems;
  for (int h = 0; h < g.order(); ++h)
    if (g.mul(h, x) == g.mul(x, h)) elems.push_back(h);
  return subgroup_from_elements(g, std::move(elems));
}

}  // namespace ellft
