#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ellft {

/// Exact rational numbers. mpq_class keeps values canonical (lowest terms,
/// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;

inline std::string rat_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw std::invalid_argument("bad character in rational literal at offset " + std::to_string(i));
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline int rat_cmp(const Rational& a, const Rational& b) { return cmp(a, b); }

}  // namespace ellft
