// zg/perm.hpp
//
// Permutations on {0, ..., n-1} with cycle-notation I/O. Cycle text uses
// 1-based points, e.g. "(1 2 3)(4 5)". Composition is left-to-right:
// compose(a, b) applies a first, then b. Cycles inside one string compose
// in the same left-to-right order (the order is irrelevant for the disjoint
// cycles produced by format_cycles).

#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "zg/errors.hpp"

namespace zg {

struct perm {
  std::vector<int32_t> img;  // img[i] is the image of point i

  int degree() const { return static_cast<int>(img.size()); }
  bool operator==(const perm&) const = default;
  bool operator<(const perm& o) const { return img < o.img; }
};

inline perm perm_identity(int n) {
  perm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = i;
  return p;
}

inline perm compose(const perm& a, const perm& b) {
  if (a.degree() != b.degree())
    throw precondition_error("composing permutations of different degree");
  perm c;
  c.img.resize(a.img.size());
  for (std::size_t i = 0; i < a.img.size(); ++i) c.img[i] = b.img[a.img[i]];
  return c;
}

inline perm inverse(const perm& a) {
  perm c;
  c.img.resize(a.img.size());
  for (std::size_t i = 0; i < a.img.size(); ++i) c.img[a.img[i]] = static_cast<int32_t>(i);
  return c;
}

inline bool is_permutation(const std::vector<int32_t>& img) {
  std::vector<char> seen(img.size(), 0);
  for (int32_t v : img) {
    if (v < 0 || v >= static_cast<int32_t>(img.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Parse cycle notation on points 1..npoints. Accepts whitespace and commas
// between points, "()" for the identity, and multiple cycles.
inline perm parse_cycles(const std::string& text, int npoints) {
  perm result = perm_identity(npoints);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  if (i == text.size()) throw parse_error("empty permutation text");
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw parse_error("expected '(' in cycle notation: '" + text + "'");
    ++i;
    std::vector<int32_t> cycle;
    std::vector<char> used(npoints, 0);
    for (;;) {
      skip_ws();
      if (i == text.size())
        throw parse_error("unterminated cycle in: '" + text + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected point or ')' in: '" + text + "'");
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > npoints) break;
        ++i;
      }
      if (v < 1 || v > npoints)
        throw parse_error("point out of range 1.." + std::to_string(npoints) +
                          " in: '" + text + "'");
      if (used[v - 1])
        throw parse_error("repeated point " + std::to_string(v) + " in one cycle: '" + text + "'");
      used[v - 1] = 1;
      cycle.push_back(static_cast<int32_t>(v - 1));
    }
    any_cycle = true;
    if (cycle.size() >= 2) {
      perm c = perm_identity(npoints);
      for (std::size_t k = 0; k + 1 < cycle.size(); ++k) c.img[cycle[k]] = cycle[k + 1];
      c.img[cycle.back()] = cycle.front();
      result = compose(result, c);
    }
    skip_ws();
  }
  if (!any_cycle) throw parse_error("no cycles in: '" + text + "'");
  return result;
}

// Disjoint-cycle form with 1-based points; fixed points omitted, identity
// printed as "()". Cycles start at their minimal point, in ascending order.
inline std::string format_cycles(const perm& p) {
  std::string out;
  std::vector<char> seen(p.img.size(), 0);
  for (std::size_t i = 0; i < p.img.size(); ++i) {
    if (seen[i] || p.img[i] == static_cast<int32_t>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p.img[j]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace zg
