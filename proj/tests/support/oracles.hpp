#pragma once

// Independent reference computations used to check the library.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "rootforge/abstract_roots.hpp"
#include "rootforge/group.hpp"

namespace oracle {

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

// Faithful permutation representations of some finite Coxeter groups, with
// generators listed in the library's generator order.
inline std::vector<Perm> type_a_generators(int n) {
  std::vector<Perm> gens;
  for (int i = 0; i < n; ++i) {
    Perm p(n + 1);
    for (int k = 0; k <= n; ++k) p[k] = k;
    std::swap(p[i], p[i + 1]);
    gens.push_back(p);
  }
  return gens;
}

// Signed permutations of {+-1..+-n} acting on 2n points; point k < n is +(k+1),
// point n + k is -(k+1). The last generator changes one sign.
inline std::vector<Perm> type_b_generators(int n) {
  auto idx = [n](int v) { return v > 0 ? v - 1 : n + (-v) - 1; };
  std::vector<Perm> gens;
  for (int i = 1; i < n; ++i) {
    Perm p(2 * n);
    for (int v = -n; v <= n; ++v) {
      if (v == 0) continue;
      int a = std::abs(v), img = a == i ? i + 1 : a == i + 1 ? i : a;
      p[idx(v)] = idx(v > 0 ? img : -img);
    }
    gens.push_back(p);
  }
  // The sign change sits at the m = 4 end of the path, next to (n-1 n).
  Perm p(2 * n);
  for (int v = -n; v <= n; ++v) {
    if (v == 0) continue;
    p[idx(v)] = idx(std::abs(v) == n ? -v : v);
  }
  gens.push_back(p);
  return gens;
}

// Dihedral group of order 2m acting on Z/m by x -> -x and x -> 1 - x.
inline std::vector<Perm> dihedral_generators(int m) {
  Perm r(m), s(m);
  for (int x = 0; x < m; ++x) {
    r[x] = (m - x) % m;
    s[x] = ((1 - x) % m + m) % m;
  }
  return {r, s};
}

// Cayley graph breadth-first search: element -> (length, one geodesic word).
struct CayleyTable {
  std::map<Perm, std::size_t> length;
  std::map<Perm, rootforge::Word> word;
  std::vector<Perm> gens;

  explicit CayleyTable(std::vector<Perm> g) : gens(std::move(g)) {
    Perm id(gens.front().size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    length[id] = 0;
    word[id] = {};
    std::deque<Perm> q{id};
    while (!q.empty()) {
      Perm x = q.front();
      q.pop_front();
      for (std::size_t s = 0; s < gens.size(); ++s) {
        Perm y = compose(x, gens[s]);
        if (length.count(y)) continue;
        length[y] = length[x] + 1;
        rootforge::Word w = word[x];
        w.push_back(static_cast<int>(s));
        word[y] = w;
        q.push_back(y);
      }
    }
  }

  Perm evaluate(const rootforge::Word& w) const {
    Perm x(gens.front().size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<int>(i);
    for (int s : w) x = compose(x, gens[s]);
    return x;
  }
};

// N(w) straight from the definition, over an explicit list of reflections.
inline rootforge::ReflectionSet brute_cocycle(const rootforge::CoxeterGroup& g,
                                              const std::vector<rootforge::Element>& reflections,
                                              const rootforge::Element& w) {
  rootforge::ReflectionSet out;
  for (const auto& t : reflections)
    if (g.multiply(t, w).length() < w.length()) out.insert(t);
  return out;
}

// Bruhat order by the subword property of a reduced word of y.
inline bool subword_leq(const rootforge::CoxeterGroup& g, const rootforge::Element& x, const rootforge::Element& y) {
  const rootforge::Word& w = y.word();
  const std::size_t k = w.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != x.length()) continue;
    rootforge::Word sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) sub.push_back(w[i]);
    if (g.normalize(sub) == x) return true;
  }
  return false;
}

// Betweenness from its combinatorial definition inside a reflection subgroup W':
// gamma is between a and b iff every e w(T'_+) (w in W') containing a and b contains gamma.
inline bool combinatorial_between(const rootforge::CoxeterGroup& g, const std::vector<rootforge::Element>& subgroup,
                                  const rootforge::AbstractRoot& c, const rootforge::AbstractRoot& a,
                                  const rootforge::AbstractRoot& b) {
  if (a.reflection == b.reflection) return c == a || c == b;
  for (const auto& w : subgroup)
    for (int e : {1, -1}) {
      auto wa = rootforge::act(g, w, a), wb = rootforge::act(g, w, b), wc = rootforge::act(g, w, c);
      if (e * wa.sign == 1 && e * wb.sign == 1 && e * wc.sign != 1) return false;
    }
  return true;
}

}  // namespace oracle
