#include "rootforge/twisting.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "rootforge/errors.hpp"

namespace rootforge {

TwistSpec TwistSpec::from_names(const CoxeterMatrix& m, const std::vector<std::string>& j,
                                const std::vector<std::string>& k, const std::vector<std::string>& l,
                                const std::vector<std::string>& mm) {
  auto resolve = [&](const std::vector<std::string>& names) {
    std::vector<int> out;
    for (const auto& n : names) out.push_back(m.index_of(n));
    return out;
  };
  return {resolve(j), resolve(k), resolve(l), resolve(mm)};
}

Element longest_element(const CoxeterGroup& g, const std::vector<int>& K) {
  if (!parabolic_is_finite(g, K)) throw InputError("W_K is infinite");
  auto elements = enumerate_parabolic(g, K, std::numeric_limits<std::size_t>::max() / 4);
  return elements.back();
}

TwistReport validate_twist(const CoxeterGroup& g, const TwistSpec& spec) {
  const CoxeterMatrix& m = g.matrix();
  TwistReport r;
  auto fail = [&](std::string msg) {
    r.valid = false;
    r.failures.push_back(std::move(msg));
  };
  std::vector<int> count(g.rank(), 0);
  for (const auto* part : {&spec.J, &spec.K, &spec.L, &spec.M})
    for (int s : *part) {
      if (s < 0 || static_cast<std::size_t>(s) >= g.rank()) throw InputError("generator index out of range");
      ++count[s];
    }
  for (std::size_t s = 0; s < g.rank(); ++s) {
    if (count[s] == 0) fail("generator " + m.name(s) + " is not assigned to J, K, L or M");
    if (count[s] > 1) fail("generator " + m.name(s) + " is assigned more than once");
  }
  for (int u : spec.M)
    for (int j : spec.J)
      if (!m.is_infinite(u, j)) fail("M contains " + m.name(u) + " but m(" + m.name(u) + "," + m.name(j) + ") is finite");
  for (int l : spec.L)
    for (int k : spec.K)
      if (m.m(l, k) != 2) fail("m(" + m.name(l) + "," + m.name(k) + ") != 2 for an L, K pair");
  if (!parabolic_is_finite(g, spec.K)) {
    fail("W_K is infinite");
  } else {
    r.w_k = longest_element(g, spec.K);
  }
  return r;
}

TwistResult apply_twist(const CoxeterGroup& g, const TwistSpec& spec) {
  TwistReport report = validate_twist(g, spec);
  if (!report.valid) throw InputError("invalid twist: " + report.failures.front());
  const CoxeterMatrix& m = g.matrix();
  const std::size_t n = g.rank();
  TwistResult out;
  out.w_k = *report.w_k;
  out.in_j.assign(n, false);
  for (int j : spec.J) out.in_j[j] = true;
  // Conjugation by w_K permutes K and fixes L; J' and K pair through it.
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  for (int k : spec.K) {
    const Element c = g.conjugate(out.w_k, g.generator(k));
    if (c.length() != 1) throw InputError("w_K does not normalize K");
    image[k] = c.word()[0];
  }
  std::vector<std::vector<int>> mp(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i) {
    out.generators.push_back(out.in_j[i] ? g.conjugate(out.w_k, g.generator(static_cast<int>(i)))
                                         : g.generator(static_cast<int>(i)));
    out.names.push_back(out.in_j[i] ? m.name(i) + "'" : m.name(i));
    for (std::size_t k = 0; k < n; ++k) {
      if (i == k) continue;
      if (out.in_j[i] == out.in_j[k]) {
        mp[i][k] = m.m(i, k);
      } else {
        const std::size_t j = out.in_j[i] ? i : k, s = out.in_j[i] ? k : i;
        mp[i][k] = m.m(j, image[s]);
      }
    }
  }
  out.matrix = CoxeterMatrix(out.names, mp);
  return out;
}

namespace {

// Disjoint sets carrying the parity of each element relative to its root.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    std::size_t root = x;
    while (parent_[root] != root) {
      p ^= parity_[root];
      root = parent_[root];
    }
    // Path compression, keeping parities relative to the root.
    int acc = p;
    while (parent_[x] != root) {
      const std::size_t next = parent_[x];
      const int px = parity_[x];
      parent_[x] = root;
      parity_[x] = acc;
      acc ^= px;
      x = next;
    }
    return {root, p};
  }

  // Requires parity(a) xor parity(b) == d; false on contradiction.
  bool unite(std::size_t a, std::size_t b, int d) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == d;
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ d;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
};

bool odd_finite(int m) { return m != kInfinity && m % 2 == 1; }

}  // namespace

SignSolution twist_sign_solve(const CoxeterGroup& g, const TwistSpec& spec) {
  TwistResult t = apply_twist(g, spec);
  const std::size_t n = g.rank();
  std::vector<char> in_k(n, 0), in_l(n, 0);
  for (int k : spec.K) in_k[k] = 1;
  for (int l : spec.L) in_l[l] = 1;
  ParityUnionFind uf(n);
  SignSolution out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!odd_finite(t.matrix.m(a, b))) continue;
      int d = -1;
      if (!t.in_j[a] && !t.in_j[b]) {
        d = 0;
      } else if (t.in_j[a] != t.in_j[b]) {
        const std::size_t other = t.in_j[a] ? b : a;
        if (in_k[other]) d = 1;
        if (in_l[other]) d = 0;
      }
      if (d < 0) continue;
      if (!uf.unite(a, b, d)) {
        out.conflict = (d ? "opposite" : "equal") + std::string(" signs required for ") + t.names[a] + ", " +
                       t.names[b] + " contradict earlier constraints";
        return out;
      }
    }
  out.feasible = true;
  for (std::size_t a = 0; a < n; ++a) out.signs.push_back(uf.find(a).second ? -1 : 1);
  // Normalize each component so that its first generator outside J' (if any) is positive.
  std::vector<int> flip(n, 0), decided(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t root = uf.find(a).first;
    if (decided[root] || t.in_j[a]) continue;
    decided[root] = 1;
    flip[root] = out.signs[a] < 0;
  }
  for (std::size_t a = 0; a < n; ++a)
    if (flip[uf.find(a).first]) out.signs[a] = -out.signs[a];
  return out;
}

}  // namespace rootforge
