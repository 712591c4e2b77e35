#include "rootforge/real_roots.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "rootforge/cone.hpp"

namespace rootforge {

namespace {

using Key = std::vector<long long>;

void append_key(Key& key, const Vec& v, double grid) {
  for (double x : v) key.push_back(std::llround(x / grid));
}

Key pair_key(const Vec& root, const Vec& coroot, double grid) {
  Key k;
  append_key(k, root, grid);
  append_key(k, coroot, grid);
  return k;
}

double max_abs(const Vec& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

Vec negate(Vec v) {
  for (double& x : v) x = -x;
  return v;
}

double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool proportional(const Vec& a, const Vec& b, double tol) {
  const double aa = dot(a, a), bb = dot(b, b), ab = dot(a, b);
  return std::abs(aa * bb - ab * ab) <= tol * std::max(1.0, aa * bb);
}

std::string label_of(const std::vector<std::string>& labels, std::size_t i) {
  return i < labels.size() ? labels[i] : std::to_string(i);
}

}  // namespace

double BasedRootDatum::pair(const Vec& v, const Vec& vp) const {
  if (v.size() != dim_v() || vp.size() != dim_vprime()) throw InputError("pairing dimension mismatch");
  double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < vp.size(); ++j) s += v[i] * pairing[i][j] * vp[j];
  }
  return s;
}

RealMatrix BasedRootDatum::ngcm() const {
  const std::size_t n = rank();
  RealMatrix a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = pair(roots[i], coroots[j]);
  return a;
}

BasedRootDatum BasedRootDatum::from_ngcm(const Ngcm& a) {
  const std::size_t n = a.a.size();
  BasedRootDatum b;
  b.labels = a.labels;
  if (b.labels.empty())
    for (std::size_t i = 0; i < n; ++i) b.labels.push_back("a" + std::to_string(i + 1));
  if (b.labels.size() != n) throw InputError("label count does not match NGCM size");
  b.pairing = a.a;
  for (const auto& row : b.pairing)
    if (row.size() != n) throw InputError("NGCM is not square");
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0.0);
    e[i] = 1.0;
    b.roots.push_back(e);
    b.coroots.push_back(e);
  }
  return b;
}

BasedRootDatum BasedRootDatum::standard(const CoxeterMatrix& m) {
  CoxeterGroup g(m);
  Ngcm a{m.generators(), RealMatrix(m.rank(), std::vector<double>(m.rank()))};
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = 0; j < m.rank(); ++j) a.a[i][j] = g.form(i, j);
  return from_ngcm(a);
}

std::size_t RootSlice::positive_count() const {
  return static_cast<std::size_t>(std::count_if(roots.begin(), roots.end(), [](const RootPair& p) { return p.positive; }));
}

std::optional<std::size_t> RootSlice::find(const Vec& root, double tol) const {
  const double scale = std::max(1.0, max_abs(root));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Vec& r = roots[i].root;
    if (r.size() != root.size()) continue;
    bool same = true;
    for (std::size_t k = 0; k < r.size() && same; ++k) same = std::abs(r[k] - root[k]) <= tol * scale * 10;
    if (same) return i;
  }
  return std::nullopt;
}

bool in_product_set(double c, double tol) {
  if (c >= 4 - tol) return true;
  if (c < -tol) return false;
  const double x = std::clamp(std::sqrt(std::max(c, 0.0)) / 2, 0.0, 1.0);
  const double angle = std::acos(x);
  if (angle <= 0) return true;
  const double m = std::numbers::pi / angle;
  for (long k = static_cast<long>(std::floor(m)) - 1; k <= static_cast<long>(std::ceil(m)) + 1; ++k) {
    if (k < 2) continue;
    const double v = 4 * std::pow(std::cos(std::numbers::pi / static_cast<double>(k)), 2);
    if (std::abs(v - c) <= tol) return true;
  }
  return false;
}

bool pair_condition(double x, double y, double tol) {
  if (x > tol || y > tol) return false;
  const bool xz = std::abs(x) <= tol, yz = std::abs(y) <= tol;
  if (xz != yz) return false;
  return in_product_set(x * y, tol);
}

ValidationReport validate_ngcm(const RealMatrix& a, double tol) {
  ValidationReport r;
  auto fail = [&](std::string msg) {
    r.valid = false;
    r.failures.push_back(std::move(msg));
  };
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) {
      fail("NGCM is not square");
      return r;
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(a[i][i] - 2) > tol) fail("diagonal entry " + std::to_string(i) + " is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > tol) fail("off-diagonal entry (" + std::to_string(i) + "," + std::to_string(j) + ") is positive");
      if (j < i) continue;
      const bool z1 = std::abs(a[i][j]) <= tol, z2 = std::abs(a[j][i]) <= tol;
      if (z1 != z2) fail("zero pattern not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      const double c = a[i][j] * a[j][i];
      if (!in_product_set(c, tol)) {
        std::ostringstream os;
        os.precision(12);
        os << "product not in P at (" << i << "," << j << "): " << c;
        fail(os.str());
      }
    }
  }
  return r;
}

ValidationReport validate_datum(const BasedRootDatum& b, double tol) {
  ValidationReport r;
  auto fail = [&](std::string msg) {
    r.valid = false;
    r.failures.push_back(std::move(msg));
  };
  const std::size_t dv = b.dim_v(), dvp = b.dim_vprime();
  bool shapes = dv > 0 && b.roots.size() == b.coroots.size();
  for (const auto& row : b.pairing) shapes = shapes && row.size() == dvp;
  for (const auto& v : b.roots) shapes = shapes && v.size() == dv;
  for (const auto& v : b.coroots) shapes = shapes && v.size() == dvp;
  if (!shapes) {
    fail("dimension mismatch between pairing, roots and coroots");
    return r;
  }
  for (std::size_t i = 0; i < b.rank(); ++i) {
    const double v = b.pair(b.roots[i], b.coroots[i]);
    if (std::abs(v - 2) > tol) fail("<a, a^vee> != 2 for " + label_of(b.labels, i));
  }
  ValidationReport n = validate_ngcm(b.ngcm(), tol);
  for (auto& f : n.failures) fail(std::move(f));
  if (!positively_independent(b.roots)) fail("roots are not positively independent");
  if (!positively_independent(b.coroots)) fail("coroots are not positively independent");
  return r;
}

CoxeterMatrix coxeter_matrix_of(const Ngcm& a, double tol) {
  const std::size_t n = a.a.size();
  std::vector<std::string> labels = a.labels;
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.a[i].size() != n) throw InputError("NGCM is not square");
    for (std::size_t j = i + 1; j < n; ++j) {
      const double c = a.a[i][j] * a.a[j][i];
      int value = -1;
      if (c >= 4 - tol) {
        value = kInfinity;
      } else if (c >= -tol) {
        const double angle = std::acos(std::clamp(std::sqrt(std::max(c, 0.0)) / 2, 0.0, 1.0));
        const long guess = std::lround(std::numbers::pi / angle);
        for (long k = std::max(2L, guess - 1); k <= guess + 1 && value < 0; ++k) {
          const double v = 4 * std::pow(std::cos(std::numbers::pi / static_cast<double>(k)), 2);
          if (std::abs(v - c) <= tol) value = static_cast<int>(k);
        }
      }
      if (value < 0) {
        std::ostringstream os;
        os.precision(12);
        os << "product " << c << " at entry (" << labels[i] << "," << labels[j] << ") lies in a gap of P";
        throw InputError(os.str());
      }
      m[i][j] = m[j][i] = value;
    }
  }
  return {labels, m};
}

CoxeterMatrix coxeter_matrix_of(const BasedRootDatum& b, double tol) {
  return coxeter_matrix_of(Ngcm{b.labels, b.ngcm()}, tol);
}

Vec reflect(const BasedRootDatum& b, const Vec& v, const RootPair& p) {
  const double c = b.pair(v, p.coroot);
  Vec out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * p.root[i];
  return out;
}

Vec reflect_coroot(const BasedRootDatum& b, const Vec& vp, const RootPair& p) {
  const double c = b.pair(p.root, vp);
  Vec out = vp;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * p.coroot[i];
  return out;
}

RootSlice generate_roots(const BasedRootDatum& b, std::size_t depth, std::size_t cap, double tol) {
  ValidationReport v = validate_datum(b, tol);
  if (!v.valid) throw InputError("invalid datum: " + v.failures.front());
  std::vector<RootPair> simple;
  for (std::size_t i = 0; i < b.rank(); ++i) simple.push_back({b.roots[i], b.coroots[i], 0, true});

  std::vector<RootPair> found;
  std::map<Key, std::size_t> index;
  std::vector<std::size_t> frontier;
  for (const auto& p : simple) {
    if (index.emplace(pair_key(p.root, p.coroot, tol), found.size()).second) {
      frontier.push_back(found.size());
      found.push_back(p);
    }
  }
  bool closed = false;
  for (std::size_t d = 0; d <= depth && !frontier.empty(); ++d) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (const auto& s : simple) {
        RootPair q{reflect(b, found[idx].root, s), reflect_coroot(b, found[idx].coroot, s), d + 1, true};
        if (index.emplace(pair_key(q.root, q.coroot, tol), found.size()).second) {
          next.push_back(found.size());
          found.push_back(std::move(q));
          if (found.size() > cap) throw ResourceCapError("root cap exceeded (" + std::to_string(cap) + ")");
        }
      }
    }
    if (next.empty()) closed = true;
    frontier = std::move(next);
  }
  if (frontier.empty()) closed = true;

  ConeTester cone(b.roots, tol);
  for (auto& p : found) {
    const bool pos = cone.contains(p.root);
    const bool neg = cone.contains(negate(p.root));
    if (pos == neg) throw InputError("root is neither positive nor negative; the datum violates the root conditions");
    p.positive = pos;
  }

  RootSlice slice;
  slice.datum = b;
  slice.depth_bound = depth;
  slice.closed = closed;
  std::vector<RootPair> negatives;
  for (const auto& p : found) {
    if (!p.positive || p.depth > depth) continue;
    slice.roots.push_back(p);
    auto it = index.find(pair_key(negate(p.root), negate(p.coroot), tol));
    if (it != index.end())
      negatives.push_back(found[it->second]);
    else
      negatives.push_back({negate(p.root), negate(p.coroot), p.depth + 1, false});
  }
  slice.roots.insert(slice.roots.end(), negatives.begin(), negatives.end());
  return slice;
}

bool is_between_real(const Vec& gamma, const Vec& alpha, const Vec& beta, double tol) {
  const double scale = std::max({1.0, max_abs(gamma), max_abs(alpha), max_abs(beta)});
  const double aa = dot(alpha, alpha), bb = dot(beta, beta), ab = dot(alpha, beta);
  const double ga = dot(gamma, alpha), gb = dot(gamma, beta);
  auto residual_ok = [&](double x, double y) {
    for (std::size_t i = 0; i < gamma.size(); ++i)
      if (std::abs(x * alpha[i] + y * beta[i] - gamma[i]) > tol * scale * 10) return false;
    return true;
  };
  const double det = aa * bb - ab * ab;
  if (std::abs(det) <= tol * std::max(1.0, aa * bb)) {
    const double x = ga / aa;
    if (!residual_ok(x, 0)) return false;
    return ab < 0 || x >= -tol * scale;
  }
  const double x = (ga * bb - gb * ab) / det;
  const double y = (gb * aa - ga * ab) / det;
  if (!residual_ok(x, y)) return false;
  return x >= -tol * scale && y >= -tol * scale;
}

namespace {

struct PlanarRoot {
  double x, y;    // root = x * alpha + y * beta
  double cx, cy;  // coroot = cx * alpha^vee + cy * beta^vee
};

// Canonical simple roots of the dihedral reflection subgroup generated by two
// positive roots: the extreme rays among its positive roots.
std::pair<RootPair, RootPair> canonical_dihedral_pair(const BasedRootDatum& b, const ConeTester& cone,
                                                     const RootPair& alpha, const RootPair& beta,
                                                     std::size_t max_steps, double tol) {
  const double a12 = b.pair(alpha.root, beta.coroot);
  const double a21 = b.pair(beta.root, alpha.coroot);
  auto s_alpha = [&](const PlanarRoot& p) {
    return PlanarRoot{-p.x - p.y * a21, p.y, -p.cx - p.cy * a12, p.cy};
  };
  auto s_beta = [&](const PlanarRoot& p) {
    return PlanarRoot{p.x, -p.y - p.x * a12, p.cx, -p.cy - p.cx * a21};
  };
  auto key = [&](const PlanarRoot& p) {
    return Key{std::llround(p.x / tol), std::llround(p.y / tol), std::llround(p.cx / tol), std::llround(p.cy / tol)};
  };
  std::vector<PlanarRoot> orbit{{1, 0, 1, 0}, {0, 1, 0, 1}};
  std::set<Key> seen{key(orbit[0]), key(orbit[1])};
  std::vector<std::size_t> frontier{0, 1};
  for (std::size_t step = 0; step < max_steps && !frontier.empty(); ++step) {
    std::vector<std::size_t> next;
    for (std::size_t i : frontier) {
      for (const PlanarRoot& q : {s_alpha(orbit[i]), s_beta(orbit[i])}) {
        if (std::abs(q.x) > 1e12 || std::abs(q.y) > 1e12) continue;
        if (seen.insert(key(q)).second) {
          next.push_back(orbit.size());
          orbit.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }
  auto lift = [&](const PlanarRoot& p) {
    RootPair r;
    r.root.assign(alpha.root.size(), 0.0);
    r.coroot.assign(alpha.coroot.size(), 0.0);
    for (std::size_t i = 0; i < r.root.size(); ++i) r.root[i] = p.x * alpha.root[i] + p.y * beta.root[i];
    for (std::size_t i = 0; i < r.coroot.size(); ++i)
      r.coroot[i] = p.cx * alpha.coroot[i] + p.cy * beta.coroot[i];
    r.positive = true;
    return r;
  };
  std::vector<PlanarRoot> positive;
  for (const auto& p : orbit)
    if (cone.contains(lift(p).root)) positive.push_back(p);
  auto cross = [](const PlanarRoot& p, const PlanarRoot& q) { return p.x * q.y - p.y * q.x; };
  const PlanarRoot* lo = nullptr;
  const PlanarRoot* hi = nullptr;
  for (const auto& p : positive) {
    const double scale = std::max({1.0, std::abs(p.x), std::abs(p.y)});
    bool is_lo = true, is_hi = true;
    for (const auto& q : positive) {
      const double c = cross(p, q) / (scale * std::max({1.0, std::abs(q.x), std::abs(q.y)}));
      if (c < -tol) is_lo = false;
      if (c > tol) is_hi = false;
    }
    if (is_lo && !lo) lo = &p;
    if (is_hi && !hi) hi = &p;
  }
  if (!lo || !hi) throw ResourceCapError("dihedral canonical roots not found within the exploration bound");
  return {lift(*lo), lift(*hi)};
}

void drop_proportional(std::vector<RootPair>& roots, double tol) {
  std::vector<RootPair> out;
  for (auto& r : roots) {
    bool dup = false;
    for (const auto& o : out) dup = dup || proportional(o.root, r.root, tol);
    if (!dup) out.push_back(std::move(r));
  }
  roots = std::move(out);
}

}  // namespace

std::vector<RootPair> reflection_subgroup_basis(const BasedRootDatum& b, std::vector<RootPair> R, std::size_t cap,
                                                double tol) {
  ConeTester cone(b.roots, tol);
  for (const auto& r : R)
    if (!cone.contains(r.root)) throw InputError("reflection subgroup generators must be positive roots");
  drop_proportional(R, tol);
  for (std::size_t iter = 0;; ++iter) {
    if (iter >= cap) throw ResourceCapError("pair reduction did not stabilize within the iteration cap");
    bool changed = false;
    for (std::size_t i = 0; i < R.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < R.size() && !changed; ++j) {
        const double x = b.pair(R[i].root, R[j].coroot);
        const double y = b.pair(R[j].root, R[i].coroot);
        if (pair_condition(x, y, tol)) continue;
        auto [lo, hi] = canonical_dihedral_pair(b, cone, R[i], R[j], 256, tol);
        R[i] = std::move(lo);
        R[j] = std::move(hi);
        changed = true;
      }
    }
    if (!changed) break;
    drop_proportional(R, tol);
  }
  return R;
}

BasedRootDatum rescale(const BasedRootDatum& b, const std::vector<double>& c) {
  if (c.size() != b.rank()) throw InputError("one scalar per simple root required");
  BasedRootDatum out = b;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!(c[i] > 0)) throw InputError("rescaling factors must be positive");
    for (double& x : out.roots[i]) x *= c[i];
    for (double& x : out.coroots[i]) x /= c[i];
  }
  return out;
}

DatumProperties datum_properties(const RealMatrix& a, double tol) {
  const std::size_t n = a.size();
  CoxeterMatrix m = coxeter_matrix_of(Ngcm{{}, a}, tol);
  DatumProperties p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int mij = m.m(i, j);
      if (mij != kInfinity && mij % 2 == 1 &&
          std::abs(a[i][j] - a[j][i]) > tol * std::max(1.0, std::abs(a[i][j])))
        p.reduced = false;
    }
  std::vector<double> c(n, 0.0);
  for (std::size_t start = 0; start < n; ++start) {
    if (c[start] != 0) continue;
    c[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || std::abs(a[i][j]) <= tol || c[j] != 0) continue;
        c[j] = c[i] * std::sqrt(a[i][j] / a[j][i]);
        stack.push_back(j);
      }
    }
  }
  for (std::size_t i = 0; i < n && p.symmetrizable; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double x = c[i] / c[j] * a[i][j];
      const double y = c[j] / c[i] * a[j][i];
      if (std::abs(x - y) > tol * std::max({1.0, std::abs(x), std::abs(y)}) * 10) {
        p.symmetrizable = false;
        break;
      }
    }
  if (p.symmetrizable) p.rescaling = c;
  return p;
}

DatumProperties datum_properties(const BasedRootDatum& b, double tol) { return datum_properties(b.ngcm(), tol); }

bool is_root_basis(const RootSlice& slice, const std::vector<std::size_t>& subset, double tol) {
  if (!slice.closed) throw InputError("root basis search requires a closed slice");
  if (subset.empty()) return slice.roots.empty();
  const BasedRootDatum& b = slice.datum;
  std::vector<Vec> roots, coroots;
  for (std::size_t i : subset) {
    roots.push_back(slice.roots.at(i).root);
    coroots.push_back(slice.roots.at(i).coroot);
  }
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (!pair_condition(b.pair(roots[i], coroots[j]), b.pair(roots[j], coroots[i]), tol)) return false;
  if (!positively_independent(roots) || !positively_independent(coroots)) return false;

  std::set<Key> all;
  for (const auto& p : slice.roots) all.insert(pair_key(p.root, p.coroot, tol));
  std::set<Key> seen;
  std::vector<RootPair> queue;
  for (std::size_t i : subset) {
    queue.push_back(slice.roots[i]);
    seen.insert(pair_key(slice.roots[i].root, slice.roots[i].coroot, tol));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t i : subset) {
      const RootPair& s = slice.roots[i];
      RootPair q{reflect(b, queue[head].root, s), reflect_coroot(b, queue[head].coroot, s), 0, true};
      Key k = pair_key(q.root, q.coroot, tol);
      if (!all.count(k)) return false;
      if (seen.insert(k).second) queue.push_back(std::move(q));
    }
  }
  return seen.size() == all.size();
}

std::vector<std::vector<std::size_t>> find_root_bases(const RootSlice& slice, double tol) {
  if (!slice.closed) throw InputError("root basis search requires a closed slice");
  const BasedRootDatum& b = slice.datum;
  const std::size_t n = slice.roots.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto compatible = [&](std::size_t i) {
    for (std::size_t j : current) {
      const double x = b.pair(slice.roots[i].root, slice.roots[j].coroot);
      const double y = b.pair(slice.roots[j].root, slice.roots[i].coroot);
      if (!pair_condition(x, y, tol)) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    if (!current.empty() && is_root_basis(slice, current, tol)) out.push_back(current);
    for (std::size_t i = from; i < n; ++i) {
      if (!compatible(i)) continue;
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace rootforge
