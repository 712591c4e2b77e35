#include "rootforge/orders.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <unordered_set>

#include <Eigen/Dense>

#include "rootforge/errors.hpp"

namespace rootforge {

bool weak_leq(const CoxeterGroup& g, const Element& x, const Element& y) {
  const ReflectionSet nx = cocycle(g, x), ny = cocycle(g, y);
  return std::includes(ny.begin(), ny.end(), nx.begin(), nx.end());
}

ReflectionSet twisted_dot(const CoxeterGroup& g, const Element& w, const ReflectionSet& A) {
  return symmetric_difference(cocycle(g, w), conjugate_set(g, w, A));
}

bool bruhat_leq(const CoxeterGroup& g, const Element& x, const Element& y, const ReflectionSet& A,
                std::size_t max_len) {
  g.check_same_group(x);
  g.check_same_group(y);
  if (x == y) return true;
  const std::size_t cap = default_element_cap();
  std::unordered_set<Element, ElementHash> seen{y};
  std::deque<Element> queue{y};
  bool truncated = false;
  while (!queue.empty()) {
    const Element z = queue.front();
    queue.pop_front();
    for (const Element& t : twisted_dot(g, z, A)) {
      Element next = g.multiply(t, z);
      if (next == x) return true;
      if (next.length() > max_len) {
        truncated = true;
        continue;
      }
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw ResourceCapError("element cap exceeded (" + std::to_string(cap) + ")");
        queue.push_back(std::move(next));
      }
    }
  }
  if (truncated) throw WindowError("bruhat_leq: search left the window of length " + std::to_string(max_len));
  return false;
}

CoxeterCocycle::CoxeterCocycle(const CoxeterGroup& g, std::size_t cap)
    : group_(std::make_shared<const CoxeterGroup>(g)) {
  if (!g.is_finite()) throw InputError("order tables need a finite group");
  elements_ = enumerate_elements(g, std::numeric_limits<std::size_t>::max() / 4, cap);
  std::sort(elements_.begin(), elements_.end());
  const std::size_t n = elements_.size(), rank = g.rank();

  std::vector<std::size_t> left(rank * n), right(rank * n);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t s = 0; s < rank; ++s) {
      const Element gen = g.generator(static_cast<int>(s));
      left[s * n + w] = index_of(g.multiply(gen, elements_[w]));
      right[s * n + w] = index_of(g.multiply(elements_[w], gen));
    }

  // Reflections: conjugacy orbits of the generators.
  std::vector<char> is_refl(n, 0);
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < rank; ++s) {
    const std::size_t i = index_of(g.generator(static_cast<int>(s)));
    if (!is_refl[i]) {
      is_refl[i] = 1;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const std::size_t t = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < rank; ++s) {
      const std::size_t c = left[s * n + right[s * n + t]];
      if (!is_refl[c]) {
        is_refl[c] = 1;
        queue.push_back(c);
      }
    }
  }
  std::vector<std::size_t> refl_of(n, n);
  for (std::size_t w = 0; w < n; ++w)
    if (is_refl[w]) {
      refl_of[w] = reflections_.size();
      reflections_.push_back(elements_[w]);
      reflection_element_.push_back(w);
    }
  const std::size_t m = reflections_.size();

  inverse_.resize(n);
  for (std::size_t w = 0; w < n; ++w) inverse_[w] = index_of(g.inverse(elements_[w]));

  // Conjugation and products by peeling letters off reduced words, shortest elements first.
  conj_.assign(n * m, 0);
  product_.assign(n * n, 0);
  cocycle_.assign(n, ReflectionMask(m));
  for (std::size_t t = 0; t < m; ++t) conj_[t] = t;
  for (std::size_t y = 0; y < n; ++y) product_[y] = y;
  for (std::size_t w = 1; w < n; ++w) {
    const std::size_t s = static_cast<std::size_t>(elements_[w].word().front());
    const std::size_t rest = left[s * n + w];  // s w, shorter
    const std::size_t s_refl = refl_of[index_of(g.generator(static_cast<int>(s)))];
    for (std::size_t t = 0; t < m; ++t) {
      const std::size_t inner = reflection_element_[conj_[rest * m + t]];
      conj_[w * m + t] = refl_of[left[s * n + right[s * n + inner]]];
    }
    for (std::size_t y = 0; y < n; ++y) product_[w * n + y] = left[s * n + product_[rest * n + y]];
    // N(s u) = {s} + s N(u) s
    ReflectionMask mask(m);
    const ReflectionMask& prev = cocycle_[rest];
    for (std::size_t t = prev.find_first(); t != ReflectionMask::npos; t = prev.find_next(t))
      mask.set(refl_of[left[s * n + right[s * n + reflection_element_[t]]]]);
    mask.flip(s_refl);
    cocycle_[w] = std::move(mask);
  }
}

std::size_t CoxeterCocycle::index_of(const Element& w) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), w);
  if (it == elements_.end() || !(*it == w)) throw InputError("element not in the tabulated group");
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t CoxeterCocycle::reflection_index(const Element& t) const {
  auto it = std::lower_bound(reflections_.begin(), reflections_.end(), t);
  if (it == reflections_.end() || !(*it == t)) throw InputError("element is not a reflection");
  return static_cast<std::size_t>(it - reflections_.begin());
}

std::string CoxeterCocycle::label(std::size_t w) const {
  return elements_[w].is_identity() ? "e" : group_->format(elements_[w]);
}

std::string CoxeterCocycle::reflection_label(std::size_t t) const { return group_->format(reflections_[t]); }

ReflectionMask CoxeterCocycle::mask_of(const ReflectionSet& A) const {
  ReflectionMask out(reflections_.size());
  for (const Element& t : A) out.set(reflection_index(t));
  return out;
}

ReflectionSet CoxeterCocycle::set_of(const ReflectionMask& A) const {
  ReflectionSet out;
  for (std::size_t t = A.find_first(); t != ReflectionMask::npos; t = A.find_next(t)) out.insert(reflections_[t]);
  return out;
}

ReflectionMask twisted_dot(const CocycleProvider& p, std::size_t w, const ReflectionMask& A) {
  ReflectionMask out = p.cocycle(w);
  for (std::size_t t = A.find_first(); t != ReflectionMask::npos; t = A.find_next(t)) out.flip(p.conjugate(w, t));
  return out;
}

namespace {

// Antisymmetry and covering pairs of a reflexive, transitive relation.
void finish(OrderRelation& rel) {
  const std::size_t n = rel.size;
  rel.partial_order = true;
  std::vector<ReflectionMask> strict(n, ReflectionMask(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      if (x == y || !rel.below[y][x]) continue;
      if (rel.below[x][y]) {
        rel.partial_order = false;
      } else {
        strict[y].set(x);
      }
    }
  for (std::size_t y = 0; y < n; ++y) {
    ReflectionMask covered(n);
    for (std::size_t z = strict[y].find_first(); z != ReflectionMask::npos; z = strict[y].find_next(z))
      covered |= strict[z];
    const ReflectionMask covers = strict[y] - covered;
    for (std::size_t x = covers.find_first(); x != ReflectionMask::npos; x = covers.find_next(x))
      rel.hasse.emplace_back(x, y);
  }
  std::sort(rel.hasse.begin(), rel.hasse.end());
}

}  // namespace

OrderRelation weak_order(const CocycleProvider& p) {
  OrderRelation rel;
  rel.kind = OrderKind::Weak;
  rel.size = p.element_count();
  rel.twist = ReflectionMask(p.reflection_count());
  rel.below.assign(rel.size, ReflectionMask(rel.size));
  for (std::size_t y = 0; y < rel.size; ++y)
    for (std::size_t x = 0; x < rel.size; ++x)
      if (p.cocycle(x).is_subset_of(p.cocycle(y))) rel.below[y].set(x);
  finish(rel);
  return rel;
}

OrderRelation bruhat_order(const CocycleProvider& p, const ReflectionMask& A) {
  if (A.size() != p.reflection_count()) throw InputError("twist set has the wrong size");
  OrderRelation rel;
  rel.kind = OrderKind::Bruhat;
  rel.size = p.element_count();
  rel.twist = A;
  const std::size_t n = rel.size;
  std::vector<std::vector<std::size_t>> steps(n);
  for (std::size_t z = 0; z < n; ++z) {
    const ReflectionMask d = twisted_dot(p, z, A);
    for (std::size_t t = d.find_first(); t != ReflectionMask::npos; t = d.find_next(t))
      steps[z].push_back(p.multiply(p.reflection_element(t), z));
  }
  rel.below.assign(n, ReflectionMask(n));
  for (std::size_t y = 0; y < n; ++y) {
    ReflectionMask& seen = rel.below[y];
    std::vector<std::size_t> stack{y};
    seen.set(y);
    while (!stack.empty()) {
      const std::size_t z = stack.back();
      stack.pop_back();
      for (std::size_t x : steps[z])
        if (!seen[x]) {
          seen.set(x);
          stack.push_back(x);
        }
    }
  }
  finish(rel);
  return rel;
}

bool reverses_order(const OrderRelation& rel, const std::vector<std::size_t>& perm) {
  if (perm.size() != rel.size) return false;
  for (std::size_t x = 0; x < rel.size; ++x)
    for (std::size_t y = 0; y < rel.size; ++y)
      if (rel.leq(x, y) != rel.leq(perm[y], perm[x])) return false;
  return true;
}

std::string to_dot(const CocycleProvider& p, const OrderRelation& rel, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  std::size_t top = 0;
  for (std::size_t w = 0; w < rel.size; ++w) {
    out << "  n" << w << " [label=\"" << p.label(w) << "\"];\n";
    top = std::max(top, p.level(w));
  }
  for (std::size_t lvl = 0; lvl <= top; ++lvl) {
    std::ostringstream same;
    std::size_t count = 0;
    for (std::size_t w = 0; w < rel.size; ++w)
      if (p.level(w) == lvl) {
        same << " n" << w << ";";
        ++count;
      }
    if (count > 0) out << "  { rank=same;" << same.str() << " }\n";
  }
  for (const auto& [x, y] : rel.hasse) out << "  n" << x << " -> n" << y << ";\n";
  out << "}\n";
  return out.str();
}

int lex_sign(const Vec& v, const std::vector<Vec>& family, double tol) {
  for (const Vec& f : family) {
    if (f.size() != v.size()) throw InputError("dimension mismatch in lex order");
    double d = 0;
    for (std::size_t i = 0; i < v.size(); ++i) d += v[i] * f[i];
    if (d > tol) return 1;
    if (d < -tol) return -1;
  }
  return 0;
}

std::vector<Vec> orthonormal_simple_roots(const CoxeterGroup& g) {
  const std::size_t n = g.rank();
  Eigen::MatrixXd b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = g.form(i, j) / 2;
  Eigen::LLT<Eigen::MatrixXd> llt(b);
  if (llt.info() != Eigen::Success) throw InputError("form is not positive definite");
  const Eigen::MatrixXd l = llt.matrixL();
  std::vector<Vec> out(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = l(i, j);
  return out;
}

namespace {

void require_separating(const std::vector<Vec>& family, std::size_t dim, const std::string& what) {
  if (family.empty()) throw InputError("degenerate " + what + ": empty family");
  Eigen::MatrixXd m(family.size(), dim);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].size() != dim) throw InputError("degenerate " + what + ": wrong dimension");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = family[i][j];
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(kTolerance);
  if (static_cast<std::size_t>(lu.rank()) != dim) throw InputError("degenerate " + what + ": does not span");
}

Vec to_orthonormal(const std::vector<Vec>& simple, const Vec& c) {
  Vec x(simple.size(), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += c[i] * simple[i][j];
  return x;
}

}  // namespace

LexSystem lex_system(const CoxeterGroup& g, const std::vector<Vec>& omega, const std::vector<Vec>& psi_basis,
                     std::size_t cap) {
  if (!g.is_finite()) throw InputError("lex systems need a finite group");
  const std::size_t dim = g.rank();
  require_separating(omega, dim, "omega");
  require_separating(psi_basis, dim, "psi order");
  const std::vector<Vec> simple = orthonormal_simple_roots(g);

  LexSystem out;
  out.provider = std::make_shared<CoxeterCocycle>(g, cap);
  const CoxeterCocycle& p = *out.provider;
  const std::size_t n = p.element_count(), m = p.reflection_count();
  out.A = ReflectionMask(m);
  std::vector<Vec> psi_coords;  // Psi+ roots over the simple roots
  for (std::size_t t = 0; t < m; ++t) {
    const Vec b = g.positive_root(p.reflections()[t]);
    const Vec x = to_orthonormal(simple, b);
    const int sp = lex_sign(x, psi_basis), so = lex_sign(x, omega);
    if (sp == 0 || so == 0) throw InputError("degenerate order: a root pairs to zero");
    Vec psi = x, phi = x, c = b;
    for (double& v : psi) v *= sp;
    for (double& v : phi) v *= -so;
    for (double& v : c) v *= sp;
    out.psi_roots.push_back(psi);
    out.phi_roots.push_back(phi);
    psi_coords.push_back(c);
    if (sp == so) out.A.set(t);  // phi = -psi
  }

  // N(w) = { s_a : a in Psi+, w^-1(a) in -Psi+ }
  std::vector<ReflectionMask> cocycle(n, ReflectionMask(m));
  for (std::size_t w = 0; w < n; ++w) {
    const Element& inv = p.elements()[p.inverse(w)];
    for (std::size_t t = 0; t < m; ++t)
      if (lex_sign(to_orthonormal(simple, g.apply(inv, psi_coords[t])), psi_basis) < 0) cocycle[w].set(t);
  }
  out.provider->replace_cocycle(std::move(cocycle));

  out.minus_one = n;
  for (std::size_t w = 0; w < n && out.minus_one == n; ++w) {
    bool negates = true;
    for (std::size_t s = 0; s < dim && negates; ++s) {
      const Vec img = g.apply(p.elements()[w], g.simple_root(static_cast<int>(s)));
      for (std::size_t i = 0; i < dim; ++i)
        if (std::abs(img[i] + (i == s ? 1.0 : 0.0)) > kTolerance) negates = false;
    }
    if (negates) out.minus_one = w;
  }
  return out;
}

}  // namespace rootforge
