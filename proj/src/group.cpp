#include "rootforge/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <numbers>
#include <unordered_set>

#include <Eigen/Dense>

#include "rootforge/errors.hpp"

namespace rootforge {

std::strong_ordering Element::operator<=>(const Element& o) const {
  if (auto c = word_.size() <=> o.word_.size(); c != 0) return c;
  if (auto c = word_ <=> o.word_; c != 0) return c;
  return tag_ <=> o.tag_;
}

std::size_t ElementHash::operator()(const Element& e) const {
  std::size_t h = std::hash<std::uint64_t>{}(e.group_tag());
  for (int x : e.word()) h = h * 1000003u ^ static_cast<std::size_t>(x + 1);
  return h;
}

namespace {

std::uint64_t matrix_tag(const CoxeterMatrix& m) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& g : m.generators()) {
    for (char c : g) mix(static_cast<unsigned char>(c));
    mix(0xff);
  }
  for (const auto& row : m.entries())
    for (int v : row) mix(static_cast<std::uint64_t>(v) + 7);
  return h | 1;
}

double cartan_entry(int m) {
  if (m == 1) return 2.0;
  if (m == kInfinity) return -2.0;
  if (m == 2) return 0.0;
  return -2.0 * std::cos(std::numbers::pi / m);
}

bool gram_positive_definite(const std::vector<double>& cartan, std::size_t n,
                            const std::vector<int>& subset) {
  const auto k = static_cast<Eigen::Index>(subset.size());
  if (k == 0) return true;
  Eigen::MatrixXd a(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) a(i, j) = cartan[subset[i] * n + subset[j]];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > kTolerance;
}

}  // namespace

CoxeterGroup::CoxeterGroup(CoxeterMatrix m) : matrix_(std::move(m)) {
  const std::size_t n = rank();
  cartan_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cartan_[i * n + j] = cartan_entry(matrix_.m(i, j));
  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
  finite_ = gram_positive_definite(cartan_, n, all);
  tag_ = matrix_tag(matrix_);
}

double CoxeterGroup::form(const Vec& u, const Vec& v) const {
  const std::size_t n = rank();
  double acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) acc += u[i] * cartan_[i * n + j] * v[j];
  }
  return acc;
}

Element CoxeterGroup::generator(int s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= rank()) throw InputError("generator index out of range");
  return Element({s}, tag_);
}

void CoxeterGroup::check_same_group(const Element& x) const {
  if (x.group_tag() != tag_ && !(x.is_identity() && x.group_tag() == 0))
    throw InputError("element belongs to a different Coxeter group");
}

bool CoxeterGroup::column_negative(const std::vector<double>& m, int s) const {
  const std::size_t n = rank();
  double best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = m[i * n + s];
    if (std::abs(v) > std::abs(best)) best = v;
  }
  return best < 0;
}

namespace {

// Matrix of w^-1 in the simple-root basis for w given by `word`.
std::vector<double> inverse_action(const std::vector<double>& cartan, std::size_t n, const Word& word) {
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1.0;
  std::vector<double> row(n);
  for (int x : word) {
    std::fill(row.begin(), row.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      double c = cartan[j * n + x];
      if (c == 0) continue;
      for (std::size_t k = 0; k < n; ++k) row[k] += c * m[j * n + k];
    }
    for (std::size_t k = 0; k < n; ++k) m[x * n + k] -= row[k];
  }
  return m;
}

}  // namespace

Element CoxeterGroup::normalize(const Word& word) const {
  const std::size_t n = rank();
  for (int x : word)
    if (x < 0 || static_cast<std::size_t>(x) >= n) throw InputError("generator index out of range");
  std::vector<double> m = inverse_action(cartan_, n, word);
  Word out;
  for (;;) {
    int s = -1;
    for (std::size_t c = 0; c < n; ++c)
      if (column_negative(m, static_cast<int>(c))) {
        s = static_cast<int>(c);
        break;
      }
    if (s < 0) break;
    out.push_back(s);
    if (out.size() > word.size()) throw ResourceCapError("numerical breakdown in word reduction");
    for (std::size_t k = 0; k < n; ++k) {
      if (static_cast<int>(k) == s) continue;
      double c = cartan_[k * n + s];
      if (c == 0) continue;
      for (std::size_t i = 0; i < n; ++i) m[i * n + k] -= c * m[i * n + s];
    }
    for (std::size_t i = 0; i < n; ++i) m[i * n + s] = -m[i * n + s];
  }
  return Element(std::move(out), tag_);
}

Element CoxeterGroup::multiply(const Element& x, const Element& y) const {
  check_same_group(x);
  check_same_group(y);
  Word w = x.word();
  w.insert(w.end(), y.word().begin(), y.word().end());
  return normalize(w);
}

Element CoxeterGroup::inverse(const Element& x) const {
  check_same_group(x);
  Word w(x.word().rbegin(), x.word().rend());
  return normalize(w);
}

Element CoxeterGroup::conjugate(const Element& w, const Element& x) const {
  check_same_group(w);
  check_same_group(x);
  Word out = w.word();
  out.insert(out.end(), x.word().begin(), x.word().end());
  out.insert(out.end(), w.word().rbegin(), w.word().rend());
  return normalize(out);
}

Element CoxeterGroup::power(const Element& x, std::size_t k) const {
  Element acc = identity();
  for (std::size_t i = 0; i < k; ++i) acc = multiply(acc, x);
  return acc;
}

bool CoxeterGroup::is_left_descent(int s, const Element& w) const {
  check_same_group(w);
  return column_negative(inverse_action(cartan_, rank(), w.word()), s);
}

bool CoxeterGroup::is_right_descent(const Element& w, int s) const {
  Vec v = apply(w, simple_root(s));
  double best = 0;
  for (double x : v)
    if (std::abs(x) > std::abs(best)) best = x;
  return best < 0;
}

std::vector<int> CoxeterGroup::left_descents(const Element& w) const {
  check_same_group(w);
  std::vector<double> m = inverse_action(cartan_, rank(), w.word());
  std::vector<int> out;
  for (std::size_t s = 0; s < rank(); ++s)
    if (column_negative(m, static_cast<int>(s))) out.push_back(static_cast<int>(s));
  return out;
}

std::vector<int> CoxeterGroup::right_descents(const Element& w) const {
  std::vector<int> out;
  for (std::size_t s = 0; s < rank(); ++s)
    if (is_right_descent(w, static_cast<int>(s))) out.push_back(static_cast<int>(s));
  return out;
}

std::optional<std::size_t> CoxeterGroup::order(const Element& x, std::size_t cap) const {
  check_same_group(x);
  if (x.is_identity()) return 1;
  // Powers of the matrix of x: words for large powers would overflow the reduction.
  const auto n = static_cast<Eigen::Index>(rank());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Vec col = apply(x, simple_root(static_cast<int>(j)));
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = col[i];
  }
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd acc = m;
  for (std::size_t k = 1; k <= cap; ++k) {
    if ((acc - id).cwiseAbs().maxCoeff() <= 1e-7) return k;
    if (acc.cwiseAbs().maxCoeff() > 1e9) return std::nullopt;
    acc = acc * m;
  }
  return std::nullopt;
}

Vec CoxeterGroup::simple_root(int s) const {
  Vec v(rank(), 0.0);
  v.at(s) = 1.0;
  return v;
}

Vec CoxeterGroup::apply(const Element& w, Vec v) const {
  check_same_group(w);
  const std::size_t n = rank();
  if (v.size() != n) throw InputError("vector dimension does not match rank");
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
    const int x = *it;
    double b = 0;
    for (std::size_t j = 0; j < n; ++j) b += v[j] * cartan_[j * n + x];
    v[x] -= b;
  }
  return v;
}

bool CoxeterGroup::is_reflection(const Element& t) const {
  try {
    positive_root(t);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

std::pair<Word, int> CoxeterGroup::reflection_decomposition(const Element& t) const {
  check_same_group(t);
  Element cur = t;
  Word prefix;
  while (cur.length() > 1) {
    bool moved = false;
    for (int a : left_descents(cur)) {
      Word w{a};
      w.insert(w.end(), cur.word().begin(), cur.word().end());
      w.push_back(a);
      Element next = normalize(w);
      if (next.length() + 2 == cur.length()) {
        prefix.push_back(a);
        cur = std::move(next);
        moved = true;
        break;
      }
    }
    if (!moved) throw InputError("element is not a reflection: " + format(t));
  }
  if (cur.length() != 1) throw InputError("element is not a reflection: " + format(t));
  return {prefix, cur.word()[0]};
}

Vec CoxeterGroup::positive_root(const Element& t) const {
  auto [prefix, s] = reflection_decomposition(t);
  Vec v = simple_root(s);
  const std::size_t n = rank();
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    double b = 0;
    for (std::size_t j = 0; j < n; ++j) b += v[j] * cartan_[j * n + *it];
    v[*it] -= b;
  }
  return v;
}

Element CoxeterGroup::reflection_of_root(const Vec& root) const {
  const std::size_t n = rank();
  if (root.size() != n) throw InputError("vector dimension does not match rank");
  Vec v = root;
  double best = 0;
  for (double x : v)
    if (std::abs(x) > std::abs(best)) best = x;
  if (best == 0) throw InputError("zero vector is not a root");
  if (best < 0)
    for (double& x : v) x = -x;
  Word prefix;
  for (std::size_t step = 0; step < 100000; ++step) {
    double scale = 1;
    for (double x : v) scale = std::max(scale, std::abs(x));
    const double tol = kTolerance * scale;
    int unit = -1;
    bool is_unit = true;
    for (std::size_t i = 0; i < n && is_unit; ++i) {
      if (std::abs(v[i] - 1.0) <= tol) {
        if (unit >= 0) is_unit = false;
        unit = static_cast<int>(i);
      } else if (std::abs(v[i]) > tol) {
        is_unit = false;
      }
    }
    if (is_unit && unit >= 0) {
      Word w = prefix;
      w.push_back(unit);
      w.insert(w.end(), prefix.rbegin(), prefix.rend());
      return normalize(w);
    }
    int s = -1;
    double bs = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double b = 0;
      for (std::size_t j = 0; j < n; ++j) b += v[j] * cartan_[j * n + i];
      if (b > tol) {
        s = static_cast<int>(i);
        bs = b;
        break;
      }
    }
    if (s < 0) throw InputError("vector is not a root of the standard datum");
    v[s] -= bs;
    prefix.push_back(s);
  }
  throw ResourceCapError("root descent did not terminate");
}

std::string CoxeterGroup::format_word(const Word& w) const {
  bool single = true;
  for (const auto& g : matrix_.generators()) single = single && g.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) out += ' ';
    out += matrix_.name(w[i]);
  }
  return out;
}

std::string CoxeterGroup::format(const Element& w) const { return format_word(w.word()); }

Word CoxeterGroup::parse_word(std::string_view text) const {
  bool single = true;
  for (const auto& g : matrix_.generators()) single = single && g.size() == 1;
  Word out;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    if (matrix_.has_generator(token)) {
      out.push_back(matrix_.index_of(token));
    } else if (single) {
      for (char c : token) out.push_back(matrix_.index_of(std::string(1, c)));
    } else {
      throw InputError("unknown generator in word: " + token);
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == ',' || c == '.' || c == '*') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

std::size_t default_element_cap() {
  if (const char* env = std::getenv("ROOTFORGE_CAP_ELEMENTS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

namespace {

std::vector<Element> enumerate_with(const CoxeterGroup& g, const std::vector<int>& letters,
                                    std::size_t max_len, std::size_t cap) {
  std::vector<Element> out{g.identity()};
  std::vector<Element> level{g.identity()};
  for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
    std::vector<Element> next;
    for (const Element& u : level) {
      for (int s : letters) {
        Word w = u.word();
        w.push_back(s);
        Element e = g.normalize(w);
        if (e.word() == w) {
          next.push_back(std::move(e));
          if (out.size() + next.size() > cap)
            throw ResourceCapError("element cap exceeded (" + std::to_string(cap) + ")");
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<Element> enumerate_elements(const CoxeterGroup& g, std::size_t max_len, std::size_t cap) {
  std::vector<int> all(g.rank());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return enumerate_with(g, all, max_len, cap);
}

std::vector<Element> enumerate_parabolic(const CoxeterGroup& g, const std::vector<int>& subset,
                                         std::size_t max_len, std::size_t cap) {
  std::vector<int> letters = subset;
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  for (int s : letters)
    if (s < 0 || static_cast<std::size_t>(s) >= g.rank()) throw InputError("generator index out of range");
  return enumerate_with(g, letters, max_len, cap);
}

bool parabolic_is_finite(const CoxeterGroup& g, const std::vector<int>& subset) {
  std::vector<double> cartan(g.rank() * g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j) cartan[i * g.rank() + j] = g.form(i, j);
  return gram_positive_definite(cartan, g.rank(), subset);
}

bool SubgroupClosure::contains(const Element& x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

SubgroupClosure subgroup_closure(const CoxeterGroup& g, const std::vector<Element>& gens,
                                 std::size_t max_len, std::size_t cap) {
  SubgroupClosure out;
  std::unordered_set<Element, ElementHash> seen{g.identity()};
  std::deque<Element> queue{g.identity()};
  while (!queue.empty()) {
    Element x = std::move(queue.front());
    queue.pop_front();
    for (const Element& gen : gens) {
      Element y = g.multiply(x, gen);
      if (y.length() > max_len) {
        out.complete = false;
        continue;
      }
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw ResourceCapError("element cap exceeded (" + std::to_string(cap) + ")");
        queue.push_back(std::move(y));
      }
    }
  }
  out.elements.assign(seen.begin(), seen.end());
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

ConjugacyChain simple_conjugacy_witness(const CoxeterGroup& g, const Element& w, int r, int s) {
  const Element gr = g.generator(r);
  if (g.conjugate(w, gr) != g.generator(s)) throw InputError("w r w^-1 differs from s");
  if (g.multiply(w, gr).length() != w.length() + 1) throw InputError("l(wr) != l(w) + 1");
  ConjugacyChain chain;
  chain.a.push_back(r);
  Element cur = w;
  int c = r;
  while (!cur.is_identity()) {
    std::vector<int> desc = g.right_descents(cur);
    int d = -1;
    for (int x : desc)
      if (x != c) {
        d = x;
        break;
      }
    if (d < 0) throw InputError("l(wr) != l(w) + 1 along the chain");
    std::vector<int> J{std::min(c, d), std::max(c, d)};
    Element x = cur;
    Element v = g.identity();
    for (bool moved = true; moved;) {
      moved = false;
      for (int j : J)
        if (g.is_right_descent(x, j)) {
          x = g.multiply(x, g.generator(j));
          v = g.multiply(g.generator(j), v);
          moved = true;
          break;
        }
    }
    Element next = g.conjugate(v, g.generator(c));
    if (next.length() != 1 || std::find(J.begin(), J.end(), next.word()[0]) == J.end())
      throw InputError("conjugacy chain step left the rank-two parabolic");
    c = next.word()[0];
    chain.J.push_back(J);
    chain.w.push_back(v);
    chain.a.push_back(c);
    cur = x;
  }
  return chain;
}

}  // namespace rootforge
