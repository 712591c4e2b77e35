#include "rootforge/abstract_roots.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "rootforge/errors.hpp"
#include "rootforge/real_roots.hpp"

namespace rootforge {

std::string to_string(Certainty c) { return c == Certainty::Exact ? "EXACT" : "WINDOW_ONLY"; }

ReflectionSet symmetric_difference(const ReflectionSet& a, const ReflectionSet& b) {
  ReflectionSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

ReflectionSet conjugate_set(const CoxeterGroup& g, const Element& w, const ReflectionSet& a) {
  ReflectionSet out;
  for (const auto& t : a) out.insert(g.conjugate(w, t));
  return out;
}

ReflectionSet cocycle(const CoxeterGroup& g, const Element& w) {
  ReflectionSet out;
  const Word& word = w.word();
  for (std::size_t i = 0; i < word.size(); ++i) {
    Word t(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    t.insert(t.end(), word.rbegin() + static_cast<std::ptrdiff_t>(word.size() - i), word.rend());
    out.insert(g.normalize(t));
  }
  return out;
}

int eta(const CoxeterGroup& g, const Element& w, const Element& t) {
  return g.multiply(w, t).length() < w.length() ? -1 : 1;
}

AbstractRoot act(const CoxeterGroup& g, const Element& w, const AbstractRoot& root) {
  return {g.conjugate(w, root.reflection), eta(g, w, root.reflection) * root.sign};
}

std::vector<int> generator_classes(const CoxeterMatrix& m) {
  const std::size_t n = m.rank();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int mij = m.m(i, j);
      if (mij != kInfinity && mij % 2 == 1) {
        int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = find(static_cast<int>(i));
  return out;
}

int reflection_class(const CoxeterGroup& g, const Element& t) {
  return generator_classes(g.matrix()).at(g.reflection_decomposition(t).second);
}

Window::Window(std::shared_ptr<const CoxeterGroup> group, std::size_t max_length)
    : group_(std::move(group)), max_length_(max_length) {
  const CoxeterGroup& g = *group_;
  complete_ = g.is_finite();
  std::vector<std::pair<Element, Vec>> found;
  std::set<Element> seen;
  if (max_length_ >= 1) {
    for (std::size_t s = 0; s < g.rank(); ++s) {
      found.emplace_back(g.generator(static_cast<int>(s)), g.simple_root(static_cast<int>(s)));
      seen.insert(found.back().first);
    }
  } else if (g.rank() > 0) {
    complete_ = false;
  }
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t s = 0; s < g.rank(); ++s) {
      const Element gs = g.generator(static_cast<int>(s));
      Element t = g.conjugate(gs, found[head].first);
      if (t.length() != found[head].first.length() + 2) continue;
      if (t.length() > max_length_) {
        complete_ = false;
        continue;
      }
      if (!seen.insert(t).second) continue;
      if (seen.size() > default_element_cap()) throw ResourceCapError("reflection window exceeds the element cap");
      Vec root = g.apply(gs, found[head].second);
      found.emplace_back(std::move(t), std::move(root));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [t, root] : found) {
    index_.emplace(t, reflections_.size());
    reflections_.push_back(t);
    roots_.push_back(std::move(root));
  }
}

WindowPtr Window::full(std::shared_ptr<const CoxeterGroup> group) {
  if (!group->is_finite()) throw InputError("a full window needs a finite group");
  return std::make_shared<const Window>(std::move(group), std::numeric_limits<std::size_t>::max() / 4);
}

std::optional<std::size_t> Window::index_of(const Element& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vec Window::lift(const AbstractRoot& a) const {
  auto i = index_of(a.reflection);
  if (!i) throw WindowError("reflection " + group_->format(a.reflection) + " lies outside the window");
  Vec v = roots_[*i];
  if (a.sign < 0)
    for (double& x : v) x = -x;
  return v;
}

std::size_t Window::element_bound() const { return complete_ ? reflections_.size() : 2 * max_length_ + 1; }

RootSet Window::all_roots() const {
  RootSet out;
  for (const auto& t : reflections_) {
    out.insert({t, 1});
    out.insert({t, -1});
  }
  return out;
}

QuasiPositiveSystem QuasiPositiveSystem::standard(WindowPtr window) {
  return {std::move(window), {}, [](const Element&) { return 1; }, "standard"};
}

QuasiPositiveSystem QuasiPositiveSystem::conjugate(WindowPtr window, const Element& w, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw InputError("sign must be 1 or -1");
  auto g = window->group_ptr();
  g->check_same_group(w);
  Element winv = g->inverse(w);
  Rule rule = [g, w, winv, epsilon](const Element& t) { return epsilon * eta(*g, w, g->conjugate(winv, t)); };
  return {std::move(window), {}, std::move(rule), "conjugate"};
}

QuasiPositiveSystem QuasiPositiveSystem::from_signs(WindowPtr window, const std::vector<int>& signs) {
  if (signs.size() != window->size()) throw InputError("one sign per window reflection required");
  std::map<Element, int> m;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw InputError("sign must be 1 or -1");
    m.emplace(window->reflections()[i], signs[i]);
  }
  return {std::move(window), std::move(m), {}, "explicit"};
}

QuasiPositiveSystem QuasiPositiveSystem::from_roots(WindowPtr window, const RootSet& roots) {
  std::map<Element, int> m;
  for (const auto& a : roots) {
    if (a.sign != 1 && a.sign != -1) throw InputError("sign must be 1 or -1");
    if (!window->contains(a.reflection))
      throw InputError("reflection " + window->group().format(a.reflection) + " is not a reflection in the window");
    auto [it, inserted] = m.emplace(a.reflection, a.sign);
    if (!inserted && it->second != a.sign)
      throw InputError("both signs given for reflection " + window->group().format(a.reflection));
  }
  return {std::move(window), std::move(m), {}, "explicit"};
}

QuasiPositiveSystem QuasiPositiveSystem::from_rule(WindowPtr window, Rule rule, std::string description) {
  if (!rule) throw InputError("empty rule");
  return {std::move(window), {}, std::move(rule), std::move(description)};
}

QuasiPositiveSystem QuasiPositiveSystem::class_sign(WindowPtr window, const std::map<int, int>& class_signs) {
  auto g = window->group_ptr();
  std::vector<int> classes = generator_classes(g->matrix());
  for (int c : classes) {
    auto it = class_signs.find(c);
    if (it == class_signs.end()) throw InputError("missing sign for reflection class " + std::to_string(c));
    if (it->second != 1 && it->second != -1) throw InputError("sign must be 1 or -1");
  }
  Rule rule = [g, classes, class_signs](const Element& t) {
    return class_signs.at(classes.at(g->reflection_decomposition(t).second));
  };
  return {std::move(window), {}, std::move(rule), "class signs"};
}

QuasiPositiveSystem QuasiPositiveSystem::exotic_dihedral(WindowPtr window) {
  auto g = window->group_ptr();
  if (g->rank() != 2 || !g->matrix().is_infinite(0, 1))
    throw InputError("the exotic system needs an infinite dihedral group");
  const Element r = g->generator(0);
  Rule rule = [g, r](const Element& t) { return g->multiply(r, t).length() < t.length() ? 1 : -1; };
  return {std::move(window), {}, std::move(rule), "exotic dihedral"};
}

bool QuasiPositiveSystem::covers(const Element& t) const { return rule_ || signs_.count(t) > 0; }

int QuasiPositiveSystem::sign(const Element& t) const {
  if (rule_) return rule_(t);
  auto it = signs_.find(t);
  if (it == signs_.end()) throw WindowError("reflection " + group().format(t) + " is outside the system's scope");
  return it->second;
}

RootSet QuasiPositiveSystem::roots() const {
  RootSet out;
  for (const auto& t : window_->reflections())
    if (covers(t)) out.insert({t, sign(t)});
  return out;
}

QuasiPositiveSystem QuasiPositiveSystem::negated() const {
  if (rule_) {
    Rule inner = rule_;
    return {window_, {}, [inner](const Element& t) { return -inner(t); }, "negated " + description_};
  }
  std::map<Element, int> m;
  for (const auto& [t, s] : signs_) m.emplace(t, -s);
  return {window_, std::move(m), {}, description_};
}

bool QuasiPositiveSystem::same_on_window(const QuasiPositiveSystem& o) const {
  for (const auto& t : window_->reflections()) {
    if (covers(t) != o.covers(t)) return false;
    if (covers(t) && sign(t) != o.sign(t)) return false;
  }
  return true;
}

CocycleValue cocycle_of_qps(const QuasiPositiveSystem& p, const Element& w) {
  const Window& win = p.window();
  const CoxeterGroup& g = p.group();
  g.check_same_group(w);
  if (!p.is_rule() && !win.complete() && w.length() > win.max_length())
    throw WindowError("element moves roots outside the window");
  CocycleValue out;
  out.certainty = win.certainty();
  const Element winv = g.inverse(w);
  for (const auto& t : win.reflections()) {
    if (!p.covers(t)) {
      out.certainty = Certainty::WindowOnly;
      continue;
    }
    AbstractRoot b = act(g, winv, {t, p.sign(t)});
    if (!p.covers(b.reflection)) {
      out.certainty = Certainty::WindowOnly;
      continue;
    }
    if (p.sign(b.reflection) != b.sign) out.reflections.insert(t);
  }
  return out;
}

CompatibilityReport compatibility(const QuasiPositiveSystem& p, const QuasiPositiveSystem& q,
                                  std::size_t sample_length) {
  const Window& win = p.window();
  const CoxeterGroup& g = p.group();
  CompatibilityReport r;
  r.certainty = win.certainty();
  for (const auto& t : win.reflections()) {
    if (p.covers(t) != q.covers(t)) {
      r.compatible = false;
      continue;
    }
    if (p.covers(t) && p.sign(t) != q.sign(t)) r.witness.insert(t);
  }
  auto in_cocycle = [&](const QuasiPositiveSystem& sys, const Element& xinv, const Element& t) {
    AbstractRoot b = act(g, xinv, {t, sys.sign(t)});
    return sys.sign(b.reflection) != b.sign;
  };
  for (const Element& x : enumerate_elements(g, sample_length)) {
    const Element xinv = g.inverse(x);
    for (const auto& t : win.reflections()) {
      const Element u = g.conjugate(xinv, t);
      if (!win.contains(u) || !p.covers(t) || !q.covers(t) || !p.covers(u) || !q.covers(u)) {
        r.certainty = Certainty::WindowOnly;
        continue;
      }
      const bool lhs = in_cocycle(p, xinv, t) != (r.witness.count(u) > 0);
      const bool rhs = in_cocycle(q, xinv, t) != (r.witness.count(t) > 0);
      if (lhs != rhs) r.identity_verified = false;
    }
  }
  return r;
}

ReflectionSet SimpleRoots::reflections() const {
  ReflectionSet out;
  for (const auto& a : roots) out.insert(a.reflection);
  return out;
}

SimpleRoots simple_roots_of(const QuasiPositiveSystem& p) {
  const CoxeterGroup& g = p.group();
  SimpleRoots out;
  out.certainty = p.window().certainty();
  const RootSet roots = p.roots();
  for (const auto& a : roots) {
    bool simple = true;
    for (const auto& b : roots) {
      if (b == a) continue;
      AbstractRoot c = act(g, a.reflection, b);
      if (!p.covers(c.reflection)) {
        out.certainty = Certainty::WindowOnly;
        continue;
      }
      if (!p.contains(c)) {
        simple = false;
        break;
      }
    }
    if (simple) out.roots.insert(a);
  }
  return out;
}

GenerativeReport is_generative(const QuasiPositiveSystem& p) {
  const CoxeterGroup& g = p.group();
  SimpleRoots simple = simple_roots_of(p);
  GenerativeReport r;
  r.simple_reflections = simple.reflections();
  r.certainty = simple.certainty;
  if (r.simple_reflections.empty()) return r;
  std::vector<Element> gens(r.simple_reflections.begin(), r.simple_reflections.end());
  SubgroupClosure c = subgroup_closure(g, gens, p.window().element_bound());
  if (!c.complete) r.certainty = Certainty::WindowOnly;
  r.generative = true;
  for (std::size_t s = 0; s < g.rank(); ++s)
    r.generative = r.generative && c.contains(g.generator(static_cast<int>(s)));
  return r;
}

namespace {

std::vector<Element> reflections_in(const CoxeterGroup& g, const SubgroupClosure& c) {
  std::vector<Element> out;
  for (const auto& x : c.elements)
    if (x.length() % 2 == 1 && g.is_reflection(x)) out.push_back(x);
  return out;
}

}  // namespace

ChiResult chi(const Window& window, const std::vector<Element>& gens,
              const std::function<ReflectionSet(const Element&)>& n) {
  const CoxeterGroup& g = window.group();
  for (const auto& t : gens)
    if (!g.is_reflection(t)) throw InputError("generator " + g.format(t) + " is not a reflection");
  SubgroupClosure c = subgroup_closure(g, gens, window.element_bound());
  ChiResult out;
  out.certainty = c.complete && window.complete() ? Certainty::Exact : Certainty::WindowOnly;
  for (const auto& t : reflections_in(g, c)) {
    const ReflectionSet nt = n ? n(t) : cocycle(g, t);
    bool canonical = nt.count(t) > 0;
    for (const auto& u : nt)
      if (u != t && c.contains(u)) canonical = false;
    if (canonical) out.generators.insert(t);
  }
  return out;
}

Interval interval(const Window& window, const AbstractRoot& a, const AbstractRoot& b) {
  if (a == b) return {{a}, 1};
  if (a.reflection == b.reflection) return {{a, b}, 2};
  const CoxeterGroup& g = window.group();
  const Vec la = window.lift(a), lb = window.lift(b);
  Interval out;
  const bool infinite = g.form(la, lb) <= -2 + kTolerance * 100;
  for (std::size_t i = 0; i < window.size(); ++i) {
    for (int sign : {1, -1}) {
      AbstractRoot c{window.reflections()[i], sign};
      if (c == a || c == b || is_between_real(window.lift(c), la, lb)) out.members.insert(c);
    }
  }
  if (!infinite) out.size = out.members.size();
  return out;
}

AbstractRoot reflect_from_betweenness(const Window& window, const AbstractRoot& a, const AbstractRoot& b) {
  if (a.reflection == b.reflection) return -a;
  std::map<std::pair<AbstractRoot, AbstractRoot>, Interval> cache;
  auto iv = [&](const AbstractRoot& x, const AbstractRoot& y) -> const Interval& {
    auto key = std::make_pair(x, y);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, interval(window, x, y)).first;
    return it->second;
  };

  RootSet fan{a, -a, b, -b};
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<AbstractRoot> cur(fan.begin(), fan.end());
    for (const auto& x : cur)
      for (const auto& y : cur)
        for (const auto& z : iv(x, y).members) {
          grew = fan.insert(z).second || grew;
          grew = fan.insert(-z).second || grew;
        }
  }

  std::vector<AbstractRoot> gammas;
  for (const auto& c : fan) {
    if (!iv(b, c).members.count(a)) continue;
    const Interval& opp = iv(c, -b);
    if (opp.size && *opp.size == 2) gammas.push_back(c);
  }
  if (gammas.size() != 1) throw WindowError("opposite partner not determined within the window");
  const AbstractRoot gamma = gammas.front();

  const auto m = iv(b, a).size;
  const auto n = iv(a, gamma).size;
  if (!m && !n) throw WindowError("both intervals are infinite");
  if (m && n && *m == *n + 1) return a;
  const bool m_less = m && (!n || *m < *n + 1);
  std::vector<AbstractRoot> deltas;
  for (const auto& d : iv(b, gamma).members) {
    const auto& size = m_less ? iv(gamma, d).size : iv(b, d).size;
    const std::size_t target = m_less ? *m - 1 : *n + 1;
    if (size && *size == target) deltas.push_back(d);
  }
  if (deltas.size() != 1) throw WindowError("reflected root not determined within the window");
  return deltas.front();
}

namespace {

bool closed_within(const Window& window, const RootSet& p, const RootSet& domain) {
  const std::vector<AbstractRoot> v(p.begin(), p.end());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      for (const auto& c : interval(window, v[i], v[j]).members)
        if (domain.count(c) && !p.count(c)) return false;
  return true;
}

}  // namespace

bool is_closed(const Window& window, const RootSet& p) { return closed_within(window, p, window.all_roots()); }

bool is_biclosed(const Window& window, const RootSet& p) {
  const RootSet all = window.all_roots();
  RootSet complement;
  std::set_difference(all.begin(), all.end(), p.begin(), p.end(), std::inserter(complement, complement.end()));
  return closed_within(window, p, all) && closed_within(window, complement, all);
}

bool is_biclosed(const QuasiPositiveSystem& p) {
  const RootSet pos = p.roots();
  RootSet neg, domain = pos;
  for (const auto& a : pos) {
    neg.insert(-a);
    domain.insert(-a);
  }
  return closed_within(p.window(), pos, domain) && closed_within(p.window(), neg, domain);
}

bool dihedral_basis_check(const Window& window, const AbstractRoot& a, const AbstractRoot& b) {
  if (a.reflection == b.reflection) return false;
  const CoxeterGroup& g = window.group();
  const std::vector<Element> gens{a.reflection, b.reflection};
  const ChiResult canonical = chi(window, gens);
  if (canonical.generators.size() != 2) return false;
  const Element c1 = *canonical.generators.begin();
  const Element c2 = *std::next(canonical.generators.begin());
  const RootSet target{a, b};
  for (const auto& w : subgroup_closure(g, gens, window.element_bound()).elements)
    for (int e : {1, -1})
      if (RootSet{act(g, w, {c1, e}), act(g, w, {c2, e})} == target) return true;
  return false;
}

std::optional<QuasiPositiveSystem> system_from_simple_roots(WindowPtr window, const std::vector<AbstractRoot>& delta) {
  const CoxeterGroup& g = window->group();
  std::map<Element, int> signs;
  std::vector<AbstractRoot> queue;
  for (const auto& a : delta) {
    if (!window->contains(a.reflection)) throw WindowError("simple root outside the window");
    auto [it, inserted] = signs.emplace(a.reflection, a.sign);
    if (!inserted) {
      if (it->second != a.sign) return std::nullopt;
      continue;
    }
    queue.push_back(a);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& a : delta) {
      if (queue[head].reflection == a.reflection) continue;
      AbstractRoot c = act(g, a.reflection, queue[head]);
      if (!window->contains(c.reflection)) continue;
      auto [it, inserted] = signs.emplace(c.reflection, c.sign);
      if (!inserted) {
        if (it->second != c.sign) return std::nullopt;
        continue;
      }
      queue.push_back(c);
    }
  }
  RootSet roots;
  for (const auto& [t, s] : signs) roots.insert({t, s});
  return QuasiPositiveSystem::from_roots(std::move(window), roots);
}

BasisReport is_abstract_root_basis(WindowPtr window, const std::vector<AbstractRoot>& delta) {
  const CoxeterGroup& g = window->group();
  BasisReport r;
  r.certainty = window->certainty();
  if (delta.size() != g.rank()) {
    r.reason = "size differs from the rank";
    return r;
  }
  std::vector<Element> gens;
  for (const auto& a : delta) {
    if (!g.is_reflection(a.reflection)) throw InputError("root reflection " + g.format(a.reflection) + " is not a reflection");
    gens.push_back(a.reflection);
  }
  SubgroupClosure c = subgroup_closure(g, gens, window->element_bound());
  if (!c.complete) r.certainty = Certainty::WindowOnly;
  for (std::size_t s = 0; s < g.rank(); ++s)
    if (!c.contains(g.generator(static_cast<int>(s)))) {
      r.reason = "reflections do not generate W";
      return r;
    }
  for (std::size_t i = 0; i < delta.size(); ++i)
    for (std::size_t j = i + 1; j < delta.size(); ++j)
      if (!dihedral_basis_check(*window, delta[i], delta[j])) {
        r.reason = "pair fails dihedral basis check: " + g.format(delta[i].reflection) + ", " +
                   g.format(delta[j].reflection);
        return r;
      }
  auto sys = system_from_simple_roots(window, delta);
  if (!sys || (window->complete() && sys->roots().size() != window->size())) {
    r.reason = "family does not define a quasi-positive system";
    return r;
  }
  if (!is_biclosed(*sys)) {
    r.reason = "induced system is not biclosed";
    return r;
  }
  r.basis = true;
  r.system = std::move(sys);
  return r;
}

Conjugator find_conjugator(const QuasiPositiveSystem& p) {
  const Window& win = p.window();
  const CoxeterGroup& g = p.group();
  if (!is_biclosed(p)) throw InputError("system is not biclosed");
  if (!is_generative(p).generative) throw InputError("system is not generative");
  const std::vector<int> epsilons = g.is_finite() ? std::vector<int>{1} : std::vector<int>{1, -1};
  for (int e : epsilons) {
    ReflectionSet a;
    for (const auto& t : win.reflections())
      if (p.covers(t) && e * p.sign(t) == -1) a.insert(t);
    Word w;
    bool stuck = false;
    while (!a.empty() && !stuck) {
      stuck = true;
      for (std::size_t s = 0; s < g.rank(); ++s) {
        const Element gs = g.generator(static_cast<int>(s));
        if (!a.count(gs)) continue;
        a.erase(gs);
        a = conjugate_set(g, gs, a);
        w.push_back(static_cast<int>(s));
        stuck = false;
        break;
      }
      if (w.size() > win.size() + 1) stuck = true;
    }
    if (stuck) continue;
    const Element x = g.normalize(w);
    if (QuasiPositiveSystem::conjugate(p.window_ptr(), x, e).same_on_window(p)) return {x, e};
  }
  throw InputError("system is not conjugate to a standard positive system");
}

InducedSubsystem induced_subsystem(const QuasiPositiveSystem& p, const std::vector<Element>& gens) {
  const Window& win = p.window();
  const CoxeterGroup& g = p.group();
  InducedSubsystem out;
  SubgroupClosure c = subgroup_closure(g, gens, win.element_bound());
  out.certainty = c.complete && win.complete() ? Certainty::Exact : Certainty::WindowOnly;
  for (const auto& t : win.reflections())
    if (c.contains(t) && p.covers(t)) {
      out.reflections.insert(t);
      out.positive.insert({t, p.sign(t)});
    }
  for (const auto& a : out.positive) {
    bool simple = true;
    for (const auto& b : out.positive) {
      if (b == a) continue;
      AbstractRoot d = act(g, a.reflection, b);
      if (!out.reflections.count(d.reflection)) {
        out.certainty = Certainty::WindowOnly;
        continue;
      }
      if (!out.positive.count(d)) {
        simple = false;
        break;
      }
    }
    if (simple) out.simple.insert(a);
  }
  out.chi_relative = chi(win, gens, [&p](const Element& t) { return cocycle_of_qps(p, t).reflections; }).generators;
  return out;
}

Transport transport_subgroup(const Window& window, const std::vector<Element>& gens, const Element& w) {
  const CoxeterGroup& g = window.group();
  g.check_same_group(w);
  Transport out;
  SubgroupClosure c = subgroup_closure(g, gens, window.element_bound());
  out.certainty = c.complete && window.complete() ? Certainty::Exact : Certainty::WindowOnly;
  std::optional<Element> best;
  for (const auto& x : c.elements) {
    Element y = g.multiply(w, x);
    if (!best || y < *best) best = y;
  }
  out.y = *best;
  bool minimal = true;
  for (const auto& t : cocycle(g, g.inverse(out.y)))
    if (c.contains(t)) minimal = false;
  out.chi_source = chi(window, gens).generators;
  std::vector<Element> conj;
  for (const auto& t : gens) conj.push_back(g.conjugate(w, t));
  ChiResult target = chi(window, conj);
  if (target.certainty == Certainty::WindowOnly) out.certainty = Certainty::WindowOnly;
  out.chi_target = target.generators;
  out.verified = minimal && out.chi_target == conjugate_set(g, out.y, out.chi_source);
  return out;
}

bool verify_simple_family(const CoxeterGroup& g, const std::vector<AbstractRoot>& family) {
  for (const auto& a : family)
    if (!g.is_reflection(a.reflection)) throw InputError("family member is not a reflection");
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      const Element x = g.multiply(family[i].reflection, family[j].reflection);
      auto order = g.order(x);
      if (!order || *order % 2 == 0) continue;
      if (act(g, g.power(x, (*order - 1) / 2), family[i]) != family[j]) return false;
    }
  return true;
}

}  // namespace rootforge
