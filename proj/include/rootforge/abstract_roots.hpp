#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rootforge/group.hpp"

namespace rootforge {

enum class Certainty { Exact, WindowOnly };
std::string to_string(Certainty c);

struct AbstractRoot {
  Element reflection;
  int sign = 1;

  AbstractRoot operator-() const { return {reflection, -sign}; }
  bool operator==(const AbstractRoot&) const = default;
  std::strong_ordering operator<=>(const AbstractRoot& o) const {
    if (auto c = reflection <=> o.reflection; c != 0) return c;
    return sign <=> o.sign;
  }
};

using RootSet = std::set<AbstractRoot>;
using ReflectionSet = std::set<Element>;

ReflectionSet symmetric_difference(const ReflectionSet& a, const ReflectionSet& b);
ReflectionSet conjugate_set(const CoxeterGroup& g, const Element& w, const ReflectionSet& a);

// N(w) = {t : l(tw) < l(w)}, read off a reduced word.
ReflectionSet cocycle(const CoxeterGroup& g, const Element& w);
// -1 iff l(wt) < l(w).
int eta(const CoxeterGroup& g, const Element& w, const Element& t);
// w(t, e) = (w t w^-1, eta(w, t) e)
AbstractRoot act(const CoxeterGroup& g, const Element& w, const AbstractRoot& root);

// Component index of the generator conjugate to each generator (odd-m graph).
std::vector<int> generator_classes(const CoxeterMatrix& m);
// Conjugacy class of a reflection, as the class index of a conjugate simple generator.
int reflection_class(const CoxeterGroup& g, const Element& t);

// Reflections of length at most L, with their positive roots in the standard datum.
class Window {
 public:
  Window(std::shared_ptr<const CoxeterGroup> group, std::size_t max_length);
  // All reflections of a finite group.
  static std::shared_ptr<const Window> full(std::shared_ptr<const CoxeterGroup> group);

  const CoxeterGroup& group() const { return *group_; }
  std::shared_ptr<const CoxeterGroup> group_ptr() const { return group_; }
  std::size_t max_length() const { return max_length_; }
  const std::vector<Element>& reflections() const { return reflections_; }
  std::size_t size() const { return reflections_.size(); }
  bool contains(const Element& t) const { return index_.count(t) > 0; }
  std::optional<std::size_t> index_of(const Element& t) const;
  const Vec& root(std::size_t i) const { return roots_[i]; }
  // Signed real lift of an abstract root in the window.
  Vec lift(const AbstractRoot& a) const;
  // True when the window holds every reflection of the group.
  bool complete() const { return complete_; }
  Certainty certainty() const { return complete_ ? Certainty::Exact : Certainty::WindowOnly; }
  // Length bound used when closing reflection subgroups inside the window.
  std::size_t element_bound() const;
  RootSet all_roots() const;

 private:
  std::shared_ptr<const CoxeterGroup> group_;
  std::size_t max_length_;
  std::vector<Element> reflections_;
  std::vector<Vec> roots_;
  std::map<Element, std::size_t> index_;
  bool complete_ = false;
};

using WindowPtr = std::shared_ptr<const Window>;

// One sign per reflection: an explicit table over (part of) the window, or a rule
// valid on all of T.
class QuasiPositiveSystem {
 public:
  using Rule = std::function<int(const Element&)>;

  static QuasiPositiveSystem standard(WindowPtr window);
  // e * w(T_+)
  static QuasiPositiveSystem conjugate(WindowPtr window, const Element& w, int epsilon);
  // Signs in window order.
  static QuasiPositiveSystem from_signs(WindowPtr window, const std::vector<int>& signs);
  // Throws InputError if both signs of a reflection occur.
  static QuasiPositiveSystem from_roots(WindowPtr window, const RootSet& roots);
  static QuasiPositiveSystem from_rule(WindowPtr window, Rule rule, std::string description);
  // Union of C_i x {e_i} over reflection classes; signs indexed by class.
  static QuasiPositiveSystem class_sign(WindowPtr window, const std::map<int, int>& class_signs);
  // Infinite dihedral: (t, 1) when the first generator lies in N(t), (t, -1) otherwise.
  static QuasiPositiveSystem exotic_dihedral(WindowPtr window);

  const Window& window() const { return *window_; }
  WindowPtr window_ptr() const { return window_; }
  const CoxeterGroup& group() const { return window_->group(); }
  bool is_rule() const { return static_cast<bool>(rule_); }
  const std::string& description() const { return description_; }

  bool covers(const Element& t) const;
  // Throws WindowError when t is not covered.
  int sign(const Element& t) const;
  bool contains(const AbstractRoot& a) const { return covers(a.reflection) && sign(a.reflection) == a.sign; }
  // The system's roots over the window reflections it covers.
  RootSet roots() const;
  QuasiPositiveSystem negated() const;
  // Agreement on every window reflection.
  bool same_on_window(const QuasiPositiveSystem& o) const;

 private:
  QuasiPositiveSystem(WindowPtr window, std::map<Element, int> signs, Rule rule, std::string description)
      : window_(std::move(window)), signs_(std::move(signs)), rule_(std::move(rule)),
        description_(std::move(description)) {}

  WindowPtr window_;
  std::map<Element, int> signs_;
  Rule rule_;
  std::string description_;
};

struct CocycleValue {
  ReflectionSet reflections;
  Certainty certainty = Certainty::Exact;
};

// N_P(w) = {s_a : a in P and w^-1(a) not in P}, over window reflections.
CocycleValue cocycle_of_qps(const QuasiPositiveSystem& p, const Element& w);

struct CompatibilityReport {
  bool compatible = true;
  ReflectionSet witness;         // A = {s_a : a in P, -a in P'}
  bool identity_verified = true;  // N_P(x) + xAx^-1 = N_P'(x) + A on sampled x
  Certainty certainty = Certainty::Exact;
};
CompatibilityReport compatibility(const QuasiPositiveSystem& p, const QuasiPositiveSystem& q,
                                  std::size_t sample_length = 3);

struct SimpleRoots {
  RootSet roots;
  Certainty certainty = Certainty::Exact;
  ReflectionSet reflections() const;
};
SimpleRoots simple_roots_of(const QuasiPositiveSystem& p);

struct GenerativeReport {
  bool generative = false;
  ReflectionSet simple_reflections;
  Certainty certainty = Certainty::Exact;
};
GenerativeReport is_generative(const QuasiPositiveSystem& p);

struct ChiResult {
  ReflectionSet generators;
  Certainty certainty = Certainty::Exact;
};
// Canonical generators {t in T' : N(t) & W' = {t}} of W' = <gens>. A custom cocycle
// computes them relative to another Coxeter system on the same group.
ChiResult chi(const Window& window, const std::vector<Element>& gens,
              const std::function<ReflectionSet(const Element&)>& n = {});

struct Interval {
  RootSet members;                 // restricted to the window
  std::optional<std::size_t> size;  // nullopt when infinite
};
Interval interval(const Window& window, const AbstractRoot& a, const AbstractRoot& b);

// s_b(a) reconstructed from interval cardinalities and negation only.
AbstractRoot reflect_from_betweenness(const Window& window, const AbstractRoot& a, const AbstractRoot& b);

bool is_closed(const Window& window, const RootSet& p);
bool is_biclosed(const Window& window, const RootSet& p);
// Closedness of P and -P among the reflections P covers.
bool is_biclosed(const QuasiPositiveSystem& p);

// {a, b} = w(chi(W_ab) x {e}) for some w in W_ab and sign e.
bool dihedral_basis_check(const Window& window, const AbstractRoot& a, const AbstractRoot& b);

// {w(a) : a in delta, l'(w s_a) > l'(w)} over the window, l' the length for the
// reflections of delta. Nullopt when both signs of some reflection are produced.
std::optional<QuasiPositiveSystem> system_from_simple_roots(WindowPtr window, const std::vector<AbstractRoot>& delta);

struct BasisReport {
  bool basis = false;
  std::string reason;
  std::optional<QuasiPositiveSystem> system;
  Certainty certainty = Certainty::Exact;
};
BasisReport is_abstract_root_basis(WindowPtr window, const std::vector<AbstractRoot>& delta);

struct Conjugator {
  Element w;
  int epsilon = 1;
};
// P = e * w(T_+); the system must be biclosed and generative.
Conjugator find_conjugator(const QuasiPositiveSystem& p);

struct InducedSubsystem {
  ReflectionSet reflections;  // T' within the window
  RootSet positive;
  RootSet simple;
  ReflectionSet chi_relative;  // canonical generators relative to (W, S_P)
  Certainty certainty = Certainty::Exact;
};
InducedSubsystem induced_subsystem(const QuasiPositiveSystem& p, const std::vector<Element>& gens);

struct Transport {
  Element y;                   // unique element of wW' with N(y^-1) & W' empty
  ReflectionSet chi_source;    // chi(W')
  ReflectionSet chi_target;    // chi(w W' w^-1)
  bool verified = false;       // chi_target = y chi_source y^-1
  Certainty certainty = Certainty::Exact;
};
Transport transport_subgroup(const Window& window, const std::vector<Element>& gens, const Element& w);

// (rt)^m(a_r) = a_t whenever rt has odd order 2m+1.
bool verify_simple_family(const CoxeterGroup& g, const std::vector<AbstractRoot>& family);

}  // namespace rootforge
