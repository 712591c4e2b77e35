#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rootforge/abstract_roots.hpp"
#include "rootforge/errors.hpp"
#include "rootforge/group.hpp"

namespace rootforge {

// Element-level orders on a Coxeter group with its standard cocycle.
bool weak_leq(const CoxeterGroup& g, const Element& x, const Element& y);
// N(w) + w A w^-1
ReflectionSet twisted_dot(const CoxeterGroup& g, const Element& w, const ReflectionSet& A);
// x <=_A y: x is reachable from y by steps z -> t z with t in z.A. Searches elements of
// length <= max_len and throws WindowError when x is not found but the search was truncated.
bool bruhat_leq(const CoxeterGroup& g, const Element& x, const Element& y, const ReflectionSet& A,
                std::size_t max_len = 24);

using ReflectionMask = boost::dynamic_bitset<>;

// A finite group acting on a finite reflection set T with a reflection cocycle N.
// Elements and reflections are indexed from zero.
class CocycleProvider {
 public:
  virtual ~CocycleProvider() = default;

  virtual std::size_t element_count() const = 0;
  virtual std::size_t reflection_count() const = 0;
  virtual std::size_t identity() const = 0;
  virtual std::size_t multiply(std::size_t x, std::size_t y) const = 0;
  // Element index of reflection t.
  virtual std::size_t reflection_element(std::size_t t) const = 0;
  // Reflection index of w t w^-1.
  virtual std::size_t conjugate(std::size_t w, std::size_t t) const = 0;
  virtual const ReflectionMask& cocycle(std::size_t w) const = 0;
  virtual std::string label(std::size_t w) const = 0;
  virtual std::string reflection_label(std::size_t t) const = 0;
  // Layer used when drawing (length for Coxeter groups).
  virtual std::size_t level(std::size_t w) const = 0;
};

// Fully tabulated provider for a finite Coxeter group.
class CoxeterCocycle : public CocycleProvider {
 public:
  // Throws InputError for infinite groups and ResourceCapError when |W| exceeds cap.
  explicit CoxeterCocycle(const CoxeterGroup& g, std::size_t cap = default_element_cap());

  std::size_t element_count() const override { return elements_.size(); }
  std::size_t reflection_count() const override { return reflections_.size(); }
  std::size_t identity() const override { return 0; }
  std::size_t multiply(std::size_t x, std::size_t y) const override { return product_[x * elements_.size() + y]; }
  std::size_t reflection_element(std::size_t t) const override { return reflection_element_[t]; }
  std::size_t conjugate(std::size_t w, std::size_t t) const override { return conj_[w * reflections_.size() + t]; }
  const ReflectionMask& cocycle(std::size_t w) const override { return cocycle_[w]; }
  std::string label(std::size_t w) const override;
  std::string reflection_label(std::size_t t) const override;
  std::size_t level(std::size_t w) const override { return elements_[w].length(); }

  const CoxeterGroup& group() const { return *group_; }
  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<Element>& reflections() const { return reflections_; }
  std::size_t index_of(const Element& w) const;
  std::size_t reflection_index(const Element& t) const;
  std::size_t inverse(std::size_t w) const { return inverse_[w]; }
  ReflectionMask mask_of(const ReflectionSet& A) const;
  ReflectionSet set_of(const ReflectionMask& A) const;

  // Same group and indexing with a different cocycle.
  void replace_cocycle(std::vector<ReflectionMask> cocycle) { cocycle_ = std::move(cocycle); }

 private:
  std::shared_ptr<const CoxeterGroup> group_;
  std::vector<Element> elements_;
  std::vector<Element> reflections_;
  std::vector<std::size_t> product_, inverse_, reflection_element_, conj_;
  std::vector<ReflectionMask> cocycle_;
};

ReflectionMask twisted_dot(const CocycleProvider& p, std::size_t w, const ReflectionMask& A);

enum class OrderKind { Weak, Bruhat };

// Reachability closure of a pre-order; leq(x, y) means x <= y.
struct OrderRelation {
  OrderKind kind = OrderKind::Weak;
  ReflectionMask twist;  // A for Bruhat orders
  std::size_t size = 0;
  std::vector<ReflectionMask> below;  // below[y][x] iff x <= y
  bool partial_order = false;         // antisymmetry, checked over all pairs
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // (x, y) with y covering x

  bool leq(std::size_t x, std::size_t y) const { return below[y][x]; }
};

OrderRelation weak_order(const CocycleProvider& p);
OrderRelation bruhat_order(const CocycleProvider& p, const ReflectionMask& A);

// True iff perm is an isomorphism from the order onto its opposite.
bool reverses_order(const OrderRelation& rel, const std::vector<std::size_t>& perm);

// Hasse diagram, bottom to top, nodes labeled by the provider and ranked by level.
std::string to_dot(const CocycleProvider& p, const OrderRelation& rel, const std::string& name = "order");

// Finite reflection group in an orthonormal realization with two vector space total orders:
// the one defining Psi+ (lex with respect to psi_basis) and the lex order from omega.
struct LexSystem {
  std::shared_ptr<CoxeterCocycle> provider;  // cocycle N for Psi+
  std::vector<Vec> psi_roots;                // per reflection, the root in Psi+ (orthonormal coordinates)
  std::vector<Vec> phi_roots;                // per reflection, the root in Phi+ (lex <= 0)
  ReflectionMask A;                          // reflections of roots in Phi+ and -Psi+
  std::size_t minus_one = 0;                 // index of -1 when it lies in W, else element_count()
};

// Simple roots in orthonormal coordinates: rows of the Cholesky factor of the form.
std::vector<Vec> orthonormal_simple_roots(const CoxeterGroup& g);

// Vectors are given in the orthonormal coordinates of orthonormal_simple_roots. Throws
// InputError when the group is infinite or either family fails to separate nonzero vectors.
LexSystem lex_system(const CoxeterGroup& g, const std::vector<Vec>& omega, const std::vector<Vec>& psi_basis,
                     std::size_t cap = default_element_cap());

// Sign of v in the lex order defined by the family (first nonzero pairing).
int lex_sign(const Vec& v, const std::vector<Vec>& family, double tol = kTolerance);

}  // namespace rootforge
