#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rootforge/coxeter_matrix.hpp"

namespace rootforge {

using Word = std::vector<int>;
using Vec = std::vector<double>;

// A group element stored as its ShortLex normal form.
class Element {
 public:
  Element() = default;

  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  std::uint64_t group_tag() const { return tag_; }

  bool operator==(const Element& o) const { return tag_ == o.tag_ && word_ == o.word_; }
  // ShortLex: shorter words first, then lexicographic in generator order.
  std::strong_ordering operator<=>(const Element& o) const;

 private:
  friend class CoxeterGroup;
  Element(Word w, std::uint64_t tag) : word_(std::move(w)), tag_(tag) {}

  Word word_;
  std::uint64_t tag_ = 0;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const;
};

// Coxeter group acting on its standard geometric representation V with basis the
// simple roots and symmetric form B(a_s, a_t) = -2 cos(pi / m_st) (-2 for m = infinity).
class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterMatrix m);

  const CoxeterMatrix& matrix() const { return matrix_; }
  std::size_t rank() const { return matrix_.rank(); }
  std::uint64_t tag() const { return tag_; }
  // Form value B(a_i, a_j); equals <a_i, a_j^vee> for the standard datum.
  double form(std::size_t i, std::size_t j) const { return cartan_[i * rank() + j]; }
  double form(const Vec& u, const Vec& v) const;
  bool is_finite() const { return finite_; }

  Element identity() const { return Element({}, tag_); }
  Element generator(int s) const;
  Element normalize(const Word& word) const;
  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  // w x w^-1
  Element conjugate(const Element& w, const Element& x) const;
  Element power(const Element& x, std::size_t k) const;

  std::vector<int> left_descents(const Element& w) const;
  std::vector<int> right_descents(const Element& w) const;
  bool is_left_descent(int s, const Element& w) const;
  bool is_right_descent(const Element& w, int s) const;

  // Order of x, or nullopt when x^k != 1 for all k <= cap.
  std::optional<std::size_t> order(const Element& x, std::size_t cap = 64) const;

  // Action on coordinate vectors over the simple roots.
  Vec apply(const Element& w, Vec v) const;
  Vec simple_root(int s) const;
  bool is_reflection(const Element& t) const;
  // t = p s p^-1 with s simple and l(t) = 2 l(p) + 1. Throws InputError if t is not a reflection.
  std::pair<Word, int> reflection_decomposition(const Element& t) const;
  // Positive root b_t with s_{b_t} = t. Throws InputError if t is not a reflection.
  Vec positive_root(const Element& t) const;
  // Reflection along a (positive or negative) root vector of the standard datum.
  Element reflection_of_root(const Vec& root) const;

  // Word strings: generator names concatenated when every name is one character,
  // otherwise separated by single spaces. The identity is the empty string.
  std::string format(const Element& w) const;
  std::string format_word(const Word& w) const;
  Word parse_word(std::string_view text) const;
  Element parse(std::string_view text) const { return normalize(parse_word(text)); }

  void check_same_group(const Element& x) const;

 private:
  bool column_negative(const std::vector<double>& m, int s) const;

  CoxeterMatrix matrix_;
  std::vector<double> cartan_;
  bool finite_ = false;
  std::uint64_t tag_ = 0;
};

// Element cap honoring the ROOTFORGE_CAP_ELEMENTS environment variable.
std::size_t default_element_cap();

// All elements of length <= max_len, grouped by length and ShortLex within each length.
std::vector<Element> enumerate_elements(const CoxeterGroup& g, std::size_t max_len,
                                        std::size_t cap = default_element_cap());
// Elements of the standard parabolic subgroup generated by `subset`.
std::vector<Element> enumerate_parabolic(const CoxeterGroup& g, const std::vector<int>& subset,
                                         std::size_t max_len, std::size_t cap = default_element_cap());
// True iff the parabolic subgroup W_K is finite (its Gram matrix is positive definite).
bool parabolic_is_finite(const CoxeterGroup& g, const std::vector<int>& subset);

// Subgroup generated by `gens`, restricted to elements of length <= max_len.
// `complete` is true when no product was discarded by the length bound.
struct SubgroupClosure {
  std::vector<Element> elements;
  bool complete = true;
  bool contains(const Element& x) const;
};
SubgroupClosure subgroup_closure(const CoxeterGroup& g, const std::vector<Element>& gens,
                                 std::size_t max_len, std::size_t cap = default_element_cap());

struct ConjugacyChain {
  std::vector<std::vector<int>> J;  // J_1..J_k, each of size two
  std::vector<Element> w;           // w_1..w_k
  std::vector<int> a;               // a_0..a_k
  std::size_t k() const { return w.size(); }
};

// Chain of rank-two moves witnessing w r w^-1 = s with l(wr) = l(w) + 1:
// w = w_k ... w_1, w_i in W_{J_i}, w_i a_{i-1} w_i^-1 = a_i and lengths add.
ConjugacyChain simple_conjugacy_witness(const CoxeterGroup& g, const Element& w, int r, int s);

}  // namespace rootforge
