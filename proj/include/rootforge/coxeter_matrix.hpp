#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rootforge {

// Entry value used for m = infinity, matching the JSON encoding.
inline constexpr int kInfinity = 0;

class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  CoxeterMatrix(std::vector<std::string> generators, std::vector<std::vector<int>> m);

  // Builtin types: A<n>, B<n>, D<n>, E6..E8, F4, G2, H3, H4, I2(<m>), I2(inf),
  // and the affine types A~<n>, B~2 (spelled "B~2"), C~<n>.
  static CoxeterMatrix of_type(std::string_view type);

  std::size_t rank() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::string& name(std::size_t i) const { return generators_.at(i); }
  int index_of(std::string_view name) const;
  bool has_generator(std::string_view name) const;

  // Order of the product of generators i and j; kInfinity encodes infinity.
  int m(std::size_t i, std::size_t j) const { return m_[i][j]; }
  bool is_infinite(std::size_t i, std::size_t j) const { return m_[i][j] == kInfinity; }
  const std::vector<std::vector<int>>& entries() const { return m_; }

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  std::vector<std::string> generators_;
  std::vector<std::vector<int>> m_;
};

// Generator names used by the builtin types: r, s, t, u up to rank 4, then s1, s2, ...
std::vector<std::string> default_generator_names(std::size_t rank);

// Connected components of the Coxeter graph (edges where m >= 3 or m = infinity).
std::vector<std::vector<int>> irreducible_components(const CoxeterMatrix& m);

}  // namespace rootforge
