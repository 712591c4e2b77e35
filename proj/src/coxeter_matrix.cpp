#include "rootforge/coxeter_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "rootforge/errors.hpp"

namespace rootforge {

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> generators, std::vector<std::vector<int>> m)
    : generators_(std::move(generators)), m_(std::move(m)) {
  const std::size_t n = generators_.size();
  if (m_.size() != n) throw InputError("Coxeter matrix size does not match generator count");
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty()) throw InputError("empty generator name");
    if (!seen.insert(g).second) throw InputError("duplicate generator name: " + g);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m_[i].size() != n) throw InputError("Coxeter matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const int v = m_[i][j];
      if (i == j) {
        if (v != 1) throw InputError("diagonal entry of Coxeter matrix must be 1");
      } else if (v != kInfinity && v < 2) {
        throw InputError("off-diagonal Coxeter matrix entry must be >= 2 or 0 for infinity");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m_[i][j] != m_[j][i]) throw InputError("Coxeter matrix is not symmetric");
}

int CoxeterMatrix::index_of(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) throw InputError("unknown generator: " + std::string(name));
  return static_cast<int>(it - generators_.begin());
}

bool CoxeterMatrix::has_generator(std::string_view name) const {
  return std::find(generators_.begin(), generators_.end(), name) != generators_.end();
}

std::vector<std::string> default_generator_names(std::size_t rank) {
  static const char* kSmall[] = {"r", "s", "t", "u"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rank; ++i)
    out.push_back(rank <= 4 ? std::string(kSmall[i]) : "s" + std::to_string(i + 1));
  return out;
}

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix all_commuting(std::size_t n) {
  Matrix m(n, std::vector<int>(n, 2));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void bond(Matrix& m, std::size_t i, std::size_t j, int v) {
  m[i][j] = v;
  m[j][i] = v;
}

Matrix path(std::size_t n) {
  Matrix m = all_commuting(n);
  for (std::size_t i = 0; i + 1 < n; ++i) bond(m, i, i + 1, 3);
  return m;
}

int parse_positive(std::string_view s, std::string_view type) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v <= 0)
    throw InputError("unknown Coxeter type: " + std::string(type));
  return v;
}

}  // namespace

CoxeterMatrix CoxeterMatrix::of_type(std::string_view type) {
  auto fail = [&]() -> CoxeterMatrix { throw InputError("unknown Coxeter type: " + std::string(type)); };
  if (type.size() < 2) return fail();
  if (type.rfind("I2(", 0) == 0 && type.back() == ')') {
    std::string_view inner = type.substr(3, type.size() - 4);
    int v = (inner == "inf" || inner == "0") ? kInfinity : parse_positive(inner, type);
    if (v == 1) return fail();
    Matrix m = all_commuting(2);
    bond(m, 0, 1, v);
    return {default_generator_names(2), m};
  }
  const bool affine = type.size() > 2 && type[1] == '~';
  const char family = type[0];
  const int n = parse_positive(type.substr(affine ? 2 : 1), type);
  Matrix m;
  if (!affine) {
    switch (family) {
      case 'A':
        m = path(n);
        break;
      case 'B':
        if (n < 2) return fail();
        m = path(n);
        bond(m, n - 2, n - 1, 4);
        break;
      case 'D':
        if (n < 4) return fail();
        m = path(n);
        bond(m, n - 2, n - 1, 2);
        bond(m, n - 3, n - 1, 3);
        break;
      case 'E':
        if (n < 6 || n > 8) return fail();
        m = all_commuting(n);
        for (int i = 0; i + 2 < n; ++i) bond(m, i, i + 1, 3);
        bond(m, 2, n - 1, 3);
        break;
      case 'F':
        if (n != 4) return fail();
        m = path(4);
        bond(m, 1, 2, 4);
        break;
      case 'G':
        if (n != 2) return fail();
        m = all_commuting(2);
        bond(m, 0, 1, 6);
        break;
      case 'H':
        if (n != 3 && n != 4) return fail();
        m = path(n);
        bond(m, 0, 1, 5);
        break;
      default:
        return fail();
    }
    return {default_generator_names(n), m};
  }
  const int r = n + 1;
  switch (family) {
    case 'A':
      if (n == 1) {
        m = all_commuting(2);
        bond(m, 0, 1, kInfinity);
      } else {
        m = path(r);
        bond(m, 0, r - 1, 3);
      }
      break;
    case 'B':
    case 'C':
      if (n < 2 || (family == 'B' && n != 2)) return fail();
      m = path(r);
      bond(m, 0, 1, 4);
      bond(m, r - 2, r - 1, 4);
      break;
    default:
      return fail();
  }
  return {default_generator_names(r), m};
}

std::vector<std::vector<int>> irreducible_components(const CoxeterMatrix& m) {
  const std::size_t n = m.rank();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.m(i, j) != 2) parent[find(i)] = find(j);
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    int root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace rootforge
