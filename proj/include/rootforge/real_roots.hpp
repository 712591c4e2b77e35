#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rootforge/coxeter_matrix.hpp"
#include "rootforge/errors.hpp"
#include "rootforge/group.hpp"

namespace rootforge {

using RealMatrix = std::vector<std::vector<double>>;

// Possibly non-integral generalized Cartan matrix, A[i][j] = <a_i, a_j^vee>.
struct Ngcm {
  std::vector<std::string> labels;
  RealMatrix a;
};

struct BasedRootDatum {
  std::vector<std::string> labels;
  RealMatrix pairing;        // dim V rows, dim V' columns
  std::vector<Vec> roots;    // simple roots in V
  std::vector<Vec> coroots;  // simple coroots in V'

  std::size_t rank() const { return roots.size(); }
  std::size_t dim_v() const { return pairing.size(); }
  std::size_t dim_vprime() const { return pairing.empty() ? 0 : pairing.front().size(); }
  double pair(const Vec& v, const Vec& vp) const;
  RealMatrix ngcm() const;

  // V = V' = R^n with unit-vector roots and coroots and pairing A.
  static BasedRootDatum from_ngcm(const Ngcm& a);
  // The symmetric datum with A[s][t] = -2 cos(pi / m_st).
  static BasedRootDatum standard(const CoxeterMatrix& m);
};

struct RootPair {
  Vec root;
  Vec coroot;
  std::size_t depth = 0;
  bool positive = true;
};

struct RootSlice {
  BasedRootDatum datum;
  std::size_t depth_bound = 0;
  std::vector<RootPair> roots;
  // True when the orbit closure of the simple roots was reached within the bound.
  bool closed = false;

  std::size_t positive_count() const;
  std::optional<std::size_t> find(const Vec& root, double tol = kTolerance) const;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> failures;
};

// Value set P = {4 cos^2(pi/m) : m >= 2} union [4, infinity).
bool in_product_set(double c, double tol = kTolerance);
// <a, b^vee> = x and <b, a^vee> = y satisfy the pairwise conditions on simple roots.
bool pair_condition(double x, double y, double tol = kTolerance);

ValidationReport validate_ngcm(const RealMatrix& a, double tol = kTolerance);
ValidationReport validate_datum(const BasedRootDatum& b, double tol = kTolerance);

// Throws InputError naming the entry when a product lies in a gap of P.
CoxeterMatrix coxeter_matrix_of(const Ngcm& a, double tol = kTolerance);
CoxeterMatrix coxeter_matrix_of(const BasedRootDatum& b, double tol = kTolerance);

Vec reflect(const BasedRootDatum& b, const Vec& v, const RootPair& p);
Vec reflect_coroot(const BasedRootDatum& b, const Vec& vp, const RootPair& p);

RootSlice generate_roots(const BasedRootDatum& b, std::size_t depth = 16,
                         std::size_t cap = default_element_cap(), double tol = kTolerance);

bool is_between_real(const Vec& gamma, const Vec& alpha, const Vec& beta, double tol = kTolerance);

// Canonical simple roots of the reflection subgroup generated by R (positive roots).
std::vector<RootPair> reflection_subgroup_basis(const BasedRootDatum& b, std::vector<RootPair> R,
                                                std::size_t cap = 10000, double tol = kTolerance);

BasedRootDatum rescale(const BasedRootDatum& b, const std::vector<double>& c);

struct DatumProperties {
  bool reduced = true;
  bool symmetrizable = true;
  std::optional<std::vector<double>> rescaling;
};
DatumProperties datum_properties(const RealMatrix& a, double tol = kTolerance);
DatumProperties datum_properties(const BasedRootDatum& b, double tol = kTolerance);

// Subsets of the slice (given by root indices) that form root bases of the same
// underlying root datum: pairwise conditions, positive independence of roots and
// coroots, and orbit closure equal to the whole slice. Requires a closed slice.
bool is_root_basis(const RootSlice& slice, const std::vector<std::size_t>& subset, double tol = kTolerance);
std::vector<std::vector<std::size_t>> find_root_bases(const RootSlice& slice, double tol = kTolerance);

}  // namespace rootforge
