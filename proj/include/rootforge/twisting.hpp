#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootforge/group.hpp"

namespace rootforge {

// Partition of the generators into J, K, L, M (generator indices).
struct TwistSpec {
  std::vector<int> J, K, L, M;

  // Names are resolved against the group's generators; missing parts are empty.
  static TwistSpec from_names(const CoxeterMatrix& m, const std::vector<std::string>& j,
                              const std::vector<std::string>& k, const std::vector<std::string>& l,
                              const std::vector<std::string>& mm);
};

struct TwistReport {
  bool valid = true;
  std::vector<std::string> failures;
  std::optional<Element> w_k;
};

TwistReport validate_twist(const CoxeterGroup& g, const TwistSpec& spec);

// Longest element of the finite standard parabolic subgroup W_K; throws InputError if W_K is infinite.
Element longest_element(const CoxeterGroup& g, const std::vector<int>& K);

struct TwistResult {
  Element w_k;
  // S' in the order of S, with each r in J replaced by w_K r w_K.
  std::vector<Element> generators;
  std::vector<std::string> names;
  std::vector<bool> in_j;  // generator i of S' lies in J'
  CoxeterMatrix matrix;
};

// Throws InputError when the spec is invalid.
TwistResult apply_twist(const CoxeterGroup& g, const TwistSpec& spec);

struct SignSolution {
  bool feasible = false;
  std::vector<int> signs;  // one per generator of S', in S' order
  std::string conflict;    // a violated constraint when infeasible
};

// Parity constraints on the signs of S' for the twisted generators to be simple roots.
SignSolution twist_sign_solve(const CoxeterGroup& g, const TwistSpec& spec);

}  // namespace rootforge
