#pragma once

#include <string>
#include <utility>
#include <vector>

#include "groupwalk/group.hpp"

namespace testutil {

/// Order-5 Latin square that is not associative: x*y = 2x + y mod 5.
/// Rows and columns are permutations, but (x*y)*z = 4x+2y+z differs from
/// x*(y*z) = 2x+2y+z whenever 2x != 0, and there is no two-sided identity.
inline groupwalk::CayleyTable nonassoc_latin5() {
  groupwalk::CayleyTable t;
  t.n = 5;
  t.table.resize(25);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) t.set(i, j, (2 * i + j) % 5);
  }
  return t;
}

/// Right-projection magma x*y = y: rows are the identity map but every
/// column is constant, so the column-bijectivity needed by the unique-k
/// fact fails.
inline groupwalk::CayleyTable right_projection_magma(int n = 2) {
  groupwalk::CayleyTable t;
  t.n = n;
  t.table.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t.set(i, j, j);
  }
  return t;
}

/// Named groups of order <= 24 covering the built-in constructors.
inline const std::vector<std::pair<std::string, groupwalk::FiniteGroup>>& builtin_groups() {
  using groupwalk::FiniteGroup;
  static const auto groups = [] {
    std::vector<std::pair<std::string, FiniteGroup>> v;
    v.emplace_back("Z1", FiniteGroup::cyclic(1));
    v.emplace_back("Z2", FiniteGroup::cyclic(2));
    v.emplace_back("Z3", FiniteGroup::cyclic(3));
    v.emplace_back("Z6", FiniteGroup::cyclic(6));
    v.emplace_back("Z12", FiniteGroup::cyclic(12));
    v.emplace_back("D2", FiniteGroup::dihedral(2));
    v.emplace_back("D3", FiniteGroup::dihedral(3));
    v.emplace_back("D4", FiniteGroup::dihedral(4));
    v.emplace_back("S3", FiniteGroup::symmetric(3));
    v.emplace_back("S4", FiniteGroup::symmetric(4));
    v.emplace_back("Z2xZ3", FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                         FiniteGroup::cyclic(3)));
    v.emplace_back("Z2xZ2", FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                         FiniteGroup::cyclic(2)));
    return v;
  }();
  return groups;
}

}  // namespace testutil
