#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "dgmzv/ihara.hpp"

namespace dgmzv {

/// Ordered parts m_1..m_r >= 1; the associated totally odd MZV has weight
/// 2 * sum + r.
using Composition = std::vector<unsigned>;

/// All compositions of N into r parts, lexicographic.
std::vector<Composition> compositions(std::size_t N, std::size_t r);

/// x1^{2 m1} o (x1^{2 m2} o ( ... o x1^{2 mr})), built with depth1_action
/// from the unit.
DepthPoly nested_odd_element(const Composition& m);
/// The same element built with poly_compose; an independent path.
DepthPoly nested_odd_element_by_compose(const Composition& m);

/// Coefficient of x1^{2 n1} ... xr^{2 nr} in nested_odd_element(m).
/// Throws std::invalid_argument if m and n differ in length or sum.
Integer c_coefficient(const Composition& m, const Composition& n);
Integer c_coefficient_by_compose(const Composition& m, const Composition& n);

struct OddMatrix {
  std::size_t N = 0, r = 0;
  std::vector<Composition> index;            ///< lexicographic
  std::vector<std::vector<Integer>> entries; ///< entries[i][j] = c(index[i], index[j])
  std::size_t mzv_weight() const { return 2 * N + r; }
};

OddMatrix odd_matrix(std::size_t N, std::size_t r);
std::size_t odd_rank(std::size_t N, std::size_t r);

/// rank C_{N,r} keyed by (MZV weight 2N + r, r) for 2N + r <= max_weight,
/// r <= max_depth.
std::map<std::pair<std::size_t, std::size_t>, std::size_t> odd_rank_table(std::size_t max_weight,
                                                                          std::size_t max_depth);

}  // namespace dgmzv
