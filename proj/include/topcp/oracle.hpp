/// @file
/// @brief Brute-force exact TOP solver for tiny instances (ground truth).

#ifndef TOPCP_ORACLE_HPP
#define TOPCP_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "topcp/instance.hpp"
#include "topcp/solution.hpp"

namespace topcp {

struct OracleResult {
  long long optimum = 0;
  /// All distinct optima up to tour permutation. Tours carry one minimum
  /// length visit order per customer group; alternative feasible orders of
  /// the same group are profit-equivalent.
  std::vector<Solution> optimal_solutions;
  /// The same optima as customer bitmask groups (bit k = customer k+1),
  /// nonempty groups only, each partition in canonical group order.
  std::vector<std::vector<std::uint32_t>> optimal_partitions;
};

/// Enumerates customer subsets and their ordered set partitions into at most
/// m groups; each group is routed by a (subset, last-vertex) dynamic program.
/// Guarded to max_customers / max_fleet.
OracleResult solveExact(const Instance& inst, int max_customers = 12,
                        int max_fleet = 3);

/// Streams feasible slot-assigned tour sets: every customer partition, every
/// injection of its groups into the m vehicle slots, and, when all_orders is
/// set, every feasible visit order per group of size <= order_limit (larger
/// groups use the minimum-length order). Used by validity property tests.
void forEachFeasibleTourSet(
    const Instance& inst, bool all_orders,
    const std::function<void(const std::vector<std::vector<int>>&)>& fn,
    int order_limit = 4);

/// All feasible d..a visit orders of a customer set (length-pruned DFS).
std::vector<std::vector<int>> feasibleOrders(const Instance& inst,
                                             const std::vector<int>& customers);

}  // namespace topcp

#endif
