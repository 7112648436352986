#ifndef TOPCP_SOLUTION_HPP
#define TOPCP_SOLUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "topcp/instance.hpp"

namespace topcp {

/// A set of m vehicle tours, each from the departure to the arrival depot.
/// Tours are kept in the engine's fixed symmetry order: objective profit
/// non-increasing with the vehicle index.
struct Solution {
  std::vector<std::vector<int>> tours;  // vertex sequences d ... a
  long long profit = 0;                 // sum of real profits served
  std::vector<double> lengths;
};

double tourLength(const Instance& inst, const std::vector<int>& tour);

/// Assembles a Solution from raw tours: fills profit/lengths and sorts the
/// tours by the symmetry order. `obj_profits`, when given, supplies the
/// per-vertex profit used for ordering (unit-profit models); the reported
/// Solution::profit always uses the instance's real profits.
Solution makeSolution(const Instance& inst,
                      std::vector<std::vector<int>> tours,
                      const std::vector<long long>* obj_profits = nullptr);

/// Profit of one tour under a per-vertex profit vector.
long long tourProfit(const std::vector<int>& tour,
                     const std::vector<long long>& profits);

std::vector<long long> realProfits(const Instance& inst);
std::vector<long long> unitProfits(const Instance& inst);

/// Independent feasibility validator: depot endpoints, no revisits, per-tour
/// length within L + 1e-6, profit bookkeeping, tour count, symmetry order.
/// Returns std::nullopt when valid, else a description of the first issue.
std::optional<std::string> validateSolution(
    const Instance& inst, const Solution& sol, bool check_order = true,
    const std::vector<long long>* obj_profits = nullptr);

/// One tour per line as a whitespace-separated vertex id sequence.
void writeSolution(std::ostream& out, const Solution& sol);
Solution readSolution(std::istream& in, const Instance& inst);

}  // namespace topcp

#endif
