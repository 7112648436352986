#include "topcp/solution.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "topcp/errors.hpp"

namespace topcp {

double tourLength(const Instance& inst, const std::vector<int>& tour) {
  double len = 0.0;
  for (size_t k = 0; k + 1 < tour.size(); ++k)
    len += inst.cost(tour[k], tour[k + 1]);
  return len;
}

long long tourProfit(const std::vector<int>& tour,
                     const std::vector<long long>& profits) {
  long long p = 0;
  for (int v : tour) p += profits[v];
  return p;
}

std::vector<long long> realProfits(const Instance& inst) {
  std::vector<long long> p(inst.numVertices(), 0);
  for (int v = 1; v <= inst.numCustomers(); ++v) p[v] = inst.profit(v);
  return p;
}

std::vector<long long> unitProfits(const Instance& inst) {
  std::vector<long long> p(inst.numVertices(), 0);
  for (int v = 1; v <= inst.numCustomers(); ++v) p[v] = 1;
  return p;
}

Solution makeSolution(const Instance& inst,
                      std::vector<std::vector<int>> tours,
                      const std::vector<long long>* obj_profits) {
  std::vector<long long> order_p =
      obj_profits ? *obj_profits : realProfits(inst);
  std::stable_sort(tours.begin(), tours.end(),
                   [&](const std::vector<int>& a, const std::vector<int>& b) {
                     return tourProfit(a, order_p) > tourProfit(b, order_p);
                   });
  Solution sol;
  std::vector<long long> real_p = realProfits(inst);
  for (auto& t : tours) {
    sol.profit += tourProfit(t, real_p);
    sol.lengths.push_back(tourLength(inst, t));
  }
  sol.tours = std::move(tours);
  return sol;
}

std::optional<std::string> validateSolution(
    const Instance& inst, const Solution& sol, bool check_order,
    const std::vector<long long>* obj_profits) {
  if (static_cast<int>(sol.tours.size()) != inst.fleetSize())
    return "expected " + std::to_string(inst.fleetSize()) + " tours, got " +
           std::to_string(sol.tours.size());
  std::vector<char> seen(inst.numVertices(), 0);
  long long real_profit = 0;
  std::vector<long long> real_p = realProfits(inst);
  for (size_t r = 0; r < sol.tours.size(); ++r) {
    const auto& t = sol.tours[r];
    if (t.size() < 2 || t.front() != inst.depart() || t.back() != inst.arrive())
      return "tour " + std::to_string(r) + " must run depot d to depot a";
    for (size_t k = 1; k + 1 < t.size(); ++k) {
      int v = t[k];
      if (!inst.isCustomer(v))
        return "tour " + std::to_string(r) + " visits a depot mid-route";
      if (seen[v]) return "customer " + std::to_string(v) + " visited twice";
      seen[v] = 1;
      real_profit += real_p[v];
    }
    double len = tourLength(inst, t);
    if (len > inst.lengthLimit() + kCostEps)
      return "tour " + std::to_string(r) + " exceeds the length limit";
    if (r < sol.lengths.size() && std::abs(sol.lengths[r] - len) > 1e-6)
      return "recorded length of tour " + std::to_string(r) + " is wrong";
  }
  if (real_profit != sol.profit)
    return "recorded profit " + std::to_string(sol.profit) +
           " does not match served customers (" + std::to_string(real_profit) +
           ")";
  if (check_order) {
    std::vector<long long> order_p =
        obj_profits ? *obj_profits : realProfits(inst);
    for (size_t r = 0; r + 1 < sol.tours.size(); ++r) {
      if (tourProfit(sol.tours[r], order_p) <
          tourProfit(sol.tours[r + 1], order_p))
        return "tours violate the fixed symmetry order at position " +
               std::to_string(r);
    }
  }
  return std::nullopt;
}

void writeSolution(std::ostream& out, const Solution& sol) {
  for (const auto& t : sol.tours) {
    for (size_t k = 0; k < t.size(); ++k) out << (k ? " " : "") << t[k];
    out << "\n";
  }
}

Solution readSolution(std::istream& in, const Instance& inst) {
  std::vector<std::vector<int>> tours;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    std::vector<int> tour;
    int v;
    while (ss >> v) tour.push_back(v);
    tours.push_back(std::move(tour));
  }
  return makeSolution(inst, std::move(tours));
}

}  // namespace topcp
