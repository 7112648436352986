/// @file
/// @brief TOP instances: loading, validation, accessibility preprocessing.

#ifndef TOPCP_INSTANCE_HPP
#define TOPCP_INSTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace topcp {

/// Absolute tolerance for cost/limit comparisons.
inline constexpr double kCostEps = 1e-6;
/// Tolerance for symmetry/triangle-inequality verification on load.
inline constexpr double kMetricEps = 1e-9;
inline constexpr double kInfCost = 1e30;

struct Vertex {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  long long profit = 0;  // 0 for both depots
};

struct Arc {
  int from = -1;
  int to = -1;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A TOP instance over the complete directed graph on the vertex list.
/// Vertex 0 is the departure depot, the last vertex the arrival depot.
/// Costs are Euclidean, symmetric and satisfy the triangle inequality
/// (verified on construction). Immutable after construction.
class Instance {
 public:
  Instance(std::vector<Vertex> vertices, int fleet_size, double length_limit,
           std::string name = "");

  /// Parses the Chao benchmark text format:
  ///   n <int>      -- number of rows below, depots included
  ///   m <int>
  ///   tmax <float>
  /// followed by exactly n rows "x y profit"; first row is the departure
  /// depot, last row the arrival depot.
  static Instance fromChao(std::istream& in, std::string name = "");
  static Instance fromChaoFile(const std::string& path);

  /// Writes the instance back in the Chao format (round-trip safe).
  void toChao(std::ostream& out) const;

  int numVertices() const { return static_cast<int>(vertices_.size()); }
  int numCustomers() const { return numVertices() - 2; }
  int depart() const { return 0; }
  int arrive() const { return numVertices() - 1; }
  bool isCustomer(int v) const { return v > 0 && v < numVertices() - 1; }

  int fleetSize() const { return fleet_size_; }
  double lengthLimit() const { return length_limit_; }
  const std::string& name() const { return name_; }

  const Vertex& vertex(int v) const { return vertices_[v]; }
  long long profit(int v) const { return vertices_[v].profit; }
  long long totalProfit() const;

  double cost(int i, int j) const { return costs_(i, j); }
  const Eigen::MatrixXd& costs() const { return costs_; }

  /// Structural arc filter: no self-loops, nothing into d, nothing out of a.
  bool arcAllowed(int i, int j) const {
    return i != j && j != depart() && i != arrive();
  }

  /// FNV-1a hash of the serialized content; keys the graph cache.
  std::uint64_t contentHash() const;

  Instance withFleet(int g) const;
  Instance withUnitProfits() const;

 private:
  std::vector<Vertex> vertices_;
  int fleet_size_;
  double length_limit_;
  Eigen::MatrixXd costs_;
  std::string name_;
};

/// Accessible customers and arcs of an instance (§ irrelevant components):
/// customer i is accessible iff c_di + c_ia <= L; arc (i,j) iff
/// c_di + c_ij + c_ja <= L with both customer endpoints accessible.
class AccessibilityMask {
 public:
  AccessibilityMask() = default;
  AccessibilityMask(const Instance& inst, std::vector<char> customer_ok);

  bool customerAccessible(int i) const { return customer_ok_[i] != 0; }
  bool arcAccessible(int i, int j) const { return arcIndex(i, j) >= 0; }

  const std::vector<int>& accessibleCustomers() const { return customers_; }
  const std::vector<Arc>& accessibleArcs() const { return arcs_; }
  int numAccessibleCustomers() const { return static_cast<int>(customers_.size()); }

  /// Index of (i,j) in accessibleArcs(), -1 when inaccessible.
  int arcIndex(int i, int j) const { return arc_index_[i * stride_ + j]; }

  std::vector<int> inaccessibleCustomers() const;
  std::vector<Arc> inaccessibleArcs() const;

  /// Mask for the derived instance X \ {removed}: drops the customer and
  /// every arc touching it.
  AccessibilityMask withoutCustomer(const Instance& inst, int removed) const;

 private:
  void buildArcs(const Instance& inst);

  std::vector<char> customer_ok_;
  std::vector<int> customers_;
  std::vector<Arc> arcs_;
  std::vector<int> arc_index_;
  int stride_ = 0;
};

AccessibilityMask accessibility(const Instance& inst);

/// Length of the shortest d->a path visiting both customers of the pair
/// (minimum over the two visit orders).
double minLenCustomers(const Instance& inst, int i, int j);

/// Length of the shortest d->a path traversing both arcs in their given
/// directions. Shared endpoints collapse the connector; orders that would
/// revisit a vertex are excluded. Returns +infinity when no simple chain
/// exists (the pair is structurally incompatible).
double minLenArcs(const Instance& inst, const Arc& a, const Arc& b);

}  // namespace topcp

#endif
