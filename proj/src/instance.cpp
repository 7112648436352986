#include "topcp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "topcp/errors.hpp"

namespace topcp {

namespace {

double euclid(const Vertex& a, const Vertex& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::string fmtDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Instance::Instance(std::vector<Vertex> vertices, int fleet_size,
                   double length_limit, std::string name)
    : vertices_(std::move(vertices)),
      fleet_size_(fleet_size),
      length_limit_(length_limit),
      name_(std::move(name)) {
  const int n = numVertices();
  if (n < 2) throw ParseError("instance needs at least the two depots");
  if (fleet_size_ < 1) throw ParseError("fleet size must be >= 1");
  if (length_limit_ < 0) throw ParseError("length limit must be nonnegative");
  if (vertices_.front().profit != 0 || vertices_.back().profit != 0)
    throw ParseError("depot profit must be zero");
  for (int v = 0; v < n; ++v) {
    vertices_[v].id = v;
    if (vertices_[v].profit < 0) throw ParseError("negative profit");
  }

  costs_.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      costs_(i, j) = euclid(vertices_[i], vertices_[j]);

  // Symmetry and triangle inequality, per the formulation's assumptions.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(costs_(i, j) - costs_(j, i)) > kMetricEps)
        throw ParseError("asymmetric cost matrix");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (costs_(i, k) > costs_(i, j) + costs_(j, k) + kMetricEps)
          throw ParseError("triangle inequality violated");
}

Instance Instance::fromChao(std::istream& in, std::string name) {
  std::string line;
  int lineno = 0;
  auto nextLine = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
  };

  long n = 0, m = 0;
  double tmax = 0.0;
  {
    if (!nextLine()) throw ParseError("line 1: missing header 'n <int>'");
    std::istringstream ss(line);
    std::string key;
    if (!(ss >> key >> n) || key != "n" || n < 2)
      fail(lineno, "expected header 'n <int>' with n >= 2");
  }
  {
    if (!nextLine()) fail(lineno + 1, "missing header 'm <int>'");
    std::istringstream ss(line);
    std::string key;
    if (!(ss >> key >> m) || key != "m" || m < 1)
      fail(lineno, "expected header 'm <int>' with m >= 1");
  }
  {
    if (!nextLine()) fail(lineno + 1, "missing header 'tmax <float>'");
    std::istringstream ss(line);
    std::string key;
    if (!(ss >> key >> tmax) || key != "tmax" || !(tmax >= 0))
      fail(lineno, "expected header 'tmax <float>' with tmax >= 0");
  }

  // Row count n includes both depots: first row is d, last row is a.
  std::vector<Vertex> vertices;
  vertices.reserve(static_cast<size_t>(n));
  for (long row = 0; row < n; ++row) {
    if (!nextLine())
      fail(lineno + 1, "expected " + std::to_string(n) +
                           " coordinate rows, file ended after " +
                           std::to_string(row));
    std::istringstream ss(line);
    double x, y, p;
    if (!(ss >> x >> y >> p)) fail(lineno, "expected row 'x y profit'");
    std::string trailing;
    if (ss >> trailing) fail(lineno, "unexpected trailing token '" + trailing + "'");
    if (p < 0) fail(lineno, "negative profit");
    double rounded = std::round(p);
    if (std::abs(p - rounded) > 1e-9)
      fail(lineno, "profit must be integral");
    bool is_depot = (row == 0 || row == n - 1);
    if (is_depot && rounded != 0)
      fail(lineno, row == 0 ? "departure depot must have zero profit"
                            : "arrival depot must have zero profit");
    vertices.push_back(Vertex{static_cast<int>(row), x, y,
                              static_cast<long long>(rounded)});
  }
  if (nextLine()) fail(lineno, "unexpected extra row beyond the declared n");

  return Instance(std::move(vertices), static_cast<int>(m), tmax,
                  std::move(name));
}

Instance Instance::fromChaoFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::string stem = path;
  if (auto pos = stem.find_last_of('/'); pos != std::string::npos)
    stem = stem.substr(pos + 1);
  if (auto pos = stem.rfind(".txt"); pos != std::string::npos && pos == stem.size() - 4)
    stem = stem.substr(0, pos);
  return fromChao(in, stem);
}

void Instance::toChao(std::ostream& out) const {
  out << "n " << numVertices() << "\n";
  out << "m " << fleet_size_ << "\n";
  out << "tmax " << fmtDouble(length_limit_) << "\n";
  for (const Vertex& v : vertices_) {
    out << fmtDouble(v.x) << "\t" << fmtDouble(v.y) << "\t" << v.profit
        << "\n";
  }
}

long long Instance::totalProfit() const {
  long long sum = 0;
  for (const Vertex& v : vertices_) sum += v.profit;
  return sum;
}

std::uint64_t Instance::contentHash() const {
  std::ostringstream ss;
  toChao(ss);
  std::uint64_t h = 1469598103934665603ull;
  for (char c : ss.str()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

Instance Instance::withFleet(int g) const {
  return Instance(vertices_, g, length_limit_, name_);
}

Instance Instance::withUnitProfits() const {
  std::vector<Vertex> vs = vertices_;
  for (size_t v = 1; v + 1 < vs.size(); ++v) vs[v].profit = 1;
  return Instance(std::move(vs), fleet_size_, length_limit_, name_);
}

AccessibilityMask::AccessibilityMask(const Instance& inst,
                                     std::vector<char> customer_ok)
    : customer_ok_(std::move(customer_ok)) {
  for (int i = 1; i <= inst.numCustomers(); ++i)
    if (customer_ok_[i]) customers_.push_back(i);
  buildArcs(inst);
}

void AccessibilityMask::buildArcs(const Instance& inst) {
  const int n = inst.numVertices();
  const double L = inst.lengthLimit();
  stride_ = n;
  arc_index_.assign(static_cast<size_t>(n) * n, -1);
  arcs_.clear();
  const int d = inst.depart(), a = inst.arrive();
  for (int i = 0; i < n; ++i) {
    if (inst.isCustomer(i) && !customer_ok_[i]) continue;
    for (int j = 0; j < n; ++j) {
      if (!inst.arcAllowed(i, j)) continue;
      if (inst.isCustomer(j) && !customer_ok_[j]) continue;
      double closure = inst.cost(d, i) + inst.cost(i, j) + inst.cost(j, a);
      if (closure <= L + kCostEps) {
        arc_index_[i * stride_ + j] = static_cast<int>(arcs_.size());
        arcs_.push_back(Arc{i, j});
      }
    }
  }
}

std::vector<int> AccessibilityMask::inaccessibleCustomers() const {
  std::vector<int> out;
  for (int i = 1; i + 1 < static_cast<int>(customer_ok_.size()); ++i)
    if (!customer_ok_[i]) out.push_back(i);
  return out;
}

std::vector<Arc> AccessibilityMask::inaccessibleArcs() const {
  // Structurally allowed arcs that failed the closure test or touch an
  // inaccessible customer.
  std::vector<Arc> out;
  const int n = stride_;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || j == 0 || i == n - 1) continue;
      if (arc_index_[i * stride_ + j] < 0) out.push_back(Arc{i, j});
    }
  }
  return out;
}

AccessibilityMask AccessibilityMask::withoutCustomer(const Instance& inst,
                                                     int removed) const {
  std::vector<char> ok = customer_ok_;
  ok[removed] = 0;
  return AccessibilityMask(inst, std::move(ok));
}

AccessibilityMask accessibility(const Instance& inst) {
  const int n = inst.numVertices();
  const int d = inst.depart(), a = inst.arrive();
  const double L = inst.lengthLimit();
  std::vector<char> ok(n, 1);
  for (int i = 1; i <= inst.numCustomers(); ++i)
    ok[i] = (inst.cost(d, i) + inst.cost(i, a) <= L + kCostEps) ? 1 : 0;
  return AccessibilityMask(inst, std::move(ok));
}

double minLenCustomers(const Instance& inst, int i, int j) {
  if (i == j || !inst.isCustomer(i) || !inst.isCustomer(j))
    throw ModelError("minLen requires two distinct customers");
  const int d = inst.depart(), a = inst.arrive();
  double via_ij = inst.cost(d, i) + inst.cost(i, j) + inst.cost(j, a);
  double via_ji = inst.cost(d, j) + inst.cost(j, i) + inst.cost(i, a);
  return std::min(via_ij, via_ji);
}

namespace {

/// Cost of the chain d -> u -> v -> w -> s -> a with adjacent duplicates
/// collapsed; +inf when a vertex would be revisited non-adjacently.
double chainCost(const Instance& inst, int u, int v, int w, int s) {
  const int d = inst.depart(), a = inst.arrive();
  int raw[6] = {d, u, v, w, s, a};
  int seq[6];
  int len = 0;
  for (int x : raw) {
    if (len == 0 || seq[len - 1] != x) seq[len++] = x;
  }
  for (int p = 0; p < len; ++p)
    for (int q = p + 1; q < len; ++q)
      if (seq[p] == seq[q]) return kInfCost;
  double total = 0.0;
  for (int p = 0; p + 1 < len; ++p) total += inst.cost(seq[p], seq[p + 1]);
  return total;
}

}  // namespace

double minLenArcs(const Instance& inst, const Arc& x, const Arc& y) {
  if (x == y) throw ModelError("minLen requires two distinct arcs");
  double ab = chainCost(inst, x.from, x.to, y.from, y.to);
  double ba = chainCost(inst, y.from, y.to, x.from, x.to);
  return std::min(ab, ba);
}

}  // namespace topcp
