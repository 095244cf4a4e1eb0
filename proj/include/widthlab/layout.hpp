#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "widthlab/graph.hpp"

namespace widthlab {

using BigInt = boost::multiprecision::cpp_int;

/// An l^p norm with p a positive integer or infinity.
class PNorm {
 public:
  static PNorm finite(unsigned p);
  static PNorm infinity() { return PNorm(0); }
  /// "inf" or a positive integer.
  static PNorm parse(const std::string& text);

  bool is_infinite() const { return p_ == 0; }
  /// Requires !is_infinite().
  unsigned p() const { return p_; }
  std::string to_string() const;

  bool operator==(const PNorm&) const = default;

 private:
  explicit PNorm(unsigned p) : p_(p) {}
  unsigned p_;
};

/// Exact layout or width value. For finite p this is the p-th power
/// sum(cost^p) rather than the norm itself; for infinity it is the max.
class LayoutValue {
 public:
  LayoutValue(PNorm norm, BigInt raw);

  static LayoutValue aggregate(PNorm norm, std::span<const int> costs);

  PNorm norm() const { return norm_; }
  const BigInt& raw() const { return raw_; }
  /// The norm itself (p-th root of raw for finite p); presentation only.
  double root() const;
  std::string to_string() const;

  /// Throws ParameterError when the norms differ.
  std::strong_ordering operator<=>(const LayoutValue& other) const;
  bool operator==(const LayoutValue& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }

 private:
  PNorm norm_;
  BigInt raw_;
};

/// Bijection from vertices to positions 1..n.
class LinearOrdering {
 public:
  LinearOrdering() = default;
  /// positions[v] in 1..n; throws ParameterError unless a bijection.
  explicit LinearOrdering(std::vector<int> positions);
  /// sequence[i] is the vertex at position i + 1.
  static LinearOrdering from_sequence(std::span<const Vertex> sequence);
  static LinearOrdering identity(int n);

  int size() const { return static_cast<int>(positions_.size()); }
  int position(Vertex v) const { return positions_[v]; }
  const std::vector<int>& positions() const { return positions_; }
  std::vector<Vertex> sequence() const;

  bool operator==(const LinearOrdering&) const = default;

 private:
  std::vector<int> positions_;
};

enum class LayoutCost { cutwidth, bandwidth, vertex_separation };
enum class SolveMethod { subset_dp, branch_and_bound, brute_force };

std::string to_string(LayoutCost cost);
std::string to_string(SolveMethod method);

struct SolveResult {
  LayoutValue value;
  LinearOrdering witness;
  SolveMethod method;
  std::uint64_t nodes_explored = 0;
};

inline constexpr int kSubsetDpLimit = 24;
inline constexpr int kBandwidthLimit = 12;
inline constexpr int kBruteForceLimit = 10;

/// Entry i (1-based) counts edges xy with f(x) < i <= f(y); entry 1 is 0.
std::vector<int> cut_vector(const Graph& g, const LinearOrdering& f);
/// |f(x) - f(y)| per edge, in g.edges() order.
std::vector<int> band_vector(const Graph& g, const LinearOrdering& f);
/// Entry i (1-based) counts vertices x with f(x) <= i having a neighbour y
/// with f(y) > i; entry n is 0.
std::vector<int> vertex_separation_vector(const Graph& g, const LinearOrdering& f);

std::vector<int> cost_vector(const Graph& g, LayoutCost cost, const LinearOrdering& f);
LayoutValue evaluate(const Graph& g, LayoutCost cost, PNorm p, const LinearOrdering& f);

/// Subset DP over prefix sets (n <= 24), or permutation brute force
/// (n <= 10) when brute_force is set.
SolveResult min_cutwidth(const Graph& g, PNorm p, bool brute_force = false);
/// Branch and bound over left-to-right placements (n <= 12).
SolveResult min_bandwidth(const Graph& g, PNorm p);
/// Subset DP over prefix sets (n <= 24).
SolveResult min_vertex_separation(const Graph& g, PNorm p);
/// Minimum over all n! orderings (n <= 10).
SolveResult brute_force_layout(const Graph& g, LayoutCost cost, PNorm p);

SolveResult solve_layout(const Graph& g, LayoutCost cost, PNorm p);

}  // namespace widthlab
