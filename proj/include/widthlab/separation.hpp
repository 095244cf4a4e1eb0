#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "widthlab/graph.hpp"
#include "widthlab/layout.hpp"

namespace widthlab {

using Rational = boost::rational<std::int64_t>;

/// Parses "a/b" or a decimal like "0.5" into an exact rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

struct CutsetCertificate {
  VertexSet cutset;
  Rational epsilon;
  /// Sizes of the components of g - cutset, in component order.
  std::vector<int> component_sizes;
};

struct CutsizeResult {
  int value = 0;
  CutsetCertificate certificate;
};

struct SeparatorTriple {
  VertexSet a, b, s;
};

struct SeparatorResult {
  int value = 0;
  SeparatorTriple certificate;
};

struct CheegerResult {
  Rational value;
  /// A minimising set A.
  VertexSet witness;
};

struct EliminationCertificate {
  LinearOrdering order;
  int width = 0;
};

struct TreewidthResult {
  int value = 0;
  EliminationCertificate certificate;
};

struct PathwidthResult {
  int value = 0;
  LinearOrdering ordering;
};

/// Graphs up to this size always fit the cutsize budget.
inline constexpr int kCutsizeLimit = 16;
/// Larger graphs (up to 63 vertices) are attempted while the candidate
/// cutsets of size <= the answer number at most this many.
inline constexpr std::uint64_t kCutsizeBudget = std::uint64_t{1} << 26;
inline constexpr int kCheegerLimit = 20;
inline constexpr int kTreewidthLimit = 14;

/// Components larger than floor(eps * n) are forbidden.
int component_threshold(const Rational& eps, int n);

/// Minimum |S| such that every component of g - S has at most eps*n vertices.
/// CapacityError once the subset budget is exhausted.
CutsizeResult cutsize(const Graph& g, Rational eps = Rational(1, 2));
/// Minimum |S| over separations V = A + B + S with |A|, |B| <= floor(2n/3).
SeparatorResult two_thirds_separator(const Graph& g);
/// min |N(A) \ A| / |A| over nonempty A with |A| <= n/2.
CheegerResult cheeger(const Graph& g);
/// Exact treewidth via subset DP over eliminated prefixes (n <= 14).
TreewidthResult treewidth(const Graph& g);
/// Pathwidth as the vertex separation number (n <= 24).
PathwidthResult pathwidth(const Graph& g);

// Independent certificate checks; each returns an empty string when valid.
std::string check_cutset(const Graph& g, const CutsetCertificate& c);
std::string check_separator(const Graph& g, const SeparatorTriple& t);
/// Width reached by eliminating in order with fill-in (max higher degree).
int elimination_width(const Graph& g, const LinearOrdering& order);

}  // namespace widthlab
