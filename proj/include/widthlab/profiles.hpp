#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "widthlab/generators.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/layout.hpp"
#include "widthlab/separation.hpp"

namespace widthlab {

/// Calls fn on every connected vertex subset of size 1..r whose smallest
/// member is root (ESU order; the subset is not sorted).
void for_each_connected_subset(const Graph& g, int r, Vertex root,
                               const std::function<void(const std::vector<Vertex>&)>& fn);

/// Every connected subset of size <= r, each sorted, ordered by size then
/// lexicographically.
std::vector<VertexSet> enumerate_connected_subsets(const Graph& g, int r);

enum class Invariant { sep, cw, bw, vs, tw, pw, cogrowth };

std::string to_string(Invariant inv);
Invariant parse_invariant(const std::string& name);

struct InvariantSpec {
  Invariant invariant = Invariant::sep;
  PNorm p = PNorm::infinity();   ///< cw, bw, vs
  Rational eps = Rational(1, 2);  ///< sep
};

std::string to_string(const InvariantSpec& spec);

/// Exact value of the invariant on g: the layout raw value for cw/bw/vs, an
/// integer otherwise (cogrowth: intrinsic diameter, -1 when disconnected).
/// CapacityError beyond the solver's limit.
BigInt evaluate_invariant(const InvariantSpec& spec, const Graph& g);

/// Largest subgraph size the invariant's solver accepts.
int invariant_capacity(const InvariantSpec& spec);

struct ProfileRow {
  int r = 0;
  bool skipped = false;
  BigInt value;
  VertexSet witness;
  /// finite p only: sum of disjoint connected witnesses (a lower bound)
  std::optional<BigInt> packed_value;
  VertexSet packed_witness;
};

struct ProfileTable {
  InvariantSpec spec;
  Graph host;
  int r_max = 0;
  std::vector<ProfileRow> rows;  ///< rows[i] is r = i + 1
};

/// Profile of a finite host: row r is the max of the invariant over connected
/// induced subgraphs with <= r vertices (cogrowth: min intrinsic diameter over
/// exactly r vertices). Ties go to the lexicographically least witness.
/// Work is split by subset root over `jobs` threads; output does not depend
/// on jobs.
ProfileTable profile(const Graph& host, const InvariantSpec& spec, int r_max, int jobs = 1);

/// Convenience for the family ball; see family_ball.
ProfileTable profile(const FamilySpec& family, int radius, const InvariantSpec& spec, int r_max,
                     int jobs = 1);

/// Minimum intrinsic diameter over connected induced r-subsets. ParameterError
/// if r exceeds the host.
struct CogrowthRow {
  int r = 0;
  int value = 0;
  VertexSet witness;
};
CogrowthRow cogrowth(const Graph& host, int r);

/// Row values as decimals: the integer, or the p-th root of a finite-p sum.
std::string format_value(const InvariantSpec& spec, const BigInt& raw);
std::string format_value_root(const InvariantSpec& spec, const BigInt& raw);

/// CSV with columns r,value,value_root,witness,status,packed_value,packed_witness.
std::string to_csv(const ProfileTable& t);

// ---------------------------------------------------------------- divide and conquer

struct DncStep {
  VertexSet vertices;  ///< the piece being ordered (ids of g)
  VertexSet cutset;    ///< placed last within the piece
  int depth = 0;
};

struct DncResult {
  LinearOrdering ordering;
  std::vector<DncStep> trace;  ///< preorder over the recursion
  /// certified recursion bound: Delta |C| + max over child pieces
  int bound = 0;
  int max_cutset = 0;
  int depth = 0;  ///< number of recursion levels
};

/// Orders g by recursively removing an eps-cutset (cutsize solver), laying
/// out the components of the rest one after another and the cutset last.
DncResult dnc_ordering(const Graph& g, Rational eps = Rational(1, 2));

}  // namespace widthlab
