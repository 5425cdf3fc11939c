#pragma once

#include <optional>
#include <vector>

#include "zforce/graph.hpp"

namespace zforce {

/// One application of the colour-change rule: `forcer` was black and
/// `forced` was its only white neighbour.
struct Force {
  Vertex forcer;
  Vertex forced;
  bool operator==(const Force&) const = default;
};

using ForcingTrace = std::vector<Force>;

struct Closure {
  VertexSet black;
  ForcingTrace trace;
};

/// Derived colouring of `initial`: applies the colour-change rule until no
/// black vertex has exactly one white neighbour. Throws std::out_of_range if
/// `initial` names a vertex outside the graph.
Closure closure(const Graph& g, VertexSet initial);

/// Same fixpoint as closure() without recording the trace.
VertexSet closure_set(const Graph& g, VertexSet initial);

bool is_zero_forcing_set(const Graph& g, VertexSet s);

/// Replays `trace` from `initial` and checks every force was legal at the
/// moment it was applied, no vertex is forced twice and the result is stuck.
bool is_valid_trace(const Graph& g, VertexSet initial, const ForcingTrace& trace);

struct ZeroForcingOptions {
  /// Largest set size the search may try; nullopt searches to completion.
  std::optional<int> budget;
  /// Worker threads splitting each k-subset layer.
  int threads = 1;
  /// Skip sets containing a vertex already forced by the rest of the set.
  bool prune_redundant = false;
};

struct ZeroForcingResult {
  /// False when the budget ran out before a zero forcing set was found.
  bool complete = false;
  /// Z(G) when complete.
  int value = 0;
  /// Largest size known not to admit a zero forcing set, plus one.
  int lower_bound = 0;
  /// Colexicographically least minimum zero forcing set when complete.
  VertexSet witness;
  /// Number of candidate sets whose closure was evaluated.
  long long closures = 0;
};

/// Exact zero forcing number by increasing-size subset search, starting at
/// max(1, minimum degree). Disconnected graphs are solved per component and
/// the component answers summed.
ZeroForcingResult zero_forcing_number(const Graph& g, const ZeroForcingOptions& options = {});

}  // namespace zforce
