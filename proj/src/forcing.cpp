#include "zforce/forcing.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <mutex>
#include <thread>

namespace zforce {

namespace {

void check_subset(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices()))
    throw std::out_of_range("vertex set " + s.to_string() + " not contained in a graph of order " +
                            std::to_string(g.order()));
}

}  // namespace

Closure closure(const Graph& g, VertexSet initial) {
  check_subset(g, initial);
  Closure out{initial, {}};
  VertexSet& black = out.black;
  std::deque<Vertex> work;
  for (Vertex v : black)
    if (g.neighbors(v).minus(black).is_singleton()) work.push_back(v);
  while (!work.empty()) {
    const Vertex v = work.front();
    work.pop_front();
    const VertexSet white = g.neighbors(v).minus(black);
    if (!white.is_singleton()) continue;
    const Vertex w = white.front();
    black.insert(w);
    out.trace.push_back({v, w});
    work.push_back(w);
    for (Vertex u : g.neighbors(w) & black) work.push_back(u);
  }
  return out;
}

VertexSet closure_set(const Graph& g, VertexSet initial) {
  VertexSet black = initial;
  VertexSet active = initial;
  while (!active.empty()) {
    VertexSet next;
    for (Vertex v : active) {
      const VertexSet white = g.neighbors(v).minus(black);
      if (!white.is_singleton()) continue;
      black |= white;
      next |= white | (g.neighbors(white.front()) & black);
    }
    active = next;
  }
  return black;
}

bool is_zero_forcing_set(const Graph& g, VertexSet s) {
  check_subset(g, s);
  return closure_set(g, s) == g.vertices();
}

bool is_valid_trace(const Graph& g, VertexSet initial, const ForcingTrace& trace) {
  if (!initial.subset_of(g.vertices())) return false;
  VertexSet black = initial;
  for (const Force& f : trace) {
    if (f.forcer < 0 || f.forcer >= g.order() || f.forced < 0 || f.forced >= g.order()) return false;
    if (!black.contains(f.forcer) || black.contains(f.forced)) return false;
    if (g.neighbors(f.forcer).minus(black) != VertexSet::singleton(f.forced)) return false;
    black.insert(f.forced);
  }
  for (Vertex v : black)
    if (g.neighbors(v).minus(black).is_singleton()) return false;
  return true;
}

namespace {

// Next subset of the same size in increasing integer (colex) order.
inline VertexSet::Word next_combination(VertexSet::Word x) {
  const VertexSet::Word c = x & (~x + 1);
  const VertexSet::Word r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

bool redundant(const Graph& g, VertexSet s) {
  for (Vertex v : s) {
    VertexSet rest = s;
    rest.erase(v);
    if (closure_set(g, rest).contains(v)) return true;
  }
  return false;
}

struct LayerResult {
  std::optional<VertexSet> witness;
  long long closures = 0;
};

// Scans the k-subsets whose largest element is `top`, in colex order, and
// returns the first zero forcing set among them.
std::optional<VertexSet> scan_top(const Graph& g, int k, int top, bool prune, long long& closures) {
  const VertexSet all = g.vertices();
  const VertexSet::Word top_bit = VertexSet::Word{1} << top;
  if (k == 1) {
    ++closures;
    VertexSet s(top_bit);
    return closure_set(g, s) == all ? std::optional(s) : std::nullopt;
  }
  VertexSet::Word rest = (VertexSet::Word{1} << (k - 1)) - 1;
  while ((rest >> top) == 0) {
    VertexSet s(rest | top_bit);
    if (!prune || !redundant(g, s)) {
      ++closures;
      if (closure_set(g, s) == all) return s;
    }
    rest = next_combination(rest);
  }
  return std::nullopt;
}

// Colex-least zero forcing set of size exactly k, if any.
LayerResult scan_layer(const Graph& g, int k, const ZeroForcingOptions& opt) {
  const int n = g.order();
  LayerResult out;
  const int workers = std::max(1, std::min(opt.threads, n - k + 1));
  if (workers == 1) {
    for (int top = k - 1; top < n; ++top) {
      if (auto s = scan_top(g, k, top, opt.prune_redundant, out.closures)) {
        out.witness = s;
        return out;
      }
    }
    return out;
  }

  // Each top element is owned by a single worker, so the first hit inside
  // the smallest successful top is the colex-least witness overall.
  std::atomic<int> next_top{k - 1};
  std::atomic<int> best_top{std::numeric_limits<int>::max()};
  std::atomic<long long> closures{0};
  std::mutex lock;
  std::optional<VertexSet> best;
  auto work = [&] {
    long long local = 0;
    for (;;) {
      const int top = next_top.fetch_add(1);
      if (top >= n || top > best_top.load()) break;
      if (auto s = scan_top(g, k, top, opt.prune_redundant, local)) {
        std::lock_guard guard(lock);
        if (top < best_top.load()) {
          best_top = top;
          best = s;
        }
        break;
      }
    }
    closures += local;
  };
  std::vector<std::jthread> pool;
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  pool.clear();
  out.witness = best;
  out.closures = closures.load();
  return out;
}

ZeroForcingResult solve_connected(const Graph& g, const ZeroForcingOptions& opt) {
  ZeroForcingResult r;
  const int n = g.order();
  const int start = std::max(1, g.min_degree());
  r.lower_bound = start;
  for (int k = start; k <= n; ++k) {
    if (opt.budget && k > *opt.budget) return r;
    LayerResult layer = scan_layer(g, k, opt);
    r.closures += layer.closures;
    if (layer.witness) {
      r.complete = true;
      r.value = k;
      r.lower_bound = k;
      r.witness = *layer.witness;
      return r;
    }
    r.lower_bound = k + 1;
  }
  throw std::logic_error("full vertex set failed to force");
}

}  // namespace

ZeroForcingResult zero_forcing_number(const Graph& g, const ZeroForcingOptions& options) {
  if (g.order() == 0) throw std::invalid_argument("zero forcing number of the empty graph");
  ZeroForcingResult total;
  total.complete = true;
  for (VertexSet comp : g.components()) {
    const ZeroForcingResult part = solve_connected(g.induced(comp), options);
    total.closures += part.closures;
    total.lower_bound += part.lower_bound;
    if (!part.complete) {
      total.complete = false;
      continue;
    }
    total.value += part.value;
    // Local ids follow global id order inside the component.
    const std::vector<Vertex> ids = comp.to_vector();
    for (Vertex local : part.witness) total.witness.insert(ids[local]);
  }
  if (!total.complete) {
    total.value = 0;
    total.witness = {};
  }
  return total;
}

}  // namespace zforce
