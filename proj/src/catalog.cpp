#include "zforce/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace zforce {

namespace {

class Deduper {
 public:
  void insert(const Graph& g) {
    auto& bucket = buckets_[invariant_hash(g)];
    for (std::size_t idx : bucket)
      if (are_isomorphic(graphs_[idx], g)) return;
    bucket.push_back(graphs_.size());
    graphs_.push_back(g);
  }
  std::vector<Graph> take() { return std::move(graphs_); }

 private:
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets_;
  std::vector<Graph> graphs_;
};

// Builds cubic graphs with vertices labelled in breadth-first discovery
// order: vertex v is completed before v+1, and a brand-new neighbour is
// always the next unused id. Every connected cubic graph has such a
// labelling, and disconnected ones never complete.
class CubicSearch {
 public:
  explicit CubicSearch(int n) : n_(n), g_(n), degree_(n, 0) {}

  std::vector<Graph> run() {
    fresh_ = 1;
    complete(0, -1);
    return found_.take();
  }

 private:
  void complete(Vertex v, Vertex last) {
    if (v == n_) {
      found_.insert(g_);
      return;
    }
    if (degree_[v] == 3) {
      complete(v + 1, -1);
      return;
    }
    if (v >= fresh_) return;
    const int need = 3 - degree_[v];
    int available = 0;
    for (Vertex w = std::max(v, last) + 1; w < fresh_; ++w)
      if (degree_[w] < 3 && !g_.adjacent(v, w)) ++available;
    available += std::min(need, n_ - fresh_);
    if (available < need) return;

    for (Vertex w = std::max(v, last) + 1; w <= fresh_ && w < n_; ++w) {
      if (degree_[w] == 3 || g_.adjacent(v, w)) continue;
      const bool is_new = (w == fresh_);
      link(v, w);
      if (is_new) ++fresh_;
      complete(v, w);
      if (is_new) --fresh_;
      unlink(v, w);
    }
  }

  void link(Vertex a, Vertex b) {
    g_.add_edge(a, b);
    ++degree_[a];
    ++degree_[b];
  }
  void unlink(Vertex a, Vertex b) {
    g_.remove_edge(a, b);
    --degree_[a];
    --degree_[b];
  }

  int n_;
  Graph g_;
  std::vector<int> degree_;
  int fresh_ = 1;
  Deduper found_;
};

}  // namespace

std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > 8) throw std::invalid_argument("all_graphs supports 0 <= n <= 8");
  if (n == 0) return {Graph(0)};
  Deduper out;
  for (const Graph& base : all_graphs(n - 1)) {
    for (VertexSet::Word mask = 0; mask < (VertexSet::Word{1} << (n - 1)); ++mask) {
      Graph g(n);
      for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
      for (Vertex v : VertexSet(mask)) g.add_edge(v, n - 1);
      out.insert(g);
    }
  }
  return out.take();
}

std::vector<Graph> connected_cubic_graphs(int n) {
  if (n < 4 || n % 2 != 0 || n > 20)
    throw std::invalid_argument("cubic graphs need an even order in [4, 20]");
  return CubicSearch(n).run();
}

Graph random_connected_cubic(int n, std::mt19937_64& rng) {
  if (n < 4 || n % 2 != 0 || n > kMaxVertices)
    throw std::invalid_argument("cubic graphs need an even order >= 4");
  std::vector<Vertex> points(3 * n);
  for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
  for (;;) {
    std::shuffle(points.begin(), points.end(), rng);
    Graph g(n);
    bool simple = true;
    for (int i = 0; i < 3 * n && simple; i += 2) {
      const Vertex a = points[i], b = points[i + 1];
      if (a == b || g.adjacent(a, b)) simple = false;
      else g.add_edge(a, b);
    }
    if (simple && g.is_connected()) return g;
  }
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    g.add_edge(order[i], order[pick(rng)]);
  }
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && coin(rng)) g.add_edge(u, v);
  return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace zforce
