#include "zforce/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace zforce {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph order must lie in [0, 64], got " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(order() - 1));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (adj_[u].contains(v))
    throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u].erase(v);
  adj_[v].erase(u);
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += row.size();
  return twice / 2;
}

int Graph::min_degree() const {
  int d = order() == 0 ? 0 : kMaxVertices;
  for (VertexSet row : adj_) d = std::min(d, row.size());
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (VertexSet row : adj_) d = std::max(d, row.size());
  return d;
}

bool Graph::is_regular(int k) const {
  return std::all_of(adj_.begin(), adj_.end(), [k](VertexSet row) { return row.size() == k; });
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (Vertex s = 0; s < order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp = VertexSet::singleton(s);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= adj_[v];
      frontier = next.minus(comp);
      comp |= frontier;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

bool Graph::is_connected() const { return order() > 0 && components().size() == 1; }

Graph Graph::induced(VertexSet keep) const {
  std::vector<Vertex> index(adj_.size(), -1);
  int k = 0;
  for (Vertex v : keep) index[v] = k++;
  Graph h(k);
  for (Vertex u : keep)
    for (Vertex v : adj_[u] & keep)
      if (u < v) h.add_edge(index[u], index[v]);
  return h;
}

Graph Graph::relabelled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order())
    throw std::invalid_argument("relabelling has wrong length");
  Graph h(order());
  for (const Edge& e : edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

// ---------------------------------------------------------------- graph6

namespace {

constexpr char kHeader[] = ">>graph6<<";
constexpr int kBias = 63;

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) base = sizeof(kHeader) - 1;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.size() <= base) throw Graph6Error("missing size byte", base);

  auto byte_value = [&](std::size_t pos) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126)
      throw Graph6Error("character outside printable graph6 range", pos);
    return c - kBias;
  };

  const int n = byte_value(base);
  if (n > kMaxGraph6Order)
    throw Graph6Error("multi-byte size field (n > 62) is not supported", base);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  const std::size_t have = text.size() - base - 1;
  if (have != expected)
    throw Graph6Error("length field says " + std::to_string(n) + " vertices, expected " +
                          std::to_string(expected) + " data bytes but found " +
                          std::to_string(have),
                      have < expected ? text.size() : base + 1 + expected);

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t pos = base + 1 + k / 6;
      if ((byte_value(pos) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (expected > 0) {
    const std::size_t last = base + expected;
    const int pad = static_cast<int>(expected * 6 - bits);
    if (byte_value(last) & ((1 << pad) - 1)) throw Graph6Error("nonzero padding bits", last);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n < 1 || n > kMaxGraph6Order)
    throw std::invalid_argument("graph6 writer supports 1..62 vertices, got " + std::to_string(n));
  std::string out(1, static_cast<char>(kBias + n));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(kBias + acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(kBias + (acc << (6 - filled)));
  return out;
}

// ------------------------------------------------------- edge connectivity

namespace {

// Unit-capacity max-flow on the undirected graph; each edge is a pair of
// opposite arcs of capacity one.
int max_edge_disjoint_paths(const Graph& g, Vertex s, Vertex t) {
  const int n = g.order();
  std::vector<std::vector<int>> residual(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) residual[e.u][e.v] = residual[e.v][e.u] = 1;
  int flow = 0;
  std::vector<Vertex> parent(n);
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty() && parent[t] < 0) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v = 0; v < n; ++v) {
        if (parent[v] < 0 && residual[u][v] > 0) {
          parent[v] = u;
          q.push(v);
        }
      }
    }
    if (parent[t] < 0) return flow;
    for (Vertex v = t; v != s; v = parent[v]) {
      --residual[parent[v]][v];
      ++residual[v][parent[v]];
    }
    ++flow;
  }
}

}  // namespace

int edge_connectivity(const Graph& g) {
  if (g.order() < 2 || !g.is_connected()) return 0;
  int best = g.min_degree();
  for (Vertex t = 1; t < g.order() && best > 0; ++t)
    best = std::min(best, max_edge_disjoint_paths(g, 0, t));
  return best;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  std::optional<int> best;
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          int len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

// ------------------------------------------------------------ isomorphism

namespace {

using Signature = std::vector<long long>;

// Relabelling-invariant starting colour: degree, triangles through v,
// 4-cycles through v, and the BFS distance profile from v.
Signature local_invariant(const Graph& g, Vertex v) {
  Signature sig;
  sig.push_back(g.degree(v));
  long long tri = 0;
  for (Vertex u : g.neighbors(v)) tri += (g.neighbors(u) & g.neighbors(v)).size();
  sig.push_back(tri / 2);
  long long c4 = 0;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w == v) continue;
    long long common = (g.neighbors(v) & g.neighbors(w)).size();
    c4 += common * (common - 1) / 2;
  }
  sig.push_back(c4);
  VertexSet seen = VertexSet::singleton(v);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex u : frontier) next |= g.neighbors(u);
    frontier = next.minus(seen);
    seen |= frontier;
    if (!frontier.empty()) sig.push_back(frontier.size());
  }
  return sig;
}

// Joint colour refinement over several graphs. Colours are ranks of
// signatures in sorted order, so they are canonical across the batch.
std::vector<std::vector<int>> refine(const std::vector<const Graph*>& graphs,
                                     std::size_t* fingerprint = nullptr) {
  std::vector<std::vector<Signature>> sigs(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (Vertex v = 0; v < graphs[i]->order(); ++v) sigs[i].push_back(local_invariant(*graphs[i], v));

  std::size_t h = 0;
  auto mix = [&h](long long x) {
    h ^= std::hash<long long>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };

  std::vector<std::vector<int>> colour(graphs.size());
  int classes = -1;
  for (;;) {
    std::map<Signature, int> rank;
    for (const auto& per_graph : sigs)
      for (const auto& s : per_graph) ++rank[s];
    int r = 0;
    for (auto& [s, id] : rank) {
      if (fingerprint) {
        for (long long x : s) mix(x);
        mix(-1 - id);
      }
      id = r++;
    }
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      colour[i].resize(sigs[i].size());
      for (std::size_t v = 0; v < sigs[i].size(); ++v) colour[i][v] = rank[sigs[i][v]];
    }
    if (r == classes) break;
    classes = r;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (Vertex v = 0; v < graphs[i]->order(); ++v) {
        Signature s{colour[i][v]};
        for (Vertex u : graphs[i]->neighbors(v)) s.push_back(colour[i][u]);
        std::sort(s.begin() + 1, s.end());
        sigs[i][v] = std::move(s);
      }
    }
  }
  if (fingerprint) *fingerprint = h;
  return colour;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, std::vector<int> cg, std::vector<int> ch)
      : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)), map_(g.order(), -1) {
    build_order();
  }

  bool run() { return extend(0); }
  std::vector<Vertex> mapping() const { return map_; }

 private:
  // BFS order over each component, components entered at a vertex of the
  // rarest colour, so most vertices have an already-mapped neighbour.
  void build_order() {
    const int n = g_.order();
    std::vector<int> class_size(n + 1, 0);
    for (int c : cg_) ++class_size[c];
    std::vector<bool> placed(n, false);
    anchor_.assign(n, -1);
    for (int filled = 0; filled < n;) {
      Vertex start = -1;
      for (Vertex v = 0; v < n; ++v)
        if (!placed[v] && (start < 0 || class_size[cg_[v]] < class_size[cg_[start]])) start = v;
      std::queue<Vertex> q;
      q.push(start);
      placed[start] = true;
      while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        order_.push_back(u);
        ++filled;
        for (Vertex w : g_.neighbors(u)) {
          if (!placed[w]) {
            placed[w] = true;
            anchor_[w] = u;
            q.push(w);
          }
        }
      }
    }
  }

  bool consistent(Vertex v, Vertex c) const {
    VertexSet image;
    for (Vertex w : g_.neighbors(v) & mapped_g_) image.insert(map_[w]);
    return image == (h_.neighbors(c) & used_h_);
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    VertexSet candidates = anchor_[v] >= 0 ? h_.neighbors(map_[anchor_[v]])
                                           : VertexSet::first(h_.order());
    candidates = candidates.minus(used_h_);
    for (Vertex c : candidates) {
      if (ch_[c] != cg_[v] || !consistent(v, c)) continue;
      map_[v] = c;
      mapped_g_.insert(v);
      used_h_.insert(c);
      if (extend(depth + 1)) return true;
      mapped_g_.erase(v);
      used_h_.erase(c);
      map_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> cg_, ch_;
  std::vector<Vertex> order_, anchor_, map_;
  VertexSet mapped_g_, used_h_;
};

}  // namespace

bool is_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> mapping) {
  if (g.order() != h.order() || static_cast<int>(mapping.size()) != g.order()) return false;
  VertexSet image;
  for (Vertex x : mapping) {
    if (x < 0 || x >= h.order() || image.contains(x)) return false;
    image.insert(x);
  }
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != h.adjacent(mapping[u], mapping[v])) return false;
  return true;
}

IsoWitness are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return {};
  if (g.order() == 0) return {std::vector<Vertex>{}};
  auto colours = refine({&g, &h});
  auto hist_g = colours[0], hist_h = colours[1];
  std::sort(hist_g.begin(), hist_g.end());
  std::sort(hist_h.begin(), hist_h.end());
  if (hist_g != hist_h) return {};
  IsoSearch search(g, h, colours[0], colours[1]);
  if (!search.run()) return {};
  return {search.mapping()};
}

std::size_t invariant_hash(const Graph& g) {
  std::size_t h = 0;
  refine({&g}, &h);
  return h ^ (static_cast<std::size_t>(g.order()) << 48) ^ (static_cast<std::size_t>(g.size()) << 32);
}

}  // namespace zforce
