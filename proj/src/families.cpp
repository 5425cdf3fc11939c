#include "zforce/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace zforce {

VertexSet ColoredGraph::pendants() const {
  VertexSet out;
  for (Vertex v = 0; v < graph.order(); ++v)
    if (graph.degree(v) == 1) out.insert(v);
  return out;
}

namespace {

Graph ladder(int rungs, int extra) {
  Graph g(2 * rungs + extra);
  for (int i = 0; i < rungs; ++i) {
    g.add_edge(2 * i, 2 * i + 1);
    if (i + 1 < rungs) {
      g.add_edge(2 * i, 2 * i + 2);
      g.add_edge(2 * i + 1, 2 * i + 3);
    }
  }
  return g;
}

}  // namespace

ColoredGraph ladder_T(int m) {
  if (m < 0) throw std::invalid_argument("T_m needs m >= 0");
  const int rungs = m + 1;
  const Vertex apex = 2 * rungs;
  ColoredGraph out{ladder(rungs, 1), {}, {}};
  out.graph.add_edge(apex, 2 * rungs - 2);
  out.graph.add_edge(apex, 2 * rungs - 1);
  out.yellow = {0, 1, apex};
  return out;
}

ColoredGraph ladder_M(int n) {
  if (n < 0) throw std::invalid_argument("M_n needs n >= 0");
  const int rungs = n + 1;
  const Vertex last_top = 2 * rungs - 2;
  const Vertex last_bottom = 2 * rungs - 1;
  const Vertex tail_inner = 2 * rungs;
  const Vertex tail_end = 2 * rungs + 1;
  ColoredGraph out{ladder(rungs, 2), {}, {}};
  out.graph.add_edge(last_bottom, tail_inner);
  out.graph.add_edge(tail_inner, tail_end);
  out.yellow = {0, 1};
  out.white = {last_top, tail_inner, tail_end};
  return out;
}

ColoredGraph compound(const ColoredGraph& g1, const ColoredGraph& g2, const Matching& f) {
  const VertexSet from = g1.white;
  const VertexSet to = g2.attachment_in();
  if (from.size() != to.size())
    throw std::invalid_argument("compound needs |white(G1)| = |attachment(G2)|, got " +
                                std::to_string(from.size()) + " and " +
                                std::to_string(to.size()));
  if (static_cast<int>(f.size()) != from.size())
    throw std::invalid_argument("compound matching has " + std::to_string(f.size()) +
                                " pairs, expected " + std::to_string(from.size()));
  VertexSet seen_from, seen_to;
  for (auto [u, v] : f) {
    if (u < 0 || u >= 64 || v < 0 || v >= 64 || !from.contains(u) || !to.contains(v) ||
        seen_from.contains(u) || seen_to.contains(v))
      throw std::invalid_argument("compound matching is not a bijection from white(G1) onto "
                                  "attachment(G2)");
    seen_from.insert(u);
    seen_to.insert(v);
  }

  const int n1 = g1.graph.order();
  ColoredGraph out{Graph(n1 + g2.graph.order()), g1.attachment_in(), {}};
  for (const Edge& e : g1.graph.edges()) out.graph.add_edge(e.u, e.v);
  for (const Edge& e : g2.graph.edges()) out.graph.add_edge(n1 + e.u, n1 + e.v);
  for (auto [u, v] : f) out.graph.add_edge(u, n1 + v);
  for (Vertex w : g2.white) out.white.insert(n1 + w);
  return out;
}

Graph apex_K1(const ColoredGraph& g) {
  const VertexSet attach = g.attachment_in();
  if (attach.empty()) throw std::invalid_argument("apex needs a yellow or pendant vertex");
  const int n = g.graph.order();
  Graph out(n + 1);
  for (const Edge& e : g.graph.edges()) out.add_edge(e.u, e.v);
  for (Vertex v : attach) out.add_edge(n, v);
  return out;
}

// ------------------------------------------------------------- FamilySpec

std::string FamilySpec::to_string() const {
  std::string s = apex ? "apex(" : "(";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += '+';
    s += blocks[i].kind == BlockKind::M ? 'M' : 'T';
    s += std::to_string(blocks[i].index);
  }
  s += ')';
  if (!matchings.empty()) {
    s += '[';
    for (std::size_t j = 0; j < matchings.size(); ++j) {
      if (j) s += ';';
      for (int x : matchings[j]) s += std::to_string(x);
    }
    s += ']';
  }
  return s;
}

namespace {

ColoredGraph block_graph(const Block& b) {
  return b.kind == BlockKind::M ? ladder_M(b.index) : ladder_T(b.index);
}

ColoredGraph chain(const FamilySpec& spec) {
  if (spec.blocks.empty()) throw std::invalid_argument("family spec has no blocks");
  if (spec.matchings.size() + 1 != spec.blocks.size())
    throw std::invalid_argument("family spec needs one matching per junction");
  ColoredGraph cur = block_graph(spec.blocks[0]);
  for (std::size_t j = 0; j < spec.matchings.size(); ++j) {
    ColoredGraph next = block_graph(spec.blocks[j + 1]);
    const std::vector<Vertex> from = cur.white.to_vector();
    const std::vector<Vertex> to = next.attachment_in().to_vector();
    const auto& perm = spec.matchings[j];
    if (perm.size() != from.size())
      throw std::invalid_argument("junction permutation has wrong length");
    Matching f;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (perm[i] < 0 || perm[i] >= static_cast<int>(to.size()))
        throw std::invalid_argument("junction permutation entry out of range");
      f.emplace_back(from[i], to[perm[i]]);
    }
    cur = compound(cur, next, f);
  }
  return cur;
}

}  // namespace

Graph assemble(const FamilySpec& spec) {
  ColoredGraph c = chain(spec);
  return spec.apex ? apex_K1(c) : c.graph;
}

namespace {

int block_order(const Block& b) { return 2 * b.index + (b.kind == BlockKind::M ? 4 : 3); }

class IsoDeduper {
 public:
  bool insert(FamilyMember m) {
    auto& bucket = buckets_[invariant_hash(m.graph)];
    for (std::size_t idx : bucket)
      if (are_isomorphic(members_[idx].graph, m.graph)) return false;
    bucket.push_back(members_.size());
    members_.push_back(std::move(m));
    return true;
  }
  std::vector<FamilyMember> take() { return std::move(members_); }

 private:
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets_;
  std::vector<FamilyMember> members_;
};

void collect(const std::vector<Block>& blocks, IsoDeduper& out) {
  const std::size_t junctions = blocks.size() - 1;
  std::vector<int> identity(3);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> perms;
  {
    auto p = identity;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<std::size_t> pick(junctions, 0);
  for (;;) {
    FamilySpec spec{blocks, {}, true};
    for (std::size_t j : pick) spec.matchings.push_back(perms[j]);
    Graph g = assemble(spec);
    if (g.is_cubic() && g.is_connected()) out.insert({std::move(g), std::move(spec)});
    std::size_t j = 0;
    while (j < junctions && ++pick[j] == perms.size()) pick[j++] = 0;
    if (j == junctions) break;
  }
}

// Block sequences M_{n1},...,M_{nt},T_m (t >= 0) whose apexed order is `order`.
void sequences(int remaining, std::vector<Block>& prefix,
               const std::function<void(const std::vector<Block>&)>& emit) {
  // remaining counts vertices still to place, excluding the apex.
  if (remaining >= 3 && (remaining - 3) % 2 == 0) {
    prefix.push_back({BlockKind::T, (remaining - 3) / 2});
    emit(prefix);
    prefix.pop_back();
  }
  for (int n = 0; 2 * n + 4 + 3 <= remaining; ++n) {
    prefix.push_back({BlockKind::M, n});
    sequences(remaining - block_order(prefix.back()), prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<FamilyMember> family_members(const std::vector<Block>& blocks) {
  if (blocks.empty() || blocks.back().kind != BlockKind::T)
    throw std::invalid_argument("family block sequence must end in a T block");
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
    if (blocks[i].kind != BlockKind::M)
      throw std::invalid_argument("only the last family block may be a T block");
  IsoDeduper dedupe;
  collect(blocks, dedupe);
  return dedupe.take();
}

std::vector<FamilyMember> enumerate_family(int order) {
  if (order < 4) throw std::invalid_argument("family members have order >= 4");
  IsoDeduper dedupe;
  std::vector<Block> prefix;
  sequences(order - 1, prefix, [&](const std::vector<Block>& blocks) { collect(blocks, dedupe); });
  return dedupe.take();
}

// -------------------------------------------------------- named graphs

Graph permutation_prism(int n, std::optional<std::pair<int, int>> transposition) {
  if (n < 4) throw std::invalid_argument("permutation prism needs n >= 4");
  if (n > 32) throw std::invalid_argument("permutation prism needs n <= 32");
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  if (transposition) {
    auto [i, j] = *transposition;
    if (i < 1 || i > n || j < 1 || j > n || i == j)
      throw std::invalid_argument("sigma must be a transposition (i j) with 1 <= i != j <= n");
    std::swap(sigma[i - 1], sigma[j - 1]);
  }
  Graph g(2 * n);
  for (int k = 0; k < n; ++k) {
    g.add_edge(k, (k + 1) % n);
    g.add_edge(n + k, n + (k + 1) % n);
    g.add_edge(k, n + sigma[k]);
  }
  return g;
}

Graph heawood() {
  Graph g(14);
  for (int j = 0; j < 7; ++j)
    for (int d : {0, 1, 3}) g.add_edge((j + d) % 7, 7 + j);
  return g;
}

Graph counterexample16() {
  return Graph(16, {{0, 1},   {0, 2},   {0, 3},   {4, 1},   {5, 1},   {6, 2},
                    {7, 2},   {8, 3},   {9, 3},   {10, 4},  {11, 4},  {11, 10},
                    {6, 12},  {6, 13},  {12, 13}, {5, 10},  {5, 11},  {8, 14},
                    {8, 15},  {14, 15}, {14, 9},  {15, 9},  {7, 13},  {7, 12}});
}

Graph necklace(int beads) {
  if (beads < 2) throw std::invalid_argument("necklace needs at least 2 beads");
  if (beads > 10) throw std::invalid_argument("necklace needs at most 10 beads");
  const int n = 6 * beads;
  Graph g(n);
  for (int i = 0; i < beads; ++i) {
    const int e = 6 * i, a = e + 1, a2 = e + 2, c = e + 3, c2 = e + 4, x = e + 5;
    g.add_edge(e, a);
    g.add_edge(e, a2);
    for (int top : {a, a2})
      for (int bottom : {c, c2}) g.add_edge(top, bottom);
    g.add_edge(c, x);
    g.add_edge(c2, x);
    g.add_edge(x, (e + 6) % n);
  }
  int twin_pairs = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.neighbors(u) == g.neighbors(v)) ++twin_pairs;
  if (twin_pairs != 2 * beads)
    throw std::logic_error("necklace bead reading violated: " + std::to_string(twin_pairs) +
                           " twin pairs");
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

}  // namespace zforce
