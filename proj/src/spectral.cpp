#include "zforce/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace zforce {

SymMatrix SymMatrix::from_rows(int n, const std::vector<double>& rows) {
  if (n < 0 || rows.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("matrix data does not match order " + std::to_string(n));
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double a = rows[static_cast<std::size_t>(i) * n + j];
      const double b = rows[static_cast<std::size_t>(j) * n + i];
      if (std::abs(a - b) > 1e-12)
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      m.set(i, j, a);
    }
  }
  return m;
}

SymMatrix SymMatrix::adjacency(const Graph& g) {
  SymMatrix m(g.order());
  for (const Edge& e : g.edges()) m.set(e.u, e.v, 1.0);
  return m;
}

SymMatrix SymMatrix::shifted(double lambda) const {
  SymMatrix m = *this;
  for (int i = 0; i < n_; ++i) m.set(i, i, (*this)(i, i) - lambda);
  return m;
}

int SpectralReport::multiplicity_near(double value, double gap) const {
  for (const EigenCluster& c : clusters)
    if (value >= c.lo - gap && value <= c.hi + gap) return c.multiplicity;
  return 0;
}

namespace {

double off_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

}  // namespace

SpectralReport eigen_decomposition(const SymMatrix& m, const SpectralOptions& options) {
  if (options.tol <= 0 || options.cluster_gap <= 0)
    throw std::invalid_argument("spectral tolerances must be positive");
  const int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  double frob = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > 1e-12) throw std::invalid_argument("matrix is not symmetric");
      a[i * n + j] = m(i, j);
      frob += m(i, j) * m(i, j);
    }
  }
  const double threshold = options.tol * std::max(1.0, std::sqrt(frob));

  // v is row-major; column k accumulates the k-th eigenvector.
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  SpectralReport r;
  r.off_diagonal = off_norm(a, n);
  while (r.off_diagonal >= threshold) {
    if (r.sweeps == options.max_sweeps)
      throw SpectralError("Jacobi did not converge in " + std::to_string(options.max_sweeps) +
                              " sweeps, off-diagonal norm " + std::to_string(r.off_diagonal),
                          r.off_diagonal);
    ++r.sweeps;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = 0.5 * (a[q * n + q] - a[p * n + p]) / apq;
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        for (int j = 0; j < n; ++j) {
          if (j == p || j == q) continue;
          const double g = a[j * n + p];
          const double h = a[j * n + q];
          a[j * n + p] = a[p * n + j] = g - s * (h + g * tau);
          a[j * n + q] = a[q * n + j] = h + s * (g - h * tau);
        }
        for (int j = 0; j < n; ++j) {
          const double g = v[j * n + p];
          const double h = v[j * n + q];
          v[j * n + p] = g - s * (h + g * tau);
          v[j * n + q] = h + s * (g - h * tau);
        }
      }
    }
    r.off_diagonal = off_norm(a, n);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a[x * n + x] < a[y * n + y]; });
  r.eigenvalues.resize(n);
  r.eigenvectors.resize(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    r.eigenvalues[k] = a[order[k] * n + order[k]];
    for (int i = 0; i < n; ++i) r.eigenvectors[static_cast<std::size_t>(k) * n + i] = v[i * n + order[k]];
  }

  for (int k = 0; k < n; ++k) {
    const double x = r.eigenvalues[k];
    if (r.clusters.empty() || x - r.clusters.back().hi > options.cluster_gap) {
      r.clusters.push_back({x, x, x, 1});
    } else {
      EigenCluster& c = r.clusters.back();
      c.value = (c.value * c.multiplicity + x) / (c.multiplicity + 1);
      c.hi = x;
      ++c.multiplicity;
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += r.vector_entry(i, k) * r.eigenvalues[k] * r.vector_entry(j, k);
      r.residual = std::max(r.residual, std::abs(s - m(i, j)));
    }
  }
  return r;
}

int max_multiplicity_bound(const Graph& g, double cluster_gap) {
  if (g.order() == 0) throw std::invalid_argument("empty graph");
  SpectralOptions opt;
  opt.cluster_gap = cluster_gap;
  const SpectralReport r = eigen_decomposition(SymMatrix::adjacency(g), opt);
  int best = 0;
  for (const EigenCluster& c : r.clusters) best = std::max(best, c.multiplicity);
  return best;
}

std::vector<VertexSet> twin_classes(const Graph& g) {
  std::map<VertexSet::Word, VertexSet> by_nbhd;
  for (Vertex v = 0; v < g.order(); ++v) by_nbhd[g.neighbors(v).bits()].insert(v);
  std::vector<VertexSet> out;
  for (auto& [_, cls] : by_nbhd) out.push_back(cls);
  std::sort(out.begin(), out.end(), [](VertexSet x, VertexSet y) { return x.front() < y.front(); });
  return out;
}

int twin_bound(const Graph& g) {
  int total = 0;
  for (VertexSet cls : twin_classes(g)) total += cls.size() - 1;
  return total;
}

// ---------------------------------------------------------------- minors

namespace {

bool induces_connected(const Graph& g, VertexSet s) {
  if (s.empty()) return false;
  VertexSet seen = VertexSet::singleton(s.front());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    frontier = (next & s).minus(seen);
    seen |= frontier;
  }
  return seen == s;
}

VertexSet neighborhood_of(const Graph& g, VertexSet s) {
  VertexSet out;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

}  // namespace

MinorCheck verify_minor_model(const Graph& g, const MinorModel& model) {
  const auto& sets = model.branch_sets;
  if (static_cast<int>(sets.size()) != model.target)
    return {false, "expected " + std::to_string(model.target) + " branch sets, got " +
                       std::to_string(sets.size())};
  VertexSet used;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) return {false, "branch set " + std::to_string(i) + " is empty"};
    if (!sets[i].subset_of(g.vertices()))
      return {false, "branch set " + std::to_string(i) + " names a vertex outside the graph"};
    if (sets[i].intersects(used))
      return {false, "branch set " + std::to_string(i) + " overlaps an earlier set"};
    used |= sets[i];
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (!induces_connected(g, sets[i]))
      return {false, "branch set " + std::to_string(i) + " is not connected"};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const VertexSet reach = neighborhood_of(g, sets[i]);
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!reach.intersects(sets[j]))
        return {false, "branch sets " + std::to_string(i) + " and " + std::to_string(j) +
                           " are not adjacent"};
  }
  return {true, {}};
}

namespace {

class MinorSearch {
 public:
  MinorSearch(const Graph& g, int k) : g_(g), k_(k), sets_(k) {}

  std::optional<MinorModel> run() {
    if (assign(0)) return MinorModel{sets_, k_};
    return std::nullopt;
  }

 private:
  // Sets are opened in vertex order (restricted growth), so each partition
  // is visited once.
  bool assign(Vertex v) {
    const int n = g_.order();
    if (open_ + (n - v) < k_) return false;
    if (v == n) return open_ == k_ && verify_minor_model(g_, {sets_, k_}).valid;
    for (int i = 0; i < open_; ++i) {
      sets_[i].insert(v);
      if (assign(v + 1)) return true;
      sets_[i].erase(v);
    }
    if (open_ < k_) {
      sets_[open_++].insert(v);
      if (assign(v + 1)) return true;
      sets_[--open_].erase(v);
    }
    return assign(v + 1);
  }

  const Graph& g_;
  int k_;
  std::vector<VertexSet> sets_;
  int open_ = 0;
};

}  // namespace

std::optional<MinorModel> find_complete_minor(const Graph& g, int k, int max_order) {
  if (k < 1) throw std::invalid_argument("minor target must be at least 1");
  if (g.order() > max_order)
    throw std::invalid_argument("minor search limited to " + std::to_string(max_order) +
                                " vertices");
  if (k > g.order() || static_cast<long long>(k) * (k - 1) / 2 > g.size()) return std::nullopt;
  return MinorSearch(g, k).run();
}

// ---------------------------------------------------------------- report

std::optional<int> BoundsReport::exact() const {
  if (upper.complete && upper.value == lower) return lower;
  return std::nullopt;
}

std::string BoundsReport::verdict() const {
  if (auto m = exact()) return "M=" + std::to_string(*m);
  if (upper.complete)
    return "M in [" + std::to_string(lower) + "," + std::to_string(upper.value) + "]";
  return "M>=" + std::to_string(lower);
}

std::string BoundsReport::to_text() const {
  std::ostringstream os;
  os << "graph6: " << graph6 << '\n';
  os << "n: " << order << '\n';
  os << "lower.eigenvalue: " << eigenvalue_bound << '\n';
  os << "lower.twin: " << twin_bound << '\n';
  os << "lower.minor: ";
  if (minor_bound) {
    os << *minor_bound << " K" << minor_model->target;
    for (VertexSet s : minor_model->branch_sets) os << ' ' << s.to_string();
  } else {
    os << "none";
  }
  os << '\n';
  os << "L: " << lower << " [";
  for (std::size_t i = 0; i < lower_sources.size(); ++i) os << (i ? "," : "") << lower_sources[i];
  os << "]\n";
  if (upper.complete) {
    os << "U: " << upper.value << '\n';
    os << "witness: " << upper.witness.to_string() << '\n';
  } else {
    os << "U: unknown >= " << upper.lower_bound << '\n';
    os << "witness: none\n";
  }
  os << "verdict: " << verdict() << "\n\n";
  return os.str();
}

BoundsReport bounds_report(const Graph& g, const std::vector<MinorModel>& models,
                           const BoundsOptions& options) {
  if (g.order() == 0) throw std::invalid_argument("bounds of the empty graph");
  BoundsReport r;
  r.order = g.order();
  if (g.order() <= kMaxGraph6Order) r.graph6 = write_graph6(g);
  r.eigenvalue_bound = max_multiplicity_bound(g, options.cluster_gap);
  r.twin_bound = twin_bound(g);

  for (const MinorModel& m : models) {
    if (!verify_minor_model(g, m)) continue;
    if (!r.minor_bound || m.target - 1 > *r.minor_bound) {
      r.minor_bound = m.target - 1;
      r.minor_model = m;
    }
  }

  ZeroForcingOptions zopt;
  zopt.budget = options.budget;
  zopt.threads = options.threads;
  r.upper = zero_forcing_number(g, zopt);

  auto current_lower = [&] {
    return std::max({r.eigenvalue_bound, r.twin_bound, r.minor_bound.value_or(0)});
  };
  if (options.search_minors && g.order() <= options.max_minor_search_order) {
    const int top = r.upper.complete ? r.upper.value + 1 : g.order();
    for (int k = top; k >= current_lower() + 2; --k) {
      if (auto model = find_complete_minor(g, k, options.max_minor_search_order)) {
        r.minor_bound = k - 1;
        r.minor_model = std::move(model);
        break;
      }
    }
  }

  r.lower = current_lower();
  if (r.eigenvalue_bound == r.lower) r.lower_sources.push_back("eigenvalue");
  if (r.twin_bound == r.lower) r.lower_sources.push_back("twin");
  if (r.minor_bound == r.lower) r.lower_sources.push_back("minor");
  if (r.upper.complete && r.lower > r.upper.value)
    throw std::logic_error("lower bound " + std::to_string(r.lower) + " exceeds Z = " +
                           std::to_string(r.upper.value));
  return r;
}

}  // namespace zforce
