#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zforce/forcing.hpp"
#include "zforce/graph.hpp"

namespace zforce {

/// Dense real symmetric matrix. Writes go to both (i, j) and (j, i).
class SymMatrix {
 public:
  explicit SymMatrix(int n = 0) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  /// Row-major input; throws std::invalid_argument if |a_ij - a_ji| > 1e-12.
  static SymMatrix from_rows(int n, const std::vector<double>& rows);
  static SymMatrix adjacency(const Graph& g);

  int order() const { return n_; }
  double operator()(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, double v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }
  /// this - lambda * I
  SymMatrix shifted(double lambda) const;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_;
  std::vector<double> a_;
};

struct EigenCluster {
  double value;  // mean of the members
  double lo;
  double hi;
  int multiplicity;
};

struct SpectralReport {
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Column-major n x n; column k is the unit eigenvector of eigenvalues[k].
  std::vector<double> eigenvectors;
  std::vector<EigenCluster> clusters;
  /// max |Q diag(eigenvalues) Q^T - A|.
  double residual = 0.0;
  /// Off-diagonal Frobenius norm at exit.
  double off_diagonal = 0.0;
  int sweeps = 0;

  double vector_entry(int row, int col) const {
    return eigenvectors[static_cast<std::size_t>(col) * eigenvalues.size() + row];
  }
  /// Multiplicity of the cluster containing `value` within `gap`, or 0.
  int multiplicity_near(double value, double gap = 1e-6) const;
};

class SpectralError : public std::runtime_error {
 public:
  SpectralError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

struct SpectralOptions {
  /// Stop once the off-diagonal Frobenius norm drops below
  /// tol * max(1, ||A||_F).
  double tol = 1e-12;
  /// Single-linkage gap for grouping equal eigenvalues.
  double cluster_gap = 1e-6;
  int max_sweeps = 100;
};

/// Cyclic Jacobi diagonalisation. Throws SpectralError when the sweep cap
/// is hit before convergence.
SpectralReport eigen_decomposition(const SymMatrix& m, const SpectralOptions& options = {});

/// Largest eigenvalue multiplicity of the adjacency matrix. Shifting A by
/// that eigenvalue gives a matrix of S(G) with that nullity.
int max_multiplicity_bound(const Graph& g, double cluster_gap = 1e-6);

/// Sum over classes of vertices with equal open neighbourhoods of
/// (class size - 1).
int twin_bound(const Graph& g);

/// Partition of vertices into twin classes (including singletons),
/// ordered by smallest member.
std::vector<VertexSet> twin_classes(const Graph& g);

/// Branch sets of a K_target minor model.
struct MinorModel {
  std::vector<VertexSet> branch_sets;
  int target = 0;
};

struct MinorCheck {
  bool valid = false;
  /// First violated condition, empty when valid.
  std::string violation;
  explicit operator bool() const { return valid; }
};

/// Checks count = target, non-empty, in range, pairwise disjoint, each set
/// connected, every pair of sets joined by an edge.
MinorCheck verify_minor_model(const Graph& g, const MinorModel& model);

/// Exhaustive search for a K_k minor model on graphs of at most
/// `max_order` vertices; returns the first model found in a fixed order.
std::optional<MinorModel> find_complete_minor(const Graph& g, int k, int max_order = 12);

struct BoundsOptions {
  std::optional<int> budget;
  double cluster_gap = 1e-6;
  /// Look for complete minors beyond the best lower bound when the graph
  /// has at most `max_minor_search_order` vertices.
  bool search_minors = true;
  int max_minor_search_order = 12;
  int threads = 1;
};

struct BoundsReport {
  std::string graph6;
  int order = 0;
  int eigenvalue_bound = 0;
  int twin_bound = 0;
  /// k - 1 for the largest verified K_k model, if any.
  std::optional<int> minor_bound;
  std::optional<MinorModel> minor_model;
  int lower = 0;
  /// Sources attaining `lower`: "eigenvalue", "twin", "minor".
  std::vector<std::string> lower_sources;
  ZeroForcingResult upper;

  /// M(G) when the bounds meet.
  std::optional<int> exact() const;
  /// "M=6", "M in [4,6]" or "M>=4".
  std::string verdict() const;
  /// Line-oriented key: value block terminated by a blank line.
  std::string to_text() const;
};

/// Sandwiches M(G) between the spectral, twin and minor lower bounds and the
/// zero forcing number. Throws std::logic_error if a lower bound exceeds Z.
BoundsReport bounds_report(const Graph& g, const std::vector<MinorModel>& models = {},
                           const BoundsOptions& options = {});

}  // namespace zforce
