#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zforce/families.hpp"
#include "zforce/graph.hpp"

namespace zforce {

struct RecognitionResult {
  bool member = false;

  // Member certificate: the family spec and an isomorphism from the input
  // onto assemble(*spec).
  std::optional<FamilySpec> spec;
  std::vector<Vertex> mapping;

  // Non-member certificate. Either the edge connectivity is below 3, or no
  // 3-set forces (checked exhaustively).
  int edge_connectivity = 0;
  bool no_forcing_triple = false;
  /// Exact Z when computed.
  std::optional<int> zero_forcing_number;

  /// "apex(T0)" for members, "kappa'=2" / "Z=4" style for non-members.
  std::string summary() const;
};

struct RecognizeOptions {
  /// Also compute the exact Z for non-members whose edge connectivity is
  /// at least 3.
  bool compute_z = true;
};

/// Decides Z(G) = 3 for a connected cubic graph by matching it against the
/// K1▲T_m / K1▲M⊎...⊎T_m family of its order. Throws std::invalid_argument
/// for non-cubic or disconnected input.
RecognitionResult recognize_z3(const Graph& g, const RecognizeOptions& options = {});

/// Cached enumerate_family(order); safe to call concurrently.
const std::vector<FamilyMember>& family_catalog(int order);

}  // namespace zforce
