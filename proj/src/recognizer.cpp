#include "zforce/recognizer.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "zforce/forcing.hpp"

namespace zforce {

std::string RecognitionResult::summary() const {
  if (member) return spec->to_string();
  if (edge_connectivity < 3) return "kappa'=" + std::to_string(edge_connectivity);
  if (zero_forcing_number) return "Z=" + std::to_string(*zero_forcing_number);
  return "Z>=4";
}

const std::vector<FamilyMember>& family_catalog(int order) {
  static std::mutex lock;
  static std::map<int, std::unique_ptr<const std::vector<FamilyMember>>> cache;
  std::lock_guard guard(lock);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<const std::vector<FamilyMember>>(enumerate_family(order));
  return *slot;
}

RecognitionResult recognize_z3(const Graph& g, const RecognizeOptions& options) {
  if (!g.is_cubic()) throw std::invalid_argument("recognize_z3 needs a cubic graph");
  if (!g.is_connected()) throw std::invalid_argument("recognize_z3 needs a connected graph");

  RecognitionResult r;
  r.edge_connectivity = edge_connectivity(g);
  if (r.edge_connectivity < 3) return r;

  const std::size_t key = invariant_hash(g);
  for (const FamilyMember& m : family_catalog(g.order())) {
    if (invariant_hash(m.graph) != key) continue;
    if (IsoWitness iso = are_isomorphic(g, m.graph)) {
      r.member = true;
      r.spec = m.spec;
      r.mapping = *iso.mapping;
      return r;
    }
  }

  ZeroForcingOptions budget3;
  budget3.budget = 3;
  r.no_forcing_triple = !zero_forcing_number(g, budget3).complete;
  if (options.compute_z) r.zero_forcing_number = zero_forcing_number(g).value;
  return r;
}

}  // namespace zforce
