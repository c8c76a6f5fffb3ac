#include "tracking/verifier.hpp"

#include <algorithm>
#include <map>

#include "tracking/combinatorics.hpp"

namespace tracking {

std::vector<VertexId> tracker_sequence(const Path& p, const VertexSet& trackers) {
  std::vector<VertexId> out;
  for (VertexId v : p.vertices)
    if (trackers.count(v)) out.push_back(v);
  return out;
}

Verdict is_tracking_set_on_paths(const std::vector<Path>& st_paths,
                                 const VertexSet& trackers) {
  std::map<std::vector<VertexId>, std::size_t> seen;
  for (std::size_t i = 0; i < st_paths.size(); ++i) {
    auto seq = tracker_sequence(st_paths[i], trackers);
    auto [it, inserted] = seen.try_emplace(std::move(seq), i);
    if (!inserted)
      return {Verdict::Status::Invalid,
              std::pair{st_paths[it->second], st_paths[i]}};
  }
  return {Verdict::Status::Valid, std::nullopt};
}

Verdict is_tracking_set(const Graph& g, const VertexSet& trackers,
                        std::size_t path_cap) {
  auto enumeration = enumerate_simple_paths(g, g.s(), g.t(), path_cap);
  if (enumeration.cap_exceeded) return {Verdict::Status::Unknown, std::nullopt};
  return is_tracking_set_on_paths(enumeration.paths, trackers);
}

OracleResult min_tracking_set_bruteforce(const Graph& g, std::size_t path_cap) {
  auto enumeration = enumerate_simple_paths(g, g.s(), g.t(), path_cap);
  if (enumeration.cap_exceeded) return {{}, true};
  const auto& paths = enumeration.paths;

  std::vector<VertexId> candidates;
  for (VertexId v : g.vertices())
    if (v != g.s() && v != g.t()) candidates.push_back(v);

  OracleResult result{VertexSet(candidates.begin(), candidates.end()), false};
  for_each_subset_ascending(candidates.size(), [&](const std::vector<std::size_t>& idx) {
    VertexSet trial;
    for (std::size_t i : idx) trial.insert(candidates[i]);
    if (is_tracking_set_on_paths(paths, trial).valid()) {
      result.trackers = std::move(trial);
      return false;
    }
    return true;
  });
  // V \ {s,t} always tracks (distinct paths differ somewhere other than the
  // shared endpoints), so the fallback initializer is itself a tracking set.
  return result;
}

}  // namespace tracking
