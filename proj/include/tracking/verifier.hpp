#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tracking/graph.hpp"

namespace tracking {

inline constexpr std::size_t kDefaultPathCap = 100000;

/// Ordered restriction of a path to the tracker set.
std::vector<VertexId> tracker_sequence(const Path& p, const VertexSet& trackers);

struct Verdict {
  enum class Status { Valid, Invalid, Unknown };

  Status status = Status::Unknown;
  /// For Invalid: two distinct simple s-t paths with equal tracker sequences.
  std::optional<std::pair<Path, Path>> witness;

  bool valid() const { return status == Status::Valid; }
};

/// Ground-truth tracking-set check by exhaustive s-t path enumeration.
/// Unknown when the enumeration exceeds path_cap.
Verdict is_tracking_set(const Graph& g, const VertexSet& trackers,
                        std::size_t path_cap = kDefaultPathCap);

/// Same check against an already enumerated path list (the enumeration must
/// not have exceeded its cap).
Verdict is_tracking_set_on_paths(const std::vector<Path>& st_paths,
                                 const VertexSet& trackers);

struct OracleResult {
  VertexSet trackers;
  bool unknown = false;  // path cap exceeded; trackers meaningless
};

/// Minimum tracking set by ascending subset enumeration over V \ {s, t}
/// (smallest-lexicographic tie-break). Independent oracle for the solvers.
OracleResult min_tracking_set_bruteforce(const Graph& g,
                                         std::size_t path_cap = kDefaultPathCap);

}  // namespace tracking
