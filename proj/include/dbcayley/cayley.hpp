// Copyright 2026 The dbcayley Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DBCAYLEY_CAYLEY_HPP
#define DBCAYLEY_CAYLEY_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dbcayley/generators.hpp"
#include "dbcayley/group.hpp"
#include "dbcayley/numeric.hpp"

namespace dbcayley {

inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 27;

struct BfsOptions {
  std::uint64_t cap = kDefaultStateCap;
  unsigned workers = 0;  // 0 = hardware concurrency
};

struct BfsResult {
  std::vector<std::uint64_t> histogram;  // histogram[i] = vertices at distance i
  std::uint64_t order = 0;
  std::uint64_t reached = 0;

  int eccentricity() const { return static_cast<int>(histogram.size()) - 1; }
  std::uint64_t unreachable() const { return order - reached; }
};

/// Raised when BFS does not reach every vertex; result() holds the partial
/// histogram of the reachable part.
class DisconnectedError : public Error {
 public:
  explicit DisconnectedError(BfsResult result);
  const BfsResult& result() const { return result_; }

 private:
  BfsResult result_;
};

/// [g*s for s in set], in generator order.
std::vector<GroupElement> neighbors(const GroupElement& g, const GeneratorSet& set);

/// Level-synchronous BFS over the implicit Cayley (di)graph. Out-distances
/// only. Throws CapacityError above options.cap, DisconnectedError when some
/// vertex is unreachable. Histograms do not depend on options.workers.
BfsResult bfs_from(const GroupElement& source, const GeneratorSet& set,
                   const BfsOptions& options = {});

/// Eccentricity of the identity; equals the diameter by vertex-transitivity.
BfsResult bfs_from_identity(const GeneratorSet& set, const BfsOptions& options = {});

struct GraphReport {
  ConstructionSpec spec;
  BigInt order;
  std::size_t degree = 0;
  bool directed = true;
  std::optional<int> diameter;  // unset when BFS was refused
  int claimed_diameter = 0;
  std::vector<std::uint64_t> histogram;
  Rational moore_ratio;
  ValidationReport validation;
  std::vector<std::string> discrepancies;
  std::optional<std::string> refusal;  // why BFS did not run
  BigInt refusal_states;               // states BFS would need, when refused

  bool ok() const { return discrepancies.empty() && !refusal; }
};

/// Builds and validates the set, runs BFS when the order is within the cap,
/// and records every mismatch against the construction's claims.
GraphReport verify_construction(const ConstructionSpec& spec, const BfsOptions& options = {});

enum class ExportFormat { kEdgeList, kDot, kAdjacency };

/// "edge-list", "dot" or "adjacency".
ExportFormat parse_export_format(std::string_view name);

/// Vertices are dense element indices.
///   edge-list: "u v" per arc, sorted by (u, generator position); undirected
///              sets emit each edge once with u < v.
///   dot:       digraph {} / graph {} with every vertex declared.
///   adjacency: "u: v1 v2 ..." per vertex, neighbors in generator order.
void export_graph(const GeneratorSet& set, ExportFormat format, std::ostream& out,
                  std::uint64_t cap = kDefaultStateCap);

}  // namespace dbcayley

#endif  // DBCAYLEY_CAYLEY_HPP
