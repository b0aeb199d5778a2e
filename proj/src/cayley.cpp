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

#include "dbcayley/cayley.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <numeric>
#include <thread>

#include "dbcayley/bounds.hpp"

namespace dbcayley {

namespace {

constexpr std::size_t kParallelFrontier = 1 << 14;

// Right multiplication by each generator, precomputed per source shift so
// that a neighbor index is the source index plus a few sparse digit updates.
// For t = 2 the update is a single XOR with a rotated mask.
class NeighborTable {
 public:
  explicit NeighborTable(const GeneratorSet& set) {
    const GroupParams& p = set.params();
    t_ = p.t();
    r_ = p.r();
    order_ = indexable_order(p);
    block_ = order_ / r_;
    degree_ = set.size();
    binary_ = t_ == 2;
    pow_t_.resize(r_);
    for (std::uint32_t i = 0; i < r_; ++i) pow_t_[i] = i == 0 ? 1 : pow_t_[i - 1] * t_;

    const std::size_t slots = static_cast<std::size_t>(r_) * degree_;
    target_.resize(slots);
    if (binary_) {
      mask_.resize(slots);
    } else {
      delta_begin_.assign(slots + 1, 0);
    }
    for (std::uint32_t sigma = 0; sigma < r_; ++sigma) {
      for (std::size_t j = 0; j < degree_; ++j) {
        const GroupElement& g = set.elements()[j];
        const std::size_t slot = sigma * degree_ + j;
        target_[slot] = ((sigma + g.shift()) % r_) * block_;
        const std::vector<Residue> moved = shift_alpha(g.vector(), sigma);
        if (binary_) {
          std::uint64_t mask = 0;
          for (std::uint32_t i = 0; i < r_; ++i) mask |= std::uint64_t{moved[i]} << i;
          mask_[slot] = mask;
        } else {
          for (std::uint32_t i = 0; i < r_; ++i) {
            if (moved[i] != 0) deltas_.push_back({i, moved[i]});
          }
          delta_begin_[slot + 1] = static_cast<std::uint32_t>(deltas_.size());
        }
      }
    }
  }

  std::uint64_t order() const { return order_; }
  std::size_t degree() const { return degree_; }

  template <typename Emit>
  void expand(std::uint64_t index, Emit&& emit) const {
    const std::uint64_t sigma = index / block_;
    const std::uint64_t vec = index % block_;
    const std::size_t base = sigma * degree_;
    if (binary_) {
      for (std::size_t j = 0; j < degree_; ++j) emit(target_[base + j] + (vec ^ mask_[base + j]));
      return;
    }
    std::array<std::uint32_t, 64> digits{};
    std::uint64_t rest = vec;
    for (std::uint32_t i = 0; i < r_; ++i) {
      digits[i] = static_cast<std::uint32_t>(rest % t_);
      rest /= t_;
    }
    for (std::size_t j = 0; j < degree_; ++j) {
      std::uint64_t out = vec;
      for (std::uint32_t q = delta_begin_[base + j]; q < delta_begin_[base + j + 1]; ++q) {
        const auto [pos, add] = deltas_[q];
        const std::uint32_t old = digits[pos];
        std::uint32_t now = old + add;
        if (now >= t_) now -= t_;
        // Unsigned wraparound is intended; the final value is in range.
        out += (std::uint64_t{now} - old) * pow_t_[pos];
      }
      emit(target_[base + j] + out);
    }
  }

 private:
  std::uint64_t t_ = 0;
  std::uint64_t r_ = 0;
  std::uint64_t order_ = 0;
  std::uint64_t block_ = 0;
  std::size_t degree_ = 0;
  bool binary_ = false;
  std::vector<std::uint64_t> pow_t_;
  std::vector<std::uint64_t> target_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::uint32_t> delta_begin_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> deltas_;
};

void check_cap(const GroupParams& params, std::uint64_t cap, const char* what) {
  const BigInt order = group_order(params);
  if (order > cap) {
    throw CapacityError(std::string(what) + " needs " + order.str() + " states, above the cap of " +
                            std::to_string(cap) + " (raise it with --cap)",
                        order);
  }
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

template <typename Index>
BfsResult run_bfs(const NeighborTable& table, std::uint64_t source, unsigned workers) {
  const std::uint64_t order = table.order();
  std::vector<std::uint64_t> visited((order + 63) / 64, 0);
  auto claim_serial = [&](std::uint64_t v) {
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    std::uint64_t& word = visited[v >> 6];
    if (word & bit) return false;
    word |= bit;
    return true;
  };
  auto claim_shared = [&](std::uint64_t v) {
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    std::atomic_ref<std::uint64_t> word(visited[v >> 6]);
    if (word.load(std::memory_order_relaxed) & bit) return false;
    return (word.fetch_or(bit, std::memory_order_relaxed) & bit) == 0;
  };

  BfsResult result;
  result.order = order;
  result.histogram.push_back(1);
  result.reached = 1;
  claim_serial(source);
  std::vector<Index> frontier{static_cast<Index>(source)};
  std::vector<Index> next;

  while (!frontier.empty() && result.reached < order) {
    next.clear();
    const unsigned lanes =
        frontier.size() < kParallelFrontier ? 1U
                                            : std::min<unsigned>(workers, frontier.size() / 1024);
    if (lanes <= 1) {
      for (Index v : frontier) {
        table.expand(v, [&](std::uint64_t w) {
          if (claim_serial(w)) next.push_back(static_cast<Index>(w));
        });
      }
    } else {
      std::vector<std::vector<Index>> local(lanes);
      std::vector<std::thread> threads;
      const std::size_t chunk = (frontier.size() + lanes - 1) / lanes;
      for (unsigned lane = 0; lane < lanes; ++lane) {
        threads.emplace_back([&, lane] {
          const std::size_t begin = lane * chunk;
          const std::size_t end = std::min(frontier.size(), begin + chunk);
          for (std::size_t i = begin; i < end; ++i) {
            table.expand(frontier[i], [&](std::uint64_t w) {
              if (claim_shared(w)) local[lane].push_back(static_cast<Index>(w));
            });
          }
        });
      }
      for (auto& th : threads) th.join();
      for (auto& part : local) next.insert(next.end(), part.begin(), part.end());
    }
    if (next.empty()) break;
    result.histogram.push_back(next.size());
    result.reached += next.size();
    frontier.swap(next);
  }
  if (result.reached != order) throw DisconnectedError(std::move(result));
  return result;
}

template <typename Out>
void put_number(Out& buffer, std::uint64_t value) {
  char digits[24];
  const auto end = std::to_chars(digits, digits + sizeof digits, value).ptr;
  buffer.append(digits, end);
}

}  // namespace

DisconnectedError::DisconnectedError(BfsResult result)
    : Error(std::to_string(result.unreachable()) + " of " + std::to_string(result.order) +
            " vertices are unreachable; the set does not generate the group"),
      result_(std::move(result)) {}

std::vector<GroupElement> neighbors(const GroupElement& g, const GeneratorSet& set) {
  if (g.params() != set.params()) throw MismatchError("vertex and generators from different groups");
  std::vector<GroupElement> out;
  out.reserve(set.size());
  for (const GroupElement& s : set.elements()) out.push_back(multiply(g, s));
  return out;
}

BfsResult bfs_from(const GroupElement& source, const GeneratorSet& set, const BfsOptions& options) {
  if (source.params() != set.params()) throw MismatchError("source and generators from different groups");
  check_cap(set.params(), options.cap, "BFS");
  const NeighborTable table(set);
  const std::uint64_t start = encode(source).value;
  const unsigned workers = resolve_workers(options.workers);
  if (table.order() <= std::numeric_limits<std::uint32_t>::max()) {
    return run_bfs<std::uint32_t>(table, start, workers);
  }
  return run_bfs<std::uint64_t>(table, start, workers);
}

BfsResult bfs_from_identity(const GeneratorSet& set, const BfsOptions& options) {
  return bfs_from(identity(set.params()), set, options);
}

GraphReport verify_construction(const ConstructionSpec& spec, const BfsOptions& options) {
  const GeneratorSet set = build(spec);
  GraphReport report;
  report.spec = spec;
  report.order = group_order(set.params());
  report.degree = set.size();
  report.directed = set.directed();
  report.claimed_diameter = spec.claimed_diameter();
  report.validation = validate(set);
  for (const std::string& failure : report.validation.failures) {
    report.discrepancies.push_back("validation: " + failure);
  }

  const BigInt formula = construction_order(spec);
  if (formula != report.order) {
    report.discrepancies.push_back("group order " + report.order.str() +
                                   " differs from the closed-form order " + formula.str());
  }
  const BigInt moore = moore_bound(static_cast<int>(std::max<std::size_t>(report.degree, 1)),
                                   report.claimed_diameter, report.directed);
  report.moore_ratio = Rational(report.order, moore);
  if (report.order > moore) {
    report.discrepancies.push_back("order " + report.order.str() + " exceeds the Moore bound " +
                                   moore.str());
  }

  if (report.order > options.cap) {
    report.refusal = "BFS needs " + report.order.str() + " states, above the cap of " +
                     std::to_string(options.cap) + " (raise it with --cap)";
    report.refusal_states = report.order;
    return report;
  }

  BfsResult bfs;
  try {
    bfs = bfs_from_identity(set, options);
  } catch (const DisconnectedError& e) {
    bfs = e.result();
    report.discrepancies.push_back(std::to_string(bfs.unreachable()) +
                                   " vertices unreachable from the identity");
  }
  report.histogram = bfs.histogram;
  report.diameter = bfs.eccentricity();
  if (*report.diameter != report.claimed_diameter) {
    report.discrepancies.push_back("BFS diameter " + std::to_string(*report.diameter) +
                                   " differs from the claimed diameter " +
                                   std::to_string(report.claimed_diameter));
  }
  if (bfs.histogram.size() > 1 && bfs.histogram[1] != report.degree) {
    report.discrepancies.push_back("distance-1 count " + std::to_string(bfs.histogram[1]) +
                                   " differs from the degree " + std::to_string(report.degree));
  }
  return report;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "edge-list") return ExportFormat::kEdgeList;
  if (name == "dot") return ExportFormat::kDot;
  if (name == "adjacency") return ExportFormat::kAdjacency;
  throw ParameterError("unknown export format '" + std::string(name) +
                       "' (expected edge-list, dot or adjacency)");
}

void export_graph(const GeneratorSet& set, ExportFormat format, std::ostream& out,
                  std::uint64_t cap) {
  check_cap(set.params(), cap, "export");
  const NeighborTable table(set);
  const bool directed = set.directed();
  std::string buffer;
  auto flush = [&](bool force) {
    if (force || buffer.size() > (1 << 20)) {
      out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
      buffer.clear();
    }
  };

  if (format == ExportFormat::kDot) {
    buffer += directed ? "digraph G {\n" : "graph G {\n";
    for (std::uint64_t u = 0; u < table.order(); ++u) {
      buffer += "  ";
      put_number(buffer, u);
      buffer += ";\n";
      flush(false);
    }
  }
  for (std::uint64_t u = 0; u < table.order(); ++u) {
    if (format == ExportFormat::kAdjacency) {
      put_number(buffer, u);
      buffer += ':';
    }
    table.expand(u, [&](std::uint64_t v) {
      switch (format) {
        case ExportFormat::kEdgeList:
          if (directed || u < v) {
            put_number(buffer, u);
            buffer += ' ';
            put_number(buffer, v);
            buffer += '\n';
          }
          break;
        case ExportFormat::kDot:
          if (directed || u < v) {
            buffer += "  ";
            put_number(buffer, u);
            buffer += directed ? " -> " : " -- ";
            put_number(buffer, v);
            buffer += ";\n";
          }
          break;
        case ExportFormat::kAdjacency:
          buffer += ' ';
          put_number(buffer, v);
          break;
      }
    });
    if (format == ExportFormat::kAdjacency) buffer += '\n';
    flush(false);
  }
  if (format == ExportFormat::kDot) buffer += "}\n";
  flush(true);
}

}  // namespace dbcayley
