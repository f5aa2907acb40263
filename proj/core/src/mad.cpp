#include "abelian/mad.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "abelian/errors.hpp"

namespace abelian {

OrbitHypermatrix max_support_submatrix(const OrbitHypermatrix& m, const Bitset& target,
                                       std::size_t axis, std::uint32_t level) {
  const auto positions = m.hypercolumn_positions(axis, level);
  if (target.size() != positions.size()) {
    throw ValidationError("max_support_submatrix: target has the wrong size");
  }
  Bitset removed(m.shape().size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const bool in_column = m.support().test(positions[i]);
    if (target.test(i) && !in_column) {
      throw ValidationError("max_support_submatrix: target support is not inside H_M(" +
                            std::to_string(axis + 1) + "," + std::to_string(level) + ")");
    }
    if (in_column && !target.test(i)) removed.set(positions[i]);
  }
  if (removed.none()) return m;
  return m.with_zeros(orbit_closure(m.shape(), m.step(), removed));
}

OrbitHypermatrix max_support_zeroing(const OrbitHypermatrix& m, const ZeroConstraint& constraint) {
  std::set<InvolvedPair> distinct;
  Bitset removed(m.shape().size());
  for (const auto& pair : constraint.pairs) {
    if (!distinct.insert(pair).second) {
      throw ValidationError("max_support_zeroing: repeated hypercolumn in constraint");
    }
    for (auto lin : m.hypercolumn_positions(pair.axis, pair.level)) {
      if (m.support().test(lin)) removed.set(lin);
    }
  }
  if (removed.none()) return m;
  return m.with_zeros(orbit_closure(m.shape(), m.step(), removed));
}

std::size_t eval_count(const MadTrace& trace) { return trace.evaluations; }

// ---------------------------------------------------------------------------

namespace {

struct Key {
  std::vector<std::uint32_t> lengths;
  std::uint64_t step;
  Bitset support;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = k.support.hash() ^ (k.step * 0x9e3779b97f4a7c15ULL);
    for (auto r : k.lengths) h ^= r + 0x9e3779b9 + (h << 6) + (h >> 2);
    return h;
  }
};

Key key_of(const OrbitHypermatrix& m) { return Key{m.shape().lengths(), m.step(), m.support()}; }

std::size_t support_orbit_count(const OrbitHypermatrix& m) {
  const auto partition = orbit_partition(m.shape(), m.step());
  std::size_t n = 0;
  for (const auto& orbit : partition.orbits()) {
    if (m.support().test(orbit.rep())) ++n;
  }
  return n;
}

// Deterministic indexation of a stage: by the sorted list of defining-set
// orbit representatives.
void sort_members(std::vector<OrbitHypermatrix>& members) {
  std::vector<std::pair<std::vector<Index>, std::size_t>> keys;
  for (std::size_t i = 0; i < members.size(); ++i) {
    keys.emplace_back(members[i].defining_orbit_reps(), i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<OrbitHypermatrix> sorted;
  sorted.reserve(members.size());
  for (const auto& [reps, i] : keys) sorted.push_back(members[i]);
  members = std::move(sorted);
}

using StageMembers = std::vector<std::vector<OrbitHypermatrix>>;

}  // namespace

struct MadEngine::Impl {
  ApparentDistanceCache cache;
  std::unordered_map<Key, StageMembers, KeyHash> column_traces;
  std::unordered_map<Key, std::vector<OrbitHypermatrix>, KeyHash> successor_sets;

  TraceNode make_node(const OrbitHypermatrix& m, std::size_t depth) {
    auto ap = cache.evaluate(m);
    return TraceNode{m, ap.value, std::move(ap.involved_pairs), depth, {}};
  }

  MadResult run(const OrbitHypermatrix& m) {
    if (m.is_zero()) throw ValidationError("mad: the zero hypermatrix has no minimum apparent distance");
    if (m.dims() == 0) throw ValidationError("mad: hypermatrix must have at least one variable");
    if (m.dims() == 1) return run_vector(m);
    if (m.dims() == 2) return run_2d(m);
    return run_general(m);
  }

  MadResult run_vector(const OrbitHypermatrix& m) {
    MadResult out;
    MadStage stage;
    stage.members = {m};
    stage.explored.push_back(make_node(m, 0));
    stage.eta = {0};
    stage.m = stage.explored.front().apparent_distance;
    out.value = stage.m;
    out.trace.stages.push_back(std::move(stage));
    out.trace.result = out.value;
    out.trace.evaluations = 1;
    out.trace.stop = MadStop::Vector;
    return out;
  }

  MadResult run_2d(const OrbitHypermatrix& m) {
    if (m.dims() != 2) throw ValidationError("mad_2d: hypermatrix must have exactly two variables");
    if (m.is_zero()) throw ValidationError("mad_2d: the zero hypermatrix has no minimum apparent distance");
    MadResult out;
    auto& trace = out.trace;
    const std::size_t budget = support_orbit_count(m);
    OrbitHypermatrix current = m;
    std::uint64_t running = std::numeric_limits<std::uint64_t>::max();
    while (true) {
      if (trace.stages.size() >= budget + 1) {
        throw InternalError("mad_2d: stage count exceeded the number of support orbits");
      }
      MadStage stage;
      stage.members = {current};
      stage.explored.push_back(make_node(current, 0));
      stage.eta = {0};
      const auto& node = stage.explored.front();
      running = std::min(running, node.apparent_distance);
      stage.m = running;
      ++trace.evaluations;

      bool unit_column = false;
      for (const auto& pair : node.involved_pairs) {
        if (cache.value(hypercolumn(current, pair.axis, pair.level).matrix) == 1) {
          unit_column = true;
          break;
        }
      }
      auto next = unit_column ? current
                              : max_support_zeroing(current, ZeroConstraint{node.involved_pairs});
      trace.stages.push_back(std::move(stage));
      if (unit_column) {
        trace.stop = MadStop::UnitHypercolumn;
        break;
      }
      if (next.is_zero()) {
        trace.stop = MadStop::Exhausted;
        break;
      }
      current = std::move(next);
    }
    finish(trace);
    out.value = trace.result;
    return out;
  }

  // Members of the trace stages of mad(H) for a hypercolumn H, memoized.
  const StageMembers& column_trace(const OrbitHypermatrix& column) {
    auto key = key_of(column);
    if (auto it = column_traces.find(key); it != column_traces.end()) return it->second;
    auto result = run(column);
    StageMembers members;
    for (auto& stage : result.trace.stages) {
      sort_members(stage.members);
      members.push_back(std::move(stage.members));
    }
    return column_traces.emplace(std::move(key), std::move(members)).first->second;
  }

  // S(P): for each involved pair, the max-support hypermatrices realizing each
  // member of the hypercolumn's trace, excluding P itself.
  const std::vector<OrbitHypermatrix>& successors(const TraceNode& node) {
    auto key = key_of(node.matrix);
    if (auto it = successor_sets.find(key); it != successor_sets.end()) return it->second;
    std::vector<OrbitHypermatrix> out;
    std::unordered_set<Bitset> seen;
    for (const auto& pair : node.involved_pairs) {
      const auto column = hypercolumn(node.matrix, pair.axis, pair.level).matrix;
      const auto& stages = column_trace(column);
      for (const auto& stage : stages) {
        for (const auto& target : stage) {
          auto candidate = max_support_submatrix(node.matrix, target.support(), pair.axis, pair.level);
          if (candidate == node.matrix) continue;
          if (seen.insert(candidate.support()).second) out.push_back(std::move(candidate));
        }
      }
    }
    return successor_sets.emplace(std::move(key), std::move(out)).first->second;
  }

  MadResult run_general(const OrbitHypermatrix& m) {
    MadResult out;
    auto& trace = out.trace;
    const std::size_t budget = support_orbit_count(m);
    std::unordered_set<Bitset> evaluated;
    std::unordered_set<Bitset> previous_members;
    std::vector<OrbitHypermatrix> members{m};
    std::uint64_t running = std::numeric_limits<std::uint64_t>::max();

    while (!members.empty()) {
      if (trace.stages.size() >= budget + 1) {
        throw InternalError("mad: stage count exceeded the number of support orbits");
      }
      MadStage stage;
      stage.members = members;
      std::unordered_map<Bitset, std::size_t> position;
      for (const auto& member : members) {
        previous_members.insert(member.support());
        position.emplace(member.support(), stage.explored.size());
        stage.explored.push_back(make_node(member, 0));
        evaluated.insert(member.support());
      }
      // Breadth-first closure of T_0, T_1, ... ; each new hypermatrix is
      // strictly below its parent so the walk terminates.
      for (std::size_t cursor = 0; cursor < stage.explored.size(); ++cursor) {
        const auto& succ = successors(stage.explored[cursor]);
        std::vector<std::size_t> links;
        for (const auto& candidate : succ) {
          auto [it, inserted] = position.emplace(candidate.support(), stage.explored.size());
          if (inserted) {
            stage.explored.push_back(make_node(candidate, stage.explored[cursor].depth + 1));
            evaluated.insert(candidate.support());
          }
          links.push_back(it->second);
        }
        stage.explored[cursor].successors = std::move(links);
      }
      for (const auto& node : stage.explored) running = std::min(running, node.apparent_distance);
      stage.m = running;

      std::vector<OrbitHypermatrix> next;
      std::unordered_set<Bitset> next_seen;
      for (std::size_t i = 0; i < stage.explored.size(); ++i) {
        const auto& node = stage.explored[i];
        if (!node.successors.empty()) continue;
        stage.eta.push_back(i);
        auto reduced = max_support_zeroing(node.matrix, ZeroConstraint{node.involved_pairs});
        if (reduced.is_zero()) continue;
        if (previous_members.count(reduced.support())) continue;
        if (next_seen.insert(reduced.support()).second) next.push_back(std::move(reduced));
      }
      sort_members(next);
      trace.stages.push_back(std::move(stage));
      members = std::move(next);
    }
    trace.stop = MadStop::Exhausted;
    trace.evaluations = evaluated.size();
    finish(trace);
    out.value = trace.result;
    return out;
  }

  static void finish(MadTrace& trace) {
    trace.last = trace.stages.size() - 1;
    trace.result = trace.stages.back().m;
    trace.first_minimal = trace.last;
    for (std::size_t i = 0; i < trace.stages.size(); ++i) {
      if (trace.stages[i].m == trace.result) {
        trace.first_minimal = i;
        break;
      }
    }
  }
};

MadEngine::MadEngine() : impl_(std::make_unique<Impl>()) {}
MadEngine::~MadEngine() = default;
MadEngine::MadEngine(MadEngine&&) noexcept = default;
MadEngine& MadEngine::operator=(MadEngine&&) noexcept = default;

MadResult MadEngine::mad(const OrbitHypermatrix& m) { return impl_->run(m); }
MadResult MadEngine::mad_2d(const OrbitHypermatrix& m) { return impl_->run_2d(m); }
ApparentDistanceCache& MadEngine::cache() { return impl_->cache; }

MadResult mad(const OrbitHypermatrix& m) {
  MadEngine engine;
  return engine.mad(m);
}

MadResult mad_2d(const OrbitHypermatrix& m) {
  MadEngine engine;
  return engine.mad_2d(m);
}

}  // namespace abelian
