#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "abelian/hypermatrix.hpp"

namespace abelian {

/// Hypercolumns that must vanish in a max-support submatrix.
struct ZeroConstraint {
  std::vector<InvolvedPair> pairs;
};

/// Largest N <= M with supp(H_N(k, b)) contained in `target` (a support over the
/// hypercolumn's own index set). D(N) = D(M) plus the q^t-orbits of every entry
/// of H_M(k, b) outside the target. When the target is itself closed under
/// q^{t'} the hypercolumn of N equals it exactly.
OrbitHypermatrix max_support_submatrix(const OrbitHypermatrix& m, const Bitset& target,
                                       std::size_t axis, std::uint32_t level);

/// Largest N <= M whose hypercolumns listed in the constraint are all zero.
OrbitHypermatrix max_support_zeroing(const OrbitHypermatrix& m, const ZeroConstraint& constraint);

/// A hypermatrix visited while building T(M_i), with its audit data.
struct TraceNode {
  OrbitHypermatrix matrix;
  std::uint64_t apparent_distance = 0;
  std::vector<InvolvedPair> involved_pairs;
  std::size_t depth = 0;                 // node belongs to T_depth
  std::vector<std::size_t> successors;   // positions in `explored` forming S(P)
};

struct MadStage {
  std::vector<OrbitHypermatrix> members;  // the set M_i
  std::vector<TraceNode> explored;        // T(M_i); the first |members| nodes are M_i itself
  std::vector<std::size_t> eta;           // explored nodes with S(N) empty
  std::uint64_t m = 0;
};

enum class MadStop {
  Vector,          // s = 1: mad(M) = d*(M)
  UnitHypercolumn, // an involved hypercolumn has apparent distance 1
  Exhausted,       // the next stage is empty (zero successor)
};

struct MadTrace {
  std::vector<MadStage> stages;
  std::size_t last = 0;           // l
  std::size_t first_minimal = 0;  // l': first stage with m = m_l
  std::uint64_t result = 0;
  std::size_t evaluations = 0;    // distinct top-level hypermatrices whose d* was computed
  MadStop stop = MadStop::Exhausted;
};

struct MadResult {
  std::uint64_t value = 0;
  MadTrace trace;
};

/// Minimum apparent distance engine. Holds the memo tables for one computation
/// (apparent distances, hypercolumn traces, successor sets); reusing one engine
/// across related hypermatrices shares that work. Not thread-safe.
class MadEngine {
 public:
  MadEngine();
  ~MadEngine();
  MadEngine(MadEngine&&) noexcept;
  MadEngine& operator=(MadEngine&&) noexcept;

  /// Any s >= 1: vectors directly, s = 2 by the matrix sequence, s >= 3 by the
  /// general staged recursion. Throws ValidationError for M = 0.
  MadResult mad(const OrbitHypermatrix& m);
  /// The matrix sequence M_0 > M_1 > ...; requires s = 2 and M != 0.
  MadResult mad_2d(const OrbitHypermatrix& m);

  ApparentDistanceCache& cache();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

MadResult mad(const OrbitHypermatrix& m);
MadResult mad_2d(const OrbitHypermatrix& m);

std::size_t eval_count(const MadTrace& trace);

}  // namespace abelian
