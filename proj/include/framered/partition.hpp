#pragma once

#include <cstddef>
#include <vector>

#include "framered/frame.hpp"

namespace framered {

enum class PartitionKind { independent, spanning };

// Disjoint index subsets of {1, ..., N} (1-based, matching the serialized
// form). Independent partitions cover every index; spanning packings may
// leave indices over, reported through leftover().
struct IndexPartition {
  PartitionKind kind = PartitionKind::independent;
  std::vector<std::vector<std::size_t>> blocks;
  bool covered = false;
  std::size_t total = 0;

  std::vector<std::size_t> leftover() const;
};

// Partition into the minimum number of linearly independent sets, by
// incremental insertion with shortest augmenting exchange paths over the
// linear matroid of the vectors. The block count never exceeds the ceiling
// of the upper redundancy.
template <Scalar T>
IndexPartition partition_independent(const Frame<T>& f);

// Maximum packing of disjoint spanning sets (each block is a basis), by
// matroid-union augmentation with one more candidate basis per round. The
// count is at least the floor of the lower redundancy.
template <Scalar T>
IndexPartition pack_spanning(const Frame<T>& f);

struct ErasureResult {
  bool robust = false;
  std::vector<std::size_t> witness;  // first failing k-subset, 1-based
};

// True iff removing any k vectors leaves a spanning set. Exhaustive over all
// k-subsets in lexicographic order; guarded at 2e6 subsets. The parallel
// scan and the serial reference return identical results.
template <Scalar T>
ErasureResult erasure_robust(const Frame<T>& f, std::size_t k);
template <Scalar T>
ErasureResult erasure_robust_serial(const Frame<T>& f, std::size_t k);

}  // namespace framered
