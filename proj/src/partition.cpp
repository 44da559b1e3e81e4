#include "framered/partition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "framered/errors.hpp"
#include "framered/redundancy.hpp"

namespace framered {

std::vector<std::size_t> IndexPartition::leftover() const {
  std::vector<bool> used(total, false);
  for (const auto& block : blocks)
    for (std::size_t idx : block) used[idx - 1] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < total; ++i)
    if (!used[i]) out.push_back(i + 1);
  return out;
}

namespace {

template <Scalar T>
DenseMatrix<T> columns_of(const Frame<T>& f,
                          const std::vector<std::size_t>& indices) {
  DenseMatrix<T> m(f.dim(), indices.size());
  for (std::size_t c = 0; c < indices.size(); ++c) {
    const Vec<T>& v = f.vector(indices[c]);
    for (std::size_t r = 0; r < f.dim(); ++r) m(r, c) = v[r];
  }
  return m;
}

template <Scalar T>
bool independent_set(const Frame<T>& f, const std::vector<std::size_t>& set) {
  if (set.empty()) return true;
  if (set.size() > f.dim()) return false;
  return rank(columns_of(f, set)) == set.size();
}

template <Scalar T>
bool independent_with(const Frame<T>& f, const std::vector<std::size_t>& set,
                      std::size_t extra) {
  std::vector<std::size_t> probe = set;
  probe.push_back(extra);
  return independent_set(f, probe);
}

template <Scalar T>
bool independent_swapped(const Frame<T>& f,
                         const std::vector<std::size_t>& set,
                         std::size_t out, std::size_t in) {
  std::vector<std::size_t> probe;
  probe.reserve(set.size());
  for (std::size_t e : set)
    if (e != out) probe.push_back(e);
  probe.push_back(in);
  return independent_set(f, probe);
}

// Inserts `element` into one of the sets, reshuffling along a shortest
// augmenting path of the exchange digraph: an arc x -> y (y in set j, x not
// in set j) exists when x can take y's place without breaking independence.
// Returns false when no path exists, i.e. the element is spanned by the
// union of the current sets in the k-fold union matroid.
template <Scalar T>
bool augment(const Frame<T>& f, std::vector<std::vector<std::size_t>>& sets,
             std::vector<std::size_t>& membership, std::size_t element) {
  const std::size_t none = f.size();
  struct Step {
    std::size_t node;
    std::size_t parent;     // index into the BFS trail
    std::size_t via_set;    // set in which `parent.node` displaces `node`
  };
  std::vector<Step> trail;
  std::vector<bool> visited(f.size(), false);

  trail.push_back({element, none, none});
  visited[element] = true;
  std::size_t head = 0;

  std::optional<std::pair<std::size_t, std::size_t>> sink;  // trail idx, set
  while (head < trail.size() && !sink) {
    const std::size_t at = trail[head].node;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (membership[at] == j) continue;
      if (independent_with(f, sets[j], at)) {
        sink = {head, j};
        break;
      }
      for (std::size_t y : sets[j]) {
        if (visited[y]) continue;
        if (independent_swapped(f, sets[j], y, at)) {
          visited[y] = true;
          trail.push_back({y, head, j});
        }
      }
    }
    ++head;
  }
  if (!sink) return false;

  // Unwind from the accepting end: each displaced node moves into the slot
  // vacated one step later; the path is shortest, which keeps every
  // intermediate set independent.
  std::size_t at = sink->first;
  std::size_t into = sink->second;
  while (true) {
    const Step& step = trail[at];
    sets[into].push_back(step.node);
    membership[step.node] = into;
    if (step.parent == none) break;
    // The parent displaces step.node from step.via_set.
    auto& host = sets[step.via_set];
    host.erase(std::find(host.begin(), host.end(), step.node));
    at = step.parent;
    into = step.via_set;
  }
  return true;
}

template <Scalar T>
void verify_blocks(const Frame<T>& f, const IndexPartition& partition) {
  for (const auto& block : partition.blocks) {
    std::vector<std::size_t> zero_based;
    zero_based.reserve(block.size());
    for (std::size_t idx : block) zero_based.push_back(idx - 1);
    if (partition.kind == PartitionKind::independent) {
      if (!independent_set(f, zero_based))
        throw Error("internal: block failed the independence re-check");
    } else {
      if (rank(columns_of(f, zero_based)) != f.dim())
        throw Error("internal: block failed the spanning re-check");
    }
  }
}

IndexPartition to_partition(std::vector<std::vector<std::size_t>> sets,
                            PartitionKind kind, std::size_t total) {
  IndexPartition out;
  out.kind = kind;
  out.total = total;
  std::size_t placed = 0;
  for (auto& s : sets) {
    if (s.empty()) continue;
    std::sort(s.begin(), s.end());
    placed += s.size();
    std::vector<std::size_t> block;
    block.reserve(s.size());
    for (std::size_t e : s) block.push_back(e + 1);
    out.blocks.push_back(std::move(block));
  }
  out.covered = placed == total;
  return out;
}

}  // namespace

template <Scalar T>
IndexPartition partition_independent(const Frame<T>& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.is_zero(i))
      throw ZeroVectorPresent(
          "partition_independent: zero vectors cannot join an independent "
          "set");

  const std::size_t none = f.size();
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::size_t> membership(f.size(), none);
  for (std::size_t e = 0; e < f.size(); ++e) {
    while (!augment(f, sets, membership, e)) {
      sets.emplace_back();  // a nonzero vector always fits an empty set
    }
  }

  IndexPartition out = to_partition(std::move(sets),
                                    PartitionKind::independent, f.size());
  verify_blocks(f, out);
  if (f.spanning()) {
    const RedundancyReport report = redundancy_report(f);
    const double bound = std::ceil(report.upper - 1e-9);
    if (static_cast<double>(out.blocks.size()) > bound)
      throw Error("internal: block count exceeds ceil(upper redundancy)");
  }
  return out;
}

template <Scalar T>
IndexPartition pack_spanning(const Frame<T>& f) {
  if (!f.spanning())
    throw NotAFrame("pack_spanning: vectors do not span the space");

  const std::size_t n = f.dim();
  const std::size_t none = f.size();
  const std::size_t cap = f.size() / n;

  std::vector<std::vector<std::size_t>> best;
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::size_t> membership(f.size(), none);
  for (std::size_t k = 1; k <= cap; ++k) {
    sets.emplace_back();
    for (std::size_t e = 0; e < f.size(); ++e) {
      if (membership[e] != none) continue;
      augment(f, sets, membership, e);
    }
    std::size_t placed = 0;
    for (const auto& s : sets) placed += s.size();
    if (placed == k * n)
      best = sets;
    else
      break;
  }

  IndexPartition out =
      to_partition(std::move(best), PartitionKind::spanning, f.size());
  verify_blocks(f, out);
  const RedundancyReport report = redundancy_report(f);
  const double bound = std::floor(report.lower + 1e-9);
  if (static_cast<double>(out.blocks.size()) < bound)
    throw Error("internal: packing fell below floor(lower redundancy)");
  return out;
}

namespace {

std::uint64_t binomial_guarded(std::size_t n, std::size_t k,
                               std::uint64_t guard) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // exact: divides a rising product
    if (result > guard) return guard + 1;
  }
  return result;
}

// r-th (0-based) k-subset of {0..n-1} in lexicographic order.
std::vector<std::size_t> unrank_combination(std::uint64_t r, std::size_t n,
                                            std::size_t k) {
  std::vector<std::size_t> out;
  out.reserve(k);
  std::size_t x = 0;
  for (std::size_t i = 0; i < k; ++i) {
    while (true) {
      const std::uint64_t block =
          binomial_guarded(n - 1 - x, k - 1 - i, ~std::uint64_t{0} >> 1);
      if (block <= r) {
        r -= block;
        ++x;
      } else {
        break;
      }
    }
    out.push_back(x);
    ++x;
  }
  return out;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

template <Scalar T>
bool removal_spans(const Frame<T>& f, const std::vector<std::size_t>& erased) {
  std::vector<std::size_t> kept;
  kept.reserve(f.size() - erased.size());
  std::size_t e = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (e < erased.size() && erased[e] == i) {
      ++e;
      continue;
    }
    kept.push_back(i);
  }
  return rank(columns_of(f, kept)) == f.dim();
}

constexpr std::uint64_t kSubsetGuard = 2'000'000;

template <Scalar T>
std::uint64_t erasure_subset_count(const Frame<T>& f, std::size_t k) {
  if (k >= f.size())
    throw InvalidParameter("erasure_robust requires 0 <= k < N");
  const std::uint64_t count = binomial_guarded(f.size(), k, kSubsetGuard);
  if (count > kSubsetGuard)
    throw TooManySubsets("erasure_robust: more than 2e6 subsets");
  return count;
}

ErasureResult result_from(std::uint64_t failing_rank, std::size_t n,
                          std::size_t k) {
  ErasureResult out;
  if (failing_rank == ~std::uint64_t{0}) {
    out.robust = true;
    return out;
  }
  out.robust = false;
  for (std::size_t idx : unrank_combination(failing_rank, n, k))
    out.witness.push_back(idx + 1);
  return out;
}

}  // namespace

template <Scalar T>
ErasureResult erasure_robust_serial(const Frame<T>& f, std::size_t k) {
  const std::uint64_t count = erasure_subset_count(f, k);
  std::vector<std::size_t> subset = unrank_combination(0, f.size(), k);
  for (std::uint64_t r = 0; r < count; ++r) {
    if (!removal_spans(f, subset)) return result_from(r, f.size(), k);
    next_combination(subset, f.size());
  }
  return result_from(~std::uint64_t{0}, f.size(), k);
}

template <Scalar T>
ErasureResult erasure_robust(const Frame<T>& f, std::size_t k) {
#ifdef _OPENMP
  const std::uint64_t count = erasure_subset_count(f, k);
  std::uint64_t first_failure = ~std::uint64_t{0};
  // Contiguous chunks, one unranking each; a thread stops at the first
  // failure inside its chunk, and the minimum over chunks is the global
  // lexicographic first regardless of the thread count.
#pragma omp parallel
  {
    const std::uint64_t threads =
        static_cast<std::uint64_t>(omp_get_num_threads());
    const std::uint64_t tid = static_cast<std::uint64_t>(omp_get_thread_num());
    const std::uint64_t chunk = (count + threads - 1) / threads;
    const std::uint64_t begin = std::min(tid * chunk, count);
    const std::uint64_t end = std::min(begin + chunk, count);
    std::uint64_t local_first = ~std::uint64_t{0};
    if (begin < end) {
      std::vector<std::size_t> subset = unrank_combination(begin, f.size(), k);
      for (std::uint64_t r = begin; r < end; ++r) {
        if (!removal_spans(f, subset)) {
          local_first = r;
          break;
        }
        next_combination(subset, f.size());
      }
    }
#pragma omp critical
    {
      if (local_first < first_failure) first_failure = local_first;
    }
  }
  return result_from(first_failure, f.size(), k);
#else
  return erasure_robust_serial(f, k);
#endif
}

#define FRAMERED_INSTANTIATE(T)                                           \
  template IndexPartition partition_independent<T>(const Frame<T>&);      \
  template IndexPartition pack_spanning<T>(const Frame<T>&);              \
  template ErasureResult erasure_robust<T>(const Frame<T>&, std::size_t); \
  template ErasureResult erasure_robust_serial<T>(const Frame<T>&,        \
                                                  std::size_t);

FRAMERED_INSTANTIATE(double)
FRAMERED_INSTANTIATE(cplx)

#undef FRAMERED_INSTANTIATE

}  // namespace framered
