#ifndef UPTOLAB_PARTITION_HPP
#define UPTOLAB_PARTITION_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace uptolab {

using State = std::uint32_t;

/// Union-find over states 0..n-1 (union by rank, path compression). The
/// canonical representative of a block is its smallest member.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::size_t n) : parent_(n), rank_(n, 0), min_(n) {
    std::iota(parent_.begin(), parent_.end(), State{0});
    std::iota(min_.begin(), min_.end(), State{0});
  }

  std::size_t size() const noexcept { return parent_.size(); }

  State find(State x) {
    State root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      State next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  State find(State x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  State canonical(State x) const { return min_[find(x)]; }
  bool same(State x, State y) const { return find(x) == find(y); }

  /// Merges the blocks of x and y; false if they were already one block.
  bool unite(State x, State y) {
    State rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    if (rank_[rx] == rank_[ry]) ++rank_[rx];
    min_[rx] = std::min(min_[rx], min_[ry]);
    return true;
  }

  /// Blocks in order of their smallest member, members ascending.
  std::vector<std::vector<State>> blocks() const {
    std::vector<std::vector<State>> out;
    std::vector<std::size_t> slot(size(), SIZE_MAX);
    for (State x = 0; x < size(); ++x) {
      State c = canonical(x);
      if (slot[c] == SIZE_MAX) {
        slot[c] = out.size();
        out.emplace_back();
      }
      out[slot[c]].push_back(x);
    }
    return out;
  }

  std::size_t block_count() const {
    std::size_t k = 0;
    for (State x = 0; x < size(); ++x) k += canonical(x) == x;
    return k;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    for (State x = 0; x < a.size(); ++x)
      if (a.canonical(x) != b.canonical(x)) return false;
    return true;
  }

 private:
  std::vector<State> parent_;
  std::vector<std::uint32_t> rank_;
  std::vector<State> min_;
};

}  // namespace uptolab

#endif  // UPTOLAB_PARTITION_HPP
