#pragma once

#include <unordered_map>
#include <unordered_set>

namespace netmod {

template <typename KeyA, typename KeyB>
std::optional<PartitionMismatch> compare_partitions(const std::vector<KeyA>& a, const std::vector<KeyB>& b,
                                                    std::size_t count) {
  // Each class of `a` must map to exactly one class of `b` and back.
  std::unordered_map<KeyA, std::size_t> rep_a;
  std::unordered_map<KeyB, std::size_t> rep_b;
  for (std::size_t i = 0; i < count; ++i) {
    auto [ia, new_a] = rep_a.try_emplace(a[i], i);
    auto [ib, new_b] = rep_b.try_emplace(b[i], i);
    if (!new_a && !(b[ia->second] == b[i])) return PartitionMismatch{ia->second, i, true};
    if (!new_b && !(a[ib->second] == a[i])) return PartitionMismatch{ib->second, i, false};
  }
  return std::nullopt;
}

template <typename Key>
std::size_t count_classes(const std::vector<Key>& keys, std::size_t count) {
  std::unordered_set<Key> seen(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(count));
  return seen.size();
}

}  // namespace netmod
