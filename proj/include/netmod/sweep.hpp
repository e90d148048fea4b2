#pragma once

// Exhaustive sweeps over all short words of a Green context. Each kernel
// has an OpenMP version and a serial reference with identical output.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netmod/oracle.hpp"

namespace netmod {

/// Packed canonical word of each input word.
std::vector<std::string> canonical_keys(const std::vector<std::string>& words, const OracleAlphabet& alphabet,
                                        const ContextPtr& ctx);
std::vector<std::string> canonical_keys_serial(const std::vector<std::string>& words,
                                               const OracleAlphabet& alphabet, const ContextPtr& ctx);

/// shuffle_class_key of each input word.
std::vector<std::string> mon_oracle_keys(const std::vector<std::string>& words, const OracleAlphabet& alphabet);
std::vector<std::string> mon_oracle_keys_serial(const std::vector<std::string>& words,
                                                const OracleAlphabet& alphabet);

/// Class label of every word in all_code_words(alphabet, max_len) under the
/// congruence generated by single moves between words of length <= max_len.
/// Labels are the least index in each class.
std::vector<std::uint32_t> congruence_labels(const OracleAlphabet& alphabet, Variety variety, std::size_t max_len);
std::vector<std::uint32_t> congruence_labels_serial(const OracleAlphabet& alphabet, Variety variety,
                                                    std::size_t max_len);

/// First disagreement between two partitions of the same index range.
struct PartitionMismatch {
  std::size_t first = 0;
  std::size_t second = 0;
  /// True when `a` joins the pair and `b` separates it.
  bool joined_in_a = false;
};

/// Compares the partitions induced by two key vectors on indices [0, count).
/// Returns nullopt when they coincide.
template <typename KeyA, typename KeyB>
std::optional<PartitionMismatch> compare_partitions(const std::vector<KeyA>& a, const std::vector<KeyB>& b,
                                                    std::size_t count);

/// Number of distinct keys among the first `count` entries.
template <typename Key>
std::size_t count_classes(const std::vector<Key>& keys, std::size_t count);

}  // namespace netmod

#include "netmod/sweep_impl.hpp"
