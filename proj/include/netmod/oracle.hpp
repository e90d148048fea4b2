#pragma once

// Brute-force ground truth for equality in Green products. Nothing here
// calls the normalizer; classes come from exhaustive search over raw
// rewriting moves. Only finite component monoids are supported.

#include <cstdint>
#include <string>
#include <vector>

#include "netmod/green.hpp"

namespace netmod {

/// All non-identity letters of a context with finite components, numbered
/// in letter order. Words over it are packed one letter per char.
class OracleAlphabet {
 public:
  static constexpr std::uint8_t kIdentity = 0xff;

  /// Throws ContextError if a component is infinite or there are more than
  /// 254 letters.
  explicit OracleAlphabet(const GreenContext& ctx);

  std::size_t size() const { return letters_.size(); }
  const Letter& letter(std::uint8_t code) const { return letters_[code]; }
  std::uint8_t code(const Letter& l) const;
  std::size_t component(std::uint8_t code) const { return letters_[code].component; }

  /// Product of two same-component letters, kIdentity for the unit.
  std::uint8_t mult(std::uint8_t a, std::uint8_t b) const { return mult_[a * size() + b]; }
  bool same_component(std::uint8_t a, std::uint8_t b) const {
    return letters_[a].component == letters_[b].component;
  }
  bool commute(std::uint8_t a, std::uint8_t b) const { return commute_[a * size() + b] != 0; }
  /// Pairs (p, q) of letters with p q = a.
  const std::vector<std::pair<std::uint8_t, std::uint8_t>>& splits(std::uint8_t a) const {
    return splits_[a];
  }
  /// Pairs (p, q) of letters with p q = 1.
  const std::vector<std::pair<std::uint8_t, std::uint8_t>>& unit_pairs() const { return unit_pairs_; }

  std::string encode(const Word& w) const;
  Word decode(const std::string& w) const;

 private:
  std::vector<Letter> letters_;
  std::vector<std::vector<std::size_t>> element_index_;  // per component: element -> code
  std::vector<std::vector<Element>> elements_;
  std::vector<std::uint8_t> mult_;
  std::vector<char> commute_;
  std::vector<std::vector<std::pair<std::uint8_t, std::uint8_t>>> splits_;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> unit_pairs_;
};

/// Words reachable by shuffles and merges of neighbouring same-component
/// letters. Identity letters in `word` are dropped first. Throws
/// BudgetExceeded once more than `max_words` words have been seen.
std::vector<Word> shuffle_closure_oracle(const Word& word, const GreenContext& ctx,
                                         std::size_t max_words = 100000);

/// Closure of `word` under shuffles, merges and, for CMon and GMon, the
/// instances ab -> ba and aba -> ab with a, b contiguous subwords.
///
/// One-way mode only shortens words, so for Mon it coincides with
/// shuffle_closure_oracle. Two-way mode also applies splits and the
/// reverse instances, keeping words of length at most `max_len`; the
/// result is then the bounded congruence class of `word`.
std::vector<Word> congruence_closure_oracle(const Word& word, const GreenContext& ctx, Variety variety,
                                            std::size_t max_len, bool two_way = false,
                                            std::size_t max_words = 200000);

/// Mon equality: the two shuffle/merge closures meet.
bool oracle_equal_mon(const Word& x, const Word& y, const GreenContext& ctx);

/// Varietal equality: y lies in the congruence class of x (bounded by max_len).
bool oracle_equal(const Word& x, const Word& y, const GreenContext& ctx, Variety variety,
                  std::size_t max_len);

// Packed forms used by the sweep kernels.

/// Class key in the Mon product: least shortest word of the closure.
std::string shuffle_class_key(const std::string& word, const OracleAlphabet& alphabet);

/// True if `target` is reachable from `word` by shuffles and merges.
bool in_shuffle_closure(const std::string& word, const std::string& target, const OracleAlphabet& alphabet);

/// Every word of length <= max_len over the alphabet, by length then
/// lexicographically.
std::vector<std::string> all_code_words(const OracleAlphabet& alphabet, std::size_t max_len);

/// Dense index of a packed word in all_code_words order.
std::size_t code_word_index(const std::string& word, std::size_t alphabet_size);
/// Inverse of code_word_index.
std::string code_word_at(std::size_t index, std::size_t alphabet_size);
/// Number of words of length <= max_len.
std::size_t code_word_count(std::size_t alphabet_size, std::size_t max_len);

/// Words one move away from `word` that are not longer: shuffles, merges,
/// and for CMon/GMon the block swaps and deletions of repeated blocks.
/// Every two-way move has one side here, so these edges generate the
/// bounded congruence.
void non_increasing_moves(const std::string& word, const OracleAlphabet& alphabet, Variety variety,
                          std::vector<std::string>& out);

}  // namespace netmod
