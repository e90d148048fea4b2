#include "netmod/sweep.hpp"

#include <limits>
#include <numeric>

#include <omp.h>

namespace netmod {

namespace {

std::string canonical_key(const std::string& w, const OracleAlphabet& al, const ContextPtr& ctx) {
  return al.encode(normalize(al.decode(w), ctx).word());
}

// Union-find whose roots are always the least index of their class.
class MinUnionFind {
 public:
  explicit MinUnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

  std::vector<std::uint32_t> labels() {
    std::vector<std::uint32_t> out(parent_.size());
    for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = find(i);
    return out;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

void word_edges(const std::string& w, std::uint32_t index, const OracleAlphabet& al, Variety variety,
                std::vector<std::string>& scratch, EdgeList& out) {
  scratch.clear();
  non_increasing_moves(w, al, variety, scratch);
  for (const auto& v : scratch) {
    auto j = static_cast<std::uint32_t>(code_word_index(v, al.size()));
    if (j != index) out.emplace_back(index, j);
  }
}

constexpr std::size_t kChunk = 1 << 16;

}  // namespace

std::vector<std::string> canonical_keys(const std::vector<std::string>& words, const OracleAlphabet& alphabet,
                                        const ContextPtr& ctx) {
  std::vector<std::string> out(words.size());
  const auto n = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = canonical_key(words[i], alphabet, ctx);
  return out;
}

std::vector<std::string> canonical_keys_serial(const std::vector<std::string>& words,
                                               const OracleAlphabet& alphabet, const ContextPtr& ctx) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(canonical_key(w, alphabet, ctx));
  return out;
}

std::vector<std::string> mon_oracle_keys(const std::vector<std::string>& words, const OracleAlphabet& alphabet) {
  std::vector<std::string> out(words.size());
  const auto n = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = shuffle_class_key(words[i], alphabet);
  return out;
}

std::vector<std::string> mon_oracle_keys_serial(const std::vector<std::string>& words,
                                                const OracleAlphabet& alphabet) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(shuffle_class_key(w, alphabet));
  return out;
}

std::vector<std::uint32_t> congruence_labels(const OracleAlphabet& alphabet, Variety variety,
                                             std::size_t max_len) {
  const auto count = code_word_count(alphabet.size(), max_len);
  if (count > std::numeric_limits<std::uint32_t>::max()) throw BudgetExceeded("too many words to sweep");
  MinUnionFind uf(count);
  const int threads = omp_get_max_threads();
  std::vector<EdgeList> edges(static_cast<std::size_t>(threads));
  for (std::size_t begin = 0; begin < count; begin += kChunk) {
    const auto end = std::min(count, begin + kChunk);
#pragma omp parallel
    {
      auto& mine = edges[static_cast<std::size_t>(omp_get_thread_num())];
      std::vector<std::string> scratch;
#pragma omp for schedule(dynamic, 512)
      for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(begin); i < static_cast<std::ptrdiff_t>(end); ++i) {
        const auto w = code_word_at(static_cast<std::size_t>(i), alphabet.size());
        word_edges(w, static_cast<std::uint32_t>(i), alphabet, variety, scratch, mine);
      }
    }
    for (auto& list : edges) {
      for (auto [a, b] : list) uf.unite(a, b);
      list.clear();
    }
  }
  return uf.labels();
}

std::vector<std::uint32_t> congruence_labels_serial(const OracleAlphabet& alphabet, Variety variety,
                                                    std::size_t max_len) {
  const auto count = code_word_count(alphabet.size(), max_len);
  if (count > std::numeric_limits<std::uint32_t>::max()) throw BudgetExceeded("too many words to sweep");
  MinUnionFind uf(count);
  std::vector<std::string> scratch;
  EdgeList edges;
  for (std::size_t i = 0; i < count; ++i) {
    edges.clear();
    word_edges(code_word_at(i, alphabet.size()), static_cast<std::uint32_t>(i), alphabet, variety, scratch, edges);
    for (auto [a, b] : edges) uf.unite(a, b);
  }
  return uf.labels();
}

}  // namespace netmod
