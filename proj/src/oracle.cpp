#include "netmod/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace netmod {

OracleAlphabet::OracleAlphabet(const GreenContext& ctx) {
  const auto n = ctx.size();
  elements_.resize(n);
  element_index_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto els = ctx.component(v).elements();
    if (!els) throw ContextError("oracles need finite component monoids");
    elements_[v] = *els;
    element_index_[v].assign(els->size(), kIdentity);
    for (std::size_t i = 0; i < els->size(); ++i) {
      if (ctx.component(v).is_identity((*els)[i])) continue;
      if (letters_.size() >= kIdentity) throw ContextError("oracle alphabet too large");
      element_index_[v][i] = letters_.size();
      letters_.push_back({v, (*els)[i]});
    }
  }
  const auto a = letters_.size();
  mult_.assign(a * a, kIdentity);
  commute_.assign(a * a, 0);
  splits_.resize(a);
  for (std::size_t x = 0; x < a; ++x) {
    for (std::size_t y = 0; y < a; ++y) {
      const auto u = letters_[x].component;
      const auto w = letters_[y].component;
      commute_[x * a + y] = ctx.commute(u, w) ? 1 : 0;
      if (u != w) continue;
      auto prod = ctx.component(u).op(letters_[x].value, letters_[y].value);
      auto c = code({u, prod});
      mult_[x * a + y] = c;
      if (c == kIdentity) {
        unit_pairs_.emplace_back(x, y);
      } else {
        splits_[c].emplace_back(x, y);
      }
    }
  }
}

std::uint8_t OracleAlphabet::code(const Letter& l) const {
  const auto& els = elements_.at(l.component);
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (els[i] == l.value) return static_cast<std::uint8_t>(element_index_[l.component][i]);
  }
  throw ContextError("letter value is not in its component monoid");
}

std::string OracleAlphabet::encode(const Word& w) const {
  std::string out;
  for (const auto& l : w) {
    auto c = code(l);
    if (c != kIdentity) out.push_back(static_cast<char>(c));
  }
  return out;
}

Word OracleAlphabet::decode(const std::string& w) const {
  Word out;
  out.reserve(w.size());
  for (char c : w) out.push_back(letters_[static_cast<std::uint8_t>(c)]);
  return out;
}

namespace {

std::uint8_t at(const std::string& w, std::size_t i) { return static_cast<std::uint8_t>(w[i]); }

void shuffles_and_merges(const std::string& w, const OracleAlphabet& al, std::vector<std::string>& out) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    auto a = at(w, i), b = at(w, i + 1);
    if (al.same_component(a, b)) {
      std::string v = w;
      auto p = al.mult(a, b);
      if (p == OracleAlphabet::kIdentity) {
        v.erase(i, 2);
      } else {
        v[i] = static_cast<char>(p);
        v.erase(i + 1, 1);
      }
      out.push_back(std::move(v));
    } else if (al.commute(a, b)) {
      std::string v = w;
      std::swap(v[i], v[i + 1]);
      out.push_back(std::move(v));
    }
  }
}

void block_swaps(const std::string& w, std::vector<std::string>& out) {
  const auto n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 1; i + a < n; ++a)
      for (std::size_t b = 1; i + a + b <= n; ++b) {
        std::string v = w.substr(0, i) + w.substr(i + a, b) + w.substr(i, a) + w.substr(i + a + b);
        if (v != w) out.push_back(std::move(v));
      }
}

void repeated_block_deletions(const std::string& w, std::vector<std::string>& out) {
  const auto n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 1; i + 2 * a <= n; ++a)
      for (std::size_t b = 0; i + 2 * a + b <= n; ++b) {
        if (w.compare(i, a, w, i + a + b, a) == 0) {
          std::string v = w;
          v.erase(i + a + b, a);
          out.push_back(std::move(v));
        }
      }
}

void increasing_moves(const std::string& w, const OracleAlphabet& al, Variety variety, std::size_t max_len,
                      std::vector<std::string>& out) {
  const auto n = w.size();
  if (n + 1 <= max_len) {
    for (std::size_t i = 0; i < n; ++i)
      for (auto [p, q] : al.splits(at(w, i))) {
        std::string v = w;
        v[i] = static_cast<char>(p);
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, static_cast<char>(q));
        out.push_back(std::move(v));
      }
  }
  if (n + 2 <= max_len) {
    for (std::size_t i = 0; i <= n; ++i)
      for (auto [p, q] : al.unit_pairs()) {
        std::string v = w;
        v.insert(i, std::string{static_cast<char>(p), static_cast<char>(q)});
        out.push_back(std::move(v));
      }
  }
  if (variety == Variety::GMon) {
    // ab -> aba
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 1; i + a <= n && n + a <= max_len; ++a)
        for (std::size_t b = 0; i + a + b <= n; ++b) {
          std::string v = w;
          v.insert(i + a + b, w.substr(i, a));
          out.push_back(std::move(v));
        }
  }
}

template <typename Expand>
std::unordered_set<std::string> bfs(const std::string& start, std::size_t max_words, Expand expand) {
  std::unordered_set<std::string> seen{start};
  std::deque<std::string> queue{start};
  std::vector<std::string> next;
  while (!queue.empty()) {
    auto w = std::move(queue.front());
    queue.pop_front();
    next.clear();
    expand(w, next);
    for (auto& v : next) {
      if (seen.insert(v).second) {
        if (seen.size() > max_words) throw BudgetExceeded("oracle class exceeds its size bound");
        queue.push_back(std::move(v));
      }
    }
  }
  return seen;
}

std::vector<Word> decode_sorted(const std::unordered_set<std::string>& words, const OracleAlphabet& al) {
  std::vector<std::string> sorted(words.begin(), words.end());
  std::sort(sorted.begin(), sorted.end(), [](const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
      return static_cast<std::uint8_t>(x) < static_cast<std::uint8_t>(y);
    });
  });
  std::vector<Word> out;
  out.reserve(sorted.size());
  for (const auto& w : sorted) out.push_back(al.decode(w));
  return out;
}

bool code_less(const std::string& a, const std::string& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
    return static_cast<std::uint8_t>(x) < static_cast<std::uint8_t>(y);
  });
}

}  // namespace

void non_increasing_moves(const std::string& word, const OracleAlphabet& alphabet, Variety variety,
                          std::vector<std::string>& out) {
  shuffles_and_merges(word, alphabet, out);
  if (variety == Variety::CMon) block_swaps(word, out);
  if (variety == Variety::GMon) repeated_block_deletions(word, out);
}

std::vector<Word> shuffle_closure_oracle(const Word& word, const GreenContext& ctx, std::size_t max_words) {
  OracleAlphabet al(ctx);
  auto cls = bfs(al.encode(word), max_words,
                 [&](const std::string& w, std::vector<std::string>& out) { shuffles_and_merges(w, al, out); });
  return decode_sorted(cls, al);
}

std::vector<Word> congruence_closure_oracle(const Word& word, const GreenContext& ctx, Variety variety,
                                            std::size_t max_len, bool two_way, std::size_t max_words) {
  OracleAlphabet al(ctx);
  auto start = al.encode(word);
  auto cls = bfs(start, max_words, [&](const std::string& w, std::vector<std::string>& out) {
    non_increasing_moves(w, al, variety, out);
    if (two_way) increasing_moves(w, al, variety, max_len, out);
  });
  return decode_sorted(cls, al);
}

bool oracle_equal_mon(const Word& x, const Word& y, const GreenContext& ctx) {
  OracleAlphabet al(ctx);
  return shuffle_class_key(al.encode(x), al) == shuffle_class_key(al.encode(y), al);
}

bool oracle_equal(const Word& x, const Word& y, const GreenContext& ctx, Variety variety,
                  std::size_t max_len) {
  OracleAlphabet al(ctx);
  auto target = al.encode(y);
  auto cls = bfs(al.encode(x), 1'000'000, [&](const std::string& w, std::vector<std::string>& out) {
    non_increasing_moves(w, al, variety, out);
    increasing_moves(w, al, variety, max_len, out);
  });
  return cls.count(target) > 0;
}

std::string shuffle_class_key(const std::string& word, const OracleAlphabet& alphabet) {
  auto cls = bfs(word, 1'000'000, [&](const std::string& w, std::vector<std::string>& out) {
    shuffles_and_merges(w, alphabet, out);
  });
  const std::string* best = nullptr;
  for (const auto& w : cls) {
    if (!best || w.size() < best->size() || (w.size() == best->size() && code_less(w, *best))) best = &w;
  }
  return *best;
}

bool in_shuffle_closure(const std::string& word, const std::string& target, const OracleAlphabet& alphabet) {
  auto cls = bfs(word, 1'000'000, [&](const std::string& w, std::vector<std::string>& out) {
    shuffles_and_merges(w, alphabet, out);
  });
  return cls.count(target) > 0;
}

std::vector<std::string> all_code_words(const OracleAlphabet& alphabet, std::size_t max_len) {
  const auto a = alphabet.size();
  std::vector<std::string> out{std::string{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len && a > 0; ++len) {
    const auto end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t c = 0; c < a; ++c) out.push_back(out[i] + static_cast<char>(c));
    begin = end;
  }
  return out;
}

std::size_t code_word_index(const std::string& word, std::size_t alphabet_size) {
  std::size_t offset = 0, power = 1;
  for (std::size_t len = 0; len < word.size(); ++len) {
    offset += power;
    power *= alphabet_size;
  }
  std::size_t value = 0;
  for (char c : word) value = value * alphabet_size + static_cast<std::uint8_t>(c);
  return offset + value;
}

std::string code_word_at(std::size_t index, std::size_t alphabet_size) {
  std::size_t len = 0, power = 1;
  while (index >= power) {
    index -= power;
    power *= alphabet_size;
    ++len;
  }
  std::string out(len, '\0');
  for (std::size_t i = len; i-- > 0;) {
    out[i] = static_cast<char>(index % alphabet_size);
    index /= alphabet_size;
  }
  return out;
}

std::size_t code_word_count(std::size_t alphabet_size, std::size_t max_len) {
  std::size_t total = 0, power = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total += power;
    power *= alphabet_size;
  }
  return total;
}

}  // namespace netmod
