#include "netmod/kneser.hpp"

#include <algorithm>
#include <stdexcept>

namespace netmod {

Injection::Injection(std::size_t codomain_size, std::vector<std::size_t> map)
    : n_(codomain_size), map_(std::move(map)) {
  std::vector<char> hit(n_, 0);
  for (auto v : map_) {
    if (v >= n_) throw std::invalid_argument("injection image out of range");
    if (hit[v]) throw std::invalid_argument("map is not injective");
    hit[v] = 1;
  }
}

Injection Injection::identity(std::size_t n) { return inclusion(n, n); }

Injection Injection::inclusion(std::size_t m, std::size_t n) {
  std::vector<std::size_t> map(m);
  for (std::size_t i = 0; i < m; ++i) map[i] = i;
  return Injection(n, std::move(map));
}

Injection compose(const Injection& g, const Injection& f) {
  if (f.codomain_size() != g.domain_size()) throw std::invalid_argument("injections do not compose");
  std::vector<std::size_t> map(f.domain_size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = g(f(i));
  return Injection(g.codomain_size(), std::move(map));
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t colex_rank(const KSubset& s) {
  std::size_t r = 0;
  for (std::size_t t = 0; t < s.size(); ++t) r += binomial(s[t], t + 1);
  return r;
}

std::vector<KSubset> k_subsets(std::size_t n, std::size_t k) {
  std::vector<KSubset> out;
  if (k > n) return out;
  // Colex successor: bump the lowest position that can move, reset the
  // positions below it.
  KSubset s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    std::size_t i = 0;
    while (i < k && s[i] + 1 == (i + 1 < k ? s[i + 1] : n)) ++i;
    if (i == k) break;
    ++s[i];
    for (std::size_t j = 0; j < i; ++j) s[j] = j;
  }
  return out;
}

namespace {

bool disjoint(const KSubset& a, const KSubset& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

}  // namespace

SimpleGraph kneser_graph(std::size_t n, std::size_t k) {
  auto subsets = k_subsets(n, k);
  SimpleGraph g(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j)
      if (disjoint(subsets[i], subsets[j])) g.add_edge(i, j);
  return g;
}

std::vector<std::size_t> subsets_map(const Injection& f, std::size_t k) {
  auto subsets = k_subsets(f.domain_size(), k);
  std::vector<std::size_t> out;
  out.reserve(subsets.size());
  for (auto s : subsets) {
    for (auto& x : s) x = f(x);
    std::sort(s.begin(), s.end());
    out.push_back(colex_rank(s));
  }
  return out;
}

GraphMap kneser_embedding(const Injection& f, std::size_t k) {
  return {kneser_graph(f.domain_size(), k), kneser_graph(f.codomain_size(), k), subsets_map(f, k)};
}

GraphMap kneser_laxator(std::size_t m, std::size_t n, std::size_t k) {
  auto left = subsets_map(Injection::inclusion(m, m + n), k);
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = m + i;
  auto right = subsets_map(Injection(m + n, shift), k);
  left.insert(left.end(), right.begin(), right.end());
  return {graph_sum(kneser_graph(m, k), kneser_graph(n, k)), kneser_graph(m + n, k), std::move(left)};
}

Edge pair_at(std::size_t index) {
  std::size_t v = 1;
  while ((v + 1) * v / 2 <= index) ++v;
  return {index - v * (v - 1) / 2, v};
}

}  // namespace netmod
