#include "netmod/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "netmod/errors.hpp"

namespace netmod {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (auto v : image_) {
    if (v >= image_.size() || hit[v]) throw std::invalid_argument("not a permutation");
    hit[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), std::size_t{0});
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  auto p = identity(n);
  std::swap(p.image_.at(i), p.image_.at(j));
  return p;
}

Permutation Permutation::block_swap(std::size_t m, std::size_t n) {
  std::vector<std::size_t> img(m + n);
  for (std::size_t i = 0; i < m; ++i) img[i] = n + i;
  for (std::size_t i = 0; i < n; ++i) img[m + i] = i;
  return Permutation(std::move(img));
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<Permutation> out;
  auto img = identity(n).image_;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t n) {
  auto img = identity(n).image_;
  auto t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t.empty() || t == "id") return identity(n);

  std::vector<char> used(n, 0);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> Permutation {
    throw ParseError("bad cycle notation '" + std::string(text) + "': " + why);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') return fail("expected '('");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) return fail("missing ')'");
    std::vector<std::size_t> cycle;
    std::string num;
    auto flush = [&] {
      if (num.empty()) return;
      auto v = std::stoul(num);
      if (v < 1 || v > n) fail("point " + num + " out of range");
      if (used[v - 1]) fail("point " + num + " repeated");
      used[v - 1] = 1;
      cycle.push_back(v - 1);
      num.clear();
    };
    for (auto i = pos + 1; i < close; ++i) {
      char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        num.push_back(c);
      } else if (c == ' ' || c == ',') {
        flush();
      } else {
        return fail(std::string("unexpected '") + c + "'");
      }
    }
    flush();
    for (std::size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<char> seen(image_.size(), 0);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i] || image_[i] == i) continue;
    out += "(";
    for (auto j = i; !seen[j]; j = image_[j]) {
      seen[j] = 1;
      if (out.back() != '(') out += " ";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("permutations of different sizes");
  std::vector<std::size_t> img(tau.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = sigma(tau(i));
  return Permutation(std::move(img));
}

Permutation operator+(const Permutation& sigma, const Permutation& tau) {
  const auto m = sigma.size();
  std::vector<std::size_t> img(m + tau.size());
  for (std::size_t i = 0; i < m; ++i) img[i] = sigma(i);
  for (std::size_t i = 0; i < tau.size(); ++i) img[m + i] = m + tau(i);
  return Permutation(std::move(img));
}

}  // namespace netmod
