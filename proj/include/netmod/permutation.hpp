#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace netmod {

/// Bijection of {0..n-1}; sigma(i) is the image of i.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);
  /// sigma_{m,n}: swaps a block of size m with the following block of size n.
  static Permutation block_swap(std::size_t m, std::size_t n);
  /// All permutations of n points in lexicographic order of images.
  static std::vector<Permutation> all(std::size_t n);
  /// Cycle notation with 1-based points, e.g. "(1 2)(3 4)"; "()" or "id"
  /// for the identity. Throws ParseError.
  static Permutation parse_cycles(std::string_view text, std::size_t n);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const { return image_; }
  bool is_identity() const;

  Permutation inverse() const;
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// (sigma * tau)(i) = sigma(tau(i)).
Permutation operator*(const Permutation& sigma, const Permutation& tau);

/// sigma + tau acts on {0..m+n-1}, tau shifted by m.
Permutation operator+(const Permutation& sigma, const Permutation& tau);

}  // namespace netmod
