#pragma once

// Monoids as runtime values. Elements are opaque; the Monoid handle that
// owns them decides equality and order.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace netmod {

/// Opaque monoid element. Its meaning is fixed by the Monoid that owns it:
/// table indices for finite monoids, values for the naturals, words for free
/// monoids and tuples for direct products.
class Element {
 public:
  using Tuple = std::vector<Element>;

  Element() : value_(std::int64_t{0}) {}
  explicit Element(std::int64_t v) : value_(v) {}
  explicit Element(std::string w) : value_(std::move(w)) {}
  explicit Element(Tuple t) : value_(std::move(t)) {}

  bool is_int() const { return value_.index() == 0; }
  bool is_word() const { return value_.index() == 1; }
  bool is_tuple() const { return value_.index() == 2; }

  std::int64_t as_int() const { return std::get<0>(value_); }
  const std::string& as_word() const { return std::get<1>(value_); }
  const Tuple& as_tuple() const { return std::get<2>(value_); }

  std::size_t hash() const;

  // Structural comparison, used for containers only. Monoid-level equality
  // and ordering always go through Monoid::eq and Monoid::compare.
  friend bool operator==(const Element& a, const Element& b);
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  std::variant<std::int64_t, std::string, Tuple> value_;
};

/// Backend of a Monoid handle. Implementations are immutable.
class MonoidImpl {
 public:
  virtual ~MonoidImpl() = default;

  virtual std::string name() const = 0;
  virtual Element identity() const = 0;
  virtual Element op(const Element& a, const Element& b) const = 0;
  virtual bool eq(const Element& a, const Element& b) const { return a == b; }
  /// Total order on elements; negative, zero or positive like strcmp.
  virtual int compare(const Element& a, const Element& b) const = 0;
  /// Full element list in element order, when the monoid is finite.
  virtual std::optional<std::vector<Element>> elements() const { return std::nullopt; }
  virtual bool contains(const Element& a) const = 0;
  virtual Element sample(std::mt19937_64& rng) const = 0;
  virtual std::string format(const Element& a) const = 0;
  virtual Element parse(std::string_view text) const = 0;
};

/// Shared handle to an immutable monoid. Cheap to copy; safe to read from
/// several threads.
class Monoid {
 public:
  Monoid() = default;
  explicit Monoid(std::shared_ptr<const MonoidImpl> impl) : impl_(std::move(impl)) {}

  std::string name() const { return impl_->name(); }
  Element identity() const { return impl_->identity(); }
  Element op(const Element& a, const Element& b) const { return impl_->op(a, b); }
  bool eq(const Element& a, const Element& b) const { return impl_->eq(a, b); }
  int compare(const Element& a, const Element& b) const { return impl_->compare(a, b); }
  bool is_identity(const Element& a) const { return eq(a, identity()); }
  std::optional<std::vector<Element>> elements() const { return impl_->elements(); }
  bool is_finite() const { return impl_->elements().has_value(); }
  bool contains(const Element& a) const { return impl_->contains(a); }
  Element sample(std::mt19937_64& rng) const { return impl_->sample(rng); }
  std::string format(const Element& a) const { return impl_->format(a); }
  Element parse(std::string_view text) const { return impl_->parse(text); }

  const MonoidImpl* impl() const { return impl_.get(); }

  /// Handles are interchangeable when they name the same structure.
  friend bool operator==(const Monoid& a, const Monoid& b) {
    return a.impl_ == b.impl_ || a.name() == b.name();
  }

 private:
  std::shared_ptr<const MonoidImpl> impl_;
};

/// Budget for law checks on monoids that cannot be enumerated.
struct LawCheckConfig {
  std::size_t sample_pairs = 1000;
  std::uint64_t seed = 0x5eed'2019'0001ULL;
};

struct MonoidHom {
  Monoid source;
  Monoid target;
  std::function<Element(const Element&)> map;

  Element operator()(const Element& a) const { return map(a); }
};

enum class Variety { Mon, CMon, GMon };

std::string to_string(Variety v);
Variety parse_variety(std::string_view text);

// Concrete monoids.

/// ({F, T}, or) with identity F. Element order F < T.
Monoid boolean_monoid();
/// The six-element graphic monoid {1, a, b, c, x, y} of the path a-x-b-y-c.
Monoid path_band_monoid();
/// Natural numbers under addition.
Monoid nat_monoid();
/// Words over `alphabet` under concatenation, ordered length-lexicographically.
Monoid free_monoid(std::string alphabet);

/// Finite monoid given by a multiplication table over `labels`. Entry
/// table[i][j] is the index of labels[i]*labels[j]; index 0 is the identity.
/// Throws ContextError if the table is not a monoid.
Monoid table_monoid(std::string name, std::vector<std::string> labels,
                    std::vector<std::vector<std::size_t>> table);

/// Direct product with its pointed-category structure maps.
struct DirectProduct {
  Monoid product;
  MonoidHom inl;     // a -> (a, e)
  MonoidHom inr;     // b -> (e, b)
  MonoidHom proj_l;  // (a, b) -> a
  MonoidHom proj_r;  // (a, b) -> b
};

DirectProduct direct_product(const Monoid& left, const Monoid& right);

MonoidHom identity_hom(const Monoid& m);
MonoidHom compose(const MonoidHom& g, const MonoidHom& f);  // g after f
/// The zero map through the trivial monoid.
MonoidHom zero_hom(const Monoid& source, const Monoid& target);

// Law checks. Finite monoids are checked exhaustively, others on
// deterministic samples of cfg.sample_pairs pairs (or triples).

bool check_monoid_laws(const Monoid& m, const LawCheckConfig& cfg = {});
bool is_commutative(const Monoid& m, const LawCheckConfig& cfg = {});
bool is_graphic(const Monoid& m, const LawCheckConfig& cfg = {});
bool satisfies_variety(const Monoid& m, Variety v, const LawCheckConfig& cfg = {});
bool check_hom(const MonoidHom& h, const LawCheckConfig& cfg = {});

/// Elements used to exercise laws: the full list when finite, otherwise
/// `count` deterministic samples (identity always first).
std::vector<Element> law_witnesses(const Monoid& m, std::size_t count,
                                   std::uint64_t seed);

}  // namespace netmod

template <>
struct std::hash<netmod::Element> {
  std::size_t operator()(const netmod::Element& e) const noexcept { return e.hash(); }
};
