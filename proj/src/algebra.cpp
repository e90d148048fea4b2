#include "netmod/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "netmod/errors.hpp"

namespace netmod {

// ---------------------------------------------------------------------------
// Element

std::size_t Element::hash() const {
  switch (value_.index()) {
    case 0:
      return std::hash<std::int64_t>{}(as_int());
    case 1:
      return std::hash<std::string>{}(as_word()) ^ 0x9e3779b97f4a7c15ULL;
    default: {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (const auto& e : as_tuple()) h = (h ^ e.hash()) * 0x100000001b3ULL;
      return h;
    }
  }
}

bool operator==(const Element& a, const Element& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
  switch (a.value_.index()) {
    case 0:
      return a.as_int() <=> b.as_int();
    case 1:
      return a.as_word().compare(b.as_word()) <=> 0;
    default: {
      const auto& x = a.as_tuple();
      const auto& y = b.as_tuple();
      for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (auto c = x[i] <=> y[i]; c != 0) return c;
      }
      return x.size() <=> y.size();
    }
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// ---------------------------------------------------------------------------
// Finite monoid from a multiplication table.

class TableMonoid final : public MonoidImpl {
 public:
  TableMonoid(std::string name, std::vector<std::string> labels,
              std::vector<std::vector<std::size_t>> table)
      : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {}

  std::string name() const override { return name_; }
  Element identity() const override { return Element(std::int64_t{0}); }

  Element op(const Element& a, const Element& b) const override {
    return Element(static_cast<std::int64_t>(table_[index(a)][index(b)]));
  }

  int compare(const Element& a, const Element& b) const override {
    auto x = index(a), y = index(b);
    return x < y ? -1 : (x > y ? 1 : 0);
  }

  std::optional<std::vector<Element>> elements() const override {
    std::vector<Element> out;
    out.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) out.emplace_back(static_cast<std::int64_t>(i));
    return out;
  }

  bool contains(const Element& a) const override {
    return a.is_int() && a.as_int() >= 0 && static_cast<std::size_t>(a.as_int()) < labels_.size();
  }

  Element sample(std::mt19937_64& rng) const override {
    return Element(static_cast<std::int64_t>(rng() % labels_.size()));
  }

  std::string format(const Element& a) const override { return labels_[index(a)]; }

  Element parse(std::string_view text) const override {
    text = trim(text);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == text) return Element(static_cast<std::int64_t>(i));
    }
    throw ParseError("'" + std::string(text) + "' is not an element of " + name_);
  }

 private:
  std::size_t index(const Element& a) const {
    if (!contains(a)) throw ContextError("element is not in monoid " + name_);
    return static_cast<std::size_t>(a.as_int());
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
};

class NatMonoid final : public MonoidImpl {
 public:
  std::string name() const override { return "nat"; }
  Element identity() const override { return Element(std::int64_t{0}); }
  Element op(const Element& a, const Element& b) const override {
    return Element(a.as_int() + b.as_int());
  }
  int compare(const Element& a, const Element& b) const override {
    return a.as_int() < b.as_int() ? -1 : (a.as_int() > b.as_int() ? 1 : 0);
  }
  bool contains(const Element& a) const override { return a.is_int() && a.as_int() >= 0; }
  Element sample(std::mt19937_64& rng) const override {
    // Bias towards 0 so identity cases show up in samples.
    auto r = rng() % 64;
    return Element(static_cast<std::int64_t>(r < 8 ? 0 : r));
  }
  std::string format(const Element& a) const override { return std::to_string(a.as_int()); }
  Element parse(std::string_view text) const override {
    text = trim(text);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || v < 0) {
      throw ParseError("'" + std::string(text) + "' is not a natural number");
    }
    return Element(v);
  }
};

class FreeMonoid final : public MonoidImpl {
 public:
  explicit FreeMonoid(std::string alphabet) : alphabet_(std::move(alphabet)) {}

  std::string name() const override { return "free:" + alphabet_; }
  Element identity() const override { return Element(std::string{}); }
  Element op(const Element& a, const Element& b) const override {
    return Element(a.as_word() + b.as_word());
  }
  int compare(const Element& a, const Element& b) const override {
    const auto& x = a.as_word();
    const auto& y = b.as_word();
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    auto c = x.compare(y);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  bool contains(const Element& a) const override {
    if (!a.is_word()) return false;
    return std::all_of(a.as_word().begin(), a.as_word().end(),
                       [&](char c) { return alphabet_.find(c) != std::string::npos; });
  }
  Element sample(std::mt19937_64& rng) const override {
    std::string w;
    auto len = rng() % 5;
    for (std::size_t i = 0; i < len; ++i) w.push_back(alphabet_[rng() % alphabet_.size()]);
    return Element(std::move(w));
  }
  std::string format(const Element& a) const override { return "\"" + a.as_word() + "\""; }
  Element parse(std::string_view text) const override {
    text = trim(text);
    if (text == "1") return identity();
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
      text = text.substr(1, text.size() - 2);
    }
    Element e{std::string(text)};
    if (!contains(e)) throw ParseError("'" + std::string(text) + "' is not a word over " + alphabet_);
    return e;
  }

 private:
  std::string alphabet_;
};

class ProductMonoid final : public MonoidImpl {
 public:
  ProductMonoid(Monoid left, Monoid right) : left_(std::move(left)), right_(std::move(right)) {}

  std::string name() const override { return "(" + left_.name() + " x " + right_.name() + ")"; }
  Element identity() const override {
    return Element(Element::Tuple{left_.identity(), right_.identity()});
  }
  Element op(const Element& a, const Element& b) const override {
    return Element(Element::Tuple{left_.op(a.as_tuple()[0], b.as_tuple()[0]),
                                  right_.op(a.as_tuple()[1], b.as_tuple()[1])});
  }
  bool eq(const Element& a, const Element& b) const override {
    return left_.eq(a.as_tuple()[0], b.as_tuple()[0]) && right_.eq(a.as_tuple()[1], b.as_tuple()[1]);
  }
  int compare(const Element& a, const Element& b) const override {
    if (int c = left_.compare(a.as_tuple()[0], b.as_tuple()[0]); c != 0) return c;
    return right_.compare(a.as_tuple()[1], b.as_tuple()[1]);
  }
  std::optional<std::vector<Element>> elements() const override {
    auto l = left_.elements();
    auto r = right_.elements();
    if (!l || !r) return std::nullopt;
    std::vector<Element> out;
    for (const auto& x : *l)
      for (const auto& y : *r) out.emplace_back(Element::Tuple{x, y});
    return out;
  }
  bool contains(const Element& a) const override {
    return a.is_tuple() && a.as_tuple().size() == 2 && left_.contains(a.as_tuple()[0]) &&
           right_.contains(a.as_tuple()[1]);
  }
  Element sample(std::mt19937_64& rng) const override {
    auto x = left_.sample(rng);
    return Element(Element::Tuple{std::move(x), right_.sample(rng)});
  }
  std::string format(const Element& a) const override {
    return "(" + left_.format(a.as_tuple()[0]) + "," + right_.format(a.as_tuple()[1]) + ")";
  }
  Element parse(std::string_view text) const override {
    text = trim(text);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
      throw ParseError("expected a pair '(a,b)', got '" + std::string(text) + "'");
    }
    auto inner = text.substr(1, text.size() - 2);
    int depth = 0;
    bool quoted = false;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      char c = inner[i];
      if (c == '"') quoted = !quoted;
      if (quoted) continue;
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        return Element(Element::Tuple{left_.parse(inner.substr(0, i)), right_.parse(inner.substr(i + 1))});
      }
    }
    throw ParseError("expected a pair '(a,b)', got '" + std::string(text) + "'");
  }

 private:
  Monoid left_;
  Monoid right_;
};

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(Variety v) {
  switch (v) {
    case Variety::Mon:
      return "mon";
    case Variety::CMon:
      return "cmon";
    case Variety::GMon:
      return "gmon";
  }
  return "?";
}

Variety parse_variety(std::string_view text) {
  std::string t(trim(text));
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "mon") return Variety::Mon;
  if (t == "cmon") return Variety::CMon;
  if (t == "gmon") return Variety::GMon;
  throw ParseError("unknown variety '" + t + "' (expected mon, cmon or gmon)");
}

Monoid table_monoid(std::string name, std::vector<std::string> labels,
                    std::vector<std::vector<std::size_t>> table) {
  const auto size = labels.size();
  if (size == 0 || table.size() != size) throw ContextError("table size does not match labels");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != size) {
    throw ContextError("duplicate element labels in " + name);
  }
  for (const auto& row : table) {
    if (row.size() != size) throw ContextError("ragged multiplication table");
    for (auto v : row)
      if (v >= size) throw ContextError("table entry out of range");
  }
  auto m = Monoid(std::make_shared<TableMonoid>(std::move(name), std::move(labels), std::move(table)));
  if (!check_monoid_laws(m)) throw ContextError("table of " + m.name() + " is not a monoid");
  return m;
}

Monoid boolean_monoid() {
  static const Monoid m = table_monoid("bool", {"F", "T"}, {{0, 1}, {1, 1}});
  return m;
}

Monoid path_band_monoid() {
  // Index order 1, a, b, c, x, y. Products of non-identity p, q: follow the
  // straight segment from a generic point of p towards a generic point of q
  // in the path a-x-b-y-c and take the component reached first.
  enum : std::size_t { I, A, B, C, X, Y };
  static const Monoid m = table_monoid(
      "band", {"1", "a", "b", "c", "x", "y"},
      {
          //  1  a  b  c  x  y
          {I, A, B, C, X, Y},  // 1
          {A, A, X, X, X, X},  // a
          {B, X, B, Y, X, Y},  // b
          {C, Y, Y, C, Y, Y},  // c
          {X, X, X, X, X, X},  // x
          {Y, Y, Y, Y, Y, Y},  // y
      });
  return m;
}

Monoid nat_monoid() {
  static const Monoid m(std::make_shared<NatMonoid>());
  return m;
}

Monoid free_monoid(std::string alphabet) {
  if (alphabet.empty()) throw ContextError("free monoid needs a nonempty alphabet");
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  return Monoid(std::make_shared<FreeMonoid>(std::move(alphabet)));
}

DirectProduct direct_product(const Monoid& left, const Monoid& right) {
  Monoid p(std::make_shared<ProductMonoid>(left, right));
  auto el = left.identity();
  auto er = right.identity();
  DirectProduct out{p, {}, {}, {}, {}};
  out.inl = {left, p, [er](const Element& a) { return Element(Element::Tuple{a, er}); }};
  out.inr = {right, p, [el](const Element& b) { return Element(Element::Tuple{el, b}); }};
  out.proj_l = {p, left, [](const Element& x) { return x.as_tuple()[0]; }};
  out.proj_r = {p, right, [](const Element& x) { return x.as_tuple()[1]; }};
  return out;
}

MonoidHom identity_hom(const Monoid& m) {
  return {m, m, [](const Element& a) { return a; }};
}

MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
  return {f.source, g.target, [g, f](const Element& a) { return g(f(a)); }};
}

MonoidHom zero_hom(const Monoid& source, const Monoid& target) {
  auto e = target.identity();
  return {source, target, [e](const Element&) { return e; }};
}

std::vector<Element> law_witnesses(const Monoid& m, std::size_t count, std::uint64_t seed) {
  if (auto all = m.elements()) return *all;
  std::mt19937_64 rng(seed);
  std::vector<Element> out{m.identity()};
  while (out.size() < count) out.push_back(m.sample(rng));
  return out;
}

namespace {

// Runs `pred` over all pairs of a finite monoid, or over sampled pairs.
template <typename Pred>
bool for_pairs(const Monoid& m, const LawCheckConfig& cfg, Pred pred) {
  if (auto all = m.elements()) {
    for (const auto& a : *all)
      for (const auto& b : *all)
        if (!pred(a, b)) return false;
    return true;
  }
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.sample_pairs; ++i) {
    auto a = m.sample(rng);
    auto b = m.sample(rng);
    if (!pred(a, b)) return false;
  }
  return true;
}

}  // namespace

bool check_monoid_laws(const Monoid& m, const LawCheckConfig& cfg) {
  const auto e = m.identity();
  bool ok = for_pairs(m, cfg, [&](const Element& a, const Element&) {
    return m.eq(m.op(e, a), a) && m.eq(m.op(a, e), a);
  });
  if (!ok) return false;
  if (auto all = m.elements()) {
    for (const auto& a : *all)
      for (const auto& b : *all)
        for (const auto& c : *all)
          if (!m.eq(m.op(m.op(a, b), c), m.op(a, m.op(b, c)))) return false;
    return true;
  }
  std::mt19937_64 rng(cfg.seed ^ 0xa550c1a7ULL);
  for (std::size_t i = 0; i < cfg.sample_pairs; ++i) {
    auto a = m.sample(rng);
    auto b = m.sample(rng);
    auto c = m.sample(rng);
    if (!m.eq(m.op(m.op(a, b), c), m.op(a, m.op(b, c)))) return false;
  }
  return true;
}

bool is_commutative(const Monoid& m, const LawCheckConfig& cfg) {
  return for_pairs(m, cfg, [&](const Element& a, const Element& b) {
    return m.eq(m.op(a, b), m.op(b, a));
  });
}

bool is_graphic(const Monoid& m, const LawCheckConfig& cfg) {
  return for_pairs(m, cfg, [&](const Element& a, const Element& b) {
    auto ab = m.op(a, b);
    return m.eq(m.op(ab, a), ab);
  });
}

bool satisfies_variety(const Monoid& m, Variety v, const LawCheckConfig& cfg) {
  switch (v) {
    case Variety::Mon:
      return true;
    case Variety::CMon:
      return is_commutative(m, cfg);
    case Variety::GMon:
      return is_graphic(m, cfg);
  }
  return false;
}

bool check_hom(const MonoidHom& h, const LawCheckConfig& cfg) {
  if (!h.target.eq(h(h.source.identity()), h.target.identity())) return false;
  return for_pairs(h.source, cfg, [&](const Element& a, const Element& b) {
    return h.target.eq(h(h.source.op(a, b)), h.target.op(h(a), h(b)));
  });
}

}  // namespace netmod
