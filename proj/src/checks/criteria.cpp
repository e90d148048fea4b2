#include <map>
#include <random>
#include <set>
#include <sstream>

#include "check_util.hpp"

namespace netmod::checks {

namespace {

const Monoid B = boolean_monoid();
const Monoid Band = path_band_monoid();

std::string mismatch_text(const PartitionMismatch& mm, const std::vector<std::string>& words,
                          const OracleAlphabet& al, const GreenContext& ctx, const char* a, const char* b) {
  return std::string(mm.joined_in_a ? a : b) + " identifies and " + (mm.joined_in_a ? b : a) +
         " separates " + describe_code_word(words[mm.first], al, ctx) + "  and  " +
         describe_code_word(words[mm.second], al, ctx);
}

Element T() { return B.parse("T"); }

}  // namespace

// Mon normal form vs shuffle-closure oracle.
CheckResult criterion_1() {
  Checker c;
  std::ostringstream summary;
  auto sweep = [&](const Monoid& m, std::size_t n, std::size_t len) {
    auto ctx = GreenContext::uniform(kneser_graph(n, 2), m, Variety::Mon);
    OracleAlphabet al(*ctx);
    const auto words = all_code_words(al, len);
    const auto canon = canonical_keys(words, al, ctx);
    const auto oracle = mon_oracle_keys(words, al);
    auto mm = compare_partitions(canon, oracle, words.size());
    c.expect(!mm, [&] {
      return m.name() + " n=" + std::to_string(n) + ": " +
             mismatch_text(*mm, words, al, *ctx, "canonical form", "oracle");
    });
    for (std::size_t i = 0; i < words.size() && !c.failed(); ++i) {
      c.expect(in_shuffle_closure(words[i], canon[i], al), [&] {
        return m.name() + " n=" + std::to_string(n) + ": canonical form of " +
               describe_code_word(words[i], al, *ctx) + " is not in its shuffle closure";
      });
    }
    summary << m.name() << " n=" << n << " len<=" << len << ": " << words.size() << " words, "
            << count_classes(canon, words.size()) << " classes; ";
  };
  for (std::size_t n = 2; n <= 4; ++n) sweep(B, n, 5);
  for (std::size_t n = 2; n <= 4; ++n) sweep(Band, n, 4);
  return c.finish(summary.str());
}

// CMon/GMon normal forms vs the bounded two-way congruence.
CheckResult criterion_2() {
  Checker c;
  std::ostringstream summary;
  auto sweep = [&](const Monoid& m, Variety v, std::size_t n, std::size_t len, std::size_t bound) {
    auto ctx = GreenContext::uniform(kneser_graph(n, 2), m, v);
    OracleAlphabet al(*ctx);
    const auto words = all_code_words(al, len);
    const auto canon = canonical_keys(words, al, ctx);
    const auto labels = congruence_labels(al, v, bound);
    auto mm = compare_partitions(canon, labels, words.size());
    c.expect(!mm, [&] {
      return m.name() + " " + to_string(v) + " n=" + std::to_string(n) + ": " +
             mismatch_text(*mm, words, al, *ctx, "canonical form", "oracle");
    });
    summary << m.name() << " " << to_string(v) << " n=" << n << " len<=" << len << " (oracle bound " << bound
            << "): " << count_classes(canon, words.size()) << " classes; ";
  };
  for (std::size_t n = 2; n <= 4; ++n) sweep(B, Variety::CMon, n, 5, 6);
  for (std::size_t n = 2; n <= 4; ++n) sweep(B, Variety::GMon, n, 5, 6);
  for (std::size_t n = 2; n <= 4; ++n) sweep(Band, Variety::GMon, n, 4, 5);
  summary << "band is not commutative, so it has no CMon product";
  return c.finish(summary.str());
}

// Green products over complete graphs are direct products.
CheckResult criterion_3() {
  Checker c;
  std::ostringstream summary;
  auto bb = direct_product(B, B);
  auto bbb = direct_product(bb.product, B);
  struct Case {
    std::size_t vertices;
    std::size_t expected;
    Monoid target;
    std::vector<MonoidHom> maps;
  };
  const std::vector<Case> cases{
      {2, 4, bb.product, {bb.inl, bb.inr}},
      {3, 8, bbb.product, {compose(bbb.inl, bb.inl), compose(bbb.inl, bb.inr), bbb.inr}},
  };
  for (const auto& cs : cases) {
    auto ctx = GreenContext::uniform(complete_graph(cs.vertices), B, Variety::Mon);
    OracleAlphabet al(*ctx);
    // |V| * |M| letters suffice to reach every element.
    const auto words = all_code_words(al, cs.vertices * 2);
    const auto canon = canonical_keys(words, al, ctx);
    const auto classes = count_classes(canon, words.size());
    c.expect(classes == cs.expected, [&] {
      return "K" + std::to_string(cs.vertices) + ": " + std::to_string(classes) + " elements, expected " +
             std::to_string(cs.expected);
    });
    std::set<std::string> images;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (!seen.insert(canon[i]).second) continue;
      auto x = normalize(al.decode(words[i]), ctx);
      images.insert(cs.target.format(universal_fold(x, cs.maps, cs.target)));
    }
    const auto product_size = cs.target.elements()->size();
    c.expect(images.size() == cs.expected && product_size == cs.expected, [&] {
      return "K" + std::to_string(cs.vertices) + ": fold reaches " + std::to_string(images.size()) + " of " +
             std::to_string(product_size) + " product elements";
    });
    summary << "K" << cs.vertices << ": " << classes << " elements over " << words.size()
            << " words, fold onto the direct product is bijective; ";
  }
  return c.finish(summary.str());
}

CheckResult criterion_4() {
  Checker c;
  auto kg4 = kneser_graph(4, 2);
  const std::vector<Edge> matching{{pair_index(0, 1), pair_index(2, 3)},
                                   {pair_index(0, 2), pair_index(1, 3)},
                                   {pair_index(0, 3), pair_index(1, 2)}};
  std::vector<Edge> expected;
  for (auto [a, b] : matching) expected.push_back(make_edge(a, b));
  std::sort(expected.begin(), expected.end());
  c.expect(kg4.vertex_count() == 6, [&] { return "KG(4,2) has " + std::to_string(kg4.vertex_count()) + " vertices"; });
  c.expect(kg4.edges() == expected, [&] { return "KG(4,2) edges are not 12-34, 13-24, 14-23"; });
  for (std::size_t v = 0; v < 6; ++v) c.expect(kg4.degree(v) == 1, [&] { return "KG(4,2) is not a perfect matching"; });

  auto kg5 = kneser_graph(5, 2);
  c.expect(kg5.vertex_count() == 10, [&] { return "KG(5,2) has " + std::to_string(kg5.vertex_count()) + " vertices"; });
  c.expect(kg5.edge_count() == 15, [&] { return "KG(5,2) has " + std::to_string(kg5.edge_count()) + " edges"; });
  for (std::size_t v = 0; v < 10; ++v)
    c.expect(kg5.degree(v) == 3, [&] { return "KG(5,2) vertex " + std::to_string(v) + " is not of degree 3"; });
  c.expect(girth(kg5) == 5, [&] { return "KG(5,2) has girth " + std::to_string(girth(kg5)); });

  auto kg3 = kneser_graph(3, 2);
  c.expect(kg3.vertex_count() == 3 && kg3.edge_count() == 0, [&] { return "KG(3,2) is not 3 isolated vertices"; });
  return c.finish("KG(4,2) perfect matching, KG(5,2) Petersen (10, 15, 3-regular, girth 5), KG(3,2) edgeless");
}

// (a + b) u (c + d) = (a u c) + (b u d).
CheckResult criterion_5() {
  Checker c;
  std::ostringstream summary;
  for (const auto& m : {B, Band}) {
    for (auto v : {Variety::Mon, Variety::GMon}) {
      NetworkModel model(m, v);
      const auto words = network_words(model, 2, 2);
      const auto els = network_elements(model, 2, 2);
      for (const auto& a : els)
        for (const auto& b : els)
          for (const auto& cc : els)
            for (const auto& d : els) {
              auto lhs = model.overlay(model.disjoint(a, b), model.disjoint(cc, d));
              auto rhs = model.disjoint(model.overlay(a, cc), model.overlay(b, d));
              if (!c.expect(model.equal(lhs, rhs), [&] {
                    return model.name() + ": a=" + show(a, model) + " b=" + show(b, model) + " c=" +
                           show(cc, model) + " d=" + show(d, model);
                  }))
                return c.finish("");
            }
      summary << model.name() << ": " << words.size() << " words, " << els.size() << " elements, "
              << els.size() * els.size() * els.size() * els.size() << " quadruples; ";
    }
  }
  return c.finish(summary.str());
}

// Gamma(sigma + tau)(g + h) = Gamma(sigma) g + Gamma(tau) h.
CheckResult criterion_6() {
  Checker c;
  std::ostringstream summary;
  auto run = [&](const NetworkModel& model, std::size_t n, std::size_t len) {
    const auto els = network_elements(model, n, len);
    const auto perms = Permutation::all(n);
    for (const auto& s : perms)
      for (const auto& t : perms)
        for (const auto& g : els)
          for (const auto& h : els) {
            auto lhs = model.permute(s + t, model.disjoint(g, h));
            auto rhs = model.disjoint(model.permute(s, g), model.permute(t, h));
            if (!c.expect(model.equal(lhs, rhs), [&] {
                  return model.name() + ": sigma=" + s.to_cycles() + " tau=" + t.to_cycles() + " g=" +
                         show(g, model) + " h=" + show(h, model);
                }))
              return;
          }
    summary << model.name() << " m=n=" << n << ": " << perms.size() * perms.size() * els.size() * els.size()
            << " cases; ";
  };
  for (const auto& m : {B, Band})
    for (auto v : {Variety::Mon, Variety::GMon}) run(NetworkModel(m, v), 2, 2);
  run(NetworkModel(B, Variety::CMon), 2, 2);
  // The same law one size up, where S3 acts nontrivially on edges.
  run(NetworkModel(B, Variety::Mon), 3, 2);
  return c.finish(summary.str());
}

// Gamma_{B,CMon}(4) ~ SG(4).
CheckResult criterion_7() {
  Checker c;
  NetworkModel model(B, Variety::CMon);
  OrdinaryModel sg(B);

  // Size of Gamma_{B,CMon}(4) counted from words, without the isomorphism.
  auto ctx = model.context(4);
  OracleAlphabet al(*ctx);
  const auto words = all_code_words(al, 6);
  const auto canon = canonical_keys(words, al, ctx);
  const auto size = count_classes(canon, words.size());
  c.expect(size == 64, [&] { return "Gamma_{B,CMon}(4) has " + std::to_string(size) + " elements"; });

  const auto graphs = sg.enumerate(4);
  std::vector<NetworkElement> nets;
  std::set<std::string> distinct;
  for (const auto& o : graphs) {
    auto g = cmon_iso_inverse(model, o);
    c.expect(sg.equal(cmon_iso(model, g), o), [&] { return "iso does not invert on " + show(sg.support(o)); });
    distinct.insert(format_network(g, model));
    nets.push_back(std::move(g));
  }
  c.expect(distinct.size() == 64, [&] { return "inverse iso hits " + std::to_string(distinct.size()) + " networks"; });
  std::set<std::string> seen;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!seen.insert(canon[i]).second) continue;
    NetworkElement g(4, normalize(al.decode(words[i]), ctx));
    c.expect(model.equal(cmon_iso_inverse(model, cmon_iso(model, g)), g),
             [&] { return "iso does not round-trip on " + show(g, model); });
  }

  for (const auto& g : nets)
    for (const auto& h : nets) {
      auto lhs = cmon_iso(model, model.overlay(g, h));
      auto rhs = sg.overlay(cmon_iso(model, g), cmon_iso(model, h));
      if (!c.expect(sg.equal(lhs, rhs), [&] { return "overlay: " + show(g, model) + ", " + show(h, model); }))
        return c.finish("");
    }

  std::size_t disjoint_cases = 0;
  for (std::size_t m = 0; m <= 4; ++m) {
    const auto left = sg.enumerate(m);
    const auto right = sg.enumerate(4 - m);
    for (const auto& a : left)
      for (const auto& b : right) {
        auto g = cmon_iso_inverse(model, a);
        auto h = cmon_iso_inverse(model, b);
        ++disjoint_cases;
        c.expect(sg.equal(cmon_iso(model, model.disjoint(g, h)), sg.disjoint(a, b)),
                 [&] { return "disjoint union: " + show(g, model) + ", " + show(h, model); });
      }
  }

  const auto perms = Permutation::all(4);
  for (const auto& s : perms)
    for (const auto& g : nets)
      c.expect(sg.equal(cmon_iso(model, model.permute(s, g)), sg.permute(s, cmon_iso(model, g))),
               [&] { return "action of " + s.to_cycles() + " on " + show(g, model); });

  std::ostringstream summary;
  summary << size << " elements from " << words.size() << " words; bijection on 64; 4096 overlay pairs, "
          << disjoint_cases << " disjoint-union pairs, " << perms.size() * nets.size() << " S4 cases";
  return c.finish(summary.str());
}

// xyx = xy in Gamma_{B,GMon}(n) and (xy)(bc) = xyc for x = ab.
CheckResult criterion_8() {
  Checker c;
  std::ostringstream summary;
  NetworkModel model(B, Variety::GMon);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto els = network_elements(model, n, 2);
    for (const auto& x : els)
      for (const auto& y : els) {
        auto xy = model.overlay(x, y);
        if (!c.expect(model.equal(model.overlay(xy, x), xy),
                      [&] { return "xyx != xy for x=" + show(x, model) + " y=" + show(y, model); }))
          return c.finish("");
      }
    summary << "n=" << n << ": " << els.size() * els.size() << " pairs; ";
  }

  auto commitment = [&](const auto& els, auto mul, auto eq, auto describe) {
    std::size_t cases = 0;
    for (const auto& a : els)
      for (const auto& b : els)
        for (const auto& cc : els)
          for (const auto& y : els) {
            auto x = mul(a, b);
            auto lhs = mul(mul(x, y), mul(b, cc));
            auto rhs = mul(mul(x, y), cc);
            ++cases;
            if (!c.expect(eq(lhs, rhs), [&] { return "(xy)(bc) != xyc for " + describe(a, b, cc, y); }))
              return cases;
          }
    return cases;
  };

  const auto band_els = Band.elements().value();
  auto n_band = commitment(
      band_els, [&](const Element& p, const Element& q) { return Band.op(p, q); },
      [&](const Element& p, const Element& q) { return Band.eq(p, q); },
      [&](const Element& a, const Element& b, const Element& cc, const Element& y) {
        return "a=" + Band.format(a) + " b=" + Band.format(b) + " c=" + Band.format(cc) + " y=" + Band.format(y);
      });
  summary << "commitment: " << n_band << " cases in band";
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto els = network_elements(model, n, n == 3 ? 2 : 1);
    auto cases = commitment(
        els, [&](const NetworkElement& p, const NetworkElement& q) { return model.overlay(p, q); },
        [&](const NetworkElement& p, const NetworkElement& q) { return model.equal(p, q); },
        [&](const auto& a, const auto& b, const auto& cc, const auto& y) {
          return "a=" + show(a, model) + " b=" + show(b, model) + " c=" + show(cc, model) + " y=" + show(y, model);
        });
    summary << ", " << cases << " in Gamma_{B,GMon}(" << n << ")";
  }
  return c.finish(summary.str());
}

// Bounded-degree networks over Gamma_{B,GMon}(4), k = 2.
CheckResult criterion_9() {
  Checker c;
  constexpr std::size_t n = 4, k = 2, max_len = 4;
  NetworkModel model(B, Variety::GMon);
  auto ctx = model.context(n);
  OracleAlphabet al(*ctx);

  // Classes of g-words come from the congruence oracle, not the normalizer.
  const auto labels = congruence_labels(al, Variety::GMon, max_len + 1);
  const auto words = network_words(model, n, max_len);
  std::map<std::uint32_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < words.size(); ++i) {
    Word w;
    for (const auto& [e, m] : words[i]) w.push_back({pair_index(e.first, e.second), m});
    classes[labels[code_word_index(al.encode(w), al.size())]].push_back(i);
  }

  const auto hs = bounded_graphs(n, k);
  std::vector<std::vector<std::vector<Edge>>> orders(hs.size());
  std::size_t lifts = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    auto e = hs[i].edges();
    do {
      orders[i].push_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    lifts += orders[i].size();
  }
  auto graph_index = [&](const SimpleGraph& g) -> std::size_t {
    for (std::size_t i = 0; i < hs.size(); ++i)
      if (hs[i] == g) return i;
    return hs.size();
  };

  // Representative independence; also fills act[g][h].
  std::vector<NetworkElement> elements;
  std::vector<std::vector<std::size_t>> act;
  std::size_t runs = 0;
  for (const auto& [label, members] : classes) {
    auto g = model.from_letters(n, words[members.front()]);
    std::vector<std::size_t> row;
    for (std::size_t hi = 0; hi < hs.size(); ++hi) {
      const auto expected = act_bounded_degree(model, g, make_bounded(k, hs[hi])).graph;
      c.expect(is_k_bounded(expected, k), [&] { return "output " + show(expected) + " is not 2-bounded"; });
      for (auto wi : members) {
        std::vector<Edge> word;
        for (const auto& l : words[wi]) word.push_back(l.edge);
        for (const auto& order : orders[hi]) {
          ++runs;
          auto out = act_bounded_degree_word(model, word, make_bounded(k, hs[hi]), order).graph;
          if (!c.expect(out == expected, [&] {
                return "h=" + show(hs[hi]) + ": word " + format_network(model.from_letters(n, words[wi]), model) +
                       " gives " + show(out) + ", canonical word gives " + show(expected);
              }))
            return c.finish("");
        }
      }
      row.push_back(graph_index(expected));
    }
    elements.push_back(std::move(g));
    act.push_back(std::move(row));
  }

  // act(g u g', h) = act(g', act(g, h)).
  std::map<std::string, std::vector<SimpleGraph>> memo;
  std::size_t law_cases = 0;
  for (std::size_t gi = 0; gi < elements.size(); ++gi)
    for (std::size_t gj = 0; gj < elements.size(); ++gj) {
      auto prod = model.overlay(elements[gi], elements[gj]);
      auto key = format_network(prod, model);
      auto it = memo.find(key);
      if (it == memo.end()) {
        std::vector<SimpleGraph> row;
        for (const auto& h : hs) row.push_back(act_bounded_degree(model, prod, make_bounded(k, h)).graph);
        it = memo.emplace(key, std::move(row)).first;
      }
      for (std::size_t hi = 0; hi < hs.size(); ++hi) {
        ++law_cases;
        const auto& lhs = it->second[hi];
        const auto& rhs = hs[act[gj][act[gi][hi]]];
        if (!c.expect(lhs == rhs && is_k_bounded(lhs, k), [&] {
              return "g=" + show(elements[gi], model) + " g'=" + show(elements[gj], model) + " h=" + show(hs[hi]) +
                     ": act(gg', h)=" + show(lhs) + " but act(g', act(g, h))=" + show(rhs);
            }))
          return c.finish("");
      }
    }

  std::ostringstream summary;
  summary << words.size() << " words in " << classes.size() << " classes, " << hs.size()
          << " 2-bounded graphs with " << lifts << " lifts, " << runs << " runs; action law on " << law_cases
          << " triples";
  return c.finish(summary.str());
}

// Range-limited communication networks.
CheckResult criterion_10() {
  Checker c;
  NetworkModel sg(B, Variety::CMon);

  {
    auto range = std::make_shared<RangeLimit>(RangeLimit{MetricSpace::line(), 1.0});
    std::vector<RangeLimitedState> states;
    for (double x : {0.0, 1.0, 2.0, 3.0}) states.push_back(make_range_state(range, SimpleGraph(1), {{x}}));
    OperadOperation op({1, 1, 1, 1}, Permutation::identity(4), parse_network("e(1,2)=T * e(1,3)=T", sg, 4));
    auto out = act_range_limited(op, sg, states);
    c.expect(out.graph == SimpleGraph(4, {{0, 1}}),
             [&] { return "attempting lengths 1 and 2 at L=1 gave " + show(out.graph); });
  }

  std::mt19937_64 rng(0x5a17'0010ULL);
  std::uniform_real_distribution<double> coord(0.0, 4.0), limit(0.25, 2.5);
  constexpr std::size_t trials = 1000;
  for (std::size_t t = 0; t < trials; ++t) {
    const bool plane = rng() % 2;
    auto range = std::make_shared<RangeLimit>(RangeLimit{plane ? MetricSpace::plane() : MetricSpace::line(), limit(rng)});
    const std::size_t total = 2 + rng() % 6;
    std::vector<std::size_t> profile;
    for (std::size_t left = total; left > 0;) {
      auto part = 1 + rng() % left;
      profile.push_back(part);
      left -= part;
    }
    std::vector<RangeLimitedState> states;
    SimpleGraph placed(0);
    std::vector<Point> all_pos;
    for (auto size : profile) {
      std::vector<Point> pos;
      for (std::size_t v = 0; v < size; ++v) pos.push_back(plane ? Point{coord(rng), coord(rng)} : Point{coord(rng)});
      SimpleGraph g(size);
      for (std::size_t u = 0; u < size; ++u)
        for (std::size_t v = u + 1; v < size; ++v)
          if (rng() % 2 && range->space.distance(pos[u], pos[v]) <= range->limit) g.add_edge(u, v);
      placed = graph_sum(placed, g);
      all_pos.insert(all_pos.end(), pos.begin(), pos.end());
      states.push_back(make_range_state(range, std::move(g), std::move(pos)));
    }
    auto img = Permutation::identity(total).image();
    std::shuffle(img.begin(), img.end(), rng);
    Permutation sigma(img);
    std::vector<WeightedEdge> word;
    for (std::size_t i = 0, len = rng() % 7; i < len; ++i) {
      auto u = rng() % total, v = rng() % total;
      if (u != v) word.push_back({make_edge(u, v), T()});
    }
    OperadOperation op(profile, sigma, sg.from_letters(total, word));
    auto out = act_range_limited(op, sg, states);

    // Expected: relabelled states plus the in-range edges of g.
    std::vector<Point> moved(total);
    for (std::size_t v = 0; v < total; ++v) moved[sigma(v)] = all_pos[v];
    SimpleGraph expected(total);
    for (const auto& [u, v] : placed.edges()) expected.add_edge(sigma(u), sigma(v));
    for (const auto& [e, m] : word)
      if (range->space.distance(moved[e.first], moved[e.second]) <= range->limit) expected.add_edge(e.first, e.second);
    if (!c.expect(satisfies_range(out) && out.graph == expected && out.positions == moved, [&] {
          return "trial " + std::to_string(t) + ": got " + show(out.graph) + ", expected " + show(expected);
        }))
      break;
  }
  return c.finish("4 collinear points at L=1 add exactly the length-1 edge; " + std::to_string(trials) +
                  " randomized trials keep every edge within range");
}

// Triangle identities of the free/forgetful adjunction.
CheckResult criterion_11() {
  Checker c;
  std::ostringstream summary;

  // eps at Gamma_{M,V} after Gamma(eta): Gamma_{M,V}(2) = M via eta, so
  // the composite is counit_eval with the free model as its own target.
  auto free_side = [&](const Monoid& m, Variety v, std::size_t len) {
    NetworkModel model(m, v);
    std::size_t cases = 0;
    for (std::size_t n = 0; n <= 4; ++n)
      for (const auto& w : network_words(model, n, len)) {
        auto g = model.from_letters(n, w);
        ++cases;
        if (!c.expect(model.equal(counit_eval(model, model, g), g),
                      [&] { return model.name() + ": eps(Gamma(eta)) moves " + show(g, model); }))
          return;
      }
    summary << model.name() << ": " << cases << " networks; ";
  };
  free_side(B, Variety::Mon, 3);
  free_side(B, Variety::CMon, 3);
  free_side(B, Variety::GMon, 3);
  free_side(Band, Variety::Mon, 2);
  free_side(Band, Variety::GMon, 2);

  // E(eps_F) on F(2), for F = SG and F = Gamma_N on a finite range of N.
  auto model_side = [&](const OrdinaryModel& f, const std::vector<Element>& values, Variety v) {
    NetworkModel source(f.edge_monoid(), v);
    const auto& m = f.edge_monoid();
    std::size_t cases = 0;
    for (const auto& a : values) {
      ++cases;
      c.expect(f.equal(counit_eval(f, source, source.from_edge_value(a)), f.from_edge_value(a)),
               [&] { return "E(eps) moves " + m.format(a) + " in " + m.name(); });
      for (const auto& b : values) {
        ++cases;
        std::vector<WeightedEdge> w{{{0, 1}, a}, {{0, 1}, b}};
        c.expect(f.equal(counit_eval(f, source, source.from_letters(2, w)), f.from_edge_value(m.op(a, b))),
                 [&] { return "E(eps) moves " + m.format(a) + "*" + m.format(b) + " in " + m.name(); });
      }
    }
    summary << "F(2)=" << m.name() << " from " << to_string(v) << ": " << cases << " cases; ";
  };
  OrdinaryModel simple_graphs(B);
  for (auto v : {Variety::Mon, Variety::CMon, Variety::GMon}) model_side(simple_graphs, B.elements().value(), v);
  OrdinaryModel multigraphs(nat_monoid());
  std::vector<Element> small;
  for (std::int64_t i = 0; i <= 12; ++i) small.emplace_back(i);
  for (auto v : {Variety::Mon, Variety::CMon}) model_side(multigraphs, small, v);
  return c.finish(summary.str());
}

// abab != ab in B + B.
CheckResult criterion_12() {
  Checker c;
  auto ctx = GreenContext::make(SimpleGraph(2), {B, B}, Variety::Mon);
  const Letter a{0, T()}, b{1, T()};
  const Word abab{a, b, a, b}, ab{a, b};
  c.expect(!equal(normalize(abab, ctx), normalize(ab, ctx)), [] { return "normal forms identify abab and ab"; });
  c.expect(!oracle_equal_mon(abab, ab, *ctx), [] { return "shuffle oracle identifies abab and ab"; });
  c.expect(!oracle_equal(abab, ab, *ctx, Variety::Mon, 8),
           [] { return "two-way oracle (bound 8) identifies abab and ab"; });
  c.expect(normalize(abab, ctx).length() == 4, [] { return "abab is not reduced"; });

  // Alternating words: 2L + 1 elements of length <= L.
  OracleAlphabet al(*ctx);
  for (std::size_t len = 0; len <= 8; ++len) {
    const auto words = all_code_words(al, len);
    const auto classes = count_classes(canonical_keys(words, al, ctx), words.size());
    c.expect(classes == 2 * len + 1, [&] {
      return "length <= " + std::to_string(len) + ": " + std::to_string(classes) + " elements, expected " +
             std::to_string(2 * len + 1);
    });
  }
  return c.finish("abab and ab differ by normal form and by both oracles; 2L+1 elements of length <= L for L <= 8");
}

}  // namespace netmod::checks
