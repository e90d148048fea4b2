#include <random>
#include <set>
#include <sstream>

#include "check_util.hpp"

namespace netmod::checks {

namespace {

const Monoid B = boolean_monoid();
const Monoid Band = path_band_monoid();

std::vector<Injection> injections(std::size_t m, std::size_t n) {
  std::vector<Injection> out;
  if (m > n) return out;
  for (const auto& subset : k_subsets(n, m)) {
    auto img = subset;
    do {
      out.emplace_back(n, img);
    } while (std::next_permutation(img.begin(), img.end()));
  }
  return out;
}

}  // namespace

CheckResult algebra_core_suite() {
  Checker c;
  auto bb = direct_product(B, Band);
  const std::vector<Monoid> finite{B, Band, bb.product, direct_product(Band, Band).product};
  for (const auto& m : finite) {
    c.expect(check_monoid_laws(m), [&] { return m.name() + " violates the monoid laws"; });
  }
  for (const auto& m : {nat_monoid(), free_monoid("ab"), direct_product(nat_monoid(), B).product}) {
    c.expect(check_monoid_laws(m), [&] { return m.name() + " violates the monoid laws on samples"; });
  }

  const auto els = Band.elements().value();
  for (const auto& a : els)
    for (const auto& b : els)
      c.expect(Band.eq(Band.op(Band.op(a, b), a), Band.op(a, b)),
               [&] { return "band: aba != ab for a=" + Band.format(a) + " b=" + Band.format(b); });
  auto p = [&](const char* s) { return Band.parse(s); };
  c.expect(!Band.eq(Band.op(p("a"), p("c")), Band.op(p("c"), p("a"))), [] { return "band: ac = ca"; });
  c.expect(!is_commutative(Band) && is_graphic(Band) && is_graphic(B) && is_commutative(B),
           [] { return "variety membership of bool or band is wrong"; });

  // Pointed-category equations on B x band.
  const auto b_elements = B.elements().value();
  for (const auto& a : b_elements) {
    c.expect(B.eq(bb.proj_l(bb.inl(a)), a), [&] { return "p_A i_A != id at " + B.format(a); });
    c.expect(Band.is_identity(bb.proj_r(bb.inl(a))), [&] { return "p_B i_A != 0 at " + B.format(a); });
  }
  for (const auto& b : els) {
    c.expect(Band.eq(bb.proj_r(bb.inr(b)), b), [&] { return "p_B i_B != id at " + Band.format(b); });
    c.expect(B.is_identity(bb.proj_l(bb.inr(b))), [&] { return "p_A i_B != 0 at " + Band.format(b); });
  }
  for (const auto& h : {bb.inl, bb.inr, bb.proj_l, bb.proj_r})
    c.expect(check_hom(h), [&] { return "a structure map of " + bb.product.name() + " is not a homomorphism"; });
  return c.finish("laws on 4 finite and 3 sampled monoids, 36 band pairs, pointed-category equations on bool x band");
}

CheckResult green_product_suite() {
  Checker c;
  std::ostringstream summary;
  // Oracle agreement at a smaller scale than the acceptance sweeps, over
  // mixed index graphs.
  const std::vector<std::pair<std::string, SimpleGraph>> graphs{
      {"path3", SimpleGraph(3, {{0, 1}, {1, 2}})},
      {"edgeless3", SimpleGraph(3)},
      {"KG(4,2)", kneser_graph(4, 2)},
  };
  std::size_t words_checked = 0;
  for (const auto& [name, g] : graphs) {
    for (auto v : {Variety::Mon, Variety::CMon, Variety::GMon}) {
      for (const auto& m : {B, Band}) {
        if (v == Variety::CMon && !is_commutative(m)) continue;
        auto ctx = GreenContext::uniform(g, m, v);
        OracleAlphabet al(*ctx);
        const std::size_t len = m == Band ? 3 : 4;
        const auto words = all_code_words(al, len);
        const auto canon = canonical_keys_serial(words, al, ctx);
        const auto keys = v == Variety::Mon ? std::vector<std::uint32_t>{} : congruence_labels_serial(al, v, len + 1);
        bool agree = v == Variety::Mon ? !compare_partitions(canon, mon_oracle_keys_serial(words, al), words.size())
                                       : !compare_partitions(canon, keys, words.size());
        c.expect(agree, [&, name = name] { return name + " " + m.name() + " " + to_string(v) + ": oracle disagrees"; });
        words_checked += words.size();

        // Canonicality: idempotent and reduced.
        for (std::size_t i = 0; i < words.size(); ++i) {
          auto x = normalize(al.decode(words[i]), ctx);
          auto again = normalize(x.word(), ctx);
          if (!c.expect(equal(x, again) && is_reduced(x.word(), *ctx), [&, name = name] {
                return name + ": normalize is not idempotent on " + describe_code_word(words[i], al, *ctx);
              }))
            break;
        }
      }
    }
  }
  summary << words_checked << " words against oracles; ";

  // Complete index graphs: prod |M_v| elements.
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<Monoid> comps(n, B);
    comps[0] = Band;
    auto ctx = GreenContext::make(complete_graph(n), comps, Variety::Mon);
    OracleAlphabet al(*ctx);
    std::size_t expected = 6;
    for (std::size_t i = 1; i < n; ++i) expected *= 2;
    // Every element is a product of at most one letter per component.
    std::set<std::string> keys;
    for (const auto& w : all_code_words(al, n)) keys.insert(al.encode(normalize(al.decode(w), ctx).word()));
    c.expect(keys.size() == expected, [&] {
      return "complete graph on " + std::to_string(n) + " vertices: " + std::to_string(keys.size()) +
             " elements, expected " + std::to_string(expected);
    });
  }

  // Associativity on enumerated elements of Gamma_{band,Mon}-style contexts.
  for (auto v : {Variety::Mon, Variety::GMon}) {
    auto ctx = GreenContext::uniform(SimpleGraph(2, {{0, 1}}), Band, v);
    OracleAlphabet al(*ctx);
    std::vector<GreenElement> xs;
    std::set<std::string> seen;
    for (const auto& w : all_code_words(al, 2)) {
      auto x = normalize(al.decode(w), ctx);
      if (seen.insert(al.encode(x.word())).second) xs.push_back(x);
    }
    for (const auto& x : xs)
      for (const auto& y : xs)
        for (const auto& z : xs)
          if (!c.expect(equal(multiply(multiply(x, y), z), multiply(x, multiply(y, z))), [&] {
                return "associativity fails for " + format_green(x) + ", " + format_green(y) + ", " + format_green(z);
              }))
            return c.finish(summary.str());
    summary << xs.size() * xs.size() * xs.size() << " associativity triples (" << to_string(v) << "); ";
  }

  // Graphic law at element level on samples.
  auto ctx = GreenContext::uniform(SimpleGraph(3, {{0, 1}}), Band, Variety::GMon);
  OracleAlphabet al(*ctx);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    Word wx, wy;
    for (auto len = rng() % 4; len > 0; --len) wx.push_back(al.letter(static_cast<std::uint8_t>(rng() % al.size())));
    for (auto len = rng() % 4; len > 0; --len) wy.push_back(al.letter(static_cast<std::uint8_t>(rng() % al.size())));
    auto x = normalize(wx, ctx), y = normalize(wy, ctx);
    auto xy = multiply(x, y);
    if (!c.expect(equal(multiply(xy, x), xy),
                  [&] { return "xyx != xy for x=" + format_green(x) + " y=" + format_green(y); }))
      break;
  }
  summary << "2000 sampled graphic-law pairs";
  return c.finish(summary.str());
}

CheckResult kneser_suite() {
  Checker c;
  for (std::size_t n = 0; n <= 8; ++n)
    for (std::size_t k = 0; k <= 3; ++k) {
      auto g = kneser_graph(n, k);
      const auto v = binomial(n, k);
      const auto e = n >= k ? v * binomial(n - k, k) / 2 : 0;
      c.expect(g.vertex_count() == v && g.edge_count() == e, [&] {
        return "KG(" + std::to_string(n) + "," + std::to_string(k) + ") has " + std::to_string(g.vertex_count()) +
               " vertices and " + std::to_string(g.edge_count()) + " edges";
      });
    }

  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n) {
      auto lax = kneser_laxator(m, n, 2);
      const auto left = binomial(m, 2);
      c.expect(lax.preserves_edges() && lax.injective(), [&] { return "laxator is not an embedding"; });
      for (std::size_t a = 0; a < left; ++a)
        for (std::size_t b = left; b < lax.vertex_map.size(); ++b)
          c.expect(lax.target.adjacent(lax.vertex_map[a], lax.vertex_map[b]), [&] {
            return "laxator (" + std::to_string(m) + "," + std::to_string(n) + "): cross-block pair not adjacent";
          });
    }

  std::size_t compositions = 0;
  for (std::size_t a = 0; a <= 5; ++a) {
    c.expect(subsets_map(Injection::identity(a), 2) == [&] {
      std::vector<std::size_t> id(binomial(a, 2));
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
      return id;
    }(), [&] { return "identity on " + std::to_string(a) + " points does not act as identity"; });
    for (std::size_t b = a; b <= 5; ++b) {
      const auto fs = injections(a, b);
      for (const auto& f : fs) {
        auto emb = kneser_embedding(f, 2);
        c.expect(emb.preserves_edges() && emb.injective() && emb.reflects_edges(),
                 [&] { return "embedding of an injection is not a graph embedding"; });
      }
      for (std::size_t cc = b; cc <= 5; ++cc) {
        const auto gs = injections(b, cc);
        for (const auto& f : fs)
          for (const auto& g : gs) {
            auto lhs = subsets_map(compose(g, f), 2);
            auto sf = subsets_map(f, 2), sg = subsets_map(g, 2);
            std::vector<std::size_t> rhs(sf.size());
            for (std::size_t i = 0; i < sf.size(); ++i) rhs[i] = sg[sf[i]];
            ++compositions;
            if (!c.expect(lhs == rhs, [&] { return "functoriality fails"; })) return c.finish("");
          }
      }
    }
  }
  return c.finish("counts for n<=8, k<=3; cross-block adjacency for m,n<=4; " + std::to_string(compositions) +
                  " composable pairs of injections");
}

CheckResult network_model_suite() {
  Checker c;
  std::ostringstream summary;
  for (const auto& m : {B, Band})
    for (auto v : {Variety::Mon, Variety::CMon, Variety::GMon}) {
      if (!satisfies_variety(m, v)) continue;
      NetworkModel model(m, v);
      std::vector<std::vector<NetworkElement>> els;
      for (std::size_t n = 0; n <= 3; ++n) els.push_back(network_elements(model, n, n == 3 ? 1 : 2));
      std::size_t cases = 0;
      for (std::size_t p = 0; p <= 3; ++p)
        for (std::size_t q = 0; p + q <= 3; ++q)
          for (const auto& g : els[p])
            for (const auto& h : els[q]) {
              ++cases;
              auto gh = model.disjoint(g, h);
              c.expect(model.equal(model.disjoint(g, model.unit(0)), g) && model.equal(model.disjoint(model.unit(0), g), g),
                       [&] { return model.name() + ": unit law fails for " + show(g, model); });
              c.expect(model.equal(model.permute(Permutation::block_swap(p, q), gh), model.disjoint(h, g)), [&] {
                return model.name() + ": symmetry fails for " + show(g, model) + ", " + show(h, model);
              });
              for (std::size_t r = 0; p + q + r <= 3; ++r)
                for (const auto& k : els[r])
                  c.expect(model.equal(model.disjoint(gh, k), model.disjoint(g, model.disjoint(h, k))), [&] {
                    return model.name() + ": associativity fails for " + show(g, model) + ", " + show(h, model) +
                           ", " + show(k, model);
                  });
            }
      // Homomorphism property of disjoint union at m = n = 2.
      for (const auto& a : els[2])
        for (const auto& b : els[2])
          for (const auto& x : els[2])
            for (const auto& y : els[2])
              c.expect(model.equal(model.overlay(model.disjoint(a, b), model.disjoint(x, y)),
                                   model.disjoint(model.overlay(a, x), model.overlay(b, y))),
                       [&] { return model.name() + ": disjoint union is not a homomorphism"; });
      summary << model.name() << ": " << cases << " lax-functor cases; ";
    }

  // Naturality in M, using the collapse N -> B applied letterwise.
  NetworkModel nat_model(nat_monoid(), Variety::Mon);
  NetworkModel bool_model(B, Variety::Mon);
  MonoidHom collapse{nat_monoid(), B, [](const Element& e) { return boolean_monoid().parse(e.as_int() > 0 ? "T" : "F"); }};
  std::mt19937_64 rng(11);
  auto random_net = [&](std::size_t n) {
    std::vector<WeightedEdge> w;
    for (auto len = rng() % 5; len > 0 && n >= 2; --len) {
      auto u = rng() % n, v = rng() % n;
      if (u != v) w.push_back({make_edge(u, v), Element(static_cast<std::int64_t>(rng() % 3))});
    }
    return nat_model.from_letters(n, w);
  };
  for (int t = 0; t < 300; ++t) {
    auto g = random_net(3), h = random_net(3), k = random_net(2);
    auto f = [&](const NetworkElement& x) { return induced_hom(collapse, x, bool_model); };
    auto sigma = Permutation::all(3)[rng() % 6];
    c.expect(bool_model.equal(f(nat_model.overlay(g, h)), bool_model.overlay(f(g), f(h))) &&
                 bool_model.equal(f(nat_model.disjoint(g, k)), bool_model.disjoint(f(g), f(k))) &&
                 bool_model.equal(f(nat_model.permute(sigma, g)), bool_model.permute(sigma, f(g))),
             [&] { return "collapse is not natural at " + show(g, nat_model) + ", " + show(h, nat_model); });
  }
  summary << "300 naturality samples; ";

  // Gamma_{B,CMon}(n) ~ SG(n) for n <= 4.
  NetworkModel cmon(B, Variety::CMon);
  OrdinaryModel sg(B);
  for (std::size_t n = 0; n <= 4; ++n) {
    auto all = sg.enumerate(n);
    for (const auto& o : all)
      c.expect(sg.equal(cmon_iso(cmon, cmon_iso_inverse(cmon, o)), o),
               [&] { return "cmon iso fails at n=" + std::to_string(n); });
  }

  // Triangle identity on the free side for n <= 3.
  for (const auto& m : {B, Band}) {
    NetworkModel model(m, Variety::GMon);
    for (std::size_t n = 0; n <= 3; ++n)
      for (const auto& g : network_elements(model, n, 2))
        c.expect(model.equal(counit_eval(model, model, g), g),
                 [&] { return model.name() + ": counit moves " + show(g, model); });
  }
  // The ordered-edge placement agrees with the double transposition.
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        for (const auto& model : {NetworkModel(B, Variety::Mon), NetworkModel(Band, Variety::GMon)}) {
          const auto values = model.edge_monoid().elements().value();
          for (const auto& x : values) {
            auto a = place_edge(model, x, edge_placement(n, i, j));
            auto b = place_edge(model, x, double_transposition(n, i, j));
            c.expect(model.equal(a, b), [&] {
              return model.name() + ": placements differ for edge " + std::to_string(i + 1) + std::to_string(j + 1);
            });
          }
        }
      }
  summary << "cmon iso for n<=4, counit triangles for n<=3, placement conventions for n<=5";
  return c.finish(summary.str());
}

CheckResult operad_algebras_suite() {
  Checker c;
  std::ostringstream summary;
  NetworkModel model(B, Variety::CMon);
  std::mt19937_64 rng(23);
  const auto T = B.parse("T");

  auto random_op = [&](std::vector<std::size_t> profile) {
    std::size_t n = 0;
    for (auto p : profile) n += p;
    auto img = Permutation::identity(n).image();
    std::shuffle(img.begin(), img.end(), rng);
    std::vector<WeightedEdge> w;
    for (auto len = rng() % 4; len > 0 && n >= 2; --len) {
      auto u = rng() % n, v = rng() % n;
      if (u != v) w.push_back({make_edge(u, v), T});
    }
    return OperadOperation(std::move(profile), Permutation(img), model.from_letters(n, w));
  };
  auto random_profile = [&](std::size_t parts, std::size_t max_size) {
    std::vector<std::size_t> p(parts);
    for (auto& x : p) x = 1 + rng() % max_size;
    return p;
  };
  auto split = [&](std::size_t n) {
    std::vector<std::size_t> parts;
    for (auto left = n; left > 0;) {
      auto part = 1 + rng() % left;
      parts.push_back(part);
      left -= part;
    }
    return parts;
  };

  // Unit laws and associativity of composition.
  std::size_t assoc = 0;
  for (int t = 0; t < 200; ++t) {
    auto outer = random_op(random_profile(1 + rng() % 3, 2));
    std::vector<OperadOperation> ids, mids;
    for (auto p : outer.profile()) ids.push_back(OperadOperation::identity(model, p));
    c.expect(operations_equal(model, operad_compose(model, outer, ids), outer), [&] {
      return "right unit law fails for " + format_operation(outer, model);
    });
    auto id_out = OperadOperation::identity(model, outer.output_size());
    auto left = operad_compose(model, id_out, {outer});
    c.expect(operations_equal(model, left, outer), [&] { return "left unit law fails for " + format_operation(outer, model); });

    std::vector<std::vector<OperadOperation>> inners;
    for (auto p : outer.profile()) {
      auto parts = split(p);
      std::vector<OperadOperation> bottom;
      for (auto q : parts) bottom.push_back(random_op(split(q)));
      mids.push_back(random_op(parts));
      inners.push_back(std::move(bottom));
    }
    std::vector<OperadOperation> flat_bottom;
    std::vector<OperadOperation> composed_mids;
    for (std::size_t i = 0; i < mids.size(); ++i) {
      composed_mids.push_back(operad_compose(model, mids[i], inners[i]));
      flat_bottom.insert(flat_bottom.end(), inners[i].begin(), inners[i].end());
    }
    auto lhs = operad_compose(model, operad_compose(model, outer, mids), flat_bottom);
    auto rhs = operad_compose(model, outer, composed_mids);
    ++assoc;
    c.expect(operations_equal(model, lhs, rhs),
             [&] { return "associativity fails with outer " + format_operation(outer, model); });
  }
  summary << "200 unit-law samples, " << assoc << " associativity samples; ";

  // Range-limited closure on random point clouds.
  auto range = std::make_shared<RangeLimit>(RangeLimit{MetricSpace::plane(), 1.5});
  for (int t = 0; t < 1000; ++t) {
    auto profile = random_profile(1 + rng() % 3, 3);
    std::vector<RangeLimitedState> states;
    for (auto p : profile) {
      std::vector<Point> pos;
      for (std::size_t v = 0; v < p; ++v) pos.push_back({double(rng() % 40) / 10.0, double(rng() % 40) / 10.0});
      states.push_back(make_range_state(range, SimpleGraph(p), pos));
    }
    auto out = act_range_limited(random_op(profile), model, states);
    if (!c.expect(satisfies_range(out), [&] { return "range invariant broken on trial " + std::to_string(t); })) break;
  }
  summary << "1000 range-limited trials; ";

  // Bounded-degree: identity acts trivially, outputs are bounded, and
  // every edge ordering of h and every word of g at n = 4 (length <= 3)
  // agree with the canonical run.
  NetworkModel gmon(B, Variety::GMon);
  for (std::size_t k = 0; k <= 3; ++k)
    for (const auto& h : bounded_graphs(4, k)) {
      auto s = make_bounded(k, h);
      c.expect(act_bounded_degree(gmon, gmon.unit(4), s).graph == h, [&] { return "identity acts nontrivially"; });
    }
  std::size_t runs = 0;
  const auto hs = bounded_graphs(4, 2);
  for (const auto& w : network_words(gmon, 4, 3)) {
    auto g = gmon.from_letters(4, w);
    std::vector<Edge> word;
    for (const auto& l : w) word.push_back(l.edge);
    for (const auto& h : hs) {
      auto expected = act_bounded_degree(gmon, g, make_bounded(2, h)).graph;
      auto order = h.edges();
      std::reverse(order.begin(), order.end());
      auto out = act_bounded_degree_word(gmon, word, make_bounded(2, h), order).graph;
      ++runs;
      if (!c.expect(out == expected && is_k_bounded(out, 2), [&] {
            return "h=" + show(h) + " word " + show(g, gmon) + ": " + show(out) + " vs " + show(expected);
          }))
        return c.finish(summary.str());
    }
  }
  summary << runs << " bounded-degree runs";
  return c.finish(summary.str());
}

CheckResult cli_suite() {
  Checker c;
  std::size_t cases = 0;
  for (const auto& m : {B, Band, free_monoid("ab")})
    for (auto v : {Variety::Mon, Variety::CMon, Variety::GMon}) {
      if (!satisfies_variety(m, v) || (v == Variety::GMon && !m.is_finite())) continue;
      NetworkModel model(m, v);
      std::vector<NetworkElement> els;
      if (m.is_finite()) {
        els = network_elements(model, 4, 2);
      } else {
        std::mt19937_64 rng(5);
        for (int t = 0; t < 200; ++t) {
          std::vector<WeightedEdge> w;
          for (auto len = rng() % 5; len > 0; --len) {
            auto u = rng() % 4, x = rng() % 4;
            if (u != x) w.push_back({make_edge(u, x), m.sample(rng)});
          }
          els.push_back(model.from_letters(4, w));
        }
      }
      for (const auto& g : els) {
        ++cases;
        const auto text = format_network(g, model);
        auto back = parse_network(text, model, 4);
        c.expect(model.equal(back, g), [&] { return model.name() + ": text round trip fails for " + text; });
        auto parsed = network_from_json(Json::parse(network_to_json(g, model).dump()));
        c.expect(parsed.model.edge_monoid() == m && parsed.model.variety() == v && model.equal(parsed.element, g),
                 [&] { return model.name() + ": JSON round trip fails for " + text; });
        const auto gtext = format_green(g.element());
        auto gw = normalize(parse_green_word(gtext, g.element().context()), g.element().context_ptr());
        c.expect(equal(gw, g.element()), [&] { return "Green literal round trip fails for " + gtext; });
        auto gj = green_from_json(Json::parse(green_to_json(g.element()).dump()), m);
        c.expect(format_green(gj) == gtext, [&] { return "Green JSON round trip fails for " + gtext; });
      }
    }
  return c.finish(std::to_string(cases) + " canonical elements round-tripped through text and JSON");
}

}  // namespace netmod::checks
