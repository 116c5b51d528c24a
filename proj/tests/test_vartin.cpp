#include <gtest/gtest.h>

#include <set>

#include "vag/errors.hpp"
#include "vag/oracles.hpp"
#include "vag/vartin.hpp"

using namespace vag;

namespace {
  VAWord vw(CoxeterGraph const& g, char const* text) {
    return parse_va_word(g, text);
  }

  // s - t labelled 3, t - u labelled infinity, s and u commute.
  CoxeterGraph fc_graph() {
    return CoxeterGraph({"s", "t", "u"},
                        {{"s", "t", Label(3)}, {"t", "u", Label::infinity()}});
  }

  // Two infinity edges around a 3-edge.
  CoxeterGraph two_infinity_graph() {
    return CoxeterGraph({"s", "t", "u"}, {{"s", "t", Label::infinity()},
                                          {"t", "u", Label::infinity()},
                                          {"s", "u", Label(3)}});
  }

  CoxeterGraph square_graph() {
    return CoxeterGraph({"s", "t", "u", "v"}, {{"s", "t", Label(3)},
                                               {"t", "u", Label::infinity()},
                                               {"u", "v", Label(3)},
                                               {"v", "s", Label::infinity()}});
  }

  std::vector<CoxeterGraph> fc_graphs() {
    return {graphs::type_a(2), graphs::type_b(2), graphs::a1xa1(), fc_graph()};
  }

  std::vector<VertexSet> all_subsets(std::size_t n) {
    std::vector<VertexSet> out;
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
      VertexSet x(n);
      for (Vertex v = 0; v < n; ++v) {
        if (bits >> v & 1u) x.insert(v);
      }
      out.push_back(x);
    }
    return out;
  }

  bool equal_in(VAContext const& ctx, VAWord const& a, VAWord const& b) {
    return va_wp(concat(a, inverse(b)), ctx);
  }

  // A random word in the kernel of pi_K: a random word followed by iota of
  // a reduced word for the inverse of its projection.
  VAWord random_kernel_word(SeededRng& rng, SystemPtr const& sys, std::size_t len) {
    VAWord     w = random_va_word(rng, sys->graph().all_vertices(), len);
    CoxElement p = CoxElement::from_word(sys, pi_K_star(w));
    return concat(w, iota_W_star(shortlex_reduced(p.inverse())));
  }
}  // namespace

TEST(VaWp, RelatorsAreTrivial) {
  for (auto const& g : {graphs::type_a(2), graphs::type_b(2), graphs::a1xa1(), fc_graph(),
                        graphs::type_a(3), graphs::dihedral(5), graphs::dihedral(6),
                        two_infinity_graph()}) {
    VAContext ctx(g);
    for (auto const& r : va_relators(g)) {
      EXPECT_TRUE(va_wp(r, ctx)) << g.matrix_key() << ": " << format(g, r);
      EXPECT_TRUE(CoxElement::from_word(ctx.system(), pi_K_star(r)).is_identity());
      EXPECT_FALSE(abelian_certificate(g, r).nonzero());
    }
  }
}

TEST(VaBaseWp, Examples) {
  auto      g = graphs::type_a(2);
  VAContext ctx(g);
  EXPECT_TRUE(va_base_wp(vw(g, "tau:s tau:s"), ctx));
  EXPECT_FALSE(va_base_wp(vw(g, "sigma:s tau:s"), ctx));
  EXPECT_TRUE(va_base_wp(vw(g, "sigma:s tau:t tau:s sigma^-1:t tau:s tau:t"), ctx));
  EXPECT_THROW(va_base_wp(vw(fc_graph(), "sigma:s"), VAContext(fc_graph())), PreconditionError);
}

// sigma_s tau_t tau_s tau_t^-1 tau_s^-1 sigma_t^-1 has projection tsts,
// which is not 1 in W(A_2); the (v3) relation for m = 3 is
// sigma_s tau_t tau_s = tau_t tau_s sigma_t.
TEST(VaBaseWp, UnbalancedV3Literal) {
  auto      g = graphs::type_a(2);
  VAContext ctx(g);
  VAWord    lit = vw(g, "sigma:s tau:t tau:s tau^-1:t tau^-1:s sigma^-1:t");
  EXPECT_FALSE(CoxElement::from_word(ctx.system(), pi_K_star(lit)).is_identity());
  EXPECT_FALSE(va_wp(lit, ctx));
  EXPECT_TRUE(va_wp(vw(g, "sigma:s tau:t tau:s sigma^-1:t tau:s tau:t"), ctx));
}

TEST(VaWp, NontrivialityBattery) {
  auto      a2 = graphs::type_a(2);
  VAContext ctx(a2);
  {
    VAWord w = vw(a2, "sigma:s");
    EXPECT_FALSE(va_wp(w, ctx));
    auto c = abelian_certificate(a2, w);
    ASSERT_EQ(c.classes.size(), 1u);
    EXPECT_EQ(c.sigma_sum[0], 1);
  }
  {
    VAWord w = vw(a2, "tau:s");
    EXPECT_FALSE(va_wp(w, ctx));
    EXPECT_FALSE(CoxElement::from_word(ctx.system(), pi_K_star(w)).is_identity());
  }
  {
    VAWord                   w = vw(a2, "tau:s sigma:s tau:s sigma:s");
    std::vector<std::string> log;
    EXPECT_FALSE(va_wp(w, ctx, [&](std::string const& s) { log.push_back(s); }));
    EXPECT_TRUE(CoxElement::from_word(ctx.system(), pi_K_star(w)).is_identity());
    EXPECT_EQ(abelian_certificate(a2, w).sigma_sum[0], 2);
    EXPECT_FALSE(log.empty());
  }
  {
    auto                     g = fc_graph();
    VAContext                fc(g);
    VAWord                   w = vw(g, "sigma:t sigma:u sigma^-1:t sigma^-1:u");
    std::vector<std::string> log;
    EXPECT_FALSE(va_wp(w, fc, [&](std::string const& s) { log.push_back(s); }));
    EXPECT_FALSE(abelian_certificate(g, w).nonzero());
    bool alternation = false;
    for (auto const& line : log) {
      alternation |= line.find("no block in H") != std::string::npos;
    }
    EXPECT_TRUE(alternation);
    EXPECT_FALSE(va_member_strong(vw(g, "sigma:t"), VertexSet(3, {0}), fc).in);
    EXPECT_FALSE(va_member_strong(vw(g, "sigma:u"), VertexSet(3, {0}), fc).in);
  }
}

TEST(VaWp, AbelianExamples) {
  auto g = graphs::a1xa1();
  auto w = vw(g, "tau:s tau:t tau:s tau:t");
  auto c = abelian_certificate(g, w);
  EXPECT_FALSE(c.nonzero());
  EXPECT_TRUE(va_wp(w, VAContext(g)));
  // B_2: the 4-edge is even, so s and t fall into separate classes
  EXPECT_EQ(odd_components(graphs::type_b(2)).size(), 2u);
  EXPECT_EQ(odd_components(graphs::type_a(3)).size(), 1u);
}

TEST(VaWp, FuzzedRelatorWordsAreTrivial) {
  for (auto const& g : fc_graphs()) {
    VAContext ctx(g);
    for (auto const& w : fuzz_relator_words(g, 300, 5)) {
      EXPECT_TRUE(va_wp(w, ctx)) << g.matrix_key() << ": " << format(g, w);
    }
  }
}

TEST(VaWp, CertificatesNeverContradicted) {
  SeededRng rng(21);
  for (auto const& g : fc_graphs()) {
    VAContext ctx(g);
    for (int k = 0; k < 150; ++k) {
      VAWord     w       = random_va_word(rng, g.all_vertices(), 10);
      bool const trivial = va_wp(w, ctx);
      if (abelian_certificate(g, w).nonzero()) {
        EXPECT_FALSE(trivial) << format(g, w);
      }
      if (trivial) {
        EXPECT_TRUE(CoxElement::from_word(ctx.system(), pi_K_star(w)).is_identity());
      }
    }
  }
}

TEST(VaWp, SplitEdgeDoesNotChangeVerdicts) {
  SeededRng rng(8);
  for (auto const& g : {two_infinity_graph(), square_graph()}) {
    std::size_t const      e = infinite_edges(g).size();
    std::vector<VAContext> ctxs;
    for (std::size_t k = 0; k < e; ++k) {
      ctxs.emplace_back(g);
      ctxs.back().set_split_edge(k);
    }
    auto fuzz = fuzz_relator_words(g, 100, 9, 24);
    for (int i = 0; i < 200; ++i) {
      VAWord w;
      if (i % 2 == 0) {
        w = random_va_word(rng, g.all_vertices(), 8);
      } else {
        // a trivial word with one letter removed or kept
        w = fuzz[i / 2];
        if (rng.coin() && !w.empty()) w.erase(w.begin() + rng.below(w.size()));
      }
      bool const first = va_wp(w, ctxs[0]);
      for (std::size_t k = 1; k < e; ++k) {
        EXPECT_EQ(va_wp(w, ctxs[k]), first) << format(g, w) << " edge " << k;
      }
    }
  }
}

TEST(VaMember, Examples) {
  auto      g = graphs::type_a(2);
  VAContext ctx(g);
  VertexSet x(2, {0});
  EXPECT_FALSE(va_member_strong(vw(g, "sigma:t"), x, ctx).in);
  auto r = va_member_strong(vw(g, "tau:s sigma:s tau:s"), x, ctx);
  ASSERT_TRUE(r.in);
  ASSERT_TRUE(r.rewrite.has_value());
  EXPECT_TRUE(support_of(2, *r.rewrite).is_subset_of(x));
  EXPECT_TRUE(equal_in(ctx, *r.rewrite, vw(g, "tau:s sigma:s tau:s")));
  // tau_t sigma_s tau_t = delta of alpha_s + alpha_t, outside VA_{s}
  EXPECT_FALSE(va_member_strong(vw(g, "tau:t sigma:s tau:t"), x, ctx).in);
  // tau_s tau_t sigma_s tau_t tau_s = sigma_t by (v3)
  auto r2 = va_member_strong(vw(g, "tau:s tau:t sigma:s tau:t tau:s"), VertexSet(2, {1}), ctx);
  ASSERT_TRUE(r2.in);
  EXPECT_TRUE(equal_in(ctx, *r2.rewrite, vw(g, "sigma:t")));
}

TEST(VaMember, WordsOverXAreInWithEqualRewrite) {
  SeededRng rng(4);
  for (auto const& g : fc_graphs()) {
    VAContext ctx(g);
    for (auto const& x : all_subsets(g.rank())) {
      for (int k = 0; k < 25; ++k) {
        VAWord w = random_va_word(rng, x, 8);
        auto   r = va_member_strong(w, x, ctx);
        ASSERT_TRUE(r.in) << format(g, w) << " in " << format_subset(g, x);
        EXPECT_TRUE(support_of(g.rank(), *r.rewrite).is_subset_of(x));
        EXPECT_TRUE(equal_in(ctx, *r.rewrite, w)) << format(g, w);
      }
    }
  }
}

TEST(VaMember, RewritesAreSoundOnRandomWords) {
  SeededRng rng(14);
  for (auto const& g : fc_graphs()) {
    VAContext ctx(g);
    for (auto const& x : all_subsets(g.rank())) {
      for (int k = 0; k < 15; ++k) {
        VAWord w = random_va_word(rng, g.all_vertices(), 6);
        auto   r = va_member_strong(w, x, ctx);
        if (r.in) {
          EXPECT_TRUE(support_of(g.rank(), *r.rewrite).is_subset_of(x));
          EXPECT_TRUE(equal_in(ctx, *r.rewrite, w));
        }
      }
    }
  }
}

// VA_X and VA_Y meet in VA_{X cap Y}. Words of the intersection are hidden
// behind relator insertions so they use letters from outside it.
TEST(VaMember, IntersectionOfParabolics) {
  SeededRng rng(6);
  for (auto const& g : fc_graphs()) {
    VAContext ctx(g);
    auto      rels = va_relators(g);
    auto      subs = all_subsets(g.rank());
    for (auto const& x : subs) {
      for (auto const& y : subs) {
        VertexSet const xy = x & y;
        for (int k = 0; k < 4; ++k) {
          VAWord w = random_va_word(rng, xy, 6);
          VAWord r = rels[rng.below(rels.size())];
          w.insert(w.begin() + rng.below(w.size() + 1), r.begin(), r.end());
          auto in_x  = va_member_strong(w, x, ctx);
          auto in_y  = va_member_strong(w, y, ctx);
          auto in_xy = va_member_strong(w, xy, ctx);
          EXPECT_TRUE(in_x.in && in_y.in && in_xy.in) << format(g, w);
          if (in_xy.in) {
            EXPECT_TRUE(support_of(g.rank(), *in_xy.rewrite).is_subset_of(xy));
            EXPECT_TRUE(equal_in(ctx, *in_xy.rewrite, w));
          }
        }
        for (int k = 0; k < 4; ++k) {
          VAWord w    = random_va_word(rng, x, 6);
          bool   in_y = va_member_strong(w, y, ctx).in;
          EXPECT_EQ(in_y, va_member_strong(w, xy, ctx).in) << format(g, w);
        }
      }
    }
  }
}

TEST(VaMember, ExampleSigmaTAsConjugate) {
  auto      g = graphs::type_a(2);
  VAContext ctx(g);
  auto      sys = ctx.system();
  VAWord    gg  = vw(g, "sigma:s sigma:t");
  VAWord    p   = concat(concat(gg, vw(g, "sigma:s")), inverse(gg));
  VAWord    q   = concat(concat(gg, vw(g, "tau:s")), inverse(gg));
  EXPECT_TRUE(pi_K_star(vw(g, "sigma:t")).empty());
  EXPECT_EQ(pi_K_star(vw(g, "tau:t")), (CoxWord{1}));
  EXPECT_TRUE(CoxElement::from_word(sys, pi_K_star(p)).is_identity());
  EXPECT_EQ(CoxElement::from_word(sys, pi_K_star(q)), CoxElement::generator(sys, 0));
  EXPECT_FALSE(va_wp(vw(g, "sigma:t"), ctx));
  EXPECT_TRUE(equal_in(ctx, vw(g, "sigma:t"), p));
  EXPECT_TRUE(va_member_strong(p, VertexSet(2, {1}), ctx).in);
  EXPECT_TRUE(va_member_strong(vw(g, "sigma:t"), VertexSet(2, {1}), ctx).in);
  EXPECT_FALSE(va_member_strong(p, VertexSet(2, {0}), ctx).in);
}

TEST(Kva, ExpansionIsSound) {
  SeededRng rng(2);
  for (auto const& g : fc_graphs()) {
    VAContext ctx(g);
    for (int k = 0; k < 60; ++k) {
      VAWord w        = random_kernel_word(rng, ctx.system(), 10);
      auto [list, mu] = kva_to_delta(ctx.system(), w);
      EXPECT_TRUE(equal_in(ctx, expand_delta(ctx.system(), list, mu), w)) << format(g, w);
    }
  }
}

// delta_beta does not depend on the expression beta = w(alpha_s).
TEST(Kva, DeltaIsWellDefined) {
  for (auto const& g : fc_graphs()) {
    VAContext ctx(g);
    auto      sys = ctx.system();
    // reduced words of all elements of length <= 4
    std::vector<CoxWord>  words{{}};
    std::vector<CoxElement> elems{CoxElement(sys)};
    std::set<std::string> seen{elems[0].key()};
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i].size() == 4) continue;
      for (Vertex s = 0; s < g.rank(); ++s) {
        CoxElement e = elems[i];
        e.mul_right(s);
        if (seen.insert(e.key()).second) {
          words.push_back(concat(words[i], CoxWord{s}));
          elems.push_back(e);
        }
      }
    }
    std::size_t compared = 0;
    for (auto const& d : roots_bfs(*sys, 4)) {
      VAWord const ref = xi(sys, d.root);
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (Vertex s = 0; s < g.rank(); ++s) {
          if (!(elems[i].root_image(s) == d.root)) continue;
          VAWord alt = iota_W_star(words[i]);
          alt.push_back(VALetter::sigma(s));
          alt = concat(alt, iota_W_star(inverse(words[i])));
          EXPECT_TRUE(equal_in(ctx, alt, ref)) << format(g, alt) << " vs " << format(g, ref);
          ++compared;
        }
      }
    }
    EXPECT_GT(compared, 0u);
  }
}

TEST(VaWp, UnsupportedBaseIsReported) {
  VAContext ctx(graphs::affine_a(3));
  auto      g = ctx.graph();
  try {
    va_wp(vw(g, "sigma:s sigma:t sigma:u"), ctx);
    FAIL() << "expected UnsupportedError";
  } catch (UnsupportedError const& e) {
    EXPECT_EQ(e.stage(), "va-base");
  }
  // a registered oracle lifts the restriction
  ctx.add_va_plugin({"test", [](CoxeterGraph const& h) { return h.rank() == 3; },
                     [](CoxeterGraph const&, VAWord const& w) { return w.empty(); }});
  EXPECT_FALSE(va_wp(vw(g, "sigma:s sigma:t sigma:u"), ctx));
}

// alpha_s, alpha_t and -(alpha_s + alpha_t) have pairwise form -1, so their
// deltas span an affine A_2 triangle in the hat graph of A_2.
TEST(VaWp, AffineTriangleInsideTheHatGraphOfA2) {
  auto      g = graphs::type_a(2);
  VAContext ctx(g);
  auto      sys = ctx.system();
  Root      top = sys->simple_root(0);
  top.coords[1] = sys->one();
  RootList list = make_root_list(sys, {sys->simple_root(0), sys->simple_root(1), -top});
  EXPECT_EQ(classify_type(list.graph()), CoxeterType::affine);
  auto word = [&](char const* d) { return expand_delta(sys, list, parse_delta_word(3, d)); };
  // braid relations among the three deltas hold
  EXPECT_TRUE(va_wp(word("d0 d2 d0 d2^-1 d0^-1 d2^-1"), ctx));
  EXPECT_TRUE(va_wp(word("d1 d2 d1 d2^-1 d1^-1 d2^-1"), ctx));
  // commutators and a product around the cycle do not vanish
  EXPECT_FALSE(va_wp(word("d0 d2 d0^-1 d2^-1"), ctx));
  EXPECT_FALSE(va_wp(word("d0 d1 d2 d0^-1 d1^-1 d2^-1"), ctx));
  // the sweep recovers the triangle and the verdict goes through the
  // registered affine oracle
  std::vector<std::string> log;
  va_wp(word("d0 d1 d2 d0^-1 d1^-1 d2^-1"), ctx, [&](std::string const& s) { log.push_back(s); });
  bool three_roots = false;
  for (auto const& l : log) three_roots |= l.find("over 3 roots") != std::string::npos;
  EXPECT_TRUE(three_roots);
  // without the affine oracle, the same question is unsupported
  EXPECT_THROW(artin_wp(parse_artin_word(list.graph(), "d0 d1 d2 d0^-1 d1^-1 d2^-1"),
                        list.graph(), ArtinRegistry{}),
               UnsupportedError);
}
