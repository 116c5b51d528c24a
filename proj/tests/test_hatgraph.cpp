#include <gtest/gtest.h>

#include "vag/errors.hpp"
#include "vag/hatgraph.hpp"
#include "vag/oracles.hpp"

using namespace vag;

namespace {
  Root combo(CoxeterSystem const& sys, std::vector<long> c) {
    Root r = sys.zero_root();
    for (std::size_t i = 0; i < c.size(); ++i) {
      r.coords[i] = FieldElement(sys.field(), c[i]);
    }
    return r;
  }

  CoxeterGraph h3() {
    return CoxeterGraph({"s", "t", "u"}, {{"s", "t", Label(5)}, {"t", "u", Label(3)}});
  }

  std::vector<CoxeterGraph> spherical_graphs() {
    return {graphs::type_a(2), graphs::type_b(2),   graphs::type_a(3),
            graphs::dihedral(5), graphs::dihedral(6), graphs::a1xa1(),
            graphs::type_b(3)};
  }

  // Every root of a finite system, positives first.
  std::vector<Root> all_roots(CoxeterSystem const& sys) {
    std::vector<Root> out;
    for (auto const& d : roots_bfs(sys, 64)) {
      out.push_back(d.root);
    }
    std::size_t const n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(-out[i]);
    }
    return out;
  }

  VAWord vw(CoxeterGraph const& g, char const* text) {
    return parse_va_word(g, text);
  }
}  // namespace

TEST(HatLabel, Examples) {
  auto a2 = system_for(graphs::type_a(2));
  Root as = a2->simple_root(0);
  Root at = a2->simple_root(1);
  EXPECT_EQ(hat_label(a2, as, at), Label(3));
  EXPECT_EQ(hat_label(a2, as, as), Label(1));
  auto d = hat_label_decision(a2, as, -as);
  EXPECT_EQ(d.label, Label::infinity());
  EXPECT_EQ(d.stage, HatStage::opposite);
}

TEST(HatLabel, FormFilterInDihedralSix) {
  // Two reflections of I_2(6) whose product has order 3: their roots have
  // form value -1, which matches no label of the graph.
  auto sys   = system_for(graphs::dihedral(6));
  auto roots = all_roots(*sys);
  auto w     = enumerate_W(sys);
  FieldElement const minus_one(sys->field(), -1);
  std::size_t        found = 0;
  for (auto const& b : roots) {
    for (auto const& c : roots) {
      if (sys->inner(b, c) == minus_one) {
        auto d = hat_label_decision(sys, b, c);
        EXPECT_EQ(d.label, Label::infinity());
        EXPECT_EQ(d.stage, HatStage::form_filter);
        EXPECT_EQ(pair_orbit_bruteforce(w, b, c), Label::infinity());
        ++found;
      }
    }
  }
  EXPECT_GT(found, 0u);
}

TEST(HatLabel, AgreesWithBruteForce) {
  for (auto const& g : spherical_graphs()) {
    auto sys   = system_for(g);
    auto w     = enumerate_W(sys);
    auto roots = all_roots(*sys);
    for (auto const& b : roots) {
      for (auto const& c : roots) {
        EXPECT_EQ(hat_label(sys, b, c), pair_orbit_bruteforce(w, b, c))
            << g.matrix_key() << " " << format_root(b) << " " << format_root(c);
      }
    }
  }
}

TEST(HatLabel, AgreesWithBruteForceOnH3) {
  auto sys   = system_for(h3());
  auto w     = enumerate_W(sys);
  auto roots = all_roots(*sys);
  ASSERT_EQ(w.size(), 120u);
  ASSERT_EQ(roots.size(), 30u);
  for (std::size_t i = 0; i < roots.size(); i += 3) {
    for (auto const& c : roots) {
      EXPECT_EQ(hat_label(sys, roots[i], c), pair_orbit_bruteforce(w, roots[i], c));
    }
  }
}

// The bounded search, run where the exhaustive answer is known.
TEST(HatLabel, BoundedSearchReproducesExhaustive) {
  HatOptions search;
  search.enumerate_finite = false;
  search.strict           = false;
  for (auto const& g : spherical_graphs()) {
    auto sys   = system_for(g);
    auto w     = enumerate_W(sys);
    auto roots = all_roots(*sys);
    for (auto const& b : roots) {
      for (auto const& c : roots) {
        auto d = hat_label_decision(sys, b, c, search);
        EXPECT_EQ(d.label, pair_orbit_bruteforce(w, b, c))
            << g.matrix_key() << " " << format_root(b) << " " << format_root(c);
        if (d.label == Label::infinity()) {
          continue;
        }
        EXPECT_EQ(d.stage == HatStage::search_found || d.stage == HatStage::equal, true);
      }
    }
  }
}

// At the default slack, strict mode never fires on a pair that has a witness.
TEST(HatLabel, StrictModeNeverFiresOnFiniteLabels) {
  HatOptions search;
  search.enumerate_finite = false;
  search.strict           = true;
  for (auto const& g : spherical_graphs()) {
    auto sys   = system_for(g);
    auto w     = enumerate_W(sys);
    auto roots = all_roots(*sys);
    for (auto const& b : roots) {
      for (auto const& c : roots) {
        if (pair_orbit_bruteforce(w, b, c) == Label::infinity()) {
          continue;
        }
        EXPECT_NO_THROW(hat_label_decision(sys, b, c, search));
      }
    }
  }
}

// Too small a bound: (-alpha_s, -alpha_t) in I_2(6) needs w = w_0 of
// length 6 but the bound with no slack is 2 + 2.
TEST(HatLabel, StrictModeRaisesAtTheBound) {
  auto sys = system_for(graphs::dihedral(6));
  HatOptions tight;
  tight.enumerate_finite = false;
  tight.slack            = 0;
  Root a                 = -sys->simple_root(0);
  Root b                 = -sys->simple_root(1);
  auto d                 = hat_label_decision(sys, a, b, tight);
  EXPECT_EQ(d.label, Label::infinity());
  EXPECT_EQ(d.stage, HatStage::search_bound);
  tight.strict = true;
  EXPECT_THROW(hat_label_decision(sys, a, b, tight), InconclusiveError);
  tight.slack = 1;
  EXPECT_THROW(hat_label_decision(sys, a, b, tight), InconclusiveError);
  tight.slack = 2;
  EXPECT_EQ(hat_label_decision(sys, a, b, tight).label, Label(6));
}

TEST(HatLabel, BoundedSearchOnH3) {
  HatOptions search;
  search.enumerate_finite = false;
  auto sys   = system_for(h3());
  auto w     = enumerate_W(sys);
  auto roots = all_roots(*sys);
  for (auto const& b : roots) {
    for (auto const& c : roots) {
      EXPECT_EQ(hat_label_decision(sys, b, c, search).label, pair_orbit_bruteforce(w, b, c))
          << format_root(b) << " " << format_root(c);
    }
  }
}

TEST(HatLabel, SymmetryAndOrbitInvariance) {
  SeededRng rng(11);
  for (auto const& g : spherical_graphs()) {
    auto sys   = system_for(g);
    auto roots = all_roots(*sys);
    for (int k = 0; k < 200; ++k) {
      Root const& b = roots[rng.below(roots.size())];
      Root const& c = roots[rng.below(roots.size())];
      CoxElement  u = CoxElement::from_word(sys, random_cox_word(rng, g.all_vertices(), 10));
      Label const m = hat_label(sys, b, c);
      EXPECT_EQ(hat_label(sys, c, b), m);
      EXPECT_EQ(hat_label(sys, u.act(b), u.act(c)), m);
    }
  }
}

// Labels computed inside Gamma_X agree with labels computed in Gamma.
TEST(HatLabel, ParabolicSubgraphIsomorphism) {
  for (auto const& g : {graphs::type_a(3), graphs::type_b(3), h3()}) {
    auto parent = system_for(g);
    for (unsigned bits = 1; bits < (1u << g.rank()); ++bits) {
      VertexSet x(g.rank());
      for (Vertex v = 0; v < g.rank(); ++v) {
        if (bits >> v & 1u) x.insert(v);
      }
      auto sub   = g.induced(x);
      auto child = system_for(sub.graph);
      auto roots = all_roots(*child);
      for (auto const& b : roots) {
        for (auto const& c : roots) {
          Root lb = lift_root(*parent, b, sub.to_parent);
          Root lc = lift_root(*parent, c, sub.to_parent);
          EXPECT_EQ(hat_label(child, b, c), hat_label(parent, lb, lc));
        }
      }
    }
  }
}

TEST(Xi, Examples) {
  auto g   = graphs::type_a(2);
  auto sys = system_for(g);
  EXPECT_EQ(xi(sys, sys->simple_root(0)), vw(g, "sigma:s"));
  EXPECT_EQ(xi(sys, combo(*sys, {1, 1})), vw(g, "tau:t sigma:s tau:t"));
  EXPECT_EQ(xi(sys, -sys->simple_root(0), VertexSet(2, {0})), vw(g, "tau:s sigma:s tau:s"));
  EXPECT_THROW(xi(sys, combo(*sys, {1, 1}), VertexSet(2, {0})), PreconditionError);
}

TEST(Xi, UsesOnlyLettersOfX) {
  for (auto const& g : {graphs::type_a(3), graphs::type_b(3), graphs::affine_a(3)}) {
    auto sys = system_for(g);
    for (auto const& d : roots_bfs(*sys, 5)) {
      VertexSet supp(g.rank());
      for (Vertex v = 0; v < g.rank(); ++v) {
        if (d.root.coords[v].sign() != 0) supp.insert(v);
      }
      for (Root const& r : {d.root, -d.root}) {
        auto w = xi(sys, r, supp);
        EXPECT_TRUE(support_of(g.rank(), w).is_subset_of(supp));
        // xi(beta) = iota(eta) sigma_s iota(eta)^-1 with eta(alpha_s) = beta
        CoxWord eta;
        for (std::size_t i = 0; i + 1 < (w.size() + 1) / 2; ++i) eta.push_back(w[i].v);
        Vertex s = w[w.size() / 2].v;
        EXPECT_EQ(CoxElement::from_word(sys, eta).root_image(s), r);
      }
    }
  }
}

TEST(KvaToDelta, Examples) {
  auto g   = graphs::type_a(2);
  auto sys = system_for(g);
  {
    auto [list, mu] = kva_to_delta(sys, vw(g, "sigma:s"));
    ASSERT_EQ(list.roots.size(), 1u);
    EXPECT_EQ(list.roots[0], sys->simple_root(0));
    EXPECT_EQ(mu, (DeltaWord{{0, 1}}));
  }
  {
    auto [list, mu] = kva_to_delta(sys, vw(g, "tau:t sigma:s tau:t"));
    ASSERT_EQ(list.roots.size(), 1u);
    EXPECT_EQ(list.roots[0], combo(*sys, {1, 1}));
    EXPECT_EQ(mu, (DeltaWord{{0, 1}}));
  }
  {
    auto [list, mu] = kva_to_delta(sys, vw(g, "sigma:s sigma^-1:t"));
    ASSERT_EQ(list.roots.size(), 2u);
    EXPECT_EQ(list.roots[0], sys->simple_root(0));
    EXPECT_EQ(list.roots[1], sys->simple_root(1));
    EXPECT_EQ(mu, (DeltaWord{{0, 1}, {1, -1}}));
    EXPECT_EQ(list.matrix[0][1], Label(3));
    EXPECT_EQ(list.graph().label(0, 1), Label(3));
  }
  {
    auto [list, mu] = kva_to_delta(sys, vw(g, "tau:s sigma:s tau:s sigma:s"));
    ASSERT_EQ(list.roots.size(), 2u);
    EXPECT_EQ(list.roots[0], -sys->simple_root(0));
    EXPECT_EQ(list.matrix[0][1], Label::infinity());
  }
  EXPECT_THROW(kva_to_delta(sys, vw(g, "tau:s")), PreconditionError);
}

TEST(Projections, Examples) {
  auto g = graphs::type_a(2);
  EXPECT_TRUE(pi_K_star(vw(g, "sigma:s sigma^-1:t")).empty());
  EXPECT_EQ(pi_K_star(vw(g, "tau:s tau:t")), (CoxWord{0, 1}));
  EXPECT_EQ(pi_K_star(vw(g, "tau:s sigma:s tau:s")), (CoxWord{0, 0}));
  EXPECT_TRUE(iota_W_star({}).empty());
  EXPECT_EQ(iota_W_star({0}), vw(g, "tau:s"));
  EXPECT_EQ(iota_W_star({0, 1, 0}), vw(g, "tau:s tau:t tau:s"));
  SeededRng rng(3);
  for (int k = 0; k < 100; ++k) {
    CoxWord w = random_cox_word(rng, g.all_vertices(), 12);
    EXPECT_EQ(pi_K_star(iota_W_star(w)), w);
  }
}
