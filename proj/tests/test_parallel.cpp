#include <gtest/gtest.h>

#include "vag/oracles.hpp"
#include "vag/parallel.hpp"

using namespace vag;

TEST(Parallel, BatchWordProblemMatchesSerial) {
  auto g = CoxeterGraph({"s", "t", "u"}, {{"s", "t", Label(3)}, {"t", "u", Label::infinity()}});
  std::vector<VAWord> words = fuzz_relator_words(g, 150, 1, 30);
  SeededRng           rng(5);
  for (int k = 0; k < 150; ++k) words.push_back(random_va_word(rng, g.all_vertices(), 10));
  VAContext ctx(g);
  auto      serial = batch_va_wp_serial(words, ctx);
  auto      omp    = batch_va_wp(words, ctx);
  EXPECT_EQ(serial, omp);
  for (std::size_t i = 0; i < 150; ++i) EXPECT_EQ(serial[i], Verdict::trivial);

  VAContext affine(graphs::affine_a(3));
  auto      v = batch_va_wp({parse_va_word(affine.graph(), "sigma:s")}, affine);
  EXPECT_EQ(v[0], Verdict::unsupported);
}

TEST(Parallel, HatMatrixMatchesSerial) {
  for (auto const& g : {graphs::type_b(3), graphs::affine_a(3)}) {
    auto              sys = system_for(g);
    std::vector<Root> roots;
    for (auto const& d : roots_bfs(*sys, 4)) {
      roots.push_back(d.root);
      roots.push_back(-d.root);
    }
    EXPECT_EQ(hat_matrix(sys, roots), hat_matrix_serial(sys, roots));
  }
}

TEST(Parallel, BatchShortlexMatchesSerial) {
  auto                 sys = system_for(graphs::type_a(3));
  SeededRng            rng(9);
  std::vector<CoxWord> words;
  for (int k = 0; k < 500; ++k) words.push_back(random_cox_word(rng, sys->graph().all_vertices(), 20));
  EXPECT_EQ(batch_shortlex(sys, words), batch_shortlex_serial(sys, words));
  EXPECT_GE(parallel_threads(), 1);
}
