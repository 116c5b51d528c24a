#ifndef VAG_ORACLES_HPP_
#define VAG_ORACLES_HPP_

// Brute-force ground truth kept deliberately separate from the production
// engines: finite-group enumeration, root BFS, exhaustive pair-orbit scans,
// a faithful free-group action for braid-like Artin groups, and relator
// fuzzers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "vag/coxeter.hpp"
#include "vag/roots.hpp"

namespace vag {

  struct EnumeratedGroup {
    SystemPtr                             sys;
    std::vector<CoxElement>               elements;  // BFS order, identity first
    std::vector<std::vector<std::size_t>> right;     // index of elements[i] * s
    std::vector<std::size_t>              length;    // BFS level = word length

    std::size_t size() const noexcept {
      return elements.size();
    }
    std::optional<std::size_t> index_of(CoxElement const& w) const;

    std::unordered_map<std::string, std::size_t> by_key;
  };

  // Throws PreconditionError unless the graph is spherical.
  EnumeratedGroup enumerate_W(SystemPtr const& sys, std::size_t cap = 200000);

  struct DepthRoot {
    Root        root;
    std::size_t depth;
  };

  // Positive roots of depth <= cap, by BFS from the simple roots; each level
  // is the set of new positive roots s(beta) with beta on the previous level.
  std::vector<DepthRoot> roots_bfs(CoxeterSystem const& sys, std::size_t depth_cap);

  // Scans every (w, s, t); returns 1 for beta = gamma and infinity when no
  // witness exists.
  Label pair_orbit_bruteforce(EnumeratedGroup const& w, Root const& beta, Root const& gamma);

  // Minimal l(w) with w(beta) negative, over an enumerated finite group.
  std::size_t depth_bruteforce(EnumeratedGroup const& w, Root const& beta);

  // Words equal to the identity in VA[g]: random relator insertions, inserted
  // cancelling pairs and conjugations. Deterministic in the seed.
  std::vector<VAWord> fuzz_relator_words(CoxeterGraph const& g,
                                         std::size_t         n,
                                         std::uint64_t       seed,
                                         std::size_t         max_length = 48);

  // The same for A[g].
  std::vector<ArtinWord> fuzz_artin_relator_words(CoxeterGraph const& g,
                                                  std::size_t         n,
                                                  std::uint64_t       seed,
                                                  std::size_t         max_length = 40);

  // Uniform integers in [0, n) from mt19937_64 with a fixed reduction, so
  // sequences do not depend on the standard library's distribution code.
  class SeededRng {
   public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}
    std::uint64_t below(std::uint64_t n) {
      return n == 0 ? 0 : gen_() % n;
    }
    bool coin() {
      return below(2) == 1;
    }

   private:
    std::mt19937_64 gen_;
  };

  // Random words for property tests.
  CoxWord   random_cox_word(SeededRng& rng, VertexSet const& x, std::size_t max_len);
  ArtinWord random_artin_word(SeededRng& rng, VertexSet const& x, std::size_t max_len);
  VAWord    random_va_word(SeededRng& rng, VertexSet const& x, std::size_t max_len);

  // Word problem in A[g] for g of type A_n or B_n, through Artin's faithful
  // action of the braid group on a free group (B_n sits inside the braid
  // group on n+1 strands via t -> sigma_1^2). Returns nullopt for other
  // graphs.
  std::optional<bool> braid_action_trivial(CoxeterGraph const& g, ArtinWord const& w);

}  // namespace vag

#endif  // VAG_ORACLES_HPP_
