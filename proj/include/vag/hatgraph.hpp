#ifndef VAG_HATGRAPH_HPP_
#define VAG_HATGRAPH_HPP_

// The hat graph on the root system: pair labels m^_{beta,gamma}, the words
// xi(beta) realising delta_beta, and the sweep turning a word of the kernel
// KVA into a word over the delta generators.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vag/coxeter.hpp"
#include "vag/roots.hpp"

namespace vag {

  struct HatOptions {
    std::size_t slack  = 4;      // extra length allowed in the witness search
    bool        strict = false;  // raise instead of answering infinity at the bound
    // Decide spherical pairs by scanning the enumerated group; off, they go
    // through the bounded search like everything else.
    bool enumerate_finite = true;
  };

  // Which stage settled a label; useful for diagnostics and tests.
  enum class HatStage { equal, opposite, form_filter, exhaustive, search_found, search_bound };

  struct HatDecision {
    Label    label;
    HatStage stage;
  };

  HatDecision hat_label_decision(SystemPtr const& sys,
                                 Root const&      beta,
                                 Root const&      gamma,
                                 HatOptions       opts = {});

  // Cached per (system, {beta, gamma}).
  Label hat_label(SystemPtr const& sys, Root const& beta, Root const& gamma, HatOptions opts = {});

  // The finite restriction of the hat graph to a list of roots.
  struct RootList {
    std::vector<Root>               roots;
    std::vector<std::vector<Label>> matrix;

    // Vertices named d0, d1, ...
    CoxeterGraph graph() const;
  };

  RootList make_root_list(SystemPtr const& sys, std::vector<Root> roots, HatOptions opts = {});

  // Letterwise projections between VA and W.
  CoxWord pi_K_star(VAWord const& w);
  VAWord  iota_W_star(CoxWord const& w);

  // iota(eta) sigma_s iota(eta)^-1 with beta = eta(alpha_s). With x given,
  // beta must lie in the span of x and the word then uses only x-letters.
  VAWord xi(SystemPtr const& sys, Root const& beta, std::optional<VertexSet> const& x = {});

  // Expands a delta word through xi.
  VAWord expand_delta(SystemPtr const&                sys,
                      RootList const&                 list,
                      DeltaWord const&                w,
                      std::optional<VertexSet> const& x = {});

  // Requires pi_K(w) = 1. Roots are listed in order of first occurrence.
  std::pair<RootList, DeltaWord> kva_to_delta(SystemPtr const& sys,
                                              VAWord const&    w,
                                              HatOptions       opts = {});

}  // namespace vag

#endif  // VAG_HATGRAPH_HPP_
