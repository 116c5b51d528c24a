#ifndef VAG_PARALLEL_HPP_
#define VAG_PARALLEL_HPP_

// Batch kernels. Each has a serial reference and an OpenMP version that
// must return identical results; the shared caches underneath are locked.

#include <vector>

#include "vag/hatgraph.hpp"
#include "vag/vartin.hpp"

namespace vag {

  enum class Verdict { trivial, nontrivial, unsupported, inconclusive };

  char const* to_string(Verdict v);

  std::vector<Verdict> batch_va_wp_serial(std::vector<VAWord> const& words, VAContext const& ctx);
  std::vector<Verdict> batch_va_wp(std::vector<VAWord> const& words, VAContext const& ctx);

  // Label matrix over a list of roots.
  std::vector<std::vector<Label>> hat_matrix_serial(SystemPtr const&         sys,
                                                    std::vector<Root> const& roots,
                                                    HatOptions               opts = {});
  std::vector<std::vector<Label>> hat_matrix(SystemPtr const&         sys,
                                             std::vector<Root> const& roots,
                                             HatOptions               opts = {});

  std::vector<CoxWord> batch_shortlex_serial(SystemPtr const& sys, std::vector<CoxWord> const& words);
  std::vector<CoxWord> batch_shortlex(SystemPtr const& sys, std::vector<CoxWord> const& words);

  // Threads OpenMP will use for the batch kernels.
  int parallel_threads();

}  // namespace vag

#endif  // VAG_PARALLEL_HPP_
