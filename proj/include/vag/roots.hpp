#ifndef VAG_ROOTS_HPP_
#define VAG_ROOTS_HPP_

// Root-system computations on top of the canonical representation. The root
// system is never materialised: depth and expressions are computed greedily
// by walking a root down to a simple root.

#include <cstddef>
#include <vector>

#include "vag/coxeter.hpp"

namespace vag {

  enum class RootSign { positive, negative };

  // Throws PreconditionError on a zero or mixed-sign vector.
  RootSign root_sign(Root const& beta);

  // <beta, beta> = 2 and not mixed-sign; a cheap plausibility test.
  bool looks_like_root(CoxeterSystem const& sys, Root const& beta);

  // Index of s when beta = alpha_s.
  std::optional<Vertex> simple_index(CoxeterSystem const& sys, Root const& beta);

  // dpt(beta) for a positive root.
  std::size_t depth(CoxeterSystem const& sys, Root const& beta);

  // dpt(beta) for positive beta, dpt(-beta) + 1 for negative beta.
  std::size_t depth_plus(CoxeterSystem const& sys, Root const& beta);

  struct RootExpression {
    CoxWord eta;
    Vertex  s;
  };

  // beta = eta(alpha_s); descents chosen greatest in vertex order.
  RootExpression express_root(CoxeterSystem const& sys, Root const& beta);

  // All coordinates outside x vanish.
  bool root_in_parabolic(Root const& beta, VertexSet const& x);

  // r_beta = eta s eta^-1.
  CoxElement reflection_of(SystemPtr const& sys, Root const& beta);

  // Coordinates of a root of a full subgraph, written in the parent basis.
  Root lift_root(CoxeterSystem const&       parent,
                 Root const&                sub_root,
                 std::vector<Vertex> const& to_parent);

  // Parse "1, 0, 1/2 + t" style coordinate lists (one entry per vertex; t is
  // theta). Throws ParseError.
  Root parse_root(CoxeterSystem const& sys, std::string_view text);
  std::string format_root(Root const& r);

}  // namespace vag

#endif  // VAG_ROOTS_HPP_
