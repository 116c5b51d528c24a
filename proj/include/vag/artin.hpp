#ifndef VAG_ARTIN_HPP_
#define VAG_ARTIN_HPP_

// The Artin-group engine: the retraction pi_X*, strong parabolic membership,
// Garside normal forms for spherical type, and a recursive word-problem
// dispatcher (spherical base, amalgam over an infinity edge, direct-product
// splitting, registered oracles for everything else).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vag/coxeter.hpp"

namespace vag {

  // pi_X*(omega): letterwise, emits t_i^{e_i} when t_i lies in X.
  ArtinWord pi_X_star(SystemPtr const& sys, ArtinWord const& w, VertexSet const& x);

  struct GarsideNormalForm {
    long                    delta_power = 0;
    std::vector<CoxElement> factors;  // each != 1 and != w_0, left-weighted

    friend bool operator==(GarsideNormalForm const& a, GarsideNormalForm const& b) {
      return a.delta_power == b.delta_power && a.factors == b.factors;
    }
    bool is_identity() const {
      return delta_power == 0 && factors.empty();
    }
  };

  // Throws PreconditionError unless the graph is spherical.
  GarsideNormalForm garside_nf(CoxeterGraph const& g, ArtinWord const& w);

  // Delta^k followed by the ShortLex lifts of the factors.
  ArtinWord nf_to_word(CoxeterGraph const& g, GarsideNormalForm const& nf);
  std::string format_nf(CoxeterGraph const& g, GarsideNormalForm const& nf);

  // An external word-problem oracle for a class of (connected, free of
  // infinity) Coxeter graphs.
  struct ArtinPlugin {
    std::string                                                 name;
    std::function<bool(CoxeterGraph const&)>                    matches;
    std::function<bool(CoxeterGraph const&, ArtinWord const&)> trivial;
  };

  class ArtinRegistry {
   public:
    ArtinRegistry() = default;

    // Adds the A~_{n-1} oracle (n-cycles with all labels 3).
    static ArtinRegistry with_builtin_affine();

    void add(ArtinPlugin p) {
      plugins_.push_back(std::move(p));
    }
    ArtinPlugin const* find(CoxeterGraph const& g) const;

   private:
    std::vector<ArtinPlugin> plugins_;
  };

  // Raises UnsupportedError unless every maximal free-of-infinity subgraph
  // splits into spherical or registered components.
  void require_artin_supported(CoxeterGraph const& g, ArtinRegistry const& reg);

  // true iff the word is trivial in A[g]. The one-argument form uses an
  // empty registry (spherical and FC-decomposable graphs only).
  bool artin_wp(ArtinWord const& w, CoxeterGraph const& g);
  bool artin_wp(ArtinWord const& w, CoxeterGraph const& g, ArtinRegistry const& reg);

  // Some(pi_X*(w)) iff w represents an element of A[g_X]; `wp` decides A[g].
  std::optional<ArtinWord> artin_member_strong(SystemPtr const&                        sys,
                                               ArtinWord const&                        w,
                                               VertexSet const&                        x,
                                               std::function<bool(ArtinWord const&)> const& wp);
  std::optional<ArtinWord> artin_member_strong(ArtinWord const&     w,
                                               CoxeterGraph const&  g,
                                               VertexSet const&     x,
                                               ArtinRegistry const& reg = {});

  // A~_{n-1} inside A(B_n): the cycle v_1..v_n goes to sigma_1..sigma_{n-1}
  // and rho sigma_{n-1} rho^-1 with rho = t sigma_1 ... sigma_{n-1}.
  bool is_affine_a_cycle(CoxeterGraph const& g);
  ArtinWord affine_a_to_b(CoxeterGraph const& g, ArtinWord const& w);
  bool      affine_a_trivial(CoxeterGraph const& g, ArtinWord const& w);

}  // namespace vag

#endif  // VAG_ARTIN_HPP_
