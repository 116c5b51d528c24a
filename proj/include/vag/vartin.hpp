#ifndef VAG_VARTIN_HPP_
#define VAG_VARTIN_HPP_

// Virtual Artin groups: the word problem by splitting along infinity edges
// into amalgamated products, the free-of-infinity base through the kernel
// KVA = A[hat graph], strong membership in standard parabolic subgroups, and
// an abelianisation certificate.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vag/artin.hpp"
#include "vag/hatgraph.hpp"

namespace vag {

  // An external word-problem oracle for VA[g] on a class of free-of-infinity
  // graphs.
  struct VAPlugin {
    std::string                                              name;
    std::function<bool(CoxeterGraph const&)>                 matches;
    std::function<bool(CoxeterGraph const&, VAWord const&)> trivial;
  };

  class VAContext {
   public:
    explicit VAContext(CoxeterGraph g, HatOptions hat = {});

    CoxeterGraph const& graph() const noexcept {
      return graph_;
    }
    SystemPtr const& system() const noexcept {
      return sys_;
    }
    FieldSpec const& field() const noexcept {
      return sys_->field();
    }
    HatOptions const& hat_options() const noexcept {
      return hat_;
    }
    ArtinRegistry const& artin_registry() const noexcept {
      return artin_;
    }
    void add_artin_plugin(ArtinPlugin p) {
      artin_.add(std::move(p));
    }
    void add_va_plugin(VAPlugin p) {
      va_.push_back(std::move(p));
    }
    VAPlugin const* find_va_plugin(CoxeterGraph const& g) const;

    // Which infinity edge the recursion splits on: index k selects edge
    // k mod e, e the number of infinity edges at that level. Default 0, the
    // first edge in vertex order.
    std::size_t split_edge() const noexcept {
      return split_;
    }
    void set_split_edge(std::size_t k) {
      split_ = k;
    }

   private:
    CoxeterGraph          graph_;
    SystemPtr             sys_;
    HatOptions            hat_;
    ArtinRegistry         artin_;
    std::vector<VAPlugin> va_;
    std::size_t           split_ = 0;
  };

  using TraceSink = std::function<void(std::string const&)>;

  // Raises UnsupportedError unless every maximal free-of-infinity subgraph is
  // spherical or has a registered VA oracle.
  void require_va_supported(VAContext const& ctx);

  // true iff the word is trivial in VA[g].
  bool va_wp(VAWord const& w, VAContext const& ctx, TraceSink const& trace = {});

  // The free-of-infinity base case; the graph must be free of infinity.
  bool va_base_wp(VAWord const& w, VAContext const& ctx, TraceSink const& trace = {});

  struct MembershipResult {
    bool                  in = false;
    std::optional<VAWord> rewrite;  // over the letters of x when in
  };

  // Strong membership of w in VA_X[g]; `ambient_wp` decides VA[g].
  MembershipResult va_member_strong(VAWord const&                            w,
                                    VertexSet const&                         x,
                                    VAContext const&                         ctx,
                                    std::function<bool(VAWord const&)> const& ambient_wp,
                                    TraceSink const&                         trace = {});
  // Same with ambient_wp = va_wp.
  MembershipResult va_member_strong(VAWord const&    w,
                                    VertexSet const& x,
                                    VAContext const& ctx,
                                    TraceSink const& trace = {});

  // Per class of the odd-label graph: sigma exponent sum and tau parity.
  struct AbelianCertificate {
    std::vector<VertexSet> classes;
    std::vector<long>      sigma_sum;
    std::vector<int>       tau_parity;

    bool nonzero() const;
  };

  AbelianCertificate abelian_certificate(CoxeterGraph const& g, VAWord const& w);

  // Connected components of the graph with edges {s,t}, m_{s,t} odd.
  std::vector<VertexSet> odd_components(CoxeterGraph const& g);

}  // namespace vag

#endif  // VAG_VARTIN_HPP_
