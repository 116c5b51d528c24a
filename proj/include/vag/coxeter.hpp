#ifndef VAG_COXETER_HPP_
#define VAG_COXETER_HPP_

// The Coxeter-group engine. Elements are exact matrices of the canonical
// representation rho(s)(v) = v - <v, alpha_s> alpha_s, which is faithful, so
// element equality is matrix equality. Lengths and descents come from the
// sign of w(alpha_s): l(ws) < l(w) iff w(alpha_s) is a negative root.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vag/exactfield.hpp"
#include "vag/presentation.hpp"

namespace vag {

  // A vector of V in the basis {alpha_s}.
  struct Root {
    std::vector<FieldElement> coords;

    friend bool operator==(Root const&, Root const&) = default;
    Root        operator-() const;

    // Exact text key, usable for hashing.
    std::string key() const;
  };

  class CoxeterSystem {
   public:
    explicit CoxeterSystem(CoxeterGraph graph);

    static std::shared_ptr<CoxeterSystem const> make(CoxeterGraph graph) {
      return std::make_shared<CoxeterSystem const>(std::move(graph));
    }

    CoxeterGraph const& graph() const noexcept {
      return graph_;
    }
    FieldSpec const& field() const noexcept {
      return *field_;
    }
    std::size_t rank() const noexcept {
      return graph_.rank();
    }

    // <alpha_s, alpha_t> = -2cos(pi/m_{s,t}), or -2 for infinity.
    FieldElement const& form(Vertex s, Vertex t) const {
      return form_[s * rank() + t];
    }
    FieldElement inner(Root const& a, Root const& b) const;
    // <v, alpha_s>
    FieldElement inner_simple(Root const& a, Vertex s) const;

    Root simple_root(Vertex s) const;
    Root zero_root() const;
    // s(v) = v - <v, alpha_s> alpha_s
    Root reflect(Vertex s, Root const& v) const;

    FieldElement zero() const {
      return FieldElement(*field_);
    }
    FieldElement one() const {
      return FieldElement(*field_, 1);
    }

   private:
    CoxeterGraph              graph_;
    FieldSpec const*          field_;
    std::vector<FieldElement> form_;
  };

  using SystemPtr = std::shared_ptr<CoxeterSystem const>;

  // Shared, cached system for a graph (keyed by names and labels).
  SystemPtr system_for(CoxeterGraph const& g);

  class CoxElement {
   public:
    explicit CoxElement(SystemPtr sys);  // identity

    static CoxElement generator(SystemPtr sys, Vertex s);
    static CoxElement from_word(SystemPtr sys, CoxWord const& w);

    SystemPtr const& system() const noexcept {
      return sys_;
    }
    std::size_t rank() const noexcept {
      return n_;
    }

    // this * s
    CoxElement& mul_right(Vertex s);
    // s * this
    CoxElement& mul_left(Vertex s);

    friend CoxElement operator*(CoxElement const& a, CoxElement const& b);
    CoxElement        inverse() const;

    bool is_identity() const;

    // w(alpha_s), i.e. column s of the matrix.
    Root root_image(Vertex s) const;
    Root act(Root const& v) const;

    // l(ws) < l(w)
    bool has_right_descent(Vertex s) const;
    // l(sw) < l(w)
    bool has_left_descent(Vertex s) const;

    FieldElement const& entry(std::size_t i, std::size_t j) const {
      return mat_[i * n_ + j];
    }

    friend bool operator==(CoxElement const& a, CoxElement const& b) {
      return a.mat_ == b.mat_;
    }

    // Exact matrix text, usable as a hash key.
    std::string key() const;

   private:
    SystemPtr                 sys_;
    std::size_t               n_;
    std::vector<FieldElement> mat_;
    std::vector<FieldElement> inv_;
  };

  // Whether the root is negative (all coordinates <= 0); roots are never
  // mixed-sign so one nonzero coordinate decides.
  bool is_negative_root(Root const& r);

  CoxWord shortlex_reduced(CoxElement const& w);

  std::size_t length(CoxElement const& w);

  struct MReduceCaps {
    std::size_t max_length  = 16;
    std::size_t max_closure = 1000000;
  };

  // Tits' M-operation oracle: closes the word under braid moves and deletes
  // an ss factor whenever one appears, until neither applies. Exponential.
  CoxWord m_reduce(CoxeterGraph const& g, CoxWord const& w, MReduceCaps caps = {});

  // The set of words reachable from w by type-II moves.
  std::vector<CoxWord> braid_closure(CoxeterGraph const& g,
                                     CoxWord const&      w,
                                     MReduceCaps         caps = {});

  VertexSet support(CoxElement const& w);

  // Some(reduced word over x) iff the element lies in W[Gamma_x].
  std::optional<CoxWord> cox_member_strong(SystemPtr const& sys,
                                           CoxWord const&   w,
                                           VertexSet const& x);

  struct MinimalCosetDecomposition {
    CoxElement v;  // in W[Gamma_X]
    CoxElement w;  // (X, empty)-minimal
  };

  // u = v w with l(u) = l(v) + l(w) and l(xw) > l(w) for x in X.
  MinimalCosetDecomposition left_coset_decompose(CoxElement const& u,
                                                 VertexSet const&  x);

  enum class CoxeterType { spherical, affine, other };

  std::string to_string(CoxeterType t);

  CoxeterType classify_type(CoxeterGraph const& g);

  // Symmetric elimination on the Gram matrix of the subset; returns
  // {positive semidefinite, nullity}.
  std::pair<bool, std::size_t> form_signature(CoxeterSystem const& sys,
                                              VertexSet const&     x);

  CoxElement longest_element(SystemPtr const& sys);

}  // namespace vag

#endif  // VAG_COXETER_HPP_
