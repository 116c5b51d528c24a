#ifndef VAG_PRESENTATION_HPP_
#define VAG_PRESENTATION_HPP_

// Coxeter graphs, vertex subsets, and the four word alphabets used across the
// library: Coxeter words over S, Artin words over S and its inverses,
// virtual-Artin words over sigma/tau letters, and delta words over a finite
// list of roots.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace vag {

  using Vertex = std::uint32_t;

  // An entry m_{s,t} of a Coxeter matrix: a positive integer or infinity.
  class Label {
   public:
    constexpr explicit Label(unsigned m) : m_(m) {}

    static constexpr Label infinity() {
      return Label(0);
    }

    constexpr bool is_infinite() const noexcept {
      return m_ == 0;
    }

    // Precondition: finite.
    unsigned value() const;

    std::string to_string() const;

    friend constexpr bool operator==(Label a, Label b) noexcept {
      return a.m_ == b.m_;
    }

   private:
    unsigned m_;  // 0 encodes infinity
  };

  class VertexSet {
   public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : bits_(universe, false) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    static VertexSet all(std::size_t universe);
    static VertexSet from_members(std::size_t               universe,
                                  std::vector<Vertex> const& members);

    std::size_t universe() const noexcept {
      return bits_.size();
    }
    bool contains(Vertex v) const {
      return v < bits_.size() && bits_[v];
    }
    void insert(Vertex v) {
      bits_.at(v) = true;
    }
    void erase(Vertex v) {
      bits_.at(v) = false;
    }
    std::size_t         size() const;
    bool                empty() const;
    std::vector<Vertex> members() const;

    bool      is_subset_of(VertexSet const& other) const;
    VertexSet operator&(VertexSet const& other) const;
    VertexSet operator|(VertexSet const& other) const;

    friend bool operator==(VertexSet const&, VertexSet const&) = default;

   private:
    std::vector<bool> bits_;
  };

  class CoxeterGraph;

  // The full subgraph Gamma_X with the map back to parent vertex indices.
  struct Subgraph;

  class CoxeterGraph {
   public:
    struct Edge {
      std::string a;
      std::string b;
      Label       m;
    };

    CoxeterGraph() = default;

    // Pairs not listed get label 2.
    CoxeterGraph(std::vector<std::string> names, std::vector<Edge> const& edges);

    // Full label matrix, diagonal must be 1.
    static CoxeterGraph from_matrix(std::vector<std::string>             names,
                                    std::vector<std::vector<Label>> const& m);

    static CoxeterGraph from_json(nlohmann::json const& j);
    static CoxeterGraph from_json_text(std::string_view text);
    static CoxeterGraph load(std::string const& path);

    nlohmann::json to_json() const;

    std::size_t rank() const noexcept {
      return names_.size();
    }
    std::string const& name(Vertex v) const {
      return names_.at(v);
    }
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    std::optional<Vertex> find(std::string_view name) const;
    // Throws ParseError on an unknown name.
    Vertex index(std::string_view name) const;

    Label label(Vertex s, Vertex t) const {
      return labels_[s * names_.size() + t];
    }

    Subgraph induced(VertexSet const& x) const;

    // Stable text form of the label matrix; equal keys mean equal graphs up to
    // vertex names.
    std::string matrix_key() const;

    VertexSet all_vertices() const {
      return VertexSet::all(rank());
    }

    friend bool operator==(CoxeterGraph const&, CoxeterGraph const&) = default;

   private:
    std::vector<std::string> names_;
    std::vector<Label>       labels_;
  };

  struct Subgraph {
    CoxeterGraph        graph;
    std::vector<Vertex> to_parent;
  };

  // Pairs labelled infinity, sorted in vertex order.
  std::vector<std::pair<Vertex, Vertex>> infinite_edges(CoxeterGraph const& g);

  bool free_of_infinity(CoxeterGraph const& g, VertexSet const& x);

  // Connected components of the graph whose edges are the pairs with
  // m_{s,t} != 2, restricted to x.
  std::vector<VertexSet> components(CoxeterGraph const& g, VertexSet const& x);

  // Maximal subsets of x spanning no infinity label.
  std::vector<VertexSet> maximal_free_of_infinity(CoxeterGraph const& g,
                                                  VertexSet const&    x);

  VertexSet parse_subset(CoxeterGraph const& g, std::string_view text);
  std::string format_subset(CoxeterGraph const& g, VertexSet const& x);

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  using CoxWord = std::vector<Vertex>;

  struct ArtinLetter {
    Vertex v;
    int    exp;  // +1 or -1
    friend bool operator==(ArtinLetter, ArtinLetter) = default;
  };
  using ArtinWord = std::vector<ArtinLetter>;

  enum class VAKind : std::uint8_t { sigma, tau };

  struct VALetter {
    VAKind kind;
    Vertex v;
    int    exp;  // always +1 for tau

    static VALetter sigma(Vertex v, int exp = 1) {
      return {VAKind::sigma, v, exp};
    }
    static VALetter tau(Vertex v) {
      return {VAKind::tau, v, 1};
    }
    friend bool operator==(VALetter, VALetter) = default;
  };
  using VAWord = std::vector<VALetter>;

  struct DeltaLetter {
    std::size_t root;  // index into the attached root list
    int         exp;
    friend bool operator==(DeltaLetter, DeltaLetter) = default;
  };
  using DeltaWord = std::vector<DeltaLetter>;

  // Pi(a, b, m): the alternating word a b a ... of length m.
  template <typename Letter>
  std::vector<Letter> alt_product(Letter a, Letter b, unsigned m) {
    std::vector<Letter> out;
    out.reserve(m);
    for (unsigned i = 0; i < m; ++i) {
      out.push_back(i % 2 == 0 ? a : b);
    }
    return out;
  }

  CoxWord   inverse(CoxWord const& w);
  ArtinWord inverse(ArtinWord const& w);
  VAWord    inverse(VAWord const& w);
  DeltaWord inverse(DeltaWord const& w);

  ArtinWord free_reduce(ArtinWord const& w);
  VAWord    free_reduce(VAWord const& w);
  DeltaWord free_reduce(DeltaWord const& w);

  template <typename Word>
  Word concat(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  // Letters occurring in a word.
  VertexSet support_of(std::size_t rank, CoxWord const& w);
  VertexSet support_of(std::size_t rank, ArtinWord const& w);
  VertexSet support_of(std::size_t rank, VAWord const& w);

  // Whitespace-separated tokens:
  //   Coxeter: s          Artin: s  s^-1
  //   virtual Artin: sigma:s  sigma^-1:s  tau:s
  //   delta: d<k>  d<k>^-1
  CoxWord   parse_cox_word(CoxeterGraph const& g, std::string_view text);
  ArtinWord parse_artin_word(CoxeterGraph const& g, std::string_view text);
  VAWord    parse_va_word(CoxeterGraph const& g, std::string_view text);
  DeltaWord parse_delta_word(std::size_t n_roots, std::string_view text);

  std::string format(CoxeterGraph const& g, CoxWord const& w);
  std::string format(CoxeterGraph const& g, ArtinWord const& w);
  std::string format(CoxeterGraph const& g, VAWord const& w);
  std::string format(DeltaWord const& w);

  // Defining relators of VA[g] written as words equal to the identity:
  // tau_s^2 for every s, then (v1), (v2), (v3) for every finite pair.
  std::vector<VAWord> va_relators(CoxeterGraph const& g);

  // Defining relators of A[g]: Pi(s,t,m) Pi(t,s,m)^-1 for finite pairs.
  std::vector<ArtinWord> artin_relators(CoxeterGraph const& g);

  // Helpers building common graphs: names are s0, s1, ... unless given.
  namespace graphs {
    CoxeterGraph type_a(std::size_t n);
    CoxeterGraph type_b(std::size_t n);
    CoxeterGraph dihedral(unsigned m);
    CoxeterGraph affine_a(std::size_t n);  // cycle of n >= 3 vertices
    CoxeterGraph a1xa1();
  }  // namespace graphs

}  // namespace vag

#endif  // VAG_PRESENTATION_HPP_
