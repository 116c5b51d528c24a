#include "vag/vartin.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "vag/amalgam.hpp"
#include "vag/errors.hpp"

namespace vag {

  VAContext::VAContext(CoxeterGraph g, HatOptions hat)
      : graph_(std::move(g)),
        sys_(system_for(graph_)),
        hat_(hat),
        artin_(ArtinRegistry::with_builtin_affine()) {}

  VAPlugin const* VAContext::find_va_plugin(CoxeterGraph const& g) const {
    for (auto const& p : va_) {
      if (p.matches(g)) {
        return &p;
      }
    }
    return nullptr;
  }

  namespace {
    struct Restricted {
      CoxeterGraph        graph;
      std::vector<Vertex> to_parent;
      VAWord              word;
      VertexSet           x;  // image of the optional subset
    };

    Restricted restrict_to(CoxeterGraph const& g, VertexSet const& keep, VAWord const& w,
                           VertexSet const& x) {
      auto                sub = g.induced(keep);
      std::vector<Vertex> local(g.rank(), 0);
      for (Vertex i = 0; i < sub.to_parent.size(); ++i) {
        local[sub.to_parent[i]] = i;
      }
      Restricted r{sub.graph, sub.to_parent, {}, VertexSet(sub.graph.rank())};
      for (auto l : w) {
        l.v = local[l.v];
        r.word.push_back(l);
      }
      for (Vertex v : x.members()) {
        if (keep.contains(v)) {
          r.x.insert(local[v]);
        }
      }
      return r;
    }

    VAWord lift(VAWord w, std::vector<Vertex> const& to_parent) {
      for (auto& l : w) {
        l.v = to_parent[l.v];
      }
      return w;
    }

    bool spherical(CoxeterGraph const& g) {
      static std::mutex                  mu;
      static std::map<std::string, bool> cache;
      std::lock_guard                    lock(mu);
      auto                               it = cache.find(g.matrix_key());
      if (it == cache.end()) {
        it = cache.emplace(g.matrix_key(), classify_type(g) == CoxeterType::spherical).first;
      }
      return it->second;
    }

    std::string describe(CoxeterGraph const& g) {
      std::string out = "{";
      for (std::size_t i = 0; i < g.rank(); ++i) {
        out += (i ? "," : "") + g.name(static_cast<Vertex>(i));
      }
      return out + "}";
    }

    ArtinWord delta_as_artin(DeltaWord const& w) {
      ArtinWord out;
      for (auto const& l : w) {
        out.push_back({static_cast<Vertex>(l.root), l.exp});
      }
      return out;
    }

    DeltaWord artin_as_delta(ArtinWord const& w) {
      DeltaWord out;
      for (auto const& l : w) {
        out.push_back({l.v, l.exp});
      }
      return out;
    }

    // Verdicts per (graph, word), for the life of the process.
    class Memo {
     public:
      std::optional<bool> get(std::string const& key) {
        std::lock_guard lock(mu_);
        auto            it = map_.find(key);
        if (it == map_.end()) {
          return std::nullopt;
        }
        return it->second;
      }
      void put(std::string const& key, bool v) {
        std::lock_guard lock(mu_);
        map_.emplace(key, v);
      }

     private:
      std::mutex                  mu_;
      std::map<std::string, bool> map_;
    };

    Memo& memo() {
      static Memo m;
      return m;
    }

    struct Engine {
      VAContext const& ctx;
      TraceSink const& trace;
      std::size_t      max_depth;

      void log(std::size_t depth, std::string const& s) const {
        if (trace) {
          trace(std::string(2 * depth, ' ') + s);
        }
      }

      bool base(VAWord const& w, CoxeterGraph const& g, std::size_t depth) const {
        SystemPtr const sys = system_for(g);
        if (!CoxElement::from_word(sys, pi_K_star(w)).is_identity()) {
          log(depth, "base " + describe(g) + ": pi_K image is nontrivial in W");
          return false;
        }
        if (spherical(g)) {
          auto [list, mu] = kva_to_delta(sys, w, ctx.hat_options());
          CoxeterGraph const hat = list.graph();
          log(depth, "base " + describe(g) + ": kernel word over " + std::to_string(list.roots.size())
                         + " roots: " + format(mu));
          try {
            bool const t = artin_wp(delta_as_artin(mu), hat, ctx.artin_registry());
            log(depth, std::string("  hat-graph Artin word problem: ") + (t ? "trivial" : "nontrivial"));
            return t;
          } catch (UnsupportedError const& e) {
            throw UnsupportedError("va-base", std::string(e.what()) + " inside the hat graph of "
                                                  + describe(g));
          }
        }
        if (auto const* p = ctx.find_va_plugin(g)) {
          log(depth, "base " + describe(g) + ": registered oracle " + p->name);
          return p->trivial(g, w);
        }
        throw UnsupportedError("va-base", "unsupported VA base: free-of-infinity graph "
                                              + describe(g) + " of type "
                                              + to_string(classify_type(g))
                                              + " has no registered oracle");
      }

      bool wp(VAWord const& input, CoxeterGraph const& g, std::size_t depth) const {
        VAWord const w = free_reduce(input);
        if (w.empty()) {
          return true;
        }
        VertexSet const supp = support_of(g.rank(), w);
        if (supp.size() < g.rank()) {
          auto r = restrict_to(g, supp, w, VertexSet(g.rank()));
          return wp(r.word, r.graph, depth);
        }
        std::string key = g.matrix_key() + "|" + format(g, w);
        for (auto const& n : g.names()) {
          key += "|" + n;
        }
        auto const& hat = ctx.hat_options();
        key += "|" + std::to_string(ctx.split_edge()) + "/" + std::to_string(hat.slack)
               + (hat.strict ? "s" : "") + (hat.enumerate_finite ? "" : "b");
        if (auto hit = memo().get(key); hit && !trace) {
          return *hit;
        }
        bool verdict;
        auto const inf = infinite_edges(g);
        if (inf.empty()) {
          verdict = base(w, g, depth);
        } else {
          if (depth >= max_depth) {
            throw std::logic_error("va_wp: recursion deeper than the number of infinity edges");
          }
          auto const [s, t] = inf[ctx.split_edge() % inf.size()];
          VertexSet z       = g.all_vertices();
          z.erase(s);
          z.erase(t);
          log(depth, "split " + describe(g) + " on {" + g.name(s) + "," + g.name(t) + "}");
          std::vector<Block<VALetter>> blocks;
          for (auto const& l : w) {
            int f = l.v == s ? 2 : l.v == t ? 1 : (blocks.empty() ? 1 : blocks.back().factor);
            if (blocks.empty() || blocks.back().factor != f) {
              blocks.push_back({f, {}});
            }
            blocks.back().word.push_back(l);
          }
          auto factor_wp = [&](VAWord const& v) { return wp(v, g, depth + 1); };
          auto member    = [&](VAWord const& v) -> std::optional<VAWord> {
            auto r = member_in(v, z, g, factor_wp, depth + 1);
            return r.in ? r.rewrite : std::nullopt;
          };
          GroupOracle<VALetter> factor{factor_wp, member};
          auto                  id = [](VAWord const& v) { return v; };
          AmalgamTrace          sink;
          if (trace) {
            sink = [&](std::string const& s) { log(depth + 1, s); };
          }
          verdict = amalgam_wp<VALetter>(std::move(blocks), {factor, factor, id, id}, sink);
        }
        memo().put(key, verdict);
        return verdict;
      }

      // Strong membership of w (indices of g) in VA_X[g]; ambient_wp takes words
      // in the indices of g.
      MembershipResult member_in(VAWord const&                             w,
                                 VertexSet const&                          x,
                                 CoxeterGraph const&                       g,
                                 std::function<bool(VAWord const&)> const& ambient_wp,
                                 std::size_t                               depth) const {
        // Work inside the parabolic spanned by the word and x.
        VertexSet const keep = support_of(g.rank(), w) | x;
        auto            r    = restrict_to(g, keep, w, x);
        auto const&     to   = r.to_parent;
        SystemPtr const sys  = system_for(r.graph);

        auto eta = cox_member_strong(sys, pi_K_star(r.word), r.x);
        if (!eta) {
          log(depth, "member: pi_K image outside W_X");
          return {};
        }
        VAWord const w1 = concat(r.word, iota_W_star(inverse(*eta)));
        auto [list, nu] = kva_to_delta(sys, w1, ctx.hat_options());
        VertexSet y(list.roots.size());
        for (std::size_t i = 0; i < list.roots.size(); ++i) {
          if (root_in_parabolic(list.roots[i], r.x)) {
            y.insert(static_cast<Vertex>(i));
          }
        }
        CoxeterGraph const hat   = list.graph();
        ArtinWord const    nu_a  = delta_as_artin(nu);
        ArtinWord const    nu_y  = pi_X_star(system_for(hat), nu_a, y);
        VAWord const       check = expand_delta(sys, list, artin_as_delta(concat(nu_a, inverse(nu_y))));
        if (!ambient_wp(lift(check, to))) {
          log(depth, "member: kernel part outside A[hat graph on roots of X]");
          return {};
        }
        VAWord mu = concat(expand_delta(sys, list, artin_as_delta(nu_y), r.x), iota_W_star(*eta));
        log(depth, "member: in");
        return {true, lift(mu, to)};
      }
    };

    std::size_t depth_bound(VAContext const& ctx) {
      return infinite_edges(ctx.graph()).size() + 1;
    }
  }  // namespace

  void require_va_supported(VAContext const& ctx) {
    CoxeterGraph const& g = ctx.graph();
    for (auto const& clique : maximal_free_of_infinity(g, g.all_vertices())) {
      auto const sub = g.induced(clique).graph;
      if (!spherical(sub) && !ctx.find_va_plugin(sub)) {
        throw UnsupportedError("va-base", "unsupported VA base: free-of-infinity graph "
                                              + describe(sub) + " of type "
                                              + to_string(classify_type(sub))
                                              + " has no registered oracle");
      }
    }
  }

  bool va_wp(VAWord const& w, VAContext const& ctx, TraceSink const& trace) {
    require_va_supported(ctx);
    return Engine{ctx, trace, depth_bound(ctx)}.wp(w, ctx.graph(), 0);
  }

  bool va_base_wp(VAWord const& w, VAContext const& ctx, TraceSink const& trace) {
    if (!infinite_edges(ctx.graph()).empty()) {
      throw PreconditionError("va_base_wp: the graph has an infinity label");
    }
    return Engine{ctx, trace, depth_bound(ctx)}.base(free_reduce(w), ctx.graph(), 0);
  }

  MembershipResult va_member_strong(VAWord const&                             w,
                                    VertexSet const&                          x,
                                    VAContext const&                          ctx,
                                    std::function<bool(VAWord const&)> const& ambient_wp,
                                    TraceSink const&                          trace) {
    return Engine{ctx, trace, depth_bound(ctx)}.member_in(w, x, ctx.graph(), ambient_wp, 0);
  }

  MembershipResult va_member_strong(VAWord const&    w,
                                    VertexSet const& x,
                                    VAContext const& ctx,
                                    TraceSink const& trace) {
    require_va_supported(ctx);
    Engine const e{ctx, trace, depth_bound(ctx)};
    return e.member_in(w, x, ctx.graph(), [&](VAWord const& v) { return e.wp(v, ctx.graph(), 0); },
                       0);
  }

  std::vector<VertexSet> odd_components(CoxeterGraph const& g) {
    std::size_t const        n = g.rank();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) {
        v = parent[v] = parent[parent[v]];
      }
      return v;
    };
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = s + 1; t < n; ++t) {
        Label const m = g.label(s, t);
        if (!m.is_infinite() && m.value() % 2 == 1) {
          parent[find(s)] = find(t);
        }
      }
    }
    std::vector<VertexSet>             out;
    std::map<std::size_t, std::size_t> index;
    for (Vertex v = 0; v < n; ++v) {
      auto [it, fresh] = index.emplace(find(v), out.size());
      if (fresh) {
        out.emplace_back(n);
      }
      out[it->second].insert(v);
    }
    return out;
  }

  bool AbelianCertificate::nonzero() const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (sigma_sum[i] != 0 || tau_parity[i] != 0) {
        return true;
      }
    }
    return false;
  }

  AbelianCertificate abelian_certificate(CoxeterGraph const& g, VAWord const& w) {
    AbelianCertificate c;
    c.classes = odd_components(g);
    c.sigma_sum.assign(c.classes.size(), 0);
    c.tau_parity.assign(c.classes.size(), 0);
    for (auto const& l : w) {
      for (std::size_t i = 0; i < c.classes.size(); ++i) {
        if (c.classes[i].contains(l.v)) {
          if (l.kind == VAKind::sigma) {
            c.sigma_sum[i] += l.exp;
          } else {
            c.tau_parity[i] ^= 1;
          }
        }
      }
    }
    return c;
  }

}  // namespace vag
