#include "vag/hatgraph.hpp"

#include <deque>
#include <memory>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "vag/errors.hpp"
#include "vag/oracles.hpp"

namespace vag {

  namespace {
    // Finite groups are enumerated once per graph. Keys are the shared systems
    // from system_for, which live for the whole run.
    EnumeratedGroup const* enumeration_for(SystemPtr const& given) {
      SystemPtr const sys = system_for(given->graph());
      static std::mutex                                                         mu;
      static std::map<CoxeterSystem const*, std::unique_ptr<EnumeratedGroup>> cache;
      {
        std::lock_guard lock(mu);
        auto            it = cache.find(sys.get());
        if (it != cache.end()) {
          return it->second.get();
        }
      }
      auto            e = std::make_unique<EnumeratedGroup>(enumerate_W(sys));
      std::lock_guard lock(mu);
      auto [it, fresh] = cache.emplace(sys.get(), std::move(e));
      return it->second.get();
    }

    bool is_spherical(SystemPtr const& given) {
      SystemPtr const sys = system_for(given->graph());
      static std::mutex                                  mu;
      static std::map<CoxeterSystem const*, bool> cache;
      std::lock_guard                                    lock(mu);
      auto                                               it = cache.find(sys.get());
      if (it == cache.end()) {
        it = cache.emplace(sys.get(), classify_type(sys->graph()) == CoxeterType::spherical)
                 .first;
      }
      return it->second;
    }

    // The unique finite label m with <alpha_s, alpha_t> = -2cos(pi/m) equal to v.
    std::optional<unsigned> form_candidate(CoxeterSystem const& sys, FieldElement const& v) {
      auto const& g = sys.graph();
      for (Vertex s = 0; s < g.rank(); ++s) {
        for (Vertex t = s + 1; t < g.rank(); ++t) {
          if (!g.label(s, t).is_infinite() && sys.form(s, t) == v) {
            return g.label(s, t).value();
          }
        }
      }
      return std::nullopt;
    }

    bool is_simple_pair(CoxeterSystem const& sys, Root const& a, Root const& b, unsigned m) {
      auto s = simple_index(sys, a);
      if (!s) {
        return false;
      }
      auto t = simple_index(sys, b);
      return t && *s != *t && sys.graph().label(*s, *t) == Label(m);
    }
  }  // namespace

  HatDecision hat_label_decision(SystemPtr const& sys,
                                 Root const&      beta,
                                 Root const&      gamma,
                                 HatOptions       opts) {
    if (beta == gamma) {
      return {Label(1), HatStage::equal};
    }
    if (beta == -gamma) {
      return {Label::infinity(), HatStage::opposite};
    }
    auto const m = form_candidate(*sys, sys->inner(beta, gamma));
    if (!m) {
      return {Label::infinity(), HatStage::form_filter};
    }
    auto const& g = sys->graph();
    if (opts.enumerate_finite && is_spherical(sys)) {
      auto const* w = enumeration_for(sys);
      for (auto const& e : w->elements) {
        for (Vertex s = 0; s < g.rank(); ++s) {
          if (!(e.root_image(s) == beta)) {
            continue;
          }
          for (Vertex t = 0; t < g.rank(); ++t) {
            if (t != s && g.label(s, t) == Label(*m) && e.root_image(t) == gamma) {
              return {Label(*m), HatStage::exhaustive};
            }
          }
        }
      }
      return {Label::infinity(), HatStage::exhaustive};
    }
    // Breadth-first search over pairs (u(beta), u(gamma)), u built from simple
    // reflections, for a simple pair with the candidate label.
    std::size_t const bound = depth_plus(*sys, beta) + depth_plus(*sys, gamma) + opts.slack;
    using Pair              = std::pair<Root, Root>;
    std::unordered_set<std::string> seen{beta.key() + "#" + gamma.key()};
    std::vector<Pair>               level{{beta, gamma}};
    for (std::size_t d = 0;; ++d) {
      for (auto const& [a, b] : level) {
        if (is_simple_pair(*sys, a, b, *m)) {
          return {Label(*m), HatStage::search_found};
        }
      }
      if (d == bound || level.empty()) {
        break;
      }
      std::vector<Pair> next;
      for (auto const& [a, b] : level) {
        for (Vertex s = 0; s < g.rank(); ++s) {
          Root ra = sys->reflect(s, a);
          Root rb = sys->reflect(s, b);
          if (seen.insert(ra.key() + "#" + rb.key()).second) {
            next.emplace_back(std::move(ra), std::move(rb));
          }
        }
      }
      level = std::move(next);
    }
    if (opts.strict) {
      throw InconclusiveError("hat_label: no witness within length " + std::to_string(bound)
                              + " for " + format_root(beta) + " and " + format_root(gamma));
    }
    return {Label::infinity(), HatStage::search_bound};
  }

  Label hat_label(SystemPtr const& sys, Root const& beta, Root const& gamma, HatOptions opts) {
    static std::mutex                                   mu;
    static std::unordered_map<std::string, Label>       cache;
    std::string ka = beta.key();
    std::string kb = gamma.key();
    if (kb < ka) {
      std::swap(ka, kb);
    }
    std::string const key = sys->graph().matrix_key() + "/"
                            + std::to_string(opts.slack) + (opts.strict ? "s" : "")
                            + (opts.enumerate_finite ? "/" : "b/") + ka + "#" + kb;
    {
      std::lock_guard lock(mu);
      auto            it = cache.find(key);
      if (it != cache.end()) {
        return it->second;
      }
    }
    Label const l = hat_label_decision(sys, beta, gamma, opts).label;
    std::lock_guard lock(mu);
    cache.emplace(key, l);
    return l;
  }

  CoxeterGraph RootList::graph() const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      names.push_back("d" + std::to_string(i));
    }
    return CoxeterGraph::from_matrix(names, matrix);
  }

  RootList make_root_list(SystemPtr const& sys, std::vector<Root> roots, HatOptions opts) {
    RootList out;
    out.roots           = std::move(roots);
    std::size_t const n = out.roots.size();
    out.matrix.assign(n, std::vector<Label>(n, Label(1)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        out.matrix[i][j] = out.matrix[j][i] = hat_label(sys, out.roots[i], out.roots[j], opts);
      }
    }
    return out;
  }

  CoxWord pi_K_star(VAWord const& w) {
    CoxWord out;
    for (auto const& l : w) {
      if (l.kind == VAKind::tau) {
        out.push_back(l.v);
      }
    }
    return out;
  }

  VAWord iota_W_star(CoxWord const& w) {
    VAWord out;
    for (Vertex v : w) {
      out.push_back(VALetter::tau(v));
    }
    return out;
  }

  VAWord xi(SystemPtr const& sys, Root const& beta, std::optional<VertexSet> const& x) {
    if (x && !root_in_parabolic(beta, *x)) {
      throw PreconditionError("xi: root " + format_root(beta) + " is not in the span of "
                              + format_subset(sys->graph(), *x));
    }
    RootExpression const e = express_root(*sys, beta);
    if (x) {
      // descents of a root in the span of x are letters of x
      for (Vertex v : e.eta) {
        if (!x->contains(v)) {
          throw std::logic_error("xi: expression leaves the parabolic subgroup");
        }
      }
    }
    VAWord out = iota_W_star(e.eta);
    out.push_back(VALetter::sigma(e.s, 1));
    VAWord const back = iota_W_star(inverse(e.eta));
    out.insert(out.end(), back.begin(), back.end());
    return out;
  }

  VAWord expand_delta(SystemPtr const&                sys,
                      RootList const&                 list,
                      DeltaWord const&                w,
                      std::optional<VertexSet> const& x) {
    std::vector<VAWord> cache(list.roots.size());
    VAWord              out;
    for (auto const& l : w) {
      if (cache[l.root].empty()) {
        cache[l.root] = xi(sys, list.roots[l.root], x);
      }
      VAWord const piece = l.exp > 0 ? cache[l.root] : inverse(cache[l.root]);
      out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
  }

  std::pair<RootList, DeltaWord> kva_to_delta(SystemPtr const& sys,
                                              VAWord const&    w,
                                              HatOptions       opts) {
    if (!CoxElement::from_word(sys, pi_K_star(w)).is_identity()) {
      throw PreconditionError("kva_to_delta: the word does not lie in the kernel of pi_K");
    }
    std::vector<Root>                            roots;
    std::unordered_map<std::string, std::size_t> index;
    DeltaWord                                    out;
    CoxElement                                   u(sys);
    for (auto const& l : w) {
      if (l.kind == VAKind::tau) {
        u.mul_right(l.v);
        continue;
      }
      Root        r   = u.root_image(l.v);
      std::string key = r.key();
      auto        it  = index.find(key);
      if (it == index.end()) {
        it = index.emplace(std::move(key), roots.size()).first;
        roots.push_back(std::move(r));
      }
      out.push_back({it->second, l.exp});
    }
    return {make_root_list(sys, std::move(roots), opts), std::move(out)};
  }

}  // namespace vag
