#include "vag/artin.hpp"

#include <map>
#include <mutex>

#include "vag/amalgam.hpp"
#include "vag/errors.hpp"

namespace vag {

  namespace {
    bool spherical_cached(CoxeterGraph const& g) {
      static std::mutex                  mu;
      static std::map<std::string, bool> cache;
      std::string const                  key = g.matrix_key();
      {
        std::lock_guard lock(mu);
        auto            it = cache.find(key);
        if (it != cache.end()) {
          return it->second;
        }
      }
      bool const s = classify_type(g) == CoxeterType::spherical;
      std::lock_guard lock(mu);
      cache.emplace(key, s);
      return s;
    }

    // Systems from system_for live for the whole run, so the raw pointer is a
    // stable key.
    CoxElement const& longest_cached(SystemPtr const& given) {
      SystemPtr const sys = system_for(given->graph());
      static std::mutex                                        mu;
      static std::map<CoxeterSystem const*, CoxElement const*> cache;
      {
        std::lock_guard lock(mu);
        auto            it = cache.find(sys.get());
        if (it != cache.end()) {
          return *it->second;
        }
      }
      auto*           w0 = new CoxElement(longest_element(sys));
      std::lock_guard lock(mu);
      auto [it, fresh] = cache.emplace(sys.get(), w0);
      if (!fresh) {
        delete w0;
      }
      return *it->second;
    }

    std::string describe(CoxeterGraph const& g) {
      std::string out = "{";
      for (std::size_t i = 0; i < g.rank(); ++i) {
        out += (i ? "," : "") + g.name(static_cast<Vertex>(i));
      }
      return out + "} (" + to_string(classify_type(g)) + ")";
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Retraction
  ////////////////////////////////////////////////////////////////////////

  ArtinWord pi_X_star(SystemPtr const& sys, ArtinWord const& w, VertexSet const& x) {
    ArtinWord  out;
    CoxElement prev(sys);  // w_{i-1}; u_0 = 1
    for (auto const& l : w) {
      CoxElement next = prev;
      next.mul_right(l.v);
      next = left_coset_decompose(next, x).w;
      // t_i = w s w^-1 is the reflection in w(alpha_s); it equals x exactly
      // when w(alpha_s) = +-alpha_x.
      Root const r = (l.exp > 0 ? prev : next).root_image(l.v);
      Root const a = is_negative_root(r) ? -r : r;
      for (Vertex v : x.members()) {
        if (a == sys->simple_root(v)) {
          out.push_back({v, l.exp});
          break;
        }
      }
      prev = std::move(next);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Garside normal form
  ////////////////////////////////////////////////////////////////////////

  GarsideNormalForm garside_nf(CoxeterGraph const& g, ArtinWord const& w) {
    if (!spherical_cached(g)) {
      throw PreconditionError("garside_nf: graph " + describe(g) + " is not spherical");
    }
    SystemPtr const   sys = system_for(g);
    CoxElement const& w0  = longest_cached(sys);
    auto twist            = [&](CoxElement const& a) { return w0 * a * w0; };

    // s^-1 = Delta^-1 (w_0 s); every Delta^-1 is moved to the front, twisting
    // the simples it passes.
    std::vector<CoxElement> items;
    long                    inverses = 0;
    for (std::size_t i = w.size(); i-- > 0;) {
      auto const& l = w[i];
      CoxElement  a = CoxElement::generator(sys, l.v);
      if (l.exp < 0) {
        a = w0 * a;
      }
      if (inverses % 2 == 1) {
        a = twist(a);
      }
      items.push_back(std::move(a));
      if (l.exp < 0) {
        ++inverses;
      }
    }
    std::reverse(items.begin(), items.end());

    // Left-weight adjacent pairs until stable: move s from B to A while s is
    // a left descent of B and not a right descent of A.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < items.size(); ++i) {
        CoxElement& a = items[i];
        CoxElement& b = items[i + 1];
        for (bool moved = true; moved;) {
          moved = false;
          for (Vertex s = 0; s < g.rank(); ++s) {
            if (b.has_left_descent(s) && !a.has_right_descent(s)) {
              a.mul_right(s);
              b.mul_left(s);
              moved = changed = true;
              break;
            }
          }
        }
      }
    }

    GarsideNormalForm nf;
    nf.delta_power = -inverses;
    std::size_t i  = 0;
    while (i < items.size() && items[i] == w0) {
      ++nf.delta_power;
      ++i;
    }
    for (; i < items.size(); ++i) {
      if (!items[i].is_identity()) {
        nf.factors.push_back(std::move(items[i]));
      }
    }
    return nf;
  }

  ArtinWord nf_to_word(CoxeterGraph const& g, GarsideNormalForm const& nf) {
    SystemPtr const sys = system_for(g);
    ArtinWord       out;
    CoxWord const   delta = shortlex_reduced(longest_cached(sys));
    for (long k = 0; k < std::abs(nf.delta_power); ++k) {
      if (nf.delta_power > 0) {
        for (Vertex v : delta) {
          out.push_back({v, 1});
        }
      } else {
        for (auto it = delta.rbegin(); it != delta.rend(); ++it) {
          out.push_back({*it, -1});
        }
      }
    }
    for (auto const& f : nf.factors) {
      for (Vertex v : shortlex_reduced(f)) {
        out.push_back({v, 1});
      }
    }
    return out;
  }

  std::string format_nf(CoxeterGraph const& g, GarsideNormalForm const& nf) {
    std::string out = "Delta^" + std::to_string(nf.delta_power);
    for (auto const& f : nf.factors) {
      out += " [" + format(g, shortlex_reduced(f)) + "]";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // A~_{n-1} through A(B_n)
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::optional<std::vector<Vertex>> cycle_order(CoxeterGraph const& g) {
      std::size_t const n = g.rank();
      if (n < 3) {
        return std::nullopt;
      }
      for (Vertex v = 0; v < n; ++v) {
        std::size_t threes = 0;
        for (Vertex u = 0; u < n; ++u) {
          if (u == v) {
            continue;
          }
          Label const m = g.label(u, v);
          if (m == Label(3)) {
            ++threes;
          } else if (!(m == Label(2))) {
            return std::nullopt;
          }
        }
        if (threes != 2) {
          return std::nullopt;
        }
      }
      std::vector<Vertex> order{0};
      std::vector<bool>   seen(n, false);
      seen[0] = true;
      while (order.size() < n) {
        Vertex const          cur = order.back();
        std::optional<Vertex> next;
        for (Vertex u = 0; u < n && !next; ++u) {
          if (!seen[u] && g.label(cur, u) == Label(3)) {
            next = u;
          }
        }
        if (!next) {
          return std::nullopt;  // several cycles
        }
        seen[*next] = true;
        order.push_back(*next);
      }
      return order;
    }
  }  // namespace

  bool is_affine_a_cycle(CoxeterGraph const& g) {
    return cycle_order(g).has_value();
  }

  ArtinWord affine_a_to_b(CoxeterGraph const& g, ArtinWord const& w) {
    auto const order = cycle_order(g);
    if (!order) {
      throw PreconditionError("affine_a_to_b: not an n-cycle with labels 3");
    }
    auto const        n = static_cast<Vertex>(order->size());
    std::vector<Vertex> pos(n);
    for (Vertex i = 0; i < n; ++i) {
      pos[(*order)[i]] = i;
    }
    // B_n: vertex 0 is t (label 4 with vertex 1), vertex i is sigma_i.
    ArtinWord rho{{0, 1}};
    for (Vertex i = 1; i < n; ++i) {
      rho.push_back({i, 1});
    }
    ArtinWord last = rho;
    last.push_back({n - 1, 1});
    last = concat(last, inverse(rho));

    ArtinWord out;
    for (auto const& l : w) {
      Vertex const i = pos[l.v];
      if (i + 1 < n) {
        out.push_back({i + 1, l.exp});
      } else {
        out = concat(out, l.exp > 0 ? last : inverse(last));
      }
    }
    return out;
  }

  bool affine_a_trivial(CoxeterGraph const& g, ArtinWord const& w) {
    return garside_nf(graphs::type_b(g.rank()), affine_a_to_b(g, w)).is_identity();
  }

  ArtinRegistry ArtinRegistry::with_builtin_affine() {
    ArtinRegistry r;
    r.add({"affine-A", is_affine_a_cycle, affine_a_trivial});
    return r;
  }

  ArtinPlugin const* ArtinRegistry::find(CoxeterGraph const& g) const {
    for (auto const& p : plugins_) {
      if (p.matches(g)) {
        return &p;
      }
    }
    return nullptr;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word problem
  ////////////////////////////////////////////////////////////////////////

  void require_artin_supported(CoxeterGraph const& g, ArtinRegistry const& reg) {
    for (auto const& clique : maximal_free_of_infinity(g, g.all_vertices())) {
      auto const sub = g.induced(clique).graph;
      for (auto const& comp : components(sub, sub.all_vertices())) {
        auto const part = sub.induced(comp).graph;
        if (!spherical_cached(part) && !reg.find(part)) {
          throw UnsupportedError(
              "artin-base",
              "unsupported Artin base: free-of-infinity non-spherical graph " + describe(part));
        }
      }
    }
  }

  namespace {
    bool artin_core(ArtinWord const& input, CoxeterGraph const& g, ArtinRegistry const& reg) {
      ArtinWord const w = free_reduce(input);
      if (w.empty()) {
        return true;
      }
      VertexSet const supp = support_of(g.rank(), w);
      if (supp.size() < g.rank()) {
        auto const          sub = g.induced(supp);
        std::vector<Vertex> local(g.rank());
        for (Vertex i = 0; i < sub.to_parent.size(); ++i) {
          local[sub.to_parent[i]] = i;
        }
        ArtinWord mapped;
        for (auto const& l : w) {
          mapped.push_back({local[l.v], l.exp});
        }
        return artin_core(mapped, sub.graph, reg);
      }
      if (spherical_cached(g)) {
        return garside_nf(g, w).is_identity();
      }
      auto const inf = infinite_edges(g);
      if (!inf.empty()) {
        auto const [s, t] = inf.front();
        VertexSet z       = g.all_vertices();
        z.erase(s);
        z.erase(t);
        std::vector<Block<ArtinLetter>> blocks;
        for (auto const& l : w) {
          int f = l.v == s ? 2 : l.v == t ? 1 : (blocks.empty() ? 1 : blocks.back().factor);
          if (blocks.empty() || blocks.back().factor != f) {
            blocks.push_back({f, {}});
          }
          blocks.back().word.push_back(l);
        }
        SystemPtr const sys = system_for(g);
        auto wp             = [&](ArtinWord const& v) { return artin_core(v, g, reg); };
        GroupOracle<ArtinLetter> factor{
            wp, [&](ArtinWord const& v) { return artin_member_strong(sys, v, z, wp); }};
        auto id = [](ArtinWord const& v) { return v; };
        return amalgam_wp<ArtinLetter>(std::move(blocks), {factor, factor, id, id});
      }
      auto const comps = components(g, g.all_vertices());
      if (comps.size() > 1) {
        for (auto const& c : comps) {
          ArtinWord part;
          for (auto const& l : w) {
            if (c.contains(l.v)) {
              part.push_back(l);
            }
          }
          if (!artin_core(part, g, reg)) {
            return false;
          }
        }
        return true;
      }
      if (auto const* p = reg.find(g)) {
        return p->trivial(g, w);
      }
      throw UnsupportedError("artin-base",
                             "unsupported Artin base: free-of-infinity non-spherical graph "
                                 + describe(g));
    }
  }  // namespace

  bool artin_wp(ArtinWord const& w, CoxeterGraph const& g) {
    return artin_wp(w, g, ArtinRegistry{});
  }

  bool artin_wp(ArtinWord const& w, CoxeterGraph const& g, ArtinRegistry const& reg) {
    require_artin_supported(g, reg);
    return artin_core(w, g, reg);
  }

  std::optional<ArtinWord> artin_member_strong(
      SystemPtr const&                              sys,
      ArtinWord const&                              w,
      VertexSet const&                              x,
      std::function<bool(ArtinWord const&)> const& wp) {
    ArtinWord mu = pi_X_star(sys, w, x);
    if (wp(concat(w, inverse(mu)))) {
      return mu;
    }
    return std::nullopt;
  }

  std::optional<ArtinWord> artin_member_strong(ArtinWord const&     w,
                                               CoxeterGraph const&  g,
                                               VertexSet const&     x,
                                               ArtinRegistry const& reg) {
    require_artin_supported(g, reg);
    return artin_member_strong(system_for(g), w, x, [&](ArtinWord const& v) {
      return artin_core(v, g, reg);
    });
  }

}  // namespace vag
