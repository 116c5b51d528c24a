#include "vag/oracles.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "vag/errors.hpp"

namespace vag {

  std::optional<std::size_t> EnumeratedGroup::index_of(CoxElement const& w) const {
    auto it = by_key.find(w.key());
    if (it == by_key.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  EnumeratedGroup enumerate_W(SystemPtr const& sys, std::size_t cap) {
    if (classify_type(sys->graph()) != CoxeterType::spherical) {
      throw PreconditionError("enumerate_W: the Coxeter group is infinite");
    }
    EnumeratedGroup out;
    out.sys = sys;
    out.elements.emplace_back(sys);
    out.length.push_back(0);
    out.by_key.emplace(out.elements.front().key(), 0);
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
      std::vector<std::size_t> row;
      for (Vertex s = 0; s < sys->rank(); ++s) {
        CoxElement next = out.elements[i];
        next.mul_right(s);
        std::string key = next.key();
        auto        it  = out.by_key.find(key);
        if (it == out.by_key.end()) {
          if (out.elements.size() >= cap) {
            throw CapExceeded("enumerate_W: more than " + std::to_string(cap) + " elements");
          }
          it = out.by_key.emplace(std::move(key), out.elements.size()).first;
          out.elements.push_back(std::move(next));
          out.length.push_back(out.length[i] + 1);
        }
        row.push_back(it->second);
      }
      out.right.push_back(std::move(row));
    }
    return out;
  }

  std::vector<DepthRoot> roots_bfs(CoxeterSystem const& sys, std::size_t depth_cap) {
    std::vector<DepthRoot>          out;
    std::unordered_set<std::string> seen;
    std::vector<Root>               level;
    for (Vertex s = 0; s < sys.rank(); ++s) {
      level.push_back(sys.simple_root(s));
      seen.insert(level.back().key());
    }
    for (std::size_t d = 1; d <= depth_cap && !level.empty(); ++d) {
      std::vector<Root> next;
      for (auto const& beta : level) {
        out.push_back({beta, d});
        for (Vertex s = 0; s < sys.rank(); ++s) {
          Root gamma = sys.reflect(s, beta);
          if (root_sign(gamma) == RootSign::positive && seen.insert(gamma.key()).second) {
            next.push_back(std::move(gamma));
          }
        }
      }
      level = std::move(next);
    }
    return out;
  }

  Label pair_orbit_bruteforce(EnumeratedGroup const& w, Root const& beta, Root const& gamma) {
    if (beta == gamma) {
      return Label(1);
    }
    CoxeterGraph const& g = w.sys->graph();
    for (auto const& e : w.elements) {
      for (Vertex s = 0; s < g.rank(); ++s) {
        if (!(e.root_image(s) == beta)) {
          continue;
        }
        for (Vertex t = 0; t < g.rank(); ++t) {
          if (t != s && !g.label(s, t).is_infinite() && e.root_image(t) == gamma) {
            return g.label(s, t);
          }
        }
      }
    }
    return Label::infinity();
  }

  std::size_t depth_bruteforce(EnumeratedGroup const& w, Root const& beta) {
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w.length[i] < best && is_negative_root(w.elements[i].act(beta))) {
        best = w.length[i];
      }
    }
    return best;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fuzzers
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename Word, typename RandomLetter, typename Inv>
    std::vector<Word> fuzz(std::vector<Word> const& relators,
                           std::size_t              n,
                           std::uint64_t            seed,
                           std::size_t              max_length,
                           RandomLetter             letter,
                           Inv                      inv) {
      SeededRng         rng(seed);
      std::vector<Word> out;
      out.reserve(n);
      for (std::size_t k = 0; k < n; ++k) {
        Word              w;
        std::size_t const ops = 1 + rng.below(8);
        for (std::size_t i = 0; i < ops; ++i) {
          Word next = w;
          switch (rng.below(4)) {
            case 0:
            case 1: {
              if (relators.empty()) {
                break;
              }
              Word r = relators[rng.below(relators.size())];
              if (rng.coin()) {
                r = inv(r);
              }
              // a cyclic rotation of a relator is still trivial
              std::rotate(r.begin(), r.begin() + rng.below(r.size()), r.end());
              next.insert(next.begin() + rng.below(next.size() + 1), r.begin(), r.end());
              break;
            }
            case 2: {
              auto const x = letter(rng);
              Word       pair{x};
              pair.push_back(inv(Word{x}).front());
              next.insert(next.begin() + rng.below(next.size() + 1), pair.begin(), pair.end());
              break;
            }
            default: {
              auto const x = letter(rng);
              next.insert(next.begin(), x);
              next.push_back(inv(Word{x}).front());
              break;
            }
          }
          if (next.size() > max_length) {
            break;
          }
          w = std::move(next);
        }
        out.push_back(std::move(w));
      }
      return out;
    }
  }  // namespace

  std::vector<VAWord> fuzz_relator_words(CoxeterGraph const& g,
                                         std::size_t         n,
                                         std::uint64_t       seed,
                                         std::size_t         max_length) {
    auto const rank = g.rank();
    if (rank == 0) {
      return std::vector<VAWord>(n);  // the trivial group: only the empty word
    }
    return fuzz<VAWord>(
        va_relators(g), n, seed, max_length,
        [rank](SeededRng& rng) {
          auto const v = static_cast<Vertex>(rng.below(rank));
          switch (rng.below(3)) {
            case 0:
              return VALetter::sigma(v, 1);
            case 1:
              return VALetter::sigma(v, -1);
            default:
              return VALetter::tau(v);
          }
        },
        [](VAWord const& w) { return inverse(w); });
  }

  std::vector<ArtinWord> fuzz_artin_relator_words(CoxeterGraph const& g,
                                                  std::size_t         n,
                                                  std::uint64_t       seed,
                                                  std::size_t         max_length) {
    auto const rank = g.rank();
    if (rank == 0) {
      return std::vector<ArtinWord>(n);  // the trivial group: only the empty word
    }
    return fuzz<ArtinWord>(
        artin_relators(g), n, seed, max_length,
        [rank](SeededRng& rng) {
          auto const v = static_cast<Vertex>(rng.below(rank));
          return ArtinLetter{v, rng.coin() ? 1 : -1};
        },
        [](ArtinWord const& w) { return inverse(w); });
  }

  CoxWord random_cox_word(SeededRng& rng, VertexSet const& x, std::size_t max_len) {
    auto const m = x.members();
    CoxWord    w;
    if (m.empty()) {
      return w;
    }
    std::size_t const len = rng.below(max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(m[rng.below(m.size())]);
    }
    return w;
  }

  ArtinWord random_artin_word(SeededRng& rng, VertexSet const& x, std::size_t max_len) {
    ArtinWord w;
    for (Vertex v : random_cox_word(rng, x, max_len)) {
      w.push_back({v, rng.coin() ? 1 : -1});
    }
    return w;
  }

  VAWord random_va_word(SeededRng& rng, VertexSet const& x, std::size_t max_len) {
    VAWord w;
    for (Vertex v : random_cox_word(rng, x, max_len)) {
      switch (rng.below(3)) {
        case 0:
          w.push_back(VALetter::sigma(v, 1));
          break;
        case 1:
          w.push_back(VALetter::sigma(v, -1));
          break;
        default:
          w.push_back(VALetter::tau(v));
      }
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Braid action on a free group
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using FreeWord = std::vector<int>;  // +-(j+1) for x_j^{+-1}

    void push_reduced(FreeWord& w, int x) {
      if (!w.empty() && w.back() == -x) {
        w.pop_back();
      } else {
        w.push_back(x);
      }
    }

    FreeWord substitute(FreeWord const& w, std::vector<FreeWord> const& images) {
      FreeWord out;
      for (int x : w) {
        FreeWord const& im = images[std::abs(x) - 1];
        if (x > 0) {
          for (int y : im) {
            push_reduced(out, y);
          }
        } else {
          for (auto it = im.rbegin(); it != im.rend(); ++it) {
            push_reduced(out, -*it);
          }
        }
      }
      return out;
    }

    // Vertices of a path component in order, starting at `start`.
    std::vector<Vertex> walk_path(CoxeterGraph const& g, VertexSet const& comp, Vertex start) {
      std::vector<Vertex> order{start};
      Vertex              prev = start;
      Vertex              cur  = start;
      for (;;) {
        std::optional<Vertex> next;
        for (Vertex v : comp.members()) {
          if (v != cur && v != prev && !(g.label(cur, v) == Label(2))) {
            next = v;
          }
        }
        if (!next || std::find(order.begin(), order.end(), *next) != order.end()) {
          break;
        }
        prev = cur;
        cur  = *next;
        order.push_back(cur);
      }
      return order;
    }

    // Braid images (as sequences of +-(i+1) for sigma_i^{+-1}) of the vertices of
    // one component, or nullopt when it is not of type A or B.
    std::optional<std::vector<std::vector<int>>> braid_images(CoxeterGraph const& g,
                                                              VertexSet const&    comp,
                                                              std::size_t&        strands) {
      auto const mem = comp.members();
      // degrees and edge labels
      std::vector<Vertex> ends;
      std::size_t         edges = 0;
      for (Vertex v : mem) {
        std::size_t deg = 0;
        for (Vertex u : mem) {
          if (u == v || g.label(u, v) == Label(2)) {
            continue;
          }
          Label const m = g.label(u, v);
          if (m.is_infinite() || (m.value() != 3 && m.value() != 4)) {
            return std::nullopt;
          }
          ++deg;
        }
        if (deg > 2) {
          return std::nullopt;
        }
        if (deg <= 1) {
          ends.push_back(v);
        }
        edges += deg;
      }
      if (edges / 2 + 1 != mem.size()) {
        return std::nullopt;  // a cycle
      }
      std::vector<Vertex> order = walk_path(g, comp, ends.front());
      std::size_t         fours = 0;
      for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        fours += g.label(order[i], order[i + 1]) == Label(4) ? 1 : 0;
      }
      if (fours > 1) {
        return std::nullopt;
      }
      if (fours == 1) {
        if (!(g.label(order[0], order[1]) == Label(4))) {
          std::reverse(order.begin(), order.end());
        }
        if (!(g.label(order[0], order[1]) == Label(4))) {
          return std::nullopt;
        }
      }
      std::vector<std::vector<int>> images(g.rank());
      for (std::size_t i = 0; i < order.size(); ++i) {
        int const b = static_cast<int>(i) + 1;
        if (fours == 1 && i == 0) {
          images[order[i]] = {1, 1};
        } else {
          images[order[i]] = {b};
        }
      }
      strands = order.size() + 1;
      return images;
    }
  }  // namespace

  std::optional<bool> braid_action_trivial(CoxeterGraph const& g, ArtinWord const& w) {
    for (auto const& comp : components(g, g.all_vertices())) {
      std::size_t strands = 0;
      auto        images  = braid_images(g, comp, strands);
      if (!images) {
        return std::nullopt;
      }
      // Artin's action: sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i.
      std::vector<FreeWord> phi(strands);
      for (std::size_t j = 0; j < strands; ++j) {
        phi[j] = {static_cast<int>(j) + 1};
      }
      for (auto const& letter : w) {
        if (!comp.contains(letter.v)) {
          continue;
        }
        std::vector<int> braid = (*images)[letter.v];
        if (letter.exp < 0) {
          std::reverse(braid.begin(), braid.end());
          for (int& b : braid) {
            b = -b;
          }
        }
        for (int b : braid) {
          int const             i = std::abs(b);  // 1-based strand index
          std::vector<FreeWord> gen(strands);
          for (std::size_t j = 0; j < strands; ++j) {
            gen[j] = {static_cast<int>(j) + 1};
          }
          if (b > 0) {
            gen[i - 1] = {i, i + 1, -i};
            gen[i]     = {i};
          } else {
            gen[i - 1] = {i + 1};
            gen[i]     = {-(i + 1), i, i + 1};
          }
          std::vector<FreeWord> next(strands);
          for (std::size_t j = 0; j < strands; ++j) {
            next[j] = substitute(gen[j], phi);
          }
          phi = std::move(next);
        }
      }
      for (std::size_t j = 0; j < strands; ++j) {
        if (phi[j] != FreeWord{static_cast<int>(j) + 1}) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace vag
