#include "vag/parallel.hpp"

#include <omp.h>

#include "vag/errors.hpp"

namespace vag {

  char const* to_string(Verdict v) {
    switch (v) {
      case Verdict::trivial: return "trivial";
      case Verdict::nontrivial: return "nontrivial";
      case Verdict::unsupported: return "unsupported";
      case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
  }

  namespace {
    // Exceptions must not cross the OpenMP region, so they become verdicts.
    Verdict decide(VAWord const& w, VAContext const& ctx) {
      try {
        return va_wp(w, ctx) ? Verdict::trivial : Verdict::nontrivial;
      } catch (UnsupportedError const&) {
        return Verdict::unsupported;
      } catch (InconclusiveError const&) {
        return Verdict::inconclusive;
      }
    }
  }  // namespace

  std::vector<Verdict> batch_va_wp_serial(std::vector<VAWord> const& words, VAContext const& ctx) {
    std::vector<Verdict> out(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      out[i] = decide(words[i], ctx);
    }
    return out;
  }

  std::vector<Verdict> batch_va_wp(std::vector<VAWord> const& words, VAContext const& ctx) {
    std::vector<Verdict> out(words.size());
    auto const           n = static_cast<long>(words.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
      out[i] = decide(words[i], ctx);
    }
    return out;
  }

  std::vector<std::vector<Label>> hat_matrix_serial(SystemPtr const&         sys,
                                                    std::vector<Root> const& roots,
                                                    HatOptions               opts) {
    return make_root_list(sys, roots, opts).matrix;
  }

  std::vector<std::vector<Label>> hat_matrix(SystemPtr const&         sys,
                                             std::vector<Root> const& roots,
                                             HatOptions               opts) {
    auto const n = static_cast<long>(roots.size());
    std::vector<std::vector<Label>> m(n, std::vector<Label>(n, Label(1)));
    // upper triangle, flattened so rows of unequal length balance out
    long const pairs = n * (n - 1) / 2;
#pragma omp parallel for schedule(dynamic, 8)
    for (long k = 0; k < pairs; ++k) {
      long i = 0, rem = k;
      while (rem >= n - 1 - i) {
        rem -= n - 1 - i;
        ++i;
      }
      long const j = i + 1 + rem;
      m[i][j] = m[j][i] = hat_label(sys, roots[i], roots[j], opts);
    }
    return m;
  }

  std::vector<CoxWord> batch_shortlex_serial(SystemPtr const& sys, std::vector<CoxWord> const& words) {
    std::vector<CoxWord> out(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      out[i] = shortlex_reduced(CoxElement::from_word(sys, words[i]));
    }
    return out;
  }

  std::vector<CoxWord> batch_shortlex(SystemPtr const& sys, std::vector<CoxWord> const& words) {
    std::vector<CoxWord> out(words.size());
    auto const           n = static_cast<long>(words.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
      out[i] = shortlex_reduced(CoxElement::from_word(sys, words[i]));
    }
    return out;
  }

  int parallel_threads() {
    return omp_get_max_threads();
  }

}  // namespace vag
