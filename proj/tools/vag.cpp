// vag: command-line front end for the Coxeter, Artin and virtual Artin
// engines. Prints a JSON (default) or text report on stdout.
//
// Exit codes: 0 trivial / in / ok, 1 nontrivial / out, 2 unsupported or
// inconclusive, 3 malformed input.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vag/artin.hpp"
#include "vag/errors.hpp"
#include "vag/oracles.hpp"
#include "vag/parallel.hpp"
#include "vag/vartin.hpp"

using namespace vag;
using json = nlohmann::json;

namespace {

  enum Exit { ok = 0, negative = 1, unsupported = 2, malformed = 3 };

  struct Config {
    std::string   graph_path;
    std::string   word;
    std::string   subset;
    std::string   root;
    std::size_t   depth  = 3;
    std::size_t   count  = 10;
    std::size_t   slack  = 4;
    bool          strict = false;
    bool          verify = false;
    std::uint64_t seed   = 0;
    std::string   output = "json";
  };

  struct Report {
    json j = json::object();
    int  code = ok;
  };

  HatOptions hat_options(Config const& c) {
    HatOptions o;
    o.slack  = c.slack;
    o.strict = c.strict;
    return o;
  }

  std::string cox(CoxeterGraph const& g, CoxWord const& w) {
    return format(g, w);
  }

  json root_json(Root const& r) {
    return format_root(r);
  }

  ////////////////////////////////////////////////////////////////////////
  // coxeter
  ////////////////////////////////////////////////////////////////////////

  Report coxeter_reduce(Config const& c, CoxeterGraph const& g) {
    Report     r;
    auto       sys = system_for(g);
    CoxWord    w   = parse_cox_word(g, c.word);
    CoxWord    red = shortlex_reduced(CoxElement::from_word(sys, w));
    r.j["reduced"] = cox(g, red);
    r.j["length"]  = red.size();
    if (c.verify) {
      try {
        CoxWord m            = m_reduce(g, w);
        r.j["verify"]["m_reduce"] = cox(g, m);
        r.j["verify"]["agree"] =
            m.size() == red.size()
            && CoxElement::from_word(sys, m) == CoxElement::from_word(sys, red);
      } catch (CapExceeded const& e) {
        r.j["verify"]["skipped"] = e.what();
      }
    }
    return r;
  }

  Report coxeter_wp(Config const& c, CoxeterGraph const& g) {
    Report r;
    auto   sys = system_for(g);
    CoxWord w  = parse_cox_word(g, c.word);
    CoxElement e = CoxElement::from_word(sys, w);
    bool const trivial = e.is_identity();
    r.j["verdict"]     = trivial ? "trivial" : "nontrivial";
    if (!trivial) {
      r.j["certificate"] = {{"kind", "reduced_word"}, {"word", cox(g, shortlex_reduced(e))}};
    }
    if (c.verify) {
      try {
        r.j["verify"]["m_reduce_agrees"] = m_reduce(g, w).empty() == trivial;
      } catch (CapExceeded const& e) {
        r.j["verify"]["skipped"] = e.what();
      }
    }
    r.code = trivial ? ok : negative;
    return r;
  }

  Report coxeter_member(Config const& c, CoxeterGraph const& g) {
    Report    r;
    auto      sys = system_for(g);
    VertexSet x   = parse_subset(g, c.subset);
    CoxWord   w   = parse_cox_word(g, c.word);
    auto      m   = cox_member_strong(sys, w, x);
    r.j["subset"] = format_subset(g, x);
    r.j["verdict"] = m ? "in" : "out";
    if (m) {
      r.j["witness"] = cox(g, *m);
    } else {
      r.j["support"] = format_subset(g, support(CoxElement::from_word(sys, w)));
    }
    r.code = m ? ok : negative;
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // roots
  ////////////////////////////////////////////////////////////////////////

  Report roots_list(Config const& c, CoxeterGraph const& g) {
    Report r;
    auto   sys = system_for(g);
    json   list = json::array();
    for (auto const& d : roots_bfs(*sys, c.depth)) {
      json e{{"root", root_json(d.root)}, {"depth", d.depth}};
      if (c.verify) {
        e["greedy_depth_agrees"] = depth(*sys, d.root) == d.depth;
      }
      list.push_back(e);
    }
    r.j["max_depth"] = c.depth;
    r.j["roots"]     = list;
    return r;
  }

  Report roots_express(Config const& c, CoxeterGraph const& g) {
    Report r;
    auto   sys  = system_for(g);
    Root   beta = parse_root(*sys, c.root);
    if (!looks_like_root(*sys, beta)) {
      throw PreconditionError("'" + c.root + "' is not a root of this graph");
    }
    auto e             = express_root(*sys, beta);
    r.j["root"]        = root_json(beta);
    r.j["sign"]        = root_sign(beta) == RootSign::positive ? "positive" : "negative";
    r.j["depth_plus"]  = depth_plus(*sys, beta);
    r.j["eta"]         = cox(g, e.eta);
    r.j["s"]           = g.name(e.s);
    if (c.verify) {
      r.j["verify"]["eta_alpha_s_equals_root"] =
          CoxElement::from_word(sys, e.eta).root_image(e.s) == beta;
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // artin
  ////////////////////////////////////////////////////////////////////////

  Report artin_wp_cmd(Config const& c, CoxeterGraph const& g) {
    Report    r;
    ArtinWord w       = parse_artin_word(g, c.word);
    auto      reg     = ArtinRegistry::with_builtin_affine();
    bool      trivial = artin_wp(w, g, reg);
    r.j["verdict"]    = trivial ? "trivial" : "nontrivial";
    if (c.verify) {
      auto truth = braid_action_trivial(g, w);
      if (truth) {
        r.j["verify"]["braid_action_agrees"] = *truth == trivial;
      } else {
        r.j["verify"]["skipped"] = "no braid-action oracle for this graph";
      }
    }
    r.code = trivial ? ok : negative;
    return r;
  }

  Report artin_nf(Config const& c, CoxeterGraph const& g) {
    Report r;
    auto   nf      = garside_nf(g, parse_artin_word(g, c.word));
    r.j["normal_form"] = format_nf(g, nf);
    r.j["delta_power"] = nf.delta_power;
    r.j["factors"]     = nf.factors.size();
    r.j["word"]        = format(g, nf_to_word(g, nf));
    return r;
  }

  Report artin_retract(Config const& c, CoxeterGraph const& g) {
    Report    r;
    VertexSet x = parse_subset(g, c.subset);
    r.j["subset"]     = format_subset(g, x);
    r.j["retraction"] = format(g, pi_X_star(system_for(g), parse_artin_word(g, c.word), x));
    return r;
  }

  Report artin_member(Config const& c, CoxeterGraph const& g) {
    Report    r;
    VertexSet x = parse_subset(g, c.subset);
    ArtinWord w = parse_artin_word(g, c.word);
    auto      m = artin_member_strong(w, g, x, ArtinRegistry::with_builtin_affine());
    r.j["subset"]  = format_subset(g, x);
    r.j["verdict"] = m ? "in" : "out";
    if (m) {
      r.j["rewrite"] = format(g, *m);
    }
    r.code = m ? ok : negative;
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // va
  ////////////////////////////////////////////////////////////////////////

  json certificate_for(VAContext const& ctx, VAWord const& w, std::vector<std::string> const& trace) {
    auto const& g   = ctx.graph();
    CoxElement  pk  = CoxElement::from_word(ctx.system(), pi_K_star(w));
    if (!pk.is_identity()) {
      return {{"kind", "pi_K"}, {"image", cox(g, shortlex_reduced(pk))}};
    }
    auto ab = abelian_certificate(g, w);
    if (ab.nonzero()) {
      json classes = json::array();
      for (std::size_t i = 0; i < ab.classes.size(); ++i) {
        classes.push_back({{"class", format_subset(g, ab.classes[i])},
                           {"sigma_sum", ab.sigma_sum[i]},
                           {"tau_parity", ab.tau_parity[i]}});
      }
      return {{"kind", "abelian"}, {"classes", classes}};
    }
    return {{"kind", "decision"}, {"detail", trace.empty() ? "" : trace.back()}};
  }

  Report va_wp_cmd(Config const& c, CoxeterGraph const& g) {
    Report                   r;
    VAContext                ctx(g, hat_options(c));
    VAWord                   w = parse_va_word(g, c.word);
    std::vector<std::string> trace;
    bool const trivial = va_wp(w, ctx, [&](std::string const& s) { trace.push_back(s); });
    r.j["verdict"]     = trivial ? "trivial" : "nontrivial";
    if (!trivial) {
      r.j["certificate"] = certificate_for(ctx, w, trace);
    }
    r.j["trace"] = trace;
    if (c.verify) {
      bool const cert = abelian_certificate(g, w).nonzero();
      bool const pk   = CoxElement::from_word(ctx.system(), pi_K_star(w)).is_identity();
      r.j["verify"]["abelian_consistent"] = !(cert && trivial);
      r.j["verify"]["pi_K_consistent"]    = !trivial || pk;
    }
    r.code = trivial ? ok : negative;
    return r;
  }

  Report va_member_cmd(Config const& c, CoxeterGraph const& g) {
    Report                   r;
    VAContext                ctx(g, hat_options(c));
    VertexSet                x = parse_subset(g, c.subset);
    VAWord                   w = parse_va_word(g, c.word);
    std::vector<std::string> trace;
    auto m = va_member_strong(w, x, ctx, [&](std::string const& s) { trace.push_back(s); });
    r.j["subset"]  = format_subset(g, x);
    r.j["verdict"] = m.in ? "in" : "out";
    if (m.in) {
      r.j["rewrite"] = format(g, *m.rewrite);
      if (c.verify) {
        r.j["verify"]["rewrite_equal"] = va_wp(concat(w, inverse(*m.rewrite)), ctx);
      }
    }
    r.j["trace"] = trace;
    r.code       = m.in ? ok : negative;
    return r;
  }

  Report va_hatgraph(Config const& c, CoxeterGraph const& g) {
    Report    r;
    VAContext ctx(g, hat_options(c));
    VAWord    w = parse_va_word(g, c.word);
    if (!CoxElement::from_word(ctx.system(), pi_K_star(w)).is_identity()) {
      throw PreconditionError("the word does not lie in the kernel of pi_K");
    }
    auto [list, mu] = kva_to_delta(ctx.system(), w, hat_options(c));
    json roots      = json::array();
    for (auto const& b : list.roots) {
      roots.push_back(root_json(b));
    }
    json matrix = json::array();
    for (auto const& row : list.matrix) {
      json out = json::array();
      for (auto l : row) {
        out.push_back(l.to_string());
      }
      matrix.push_back(out);
    }
    r.j["roots"]  = roots;
    r.j["matrix"] = matrix;
    r.j["mu"]     = format(mu);
    if (c.verify) {
      r.j["verify"]["expansion_equal"] =
          va_wp(concat(expand_delta(ctx.system(), list, mu), inverse(w)), ctx);
    }
    return r;
  }

  Report va_fuzz(Config const& c, CoxeterGraph const& g) {
    Report    r;
    VAContext ctx(g, hat_options(c));
    auto      words    = fuzz_relator_words(g, c.count, c.seed);
    auto      verdicts = batch_va_wp(words, ctx);
    json      out      = json::array();
    std::size_t bad    = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      out.push_back({{"word", format(g, words[i])}, {"verdict", to_string(verdicts[i])}});
      bad += verdicts[i] != Verdict::trivial;
    }
    r.j["seed"]      = c.seed;
    r.j["words"]     = out;
    r.j["not_trivial"] = bad;
    r.code           = bad == 0 ? ok : negative;
    return r;
  }

  void print_text(json const& j, std::string const& indent = "") {
    for (auto const& [k, v] : j.items()) {
      if (v.is_object()) {
        std::cout << indent << k << ":\n";
        print_text(v, indent + "  ");
      } else if (v.is_array()) {
        std::cout << indent << k << ":\n";
        for (auto const& e : v) {
          std::cout << indent << "  " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
        }
      } else {
        std::cout << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                  << "\n";
      }
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word problems and parabolic membership in Coxeter, Artin and virtual Artin groups"};
  app.require_subcommand(1);
  Config cfg;

  using Handler = std::function<Report(Config const&, CoxeterGraph const&)>;
  std::string                 command;
  Handler                     handler;

  auto leaf = [&](CLI::App* group, std::string const& name, std::string const& help,
                  Handler h, bool needs_word, bool needs_subset) {
    auto* sub = group->add_subcommand(name, help);
    sub->add_option("-g,--graph", cfg.graph_path, "Coxeter graph JSON file")->required();
    auto* w = sub->add_option("-w,--word", cfg.word, "input word");
    if (needs_word) w->required();
    auto* x = sub->add_option("--subset", cfg.subset, "vertex subset, e.g. \"s,t\"");
    if (needs_subset) x->required();
    sub->add_option("--slack", cfg.slack, "extra length for the hat-label witness search");
    sub->add_flag("--strict", cfg.strict, "fail instead of answering infinity at the search bound");
    sub->add_flag("--verify", cfg.verify, "cross-check against brute-force oracles");
    sub->add_option("--seed", cfg.seed, "seed for generated words");
    sub->add_option("--output", cfg.output, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->callback([&, h, group, name] {
      command = group->get_name() + " " + name;
      handler = h;
    });
    return sub;
  };

  auto* coxeter = app.add_subcommand("coxeter", "Coxeter groups W[g]")->require_subcommand(1);
  leaf(coxeter, "reduce", "ShortLex reduced word", coxeter_reduce, true, false);
  leaf(coxeter, "wp", "word problem", coxeter_wp, true, false);
  leaf(coxeter, "member", "strong membership in W_X", coxeter_member, true, true);

  auto* roots = app.add_subcommand("roots", "root system")->require_subcommand(1);
  leaf(roots, "list", "positive roots by depth", roots_list, false, false)
      ->add_option("--depth", cfg.depth, "maximum depth");
  leaf(roots, "express", "write a root as eta(alpha_s)", roots_express, false, false)
      ->add_option("--root", cfg.root, "coordinates, e.g. \"[1, 1]\"")
      ->required();

  auto* artin = app.add_subcommand("artin", "Artin groups A[g]")->require_subcommand(1);
  leaf(artin, "wp", "word problem", artin_wp_cmd, true, false);
  leaf(artin, "nf", "Garside normal form (spherical graphs)", artin_nf, true, false);
  leaf(artin, "retract", "the retraction onto A_X", artin_retract, true, true);
  leaf(artin, "member", "strong membership in A_X", artin_member, true, true);

  auto* va = app.add_subcommand("va", "virtual Artin groups VA[g]")->require_subcommand(1);
  leaf(va, "wp", "word problem", va_wp_cmd, true, false);
  leaf(va, "member", "strong membership in VA_X", va_member_cmd, true, true);
  leaf(va, "hatgraph", "hat graph of a kernel word", va_hatgraph, true, false);
  leaf(va, "fuzz", "decide generated relator words", va_fuzz, false, false)
      ->add_option("--count", cfg.count, "number of words");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? ok : malformed;
  }

  auto const start = std::chrono::steady_clock::now();
  Report     report;
  try {
    CoxeterGraph const g = CoxeterGraph::load(cfg.graph_path);
    report               = handler(cfg, g);
  } catch (ParseError const& e) {
    std::cerr << "error[input]: malformed input: " << e.what() << "\n";
    report.j["verdict"] = "malformed";
    report.j["error"]   = e.what();
    report.code         = malformed;
  } catch (PreconditionError const& e) {
    std::cerr << "error[input]: malformed input: " << e.what() << "\n";
    report.j["verdict"] = "malformed";
    report.j["error"]   = e.what();
    report.code         = malformed;
  } catch (UnsupportedError const& e) {
    std::cerr << "error[" << e.stage() << "]: unsupported: " << e.what() << "\n";
    report.j["verdict"] = "unsupported";
    report.j["stage"]   = e.stage();
    report.j["error"]   = e.what();
    report.code         = unsupported;
  } catch (InconclusiveError const& e) {
    std::cerr << "error[hat-label]: inconclusive: " << e.what() << "\n";
    report.j["verdict"] = "inconclusive";
    report.j["error"]   = e.what();
    report.code         = unsupported;
  } catch (CapExceeded const& e) {
    std::cerr << "error[oracle]: " << e.what() << "\n";
    report.j["verdict"] = "inconclusive";
    report.j["error"]   = e.what();
    report.code         = unsupported;
  }
  auto const ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

  report.j["command"] = command;
  report.j["graph"]   = cfg.graph_path;
  if (!cfg.word.empty()) report.j["input"] = cfg.word;
  report.j["exit_code"] = report.code;
  report.j["timing_ms"] = ms.count();
  if (cfg.output == "json") {
    std::cout << report.j.dump(2) << "\n";
  } else {
    print_text(report.j);
  }
  return report.code;
}
