#include "vag/roots.hpp"

#include <algorithm>
#include <cctype>

#include "vag/errors.hpp"

namespace vag {

  RootSign root_sign(Root const& beta) {
    bool pos = false;
    bool neg = false;
    for (auto const& c : beta.coords) {
      int const s = c.sign();
      pos         = pos || s > 0;
      neg         = neg || s < 0;
    }
    if (pos == neg) {
      throw PreconditionError("not a root: " + format_root(beta));
    }
    return pos ? RootSign::positive : RootSign::negative;
  }

  bool looks_like_root(CoxeterSystem const& sys, Root const& beta) {
    if (beta.coords.size() != sys.rank()) {
      return false;
    }
    try {
      root_sign(beta);
    } catch (PreconditionError const&) {
      return false;
    }
    return sys.inner(beta, beta) == FieldElement(sys.field(), 2);
  }

  std::optional<Vertex> simple_index(CoxeterSystem const& sys, Root const& beta) {
    std::optional<Vertex> hit;
    for (Vertex s = 0; s < beta.coords.size(); ++s) {
      auto const& c = beta.coords[s];
      if (c.is_zero()) {
        continue;
      }
      if (hit || !(c == sys.one())) {
        return std::nullopt;
      }
      hit = s;
    }
    return hit;
  }

  namespace {
    // Greatest t in vertex order with <beta, alpha_t> > 0; beta positive and
    // not simple. In A_2 this writes alpha_s + alpha_t as t(alpha_s).
    Vertex descent_letter(CoxeterSystem const& sys, Root const& beta) {
      for (Vertex t = static_cast<Vertex>(sys.rank()); t-- > 0;) {
        if (sys.inner_simple(beta, t).sign() > 0) {
          return t;
        }
      }
      throw PreconditionError("not a positive root: " + format_root(beta));
    }

    // Walks a positive root down to a simple one, recording the letters.
    Vertex descend(CoxeterSystem const& sys, Root beta, CoxWord* letters) {
      if (root_sign(beta) != RootSign::positive) {
        throw PreconditionError("not a positive root: " + format_root(beta));
      }
      for (;;) {
        if (auto s = simple_index(sys, beta)) {
          return *s;
        }
        Vertex const t = descent_letter(sys, beta);
        beta           = sys.reflect(t, beta);
        if (letters) {
          letters->push_back(t);
        }
      }
    }
  }  // namespace

  std::size_t depth(CoxeterSystem const& sys, Root const& beta) {
    CoxWord letters;
    descend(sys, beta, &letters);
    return letters.size() + 1;
  }

  std::size_t depth_plus(CoxeterSystem const& sys, Root const& beta) {
    if (root_sign(beta) == RootSign::positive) {
      return depth(sys, beta);
    }
    return depth(sys, -beta) + 1;
  }

  RootExpression express_root(CoxeterSystem const& sys, Root const& beta) {
    if (root_sign(beta) == RootSign::negative) {
      RootExpression e = express_root(sys, -beta);
      e.eta.push_back(e.s);
      return e;
    }
    RootExpression e;
    e.s = descend(sys, beta, &e.eta);
    return e;
  }

  bool root_in_parabolic(Root const& beta, VertexSet const& x) {
    for (Vertex s = 0; s < beta.coords.size(); ++s) {
      if (!x.contains(s) && !beta.coords[s].is_zero()) {
        return false;
      }
    }
    return true;
  }

  CoxElement reflection_of(SystemPtr const& sys, Root const& beta) {
    RootExpression const e = express_root(*sys, beta);
    CoxWord              w = e.eta;
    w.push_back(e.s);
    CoxWord const back = inverse(e.eta);
    w.insert(w.end(), back.begin(), back.end());
    return CoxElement::from_word(sys, w);
  }

  Root lift_root(CoxeterSystem const&       parent,
                 Root const&                sub_root,
                 std::vector<Vertex> const& to_parent) {
    Root r = parent.zero_root();
    for (std::size_t i = 0; i < sub_root.coords.size(); ++i) {
      r.coords.at(to_parent.at(i)) = embed(sub_root.coords[i], parent.field());
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  namespace {
    FieldElement parse_term(FieldSpec const& f, std::string const& term) {
      std::string coef  = term;
      unsigned    power = 0;
      auto const  t     = term.find('t');
      if (t != std::string::npos) {
        coef = term.substr(0, t);
        if (!coef.empty() && coef.back() == '*') {
          coef.pop_back();
        }
        std::string rest = term.substr(t + 1);
        if (rest.empty()) {
          power = 1;
        } else if (rest[0] == '^' && rest.size() > 1
                   && std::all_of(rest.begin() + 1, rest.end(), ::isdigit)) {
          power = static_cast<unsigned>(std::stoul(rest.substr(1)));
        } else {
          throw ParseError("bad term '" + term + "'");
        }
      }
      Rational q(1);
      if (!coef.empty()) {
        bool ok = std::all_of(coef.begin(), coef.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c)) || c == '/';
        });
        if (!ok || coef.front() == '/' || coef.back() == '/') {
          throw ParseError("bad coefficient '" + coef + "'");
        }
        q = Rational(coef);
        if (q.get_den() == 0) {
          throw ParseError("zero denominator in '" + coef + "'");
        }
        q.canonicalize();
      }
      FieldElement x(f, q);
      FieldElement const th = FieldElement::theta(f);
      for (unsigned i = 0; i < power; ++i) {
        x *= th;
      }
      return x;
    }

    FieldElement parse_element(FieldSpec const& f, std::string text) {
      text.erase(std::remove_if(text.begin(), text.end(), ::isspace), text.end());
      if (text.empty()) {
        throw ParseError("empty coordinate");
      }
      FieldElement acc(f);
      std::size_t  i = 0;
      while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
          sign = text[i] == '-' ? -1 : 1;
          ++i;
        } else if (i != 0) {
          throw ParseError("bad coordinate '" + text + "'");
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != '+' && text[j] != '-') {
          ++j;
        }
        if (j == i) {
          throw ParseError("bad coordinate '" + text + "'");
        }
        FieldElement term = parse_term(f, text.substr(i, j - i));
        if (sign < 0) {
          acc -= term;
        } else {
          acc += term;
        }
        i = j;
      }
      return acc;
    }
  }  // namespace

  Root parse_root(CoxeterSystem const& sys, std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']'; }),
            s.end());
    Root        r;
    std::size_t start = 0;
    for (;;) {
      auto const comma = s.find(',', start);
      r.coords.push_back(parse_element(sys.field(), s.substr(start, comma - start)));
      if (comma == std::string::npos) {
        break;
      }
      start = comma + 1;
    }
    if (r.coords.size() != sys.rank()) {
      throw ParseError("root has " + std::to_string(r.coords.size())
                       + " coordinates, graph has rank " + std::to_string(sys.rank()));
    }
    return r;
  }

  std::string format_root(Root const& r) {
    std::string out = "[";
    for (std::size_t i = 0; i < r.coords.size(); ++i) {
      if (i) {
        out += ", ";
      }
      out += r.coords[i].to_string();
    }
    return out + "]";
  }

}  // namespace vag
