#include "vag/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <fstream>
#include <sstream>

#include "vag/errors.hpp"

namespace vag {

  unsigned Label::value() const {
    if (is_infinite()) {
      throw PreconditionError("Label::value called on infinity");
    }
    return m_;
  }

  std::string Label::to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(m_);
  }

  ////////////////////////////////////////////////////////////////////////
  // VertexSet
  ////////////////////////////////////////////////////////////////////////

  VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : bits_(universe, false) {
    for (Vertex v : members) {
      insert(v);
    }
  }

  VertexSet VertexSet::all(std::size_t universe) {
    VertexSet x(universe);
    x.bits_.assign(universe, true);
    return x;
  }

  VertexSet VertexSet::from_members(std::size_t               universe,
                                    std::vector<Vertex> const& members) {
    VertexSet x(universe);
    for (Vertex v : members) {
      x.insert(v);
    }
    return x;
  }

  std::size_t VertexSet::size() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
  }

  bool VertexSet::empty() const {
    return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; });
  }

  std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) {
        out.push_back(static_cast<Vertex>(i));
      }
    }
    return out;
  }

  bool VertexSet::is_subset_of(VertexSet const& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] && !other.contains(static_cast<Vertex>(i))) {
        return false;
      }
    }
    return true;
  }

  VertexSet VertexSet::operator&(VertexSet const& other) const {
    VertexSet out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      out.bits_[i] = bits_[i] && other.contains(static_cast<Vertex>(i));
    }
    return out;
  }

  VertexSet VertexSet::operator|(VertexSet const& other) const {
    VertexSet out(std::max(bits_.size(), other.bits_.size()));
    for (std::size_t i = 0; i < out.bits_.size(); ++i) {
      out.bits_[i] = contains(static_cast<Vertex>(i))
                     || other.contains(static_cast<Vertex>(i));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // CoxeterGraph
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_names(std::vector<std::string> const& names) {
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) {
          throw ParseError("empty vertex name");
        }
        for (char c : names[i]) {
          if (std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == '^'
              || c == ',') {
            throw ParseError("invalid character in vertex name '" + names[i]
                             + "'");
          }
        }
        for (std::size_t j = 0; j < i; ++j) {
          if (names[i] == names[j]) {
            throw ParseError("duplicate vertex name '" + names[i] + "'");
          }
        }
      }
    }
  }  // namespace

  CoxeterGraph::CoxeterGraph(std::vector<std::string> names,
                             std::vector<Edge> const& edges)
      : names_(std::move(names)),
        labels_(names_.size() * names_.size(), Label(2)) {
    check_names(names_);
    std::size_t const n = names_.size();
    for (std::size_t i = 0; i < n; ++i) {
      labels_[i * n + i] = Label(1);
    }
    std::vector<bool> seen(n * n, false);
    for (auto const& e : edges) {
      Vertex a = index(e.a);
      Vertex b = index(e.b);
      if (a == b) {
        throw ParseError("edge from vertex '" + e.a + "' to itself");
      }
      if (!e.m.is_infinite() && e.m.value() < 2) {
        throw ParseError("edge label must be >= 2 or inf");
      }
      if (seen[a * n + b]) {
        throw ParseError("duplicate edge " + e.a + "-" + e.b);
      }
      seen[a * n + b] = seen[b * n + a] = true;
      labels_[a * n + b] = labels_[b * n + a] = e.m;
    }
  }

  CoxeterGraph CoxeterGraph::from_matrix(std::vector<std::string>             names,
                                         std::vector<std::vector<Label>> const& m) {
    std::size_t const n = names.size();
    if (m.size() != n) {
      throw ParseError("label matrix has wrong size");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i].size() != n || !(m[i][i] == Label(1))) {
        throw ParseError("label matrix must be square with diagonal 1");
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!(m[i][j] == m[j][i])) {
          throw ParseError("label matrix is not symmetric");
        }
        if (!(m[i][j] == Label(2))) {
          edges.push_back({names[i], names[j], m[i][j]});
        }
      }
    }
    return CoxeterGraph(std::move(names), edges);
  }

  CoxeterGraph CoxeterGraph::from_json(nlohmann::json const& j) {
    try {
      std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
      std::vector<Edge>        edges;
      if (j.contains("edges")) {
        for (auto const& e : j.at("edges")) {
          auto const& m = e.at("m");
          Label       label(2);
          if (m.is_string()) {
            if (m.get<std::string>() != "inf") {
              throw ParseError("edge label string must be \"inf\"");
            }
            label = Label::infinity();
          } else if (m.is_number_integer() && m.get<long long>() >= 2) {
            label = Label(m.get<unsigned>());
          } else {
            throw ParseError("edge label must be an integer >= 2 or \"inf\"");
          }
          edges.push_back(
              {e.at("a").get<std::string>(), e.at("b").get<std::string>(), label});
        }
      }
      return CoxeterGraph(std::move(names), edges);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("graph JSON: ") + e.what());
    }
  }

  CoxeterGraph CoxeterGraph::from_json_text(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("graph JSON: ") + e.what());
    }
    return from_json(j);
  }

  CoxeterGraph CoxeterGraph::load(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open graph file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
  }

  nlohmann::json CoxeterGraph::to_json() const {
    nlohmann::json j;
    j["vertices"] = names_;
    j["edges"]    = nlohmann::json::array();
    for (Vertex a = 0; a < rank(); ++a) {
      for (Vertex b = a + 1; b < rank(); ++b) {
        Label m = label(a, b);
        if (m == Label(2)) {
          continue;
        }
        nlohmann::json e{{"a", names_[a]}, {"b", names_[b]}};
        if (m.is_infinite()) {
          e["m"] = "inf";
        } else {
          e["m"] = m.value();
        }
        j["edges"].push_back(e);
      }
    }
    return j;
  }

  std::optional<Vertex> CoxeterGraph::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) {
        return static_cast<Vertex>(i);
      }
    }
    return std::nullopt;
  }

  Vertex CoxeterGraph::index(std::string_view name) const {
    auto v = find(name);
    if (!v) {
      throw ParseError("unknown vertex '" + std::string(name) + "'");
    }
    return *v;
  }

  Subgraph CoxeterGraph::induced(VertexSet const& x) const {
    Subgraph                 out;
    std::vector<std::string> names;
    for (Vertex v : x.members()) {
      out.to_parent.push_back(v);
      names.push_back(names_[v]);
    }
    std::size_t const               k = names.size();
    std::vector<std::vector<Label>> m(k, std::vector<Label>(k, Label(1)));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        m[i][j] = label(out.to_parent[i], out.to_parent[j]);
      }
    }
    out.graph = from_matrix(std::move(names), m);
    return out;
  }

  std::string CoxeterGraph::matrix_key() const {
    std::string key = std::to_string(rank()) + ":";
    for (Vertex a = 0; a < rank(); ++a) {
      for (Vertex b = a + 1; b < rank(); ++b) {
        key += label(a, b).to_string();
        key += ',';
      }
    }
    return key;
  }

  std::vector<std::pair<Vertex, Vertex>> infinite_edges(CoxeterGraph const& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex a = 0; a < g.rank(); ++a) {
      for (Vertex b = a + 1; b < g.rank(); ++b) {
        if (g.label(a, b).is_infinite()) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  bool free_of_infinity(CoxeterGraph const& g, VertexSet const& x) {
    auto m = x.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (g.label(m[i], m[j]).is_infinite()) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<VertexSet> components(CoxeterGraph const& g, VertexSet const& x) {
    std::vector<VertexSet> out;
    VertexSet              seen(g.rank());
    for (Vertex start : x.members()) {
      if (seen.contains(start)) {
        continue;
      }
      VertexSet           comp(g.rank());
      std::vector<Vertex> stack{start};
      seen.insert(start);
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        comp.insert(v);
        for (Vertex u : x.members()) {
          if (!seen.contains(u) && !(g.label(u, v) == Label(2))) {
            seen.insert(u);
            stack.push_back(u);
          }
        }
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

  namespace {
    // Bron-Kerbosch on the graph of finite labels.
    void bron_kerbosch(CoxeterGraph const&      g,
                       VertexSet                r,
                       std::vector<Vertex>      p,
                       std::vector<Vertex>      x,
                       std::vector<VertexSet>& out) {
      if (p.empty() && x.empty()) {
        out.push_back(std::move(r));
        return;
      }
      while (!p.empty()) {
        Vertex v = p.front();
        auto   finite_nbr = [&](Vertex u) { return !g.label(u, v).is_infinite(); };
        std::vector<Vertex> p2, x2;
        std::copy_if(p.begin() + 1, p.end(), std::back_inserter(p2), finite_nbr);
        std::copy_if(x.begin(), x.end(), std::back_inserter(x2), finite_nbr);
        VertexSet r2 = r;
        r2.insert(v);
        bron_kerbosch(g, std::move(r2), std::move(p2), std::move(x2), out);
        p.erase(p.begin());
        x.push_back(v);
      }
    }
  }  // namespace

  std::vector<VertexSet> maximal_free_of_infinity(CoxeterGraph const& g,
                                                  VertexSet const&    x) {
    std::vector<VertexSet> out;
    bron_kerbosch(g, VertexSet(g.rank()), x.members(), {}, out);
    return out;
  }

  VertexSet parse_subset(CoxeterGraph const& g, std::string_view text) {
    VertexSet   x(g.rank());
    std::string token;
    auto        flush = [&] {
      if (!token.empty()) {
        x.insert(g.index(token));
        token.clear();
      }
    };
    for (char c : text) {
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else {
        token += c;
      }
    }
    flush();
    return x;
  }

  std::string format_subset(CoxeterGraph const& g, VertexSet const& x) {
    std::string out;
    for (Vertex v : x.members()) {
      if (!out.empty()) {
        out += ',';
      }
      out += g.name(v);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  CoxWord inverse(CoxWord const& w) {
    return CoxWord(w.rbegin(), w.rend());
  }

  ArtinWord inverse(ArtinWord const& w) {
    ArtinWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back({it->v, -it->exp});
    }
    return out;
  }

  VAWord inverse(VAWord const& w) {
    VAWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      VALetter l = *it;
      if (l.kind == VAKind::sigma) {
        l.exp = -l.exp;
      }
      out.push_back(l);
    }
    return out;
  }

  DeltaWord inverse(DeltaWord const& w) {
    DeltaWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back({it->root, -it->exp});
    }
    return out;
  }

  namespace {
    template <typename Word, typename Cancels>
    Word free_reduce_impl(Word const& w, Cancels cancels) {
      Word out;
      out.reserve(w.size());
      for (auto const& l : w) {
        if (!out.empty() && cancels(out.back(), l)) {
          out.pop_back();
        } else {
          out.push_back(l);
        }
      }
      return out;
    }
  }  // namespace

  ArtinWord free_reduce(ArtinWord const& w) {
    return free_reduce_impl(w, [](ArtinLetter a, ArtinLetter b) {
      return a.v == b.v && a.exp == -b.exp;
    });
  }

  VAWord free_reduce(VAWord const& w) {
    return free_reduce_impl(w, [](VALetter a, VALetter b) {
      if (a.kind != b.kind || a.v != b.v) {
        return false;
      }
      return a.kind == VAKind::tau || a.exp == -b.exp;
    });
  }

  DeltaWord free_reduce(DeltaWord const& w) {
    return free_reduce_impl(w, [](DeltaLetter a, DeltaLetter b) {
      return a.root == b.root && a.exp == -b.exp;
    });
  }

  VertexSet support_of(std::size_t rank, CoxWord const& w) {
    VertexSet x(rank);
    for (Vertex v : w) {
      x.insert(v);
    }
    return x;
  }

  VertexSet support_of(std::size_t rank, ArtinWord const& w) {
    VertexSet x(rank);
    for (auto l : w) {
      x.insert(l.v);
    }
    return x;
  }

  VertexSet support_of(std::size_t rank, VAWord const& w) {
    VertexSet x(rank);
    for (auto l : w) {
      x.insert(l.v);
    }
    return x;
  }

  namespace {
    std::vector<std::string> tokens(std::string_view text) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(text)};
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    // Splits "x^-1" into ("x", -1) and "x" into ("x", 1).
    std::pair<std::string, int> split_exponent(std::string const& tok) {
      auto pos = tok.find("^-1");
      if (pos == std::string::npos) {
        if (tok.find('^') != std::string::npos) {
          throw ParseError("bad exponent in token '" + tok + "'");
        }
        return {tok, 1};
      }
      if (pos + 3 != tok.size() && tok[pos + 3] != ':') {
        throw ParseError("bad exponent in token '" + tok + "'");
      }
      return {tok.substr(0, pos) + tok.substr(pos + 3), -1};
    }
  }  // namespace

  CoxWord parse_cox_word(CoxeterGraph const& g, std::string_view text) {
    CoxWord out;
    for (auto const& tok : tokens(text)) {
      out.push_back(g.index(tok));
    }
    return out;
  }

  ArtinWord parse_artin_word(CoxeterGraph const& g, std::string_view text) {
    ArtinWord out;
    for (auto const& tok : tokens(text)) {
      auto [name, exp] = split_exponent(tok);
      out.push_back({g.index(name), exp});
    }
    return out;
  }

  VAWord parse_va_word(CoxeterGraph const& g, std::string_view text) {
    VAWord out;
    for (auto const& tok : tokens(text)) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) {
        throw ParseError("virtual-Artin token '" + tok
                         + "' must look like sigma:s, sigma^-1:s or tau:s");
      }
      std::string head = tok.substr(0, colon);
      std::string name = tok.substr(colon + 1);
      if (head == "sigma") {
        out.push_back(VALetter::sigma(g.index(name), 1));
      } else if (head == "sigma^-1") {
        out.push_back(VALetter::sigma(g.index(name), -1));
      } else if (head == "tau" || head == "tau^-1") {
        out.push_back(VALetter::tau(g.index(name)));
      } else {
        throw ParseError("unknown virtual-Artin generator '" + head + "'");
      }
    }
    return out;
  }

  DeltaWord parse_delta_word(std::size_t n_roots, std::string_view text) {
    DeltaWord out;
    for (auto const& tok : tokens(text)) {
      auto [name, exp] = split_exponent(tok);
      if (name.size() < 2 || name[0] != 'd'
          || !std::all_of(name.begin() + 1, name.end(), [](char c) {
               return std::isdigit(static_cast<unsigned char>(c));
             })) {
        throw ParseError("delta token '" + tok + "' must look like d<k>");
      }
      std::size_t k = std::stoul(name.substr(1));
      if (k >= n_roots) {
        throw ParseError("delta index out of range in '" + tok + "'");
      }
      out.push_back({k, exp});
    }
    return out;
  }

  namespace {
    template <typename Word, typename Fmt>
    std::string join(Word const& w, Fmt fmt) {
      std::string out;
      for (auto const& l : w) {
        if (!out.empty()) {
          out += ' ';
        }
        out += fmt(l);
      }
      return out;
    }
  }  // namespace

  std::string format(CoxeterGraph const& g, CoxWord const& w) {
    return join(w, [&](Vertex v) { return g.name(v); });
  }

  std::string format(CoxeterGraph const& g, ArtinWord const& w) {
    return join(w, [&](ArtinLetter l) {
      return l.exp > 0 ? g.name(l.v) : g.name(l.v) + "^-1";
    });
  }

  std::string format(CoxeterGraph const& g, VAWord const& w) {
    return join(w, [&](VALetter l) {
      if (l.kind == VAKind::tau) {
        return "tau:" + g.name(l.v);
      }
      return (l.exp > 0 ? "sigma:" : "sigma^-1:") + g.name(l.v);
    });
  }

  std::string format(DeltaWord const& w) {
    return join(w, [](DeltaLetter l) {
      std::string s = "d" + std::to_string(l.root);
      return l.exp > 0 ? s : s + "^-1";
    });
  }

  std::vector<VAWord> va_relators(CoxeterGraph const& g) {
    std::vector<VAWord> out;
    for (Vertex s = 0; s < g.rank(); ++s) {
      out.push_back({VALetter::tau(s), VALetter::tau(s)});
    }
    for (Vertex s = 0; s < g.rank(); ++s) {
      for (Vertex t = 0; t < g.rank(); ++t) {
        if (s == t || g.label(s, t).is_infinite()) {
          continue;
        }
        unsigned const m = g.label(s, t).value();
        if (s < t) {
          // (v1)
          auto lhs = alt_product(VALetter::sigma(s), VALetter::sigma(t), m);
          auto rhs = alt_product(VALetter::sigma(t), VALetter::sigma(s), m);
          out.push_back(concat(lhs, inverse(rhs)));
          // (v2)
          lhs = alt_product(VALetter::tau(s), VALetter::tau(t), m);
          rhs = alt_product(VALetter::tau(t), VALetter::tau(s), m);
          out.push_back(concat(lhs, inverse(rhs)));
        }
        // (v3) sigma_s Pi(tau_t, tau_s, m-1) = Pi(tau_t, tau_s, m-1) sigma_r
        Vertex r    = (m % 2 == 0) ? s : t;
        auto   taus = alt_product(VALetter::tau(t), VALetter::tau(s), m - 1);
        VAWord rel{VALetter::sigma(s)};
        rel = concat(rel, taus);
        rel.push_back(VALetter::sigma(r, -1));
        rel = concat(rel, inverse(taus));
        out.push_back(rel);
      }
    }
    return out;
  }

  std::vector<ArtinWord> artin_relators(CoxeterGraph const& g) {
    std::vector<ArtinWord> out;
    for (Vertex s = 0; s < g.rank(); ++s) {
      for (Vertex t = s + 1; t < g.rank(); ++t) {
        if (g.label(s, t).is_infinite()) {
          continue;
        }
        unsigned const m   = g.label(s, t).value();
        auto           lhs = alt_product(ArtinLetter{s, 1}, ArtinLetter{t, 1}, m);
        auto           rhs = alt_product(ArtinLetter{t, 1}, ArtinLetter{s, 1}, m);
        out.push_back(concat(lhs, inverse(rhs)));
      }
    }
    return out;
  }

  namespace graphs {
    namespace {
      std::vector<std::string> default_names(std::size_t n) {
        static char const*       letters = "stuvwxyz";
        std::vector<std::string> out;
        for (std::size_t i = 0; i < n; ++i) {
          out.push_back(n <= 8 ? std::string(1, letters[i])
                               : "s" + std::to_string(i));
        }
        return out;
      }
    }  // namespace

    CoxeterGraph type_a(std::size_t n) {
      auto                            names = default_names(n);
      std::vector<CoxeterGraph::Edge> edges;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.push_back({names[i], names[i + 1], Label(3)});
      }
      return CoxeterGraph(names, edges);
    }

    CoxeterGraph type_b(std::size_t n) {
      auto                            names = default_names(n);
      std::vector<CoxeterGraph::Edge> edges;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.push_back({names[i], names[i + 1], Label(i == 0 ? 4 : 3)});
      }
      return CoxeterGraph(names, edges);
    }

    CoxeterGraph dihedral(unsigned m) {
      auto names = default_names(2);
      return CoxeterGraph(names, {{names[0], names[1], Label(m)}});
    }

    CoxeterGraph affine_a(std::size_t n) {
      auto                            names = default_names(n);
      std::vector<CoxeterGraph::Edge> edges;
      for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({names[i], names[(i + 1) % n], Label(3)});
      }
      return CoxeterGraph(names, edges);
    }

    CoxeterGraph a1xa1() {
      return CoxeterGraph(default_names(2), {});
    }
  }  // namespace graphs

}  // namespace vag
