#include "vag/coxeter.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <unordered_set>

#include "vag/errors.hpp"

namespace vag {

  Root Root::operator-() const {
    Root out;
    out.coords.reserve(coords.size());
    for (auto const& c : coords) {
      out.coords.push_back(-c);
    }
    return out;
  }

  std::string Root::key() const {
    std::string out;
    for (auto const& c : coords) {
      for (auto const& q : c.coords()) {
        out += q.get_str();
        out += ',';
      }
      out += '|';
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // CoxeterSystem
  ////////////////////////////////////////////////////////////////////////

  CoxeterSystem::CoxeterSystem(CoxeterGraph graph)
      : graph_(std::move(graph)), field_(&build_field(graph_)) {
    std::size_t const n = graph_.rank();
    form_.reserve(n * n);
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = 0; t < n; ++t) {
        if (s == t) {
          form_.emplace_back(*field_, 2);
        } else {
          form_.push_back(-two_cos_pi_over(graph_.label(s, t), *field_));
        }
      }
    }
  }

  FieldElement CoxeterSystem::inner(Root const& a, Root const& b) const {
    FieldElement acc = zero();
    for (Vertex s = 0; s < rank(); ++s) {
      if (a.coords[s].is_zero()) {
        continue;
      }
      FieldElement col = zero();
      for (Vertex t = 0; t < rank(); ++t) {
        if (!b.coords[t].is_zero() && !form(s, t).is_zero()) {
          col += form(s, t) * b.coords[t];
        }
      }
      acc += a.coords[s] * col;
    }
    return acc;
  }

  FieldElement CoxeterSystem::inner_simple(Root const& a, Vertex s) const {
    FieldElement acc = zero();
    for (Vertex t = 0; t < rank(); ++t) {
      if (!a.coords[t].is_zero() && !form(t, s).is_zero()) {
        acc += a.coords[t] * form(t, s);
      }
    }
    return acc;
  }

  Root CoxeterSystem::simple_root(Vertex s) const {
    Root r             = zero_root();
    r.coords.at(s)     = one();
    return r;
  }

  Root CoxeterSystem::zero_root() const {
    return Root{std::vector<FieldElement>(rank(), zero())};
  }

  Root CoxeterSystem::reflect(Vertex s, Root const& v) const {
    Root out = v;
    out.coords[s] -= inner_simple(v, s);
    return out;
  }

  SystemPtr system_for(CoxeterGraph const& g) {
    static std::mutex                       mu;
    static std::map<std::string, SystemPtr> cache;
    std::string                             key = g.matrix_key();
    for (auto const& n : g.names()) {
      key += '|' + n;
    }
    std::lock_guard lock(mu);
    auto&           slot = cache[key];
    if (!slot) {
      slot = CoxeterSystem::make(g);
    }
    return slot;
  }

  ////////////////////////////////////////////////////////////////////////
  // CoxElement
  ////////////////////////////////////////////////////////////////////////

  CoxElement::CoxElement(SystemPtr sys)
      : sys_(std::move(sys)),
        n_(sys_->rank()),
        mat_(n_ * n_, sys_->zero()),
        inv_(n_ * n_, sys_->zero()) {
    for (std::size_t i = 0; i < n_; ++i) {
      mat_[i * n_ + i] = sys_->one();
      inv_[i * n_ + i] = sys_->one();
    }
  }

  CoxElement CoxElement::generator(SystemPtr sys, Vertex s) {
    CoxElement e(std::move(sys));
    e.mul_right(s);
    return e;
  }

  CoxElement CoxElement::from_word(SystemPtr sys, CoxWord const& w) {
    CoxElement e(std::move(sys));
    for (Vertex s : w) {
      e.mul_right(s);
    }
    return e;
  }

  namespace {
    // m <- m * rho(s): column j -= B[j][s] * column s.
    void right_reflect(std::vector<FieldElement>& m,
                       std::size_t                n,
                       CoxeterSystem const&       sys,
                       Vertex                     s) {
      std::vector<FieldElement> col;
      col.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        col.push_back(m[i * n + s]);
      }
      for (std::size_t j = 0; j < n; ++j) {
        FieldElement const& b = sys.form(static_cast<Vertex>(j), s);
        if (b.is_zero()) {
          continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
          if (!col[i].is_zero()) {
            m[i * n + j] -= b * col[i];
          }
        }
      }
    }

    // m <- rho(s) * m: row s -= sum_k B[k][s] * row k.
    void left_reflect(std::vector<FieldElement>& m,
                      std::size_t                n,
                      CoxeterSystem const&       sys,
                      Vertex                     s) {
      for (std::size_t j = 0; j < n; ++j) {
        FieldElement acc = sys.zero();
        for (std::size_t k = 0; k < n; ++k) {
          FieldElement const& b = sys.form(static_cast<Vertex>(k), s);
          if (!b.is_zero() && !m[k * n + j].is_zero()) {
            acc += b * m[k * n + j];
          }
        }
        m[s * n + j] -= acc;
      }
    }

    std::vector<FieldElement> matmul(std::vector<FieldElement> const& a,
                                     std::vector<FieldElement> const& b,
                                     std::size_t                      n,
                                     CoxeterSystem const&             sys) {
      std::vector<FieldElement> out(n * n, sys.zero());
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          FieldElement const& x = a[i * n + k];
          if (x.is_zero()) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            if (!b[k * n + j].is_zero()) {
              out[i * n + j] += x * b[k * n + j];
            }
          }
        }
      }
      return out;
    }
  }  // namespace

  CoxElement& CoxElement::mul_right(Vertex s) {
    right_reflect(mat_, n_, *sys_, s);
    left_reflect(inv_, n_, *sys_, s);
    return *this;
  }

  CoxElement& CoxElement::mul_left(Vertex s) {
    left_reflect(mat_, n_, *sys_, s);
    right_reflect(inv_, n_, *sys_, s);
    return *this;
  }

  CoxElement operator*(CoxElement const& a, CoxElement const& b) {
    CoxElement out(a.sys_);
    out.mat_ = matmul(a.mat_, b.mat_, a.n_, *a.sys_);
    out.inv_ = matmul(b.inv_, a.inv_, a.n_, *a.sys_);
    return out;
  }

  CoxElement CoxElement::inverse() const {
    CoxElement out(*this);
    std::swap(out.mat_, out.inv_);
    return out;
  }

  bool CoxElement::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        FieldElement const& x = mat_[i * n_ + j];
        if (i == j ? !(x == sys_->one()) : !x.is_zero()) {
          return false;
        }
      }
    }
    return true;
  }

  Root CoxElement::root_image(Vertex s) const {
    Root r;
    r.coords.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      r.coords.push_back(mat_[i * n_ + s]);
    }
    return r;
  }

  Root CoxElement::act(Root const& v) const {
    Root r = sys_->zero_root();
    for (std::size_t j = 0; j < n_; ++j) {
      if (v.coords[j].is_zero()) {
        continue;
      }
      for (std::size_t i = 0; i < n_; ++i) {
        if (!mat_[i * n_ + j].is_zero()) {
          r.coords[i] += mat_[i * n_ + j] * v.coords[j];
        }
      }
    }
    return r;
  }

  namespace {
    int column_sign(std::vector<FieldElement> const& m, std::size_t n, Vertex s) {
      for (std::size_t i = 0; i < n; ++i) {
        FieldElement const& x = m[i * n + s];
        if (!x.is_zero()) {
          return x.sign();
        }
      }
      return 0;
    }
  }  // namespace

  bool CoxElement::has_right_descent(Vertex s) const {
    return column_sign(mat_, n_, s) < 0;
  }

  bool CoxElement::has_left_descent(Vertex s) const {
    return column_sign(inv_, n_, s) < 0;
  }

  std::string CoxElement::key() const {
    std::string out;
    for (auto const& x : mat_) {
      for (auto const& q : x.coords()) {
        out += q.get_str();
        out += ',';
      }
      out += ';';
    }
    return out;
  }

  bool is_negative_root(Root const& r) {
    for (auto const& c : r.coords) {
      if (!c.is_zero()) {
        return c.sign() < 0;
      }
    }
    return false;
  }

  CoxWord shortlex_reduced(CoxElement const& w) {
    CoxWord    out;
    CoxElement x = w;
    for (;;) {
      bool found = false;
      for (Vertex s = 0; s < x.rank(); ++s) {
        if (x.has_left_descent(s)) {
          out.push_back(s);
          x.mul_left(s);
          found = true;
          break;
        }
      }
      if (!found) {
        return out;
      }
    }
  }

  std::size_t length(CoxElement const& w) {
    return shortlex_reduced(w).size();
  }

  ////////////////////////////////////////////////////////////////////////
  // M-operations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Packed = std::string;

    Packed pack(CoxWord const& w) {
      Packed p;
      for (Vertex v : w) {
        p += static_cast<char>(v);
      }
      return p;
    }

    CoxWord unpack(Packed const& p) {
      CoxWord w;
      for (char c : p) {
        w.push_back(static_cast<Vertex>(static_cast<unsigned char>(c)));
      }
      return w;
    }

    template <typename F>
    void for_each_braid_move(CoxeterGraph const& g, Packed const& w, F&& f) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        Vertex s = static_cast<unsigned char>(w[i]);
        Vertex t = static_cast<unsigned char>(w[i + 1]);
        if (s == t || g.label(s, t).is_infinite()) {
          continue;
        }
        unsigned const m = g.label(s, t).value();
        if (i + m > w.size()) {
          continue;
        }
        bool match = true;
        for (unsigned k = 0; k < m && match; ++k) {
          match = static_cast<unsigned char>(w[i + k]) == (k % 2 == 0 ? s : t);
        }
        if (!match) {
          continue;
        }
        Packed out = w;
        for (unsigned k = 0; k < m; ++k) {
          out[i + k] = static_cast<char>(k % 2 == 0 ? t : s);
        }
        f(out);
      }
    }

    std::unordered_set<Packed> closure_of(CoxeterGraph const& g,
                                          Packed const&       w,
                                          MReduceCaps         caps) {
      std::unordered_set<Packed> seen{w};
      std::deque<Packed>         queue{w};
      while (!queue.empty()) {
        Packed cur = std::move(queue.front());
        queue.pop_front();
        for_each_braid_move(g, cur, [&](Packed const& next) {
          if (seen.insert(next).second) {
            if (seen.size() > caps.max_closure) {
              throw CapExceeded("m_reduce: braid closure exceeds "
                                + std::to_string(caps.max_closure) + " words");
            }
            queue.push_back(next);
          }
        });
      }
      return seen;
    }
  }  // namespace

  std::vector<CoxWord> braid_closure(CoxeterGraph const& g,
                                     CoxWord const&      w,
                                     MReduceCaps         caps) {
    if (w.size() > caps.max_length) {
      throw CapExceeded("m_reduce: word longer than "
                        + std::to_string(caps.max_length));
    }
    std::vector<CoxWord> out;
    for (auto const& p : closure_of(g, pack(w), caps)) {
      out.push_back(unpack(p));
    }
    return out;
  }

  CoxWord m_reduce(CoxeterGraph const& g, CoxWord const& w, MReduceCaps caps) {
    if (w.size() > caps.max_length) {
      throw CapExceeded("m_reduce: word longer than "
                        + std::to_string(caps.max_length));
    }
    Packed cur = pack(w);
    for (;;) {
      bool reduced = false;
      for (auto const& p : closure_of(g, cur, caps)) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
          if (p[i] == p[i + 1]) {
            cur = p.substr(0, i) + p.substr(i + 2);
            reduced = true;
            break;
          }
        }
        if (reduced) {
          break;
        }
      }
      if (!reduced) {
        return unpack(cur);
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Support, membership, cosets
  ////////////////////////////////////////////////////////////////////////

  VertexSet support(CoxElement const& w) {
    return support_of(w.rank(), shortlex_reduced(w));
  }

  std::optional<CoxWord> cox_member_strong(SystemPtr const& sys,
                                           CoxWord const&   w,
                                           VertexSet const& x) {
    CoxWord red = shortlex_reduced(CoxElement::from_word(sys, w));
    for (Vertex v : red) {
      if (!x.contains(v)) {
        return std::nullopt;
      }
    }
    return red;
  }

  MinimalCosetDecomposition left_coset_decompose(CoxElement const& u,
                                                 VertexSet const&  x) {
    CoxElement v(u.system());
    CoxElement w = u;
    for (;;) {
      bool moved = false;
      for (Vertex s : x.members()) {
        if (w.has_left_descent(s)) {
          w.mul_left(s);
          v.mul_right(s);
          moved = true;
          break;
        }
      }
      if (!moved) {
        return {std::move(v), std::move(w)};
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(CoxeterType t) {
    switch (t) {
      case CoxeterType::spherical:
        return "spherical";
      case CoxeterType::affine:
        return "affine";
      default:
        return "other";
    }
  }

  std::pair<bool, std::size_t> form_signature(CoxeterSystem const& sys,
                                              VertexSet const&     x) {
    auto const                             m = x.members();
    std::size_t const                      n = m.size();
    std::vector<std::vector<FieldElement>> a(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a[i].push_back(sys.form(m[i], m[j]));
      }
    }
    std::size_t nullity = 0;
    for (std::size_t k = 0; k < n; ++k) {
      int const s = a[k][k].sign();
      if (s < 0) {
        return {false, nullity};
      }
      if (s == 0) {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (!a[k][j].is_zero()) {
            return {false, nullity};
          }
        }
        ++nullity;
        continue;
      }
      FieldElement const inv = a[k][k].inverse();
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k].is_zero()) {
          continue;
        }
        FieldElement const f = a[i][k] * inv;
        for (std::size_t j = k; j < n; ++j) {
          a[i][j] -= f * a[k][j];
        }
      }
    }
    return {true, nullity};
  }

  CoxeterType classify_type(CoxeterGraph const& g) {
    CoxeterSystem const sys(g);
    bool                all_spherical = true;
    bool                all_affine    = true;
    for (auto const& comp : components(g, g.all_vertices())) {
      auto [psd, nullity] = form_signature(sys, comp);
      if (!psd) {
        return CoxeterType::other;
      }
      all_spherical = all_spherical && nullity == 0;
      all_affine    = all_affine && nullity == 1;
    }
    if (all_spherical) {
      return CoxeterType::spherical;
    }
    return all_affine ? CoxeterType::affine : CoxeterType::other;
  }

  CoxElement longest_element(SystemPtr const& sys) {
    if (classify_type(sys->graph()) != CoxeterType::spherical) {
      throw PreconditionError("longest_element: the Coxeter group is infinite");
    }
    CoxElement w(sys);
    for (;;) {
      bool grew = false;
      for (Vertex s = 0; s < w.rank(); ++s) {
        if (!w.has_right_descent(s)) {
          w.mul_right(s);
          grew = true;
          break;
        }
      }
      if (!grew) {
        return w;
      }
    }
  }

}  // namespace vag
