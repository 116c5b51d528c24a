#include "vag/exactfield.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "vag/errors.hpp"

namespace vag {

  namespace {
    void trim(IntPoly& p) {
      while (p.size() > 1 && p.back() == 0) {
        p.pop_back();
      }
    }

    // Exact division by a monic polynomial.
    IntPoly divide_monic(IntPoly num, IntPoly const& den) {
      std::size_t const dn = den.size() - 1;
      if (num.size() < den.size()) {
        return {0};
      }
      IntPoly q(num.size() - dn, 0);
      for (std::size_t i = num.size(); i-- > dn;) {
        Integer c      = num[i];
        q[i - dn]      = c;
        for (std::size_t j = 0; j <= dn; ++j) {
          num[i - dn + j] -= c * den[j];
        }
      }
      for (std::size_t i = 0; i < dn; ++i) {
        if (num[i] != 0) {
          throw std::logic_error("divide_monic: inexact division");
        }
      }
      return q;
    }

    int sgn(Rational const& q) {
      return mpq_sgn(q.get_mpq_t());
    }
  }  // namespace

  IntPoly cyclotomic_polynomial(unsigned n) {
    if (n == 0) {
      throw PreconditionError("cyclotomic_polynomial(0)");
    }
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
      if (n % d == 0) {
        p = divide_monic(p, cyclotomic_polynomial(d));
      }
    }
    trim(p);
    return p;
  }

  IntPoly two_cos_minimal_polynomial(unsigned L) {
    if (L == 0) {
      throw PreconditionError("two_cos_minimal_polynomial(0)");
    }
    if (L == 1) {
      return {2, 1};
    }
    IntPoly const     phi = cyclotomic_polynomial(2 * L);
    std::size_t const k   = (phi.size() - 1) / 2;
    // a[j] is the coefficient of z^{j - k}.
    IntPoly a = phi;
    IntPoly psi(k + 1, 0);
    for (std::size_t j = k + 1; j-- > 0;) {
      Integer c = a[k + j];
      psi[j]    = c;
      if (c == 0) {
        continue;
      }
      // subtract c * (z + 1/z)^j
      Integer binom = 1;
      for (std::size_t r = 0; r <= j; ++r) {
        a[k + j - 2 * r] -= c * binom;
        binom = binom * static_cast<unsigned long>(j - r) / static_cast<unsigned long>(r + 1);
      }
    }
    return psi;
  }

  namespace {
    Rational eval(IntPoly const& p, Rational const& x) {
      Rational v = 0;
      for (std::size_t i = p.size(); i-- > 0;) {
        v = v * x + Rational(p[i]);
      }
      return v;
    }

    Rational pow2_inverse(unsigned bits) {
      Integer den = 1;
      mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
      return Rational(Integer(1), den);
    }

    // Halves [lo, hi] around the unique root of p until the width is small.
    void bisect(IntPoly const& p, Rational& lo, Rational& hi, unsigned bits) {
      Rational const target = pow2_inverse(bits);
      int const      s_lo   = sgn(eval(p, lo));
      while (hi - lo > target) {
        Rational mid = (lo + hi) / 2;
        mid.canonicalize();
        int s = sgn(eval(p, mid));
        if (s == 0) {
          lo = hi = mid;
          return;
        }
        if (s == s_lo) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
    }
  }  // namespace

  FieldSpec::FieldSpec(unsigned L)
      : L_(L),
        minpoly_(two_cos_minimal_polynomial(L)),
        theta_(2.0 * std::cos(M_PI / static_cast<double>(L))) {
    std::size_t const d = degree();
    // theta^d = -sum_{i<d} minpoly[i] theta^i, then shift and reduce.
    std::vector<Rational> cur(d);
    for (std::size_t i = 0; i < d; ++i) {
      cur[i] = -Rational(minpoly_[i]);
    }
    if (d >= 1) {
      reduction_.push_back(cur);
    }
    for (std::size_t k = d + 1; k + 1 < 2 * d; ++k) {
      std::vector<Rational> next(d);
      Rational const        top = cur[d - 1];
      for (std::size_t i = d - 1; i >= 1; --i) {
        next[i] = cur[i - 1];
      }
      next[0] = 0;
      for (std::size_t i = 0; i < d; ++i) {
        next[i] += top * reduction_[0][i];
      }
      reduction_.push_back(next);
      cur = std::move(next);
    }

    if (d == 1) {
      lo_ = hi_ = -Rational(minpoly_[0]);
      return;
    }
    lo_ = Rational(theta_ - 1e-9);
    hi_ = Rational(theta_ + 1e-9);
    if (sgn(eval(minpoly_, lo_)) * sgn(eval(minpoly_, hi_)) >= 0) {
      throw std::logic_error("FieldSpec: failed to isolate 2cos(pi/"
                             + std::to_string(L) + ")");
    }
    bisect(minpoly_, lo_, hi_, 64);
  }

  FieldSpec const& FieldSpec::get(unsigned L) {
    static std::mutex                                       mtx;
    static std::map<unsigned, std::unique_ptr<FieldSpec>> table;
    std::lock_guard<std::mutex>                             lock(mtx);
    auto&                                                   slot = table[L];
    if (!slot) {
      slot.reset(new FieldSpec(L));
    }
    return *slot;
  }

  void FieldSpec::enclosure(unsigned bits, Rational& lo, Rational& hi) const {
    lo = lo_;
    hi = hi_;
    if (bits > 64 && lo != hi) {
      bisect(minpoly_, lo, hi, bits);
    }
  }

  FieldSpec const& build_field(CoxeterGraph const& g) {
    unsigned L = 1;
    for (Vertex a = 0; a < g.rank(); ++a) {
      for (Vertex b = a + 1; b < g.rank(); ++b) {
        Label m = g.label(a, b);
        if (!m.is_infinite()) {
          L = std::lcm(L, m.value());
        }
      }
    }
    return FieldSpec::get(L);
  }

  ////////////////////////////////////////////////////////////////////////
  // FieldElement
  ////////////////////////////////////////////////////////////////////////

  FieldElement::FieldElement(FieldSpec const& spec)
      : spec_(&spec), c_(spec.degree(), Rational(0)) {}

  FieldElement::FieldElement(FieldSpec const& spec, long n) : FieldElement(spec) {
    c_[0] = n;
  }

  FieldElement::FieldElement(FieldSpec const& spec, Rational const& q)
      : FieldElement(spec) {
    c_[0] = q;
  }

  FieldElement::FieldElement(FieldSpec const& spec, std::vector<Rational> coords)
      : spec_(&spec), c_(std::move(coords)) {
    if (c_.size() != spec.degree()) {
      throw PreconditionError("FieldElement: coordinate count != field degree");
    }
  }

  FieldElement FieldElement::theta(FieldSpec const& spec) {
    FieldElement x(spec);
    if (spec.degree() == 1) {
      x.c_[0] = -Rational(spec.minpoly()[0]);
    } else {
      x.c_[1] = 1;
    }
    return x;
  }

  bool FieldElement::is_zero() const {
    for (auto const& q : c_) {
      if (q != 0) {
        return false;
      }
    }
    return true;
  }

  int FieldElement::sign() const {
    if (c_.size() == 1) {
      return sgn(c_[0]);
    }
    if (is_zero()) {
      return 0;
    }
    for (unsigned bits = 64;; bits *= 2) {
      Rational tlo, thi;
      spec_->enclosure(bits, tlo, thi);
      Rational lo = c_.back(), hi = c_.back();
      for (std::size_t i = c_.size() - 1; i-- > 0;) {
        Rational p1 = lo * tlo, p2 = lo * thi, p3 = hi * tlo, p4 = hi * thi;
        Rational mn = p1, mx = p1;
        for (Rational const* p : {&p2, &p3, &p4}) {
          if (*p < mn) {
            mn = *p;
          }
          if (*p > mx) {
            mx = *p;
          }
        }
        lo = mn + c_[i];
        hi = mx + c_[i];
      }
      if (lo > 0) {
        return 1;
      }
      if (hi < 0) {
        return -1;
      }
    }
  }

  FieldElement& FieldElement::operator+=(FieldElement const& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      c_[i] += o.c_[i];
    }
    return *this;
  }

  FieldElement& FieldElement::operator-=(FieldElement const& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      c_[i] -= o.c_[i];
    }
    return *this;
  }

  FieldElement operator*(FieldElement const& a, FieldElement const& b) {
    std::size_t const d = a.c_.size();
    if (d == 1) {
      FieldElement out(*a.spec_);
      out.c_[0] = a.c_[0] * b.c_[0];
      return out;
    }
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (a.c_[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < d; ++j) {
        if (b.c_[j] != 0) {
          prod[i + j] += a.c_[i] * b.c_[j];
        }
      }
    }
    FieldElement out(*a.spec_);
    for (std::size_t i = 0; i < d; ++i) {
      out.c_[i] = prod[i];
    }
    for (std::size_t k = d; k < 2 * d - 1; ++k) {
      if (prod[k] == 0) {
        continue;
      }
      auto const& red = a.spec_->reduction(k);
      for (std::size_t i = 0; i < d; ++i) {
        out.c_[i] += prod[k] * red[i];
      }
    }
    return out;
  }

  FieldElement& FieldElement::operator*=(FieldElement const& o) {
    *this = *this * o;
    return *this;
  }

  FieldElement FieldElement::operator-() const {
    FieldElement out(*this);
    for (auto& q : out.c_) {
      q = -q;
    }
    return out;
  }

  FieldElement FieldElement::inverse() const {
    if (is_zero()) {
      throw PreconditionError("FieldElement::inverse of zero");
    }
    std::size_t const d = c_.size();
    // Column j holds the coordinates of this * theta^j.
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
    FieldElement                       col = *this;
    FieldElement const                 t   = theta(*spec_);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < d; ++i) {
        m[i][j] = col.c_[i];
      }
      col = col * t;
    }
    m[0][d] = 1;
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t p = c;
      while (m[p][c] == 0) {
        ++p;
      }
      std::swap(m[p], m[c]);
      Rational piv = m[c][c];
      for (std::size_t j = c; j <= d; ++j) {
        m[c][j] /= piv;
      }
      for (std::size_t r = 0; r < d; ++r) {
        if (r != c && m[r][c] != 0) {
          Rational f = m[r][c];
          for (std::size_t j = c; j <= d; ++j) {
            m[r][j] -= f * m[c][j];
          }
        }
      }
    }
    FieldElement out(*spec_);
    for (std::size_t i = 0; i < d; ++i) {
      out.c_[i] = m[i][d];
    }
    return out;
  }

  double FieldElement::to_double() const {
    double v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
      v = v * spec_->theta() + c_[i].get_d();
    }
    if (c_.size() == 1) {
      return c_[0].get_d();
    }
    return v;
  }

  std::string FieldElement::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) {
        continue;
      }
      Rational    q   = c_[i];
      bool        neg = q < 0;
      std::string mag = neg ? Rational(-q).get_str() : q.get_str();
      std::string term;
      if (i == 0) {
        term = mag;
      } else {
        std::string mono = i == 1 ? "t" : "t^" + std::to_string(i);
        term             = (mag == "1") ? mono : mag + "*" + mono;
      }
      if (out.empty()) {
        out = neg ? "-" + term : term;
      } else {
        out += neg ? " - " + term : " + " + term;
      }
    }
    return out.empty() ? "0" : out;
  }

  FieldElement two_cos_pi_over(Label m, FieldSpec const& spec) {
    if (m.is_infinite()) {
      return FieldElement(spec, 2);
    }
    unsigned const L = spec.conductor();
    if (L % m.value() != 0) {
      throw PreconditionError("two_cos_pi_over: " + std::to_string(m.value())
                              + " does not divide L = " + std::to_string(L));
    }
    unsigned const n = L / m.value();
    // E_0 = 2, E_1 = theta, E_{k+1} = theta E_k - E_{k-1}; E_n(theta) = 2cos(n pi / L).
    FieldElement const t = FieldElement::theta(spec);
    FieldElement       prev(spec, 2);
    FieldElement       cur = t;
    if (n == 0) {
      return prev;
    }
    for (unsigned k = 1; k < n; ++k) {
      FieldElement next = t * cur - prev;
      prev              = std::move(cur);
      cur               = std::move(next);
    }
    return cur;
  }

  FieldElement embed(FieldElement const& x, FieldSpec const& target) {
    if (&x.spec() == &target) {
      return x;
    }
    FieldElement const t = two_cos_pi_over(Label(x.spec().conductor()), target);
    // Horner in the image of theta'.
    FieldElement acc(target);
    auto const&  c = x.coords();
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = acc * t + FieldElement(target, c[i]);
    }
    return acc;
  }

}  // namespace vag
