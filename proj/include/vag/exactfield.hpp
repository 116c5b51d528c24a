#ifndef VAG_EXACTFIELD_HPP_
#define VAG_EXACTFIELD_HPP_

// Exact arithmetic in K = Q(theta), theta = 2cos(pi/L). Elements are stored in
// the power basis 1, theta, ..., theta^{d-1} with arbitrary-precision rational
// coordinates; the sign of an element is decided by evaluating it on a
// rational enclosure of theta that is refined until it excludes zero.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vag/presentation.hpp"

namespace vag {

  using Rational = mpq_class;
  using Integer  = mpz_class;

  // Integer polynomials, coefficient i multiplies x^i.
  using IntPoly = std::vector<Integer>;

  // The cyclotomic polynomial Phi_n.
  IntPoly cyclotomic_polynomial(unsigned n);

  // Psi with Phi_{2L}(z) = z^{phi(2L)/2} Psi(z + 1/z); for L = 1 this is x + 2.
  IntPoly two_cos_minimal_polynomial(unsigned L);

  class FieldSpec {
   public:
    // Interned: one instance per conductor for the life of the program.
    static FieldSpec const& get(unsigned L);

    unsigned conductor() const noexcept {
      return L_;
    }
    std::size_t degree() const noexcept {
      return minpoly_.size() - 1;
    }
    IntPoly const& minpoly() const noexcept {
      return minpoly_;
    }

    // theta^k expressed in the power basis, for d <= k <= 2d - 2.
    std::vector<Rational> const& reduction(std::size_t k) const {
      return reduction_[k - degree()];
    }

    // A rational interval of width <= 2^-bits containing theta.
    void enclosure(unsigned bits, Rational& lo, Rational& hi) const;

    double theta() const noexcept {
      return theta_;
    }

   private:
    explicit FieldSpec(unsigned L);

    unsigned                           L_;
    IntPoly                            minpoly_;
    std::vector<std::vector<Rational>> reduction_;
    Rational                           lo_, hi_;  // 64-bit enclosure
    double                             theta_;
  };

  // Field with L = lcm of the finite off-diagonal labels (1 if none).
  FieldSpec const& build_field(CoxeterGraph const& g);

  class FieldElement {
   public:
    explicit FieldElement(FieldSpec const& spec);
    FieldElement(FieldSpec const& spec, long n);
    FieldElement(FieldSpec const& spec, Rational const& q);
    FieldElement(FieldSpec const& spec, std::vector<Rational> coords);

    static FieldElement theta(FieldSpec const& spec);

    FieldSpec const& spec() const noexcept {
      return *spec_;
    }
    std::vector<Rational> const& coords() const noexcept {
      return c_;
    }

    bool is_zero() const;
    // -1, 0 or +1 in the real embedding theta = 2cos(pi/L).
    int sign() const;

    FieldElement inverse() const;

    FieldElement& operator+=(FieldElement const& o);
    FieldElement& operator-=(FieldElement const& o);
    FieldElement& operator*=(FieldElement const& o);

    friend FieldElement operator+(FieldElement a, FieldElement const& b) {
      return a += b;
    }
    friend FieldElement operator-(FieldElement a, FieldElement const& b) {
      return a -= b;
    }
    friend FieldElement operator*(FieldElement const& a, FieldElement const& b);
    FieldElement        operator-() const;

    friend bool operator==(FieldElement const& a, FieldElement const& b) {
      return a.c_ == b.c_;
    }

    double      to_double() const;
    std::string to_string() const;  // e.g. "1 + 1/2*t" with t = theta

   private:
    FieldSpec const*      spec_;
    std::vector<Rational> c_;
  };

  // 2cos(pi/m) as an element of the field; infinity gives 2.
  FieldElement two_cos_pi_over(Label m, FieldSpec const& spec);

  // The inclusion Q(2cos(pi/L')) -> Q(2cos(pi/L)) for L' dividing L.
  FieldElement embed(FieldElement const& x, FieldSpec const& target);

}  // namespace vag

#endif  // VAG_EXACTFIELD_HPP_
