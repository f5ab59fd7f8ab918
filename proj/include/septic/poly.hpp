#ifndef SEPTIC_POLY_HPP
#define SEPTIC_POLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace septic {

using Int = mpz_class;

/// Dense univariate polynomial over Z, coefficients stored by ascending
/// degree.  The zero polynomial is the empty list; otherwise the leading
/// coefficient is nonzero.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<Int> coeffs);
    explicit IntPoly(const Int& constant);

    static IntPoly monomial(const Int& coeff, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Int& lc() const;
    Int coeff(int i) const;  // 0 outside the stored range
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  private:
    std::vector<Int> c_;
    void normalize();
};

IntPoly operator+(const IntPoly& p, const IntPoly& q);
IntPoly operator-(const IntPoly& p, const IntPoly& q);
IntPoly operator-(const IntPoly& p);
IntPoly operator*(const IntPoly& p, const IntPoly& q);
IntPoly operator*(const IntPoly& p, const Int& s);
IntPoly operator*(const Int& s, const IntPoly& p);

/// p(X + a)
IntPoly shift(const IntPoly& p, const Int& a);

Int eval(const IntPoly& p, const Int& x);

/// p(q(X)), exact.
IntPoly compose(const IntPoly& p, const IntPoly& q);

IntPoly derivative(const IntPoly& p);
IntPoly derivative(const IntPoly& p, int order);

/// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
Int content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

/// Primitive positive-leading-coefficient generator of gcd(p, q) over Q,
/// computed by a pseudo-remainder sequence with the content stripped after
/// every step.  gcd statements "= 1" hold at this normalization.
IntPoly primitive_gcd(const IntPoly& p, const IntPoly& q);

/// Resultant via fraction-free (Bareiss) elimination of the Sylvester
/// matrix.  Throws std::domain_error on zero input.
Int resultant(const IntPoly& p, const IntPoly& q);

/// Same value by the subresultant remainder sequence; independent of the
/// Sylvester path and used as its cross-check.
Int resultant_prs(const IntPoly& p, const IntPoly& q);

/// (-1)^(n(n-1)/2) * resultant(p, p') / lc(p).  Requires deg p >= 2.
/// Not restricted to monic input: for c * p the value is c^(2n-2) * disc(p).
Int discriminant(const IntPoly& p);

/// Reduction of an IntPoly modulo a prime, residues in [0, p).
struct ModPoly {
    long modulus = 0;
    std::vector<long> c;  // ascending degree, no leading zeros

    static ModPoly reduce(const IntPoly& p, long prime);
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();
};

ModPoly mod_mul(const ModPoly& a, const ModPoly& b);
ModPoly mod_rem(const ModPoly& a, const ModPoly& b);
ModPoly mod_gcd(const ModPoly& a, const ModPoly& b);
/// X^e mod f over F_p by square-and-multiply.
ModPoly mod_pow_x(unsigned long long e, const ModPoly& f);

/// Searches the first 25 primes q with q not dividing lc(p).  Reports the
/// first q for which p mod q has no irreducible factor of degree <= 3
/// (gcd against X^(q^k) - X for k = 1,2,3); for degree 7 that forces
/// irreducibility mod q and hence over Q.  nullopt means "uncertified",
/// not a reducibility claim.
std::optional<long> certify_irreducible_deg7(const IntPoly& p);

/// Text form "c0 + c1*X + ... + cn*X^n", every term listed.
std::string to_string(const IntPoly& p);
/// Parses the text form; tolerates omitted zero terms and "X^k" without
/// an explicit coefficient.  Throws std::domain_error on malformed input.
IntPoly parse_poly(const std::string& text);

}  // namespace septic

#endif
