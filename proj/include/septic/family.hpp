#ifndef SEPTIC_FAMILY_HPP
#define SEPTIC_FAMILY_HPP

#include <array>
#include <optional>
#include <string>

#include "septic/integers.hpp"
#include "septic/poly.hpp"

namespace septic {

/// The fixed polynomials attached to the Hashimoto-Hoshi septic family:
/// the coefficient polynomials a0..a6 of the defining septic f_t, the
/// sextic invariant E whose values drive all the arithmetic, the cofactor
/// polynomials F..J of the Tschirnhaus coefficients, a Bezout pair (L, M)
/// with E*L + H*M = 2^5 * 7^7, the seventh cyclotomic polynomial together
/// with the degree-24 companion W and the numerator of the rational map w
/// (denominator 14), the substituted sextic psi with E(7s+2) = 49*psi(s),
/// the half-parameter forms U, V with 8*U(k) = E(2k) and V(k) = E(2k+1),
/// and the two outer factors of disc(f_t).
struct FamilyCatalogue {
    std::array<IntPoly, 7> a;  // a[i] = coefficient of X^i in f_t, as a polynomial in t
    IntPoly E, F, G, H, I, J;
    IntPoly L, M;          // Bezout pair for (E, H)
    IntPoly W;             // degree 24
    IntPoly phi7;          // x^6 + ... + 1
    IntPoly w_numerator;   // w = w_numerator / 14
    IntPoly psi;
    IntPoly U, V;
    IntPoly disc_quartic;  // 2t^4 - 2t^3 + 6t^2 - 3t + 4
    IntPoly disc_quintic;  // t^5 + t^4 + t^3 + 2t^2 + t + 1

    static const FamilyCatalogue& get();

  private:
    FamilyCatalogue();
};

/// Everything derived from one parameter t: the defining septic, its
/// depressed 7^7-scaled transform, the reduction modulus m and the reduced
/// minimal polynomial g with coefficients k_i = h_i / m^(7-i).
struct SepticModel {
    Int t;
    IntPoly f;      // monic degree 7
    Int shift;      // t^3 + t^2 + 5t + 6
    IntPoly fstar;  // 7^7 * f((X + shift)/7); no X^6 term
    std::array<Int, 6> h;  // h[i] = coefficient of X^i in fstar, i = 0..5
    Int m;
    IntPoly g;         // monic: X^7 + k5 X^5 + ... + k0
    IntPoly g_scaled;  // fstar(mX)/m^5 = m^2 * g; the closed discriminant
                       // form tracks this scaling
    std::optional<long> certificate_prime;  // irreducibility witness
};

/// f_t.  Throws std::domain_error for the degenerate t = 0
/// (f_0 = X^4 (X-2)^3 is reducible).
IntPoly defining_polynomial(const Int& t);

/// Builds the full model.  Factors h5 = -21 E(t) to find m; an incomplete
/// factorization raises resource_error rather than underestimating m.
/// Unless waived, a 25-prime irreducibility certificate is required and
/// its absence raises std::runtime_error.
SepticModel build_model(const Int& t, const FactorBudget& budget = {},
                        bool waive_irreducibility = false);

struct Verdict {
    bool ok = true;
    std::string detail;  // failing witness when !ok
};

/// The six coefficient factorizations h5 = -21E, h4 = -7FE, h3 = -7GE,
/// h2 = -7IE, h1 = -7JE, h0 = -HE, checked at 44 parameter points; both
/// sides have t-degree <= 21, so agreement at 44 points is equality.
Verdict verify_h_factorization();

/// disc(fstar(mX)/m^5) == 7^42 E^6 t^22 disc_quartic^2 disc_quintic^2 / m^18
/// for every t in [t_min, t_max] \ {0}, computed by resultant; also checks
/// that m^18 divides the closed-form numerator exactly and that the monic
/// reduced polynomial satisfies the same numerator over m^42.
Verdict verify_disc_g(long t_min, long t_max, const FactorBudget& budget = {});

/// disc(f_t) == t^22 E^6 disc_quartic^2 disc_quintic^2 for every t in
/// [t_min, t_max] \ {0}, resultant against the closed form.
Verdict verify_disc_f(long t_min, long t_max);

/// E*L + H*M == 26353376 == 2^5 * 7^7 as polynomials.
Verdict verify_bezout();

/// sum_{i=0..6} N^i 14^(6-i) == E * W  (the 14^6-cleared form of
/// Phi7(w) = E W / (2^6 7^6)), N the numerator of w.
Verdict verify_cyclotomic_identity();

/// E(7X + 2) == 49 psi(X), and 7 never divides psi(s) (checked on a full
/// residue system mod 7).
Verdict verify_psi_identity();

/// Largest k with q^k | p(x) for EVERY integer x = r (mod q): bounded by
/// v_q(p(r)), then each level tests all q^(k-1) lifts r + q*m.
int residue_class_valuation(const IntPoly& p, const Int& q, const Int& r,
                            long lift_budget = 10'000'000);

/// primitive_gcd(p, p^(k)) == 1 for k = 1..order.
bool verify_no_repeated_roots(const IntPoly& p, int order);

/// The 7-adic class valuations of E, F, G, I, J, H on t = 2 (mod 7) are
/// (2, 1, 2, 3, 4, 5), and E has class valuation 0 at every other residue.
Verdict verify_valuation_table();

/// 8 U(x) == E(2x) and V(x) == E(2x+1) as polynomials, U(0) and U(1) odd,
/// and E(t) > 0 over a sample of parameters.
Verdict verify_uv_link();

}  // namespace septic

#endif
