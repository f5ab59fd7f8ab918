#include "septic/family.hpp"

#include <sstream>
#include <stdexcept>

namespace septic {

namespace {

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int mod_nonneg(const Int& a, long m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

FamilyCatalogue::FamilyCatalogue() {
    a[6] = IntPoly{-6, -5, -1, -1};
    a[5] = IntPoly{12, 24, 9, 9};
    a[4] = IntPoly{-8, -36, -22, -15, -5, 9, 1, 1};
    a[3] = IntPoly{0, 16, 20, -2, 6, -24, -12, -5, -1};
    a[2] = IntPoly{0, 0, -8, 8, 2, 14, 19, 7, 2};
    a[1] = IntPoly{0, 0, 0, 0, -4, 0, -8, -4, -1};
    a[0] = IntPoly{0, 0, 0, 0, 0, 0, 0, 1};

    E = IntPoly{8, 4, 16, 1, 11, 2, 1};
    F = IntPoly{4, 1, 10, 10};
    G = IntPoly{-174, -87, -201, 15, -31, 30, 15};
    H = IntPoly{82944, 103680, 206640, 179676, 167671, 136787, 52892, 19620,
                -8438, -12033, -6244, -3255, -504, -133, 30, 6};
    I = IntPoly{-432, -324, -1214, -1155, -588, -861, -84, -78, 36, 12};
    J = IntPoly{3456, 3456, 5574, 426, 1857, -1641, -2534, -1441, -1126, -162,
                -66, 20, 5};
    L = IntPoly{-14725412, -16768814, -5167741, -1436918, 1587001, 1520256,
                -53980, -3409, -61261, 6075, 43169, 7709, 5035, -492, -150};
    M = IntPoly{1738, 155, -376, 119, 7, 25};
    W = IntPoly{941192,    403368,   -2012038, 671937,   4160443,  -2324868,
                -3702019,  7056657,  5083933,  -21216648, 33948931, -28970654,
                20556660,  -9116196, 6281164,  -1664243, 1611259,  258262,
                480245,    142780,   71180,    15104,    4016,     448,
                64};
    phi7 = IntPoly{1, 1, 1, 1, 1, 1, 1};
    w_numerator = IntPoly{0, 13, -11, 18, 3, 2};
    psi = IntPoly{8, 112, 686, 2303, 4459, 4802, 2401};
    U = IntPoly{1, 1, 8, 1, 22, 8, 8};
    V = compose(E, IntPoly{1, 2});  // E(2k + 1)
    disc_quartic = IntPoly{4, -3, 6, -2, 2};
    disc_quintic = IntPoly{1, 1, 2, 1, 1, 1};
}

const FamilyCatalogue& FamilyCatalogue::get() {
    static const FamilyCatalogue cat;
    return cat;
}

IntPoly defining_polynomial(const Int& t) {
    if (t == 0)
        throw std::domain_error(
            "degenerate parameter t = 0: f_0 = X^4 (X-2)^3 is reducible");
    const auto& cat = FamilyCatalogue::get();
    std::vector<Int> coeffs(8);
    for (int i = 0; i < 7; ++i) coeffs[i] = eval(cat.a[i], t);
    coeffs[7] = 1;
    return IntPoly(std::move(coeffs));
}

namespace {

// 7^7 * f((X + c)/7) expanded exactly:
// (X+c)^7 + 7 a6 (X+c)^6 + ... + 7^(7-i) a_i (X+c)^i + ... + 7^7 a0.
IntPoly depressed_transform(const IntPoly& f, const Int& c) {
    IntPoly xc{0, 1};
    xc = xc + IntPoly(c);
    IntPoly power{1};
    IntPoly out;
    for (int i = 0; i <= 7; ++i) {
        Int coeff = f.coeff(i) * pow_int(Int(7), 7 - i);
        out = out + power * coeff;
        if (i < 7) power = power * xc;
    }
    return out;
}

}  // namespace

SepticModel build_model(const Int& t, const FactorBudget& budget, bool waive_irreducibility) {
    SepticModel mod;
    mod.t = t;
    mod.f = defining_polynomial(t);
    if (!waive_irreducibility) {
        mod.certificate_prime = certify_irreducible_deg7(mod.f);
        if (!mod.certificate_prime)
            throw std::runtime_error("no irreducibility certificate for t = " + t.get_str());
    }
    mod.shift = ((t + 1) * t + 5) * t + 6;  // t^3 + t^2 + 5t + 6
    mod.fstar = depressed_transform(mod.f, mod.shift);
    if (mod.fstar.coeff(6) != 0 || mod.fstar.degree() != 7 || mod.fstar.lc() != 1)
        throw std::logic_error("depressed transform malformed at t = " + t.get_str());
    for (int i = 0; i < 6; ++i) mod.h[i] = mod.fstar.coeff(i);

    const auto& cat = FamilyCatalogue::get();
    const Int Ev = eval(cat.E, t);
    if (mod.h[5] != -21 * Ev || mod.h[4] != -7 * eval(cat.F, t) * Ev ||
        mod.h[3] != -7 * eval(cat.G, t) * Ev || mod.h[2] != -7 * eval(cat.I, t) * Ev ||
        mod.h[1] != -7 * eval(cat.J, t) * Ev || mod.h[0] != -eval(cat.H, t) * Ev)
        throw std::logic_error("coefficient factorization broken at t = " + t.get_str());

    // m = prod p^min_i floor(v_p(h_i)/(7-i)), over primes with p^2 | h5.
    Factorization f5 = factor(mod.h[5], budget);
    if (!f5.complete)
        throw resource_error("factoring budget exhausted on h5 at t = " + t.get_str());
    mod.m = 1;
    for (const auto& [p, e5] : f5.factors) {
        if (e5 < 2) continue;
        int emin = e5 / 2;
        for (int i = 0; i < 5 && emin > 0; ++i) {
            if (mod.h[i] == 0) continue;  // divisible by any power
            emin = std::min(emin, valuation(p, mod.h[i]) / (7 - i));
        }
        if (emin > 0) mod.m *= pow_int(p, emin);
    }

    std::vector<Int> k(8, Int(0));
    for (int i = 0; i < 6; ++i) {
        Int den = pow_int(mod.m, 7 - i);
        Int q;
        mpz_divexact(q.get_mpz_t(), mod.h[i].get_mpz_t(), den.get_mpz_t());
        k[i] = q;
    }
    k[7] = 1;
    mod.g = IntPoly(std::move(k));

    // maximality of m (condition (2) of the conductor criterion): no prime
    // of h5 still satisfies q^(7-i) | k_i for all i
    for (const auto& [p, e5] : f5.factors) {
        int emin = 1000;
        for (int i = 0; i < 6; ++i) {
            if (mod.g.coeff(i) == 0) continue;
            emin = std::min(emin, valuation(p, mod.g.coeff(i)) / (7 - i));
        }
        if (emin > 0 && emin != 1000)
            throw std::logic_error("m not maximal at t = " + t.get_str());
    }

    // fstar(mX)/m^5: coefficients h_i / m^(5-i), top m^2
    std::vector<Int> sc(8);
    for (int i = 0; i < 6; ++i) {
        if (i < 5) {
            Int den = pow_int(mod.m, 5 - i);
            mpz_divexact(sc[i].get_mpz_t(), mod.h[i].get_mpz_t(), den.get_mpz_t());
        } else {
            sc[i] = mod.h[i];
        }
    }
    sc[6] = 0;
    sc[7] = mod.m * mod.m;
    mod.g_scaled = IntPoly(std::move(sc));
    return mod;
}

Verdict verify_h_factorization() {
    const auto& cat = FamilyCatalogue::get();
    for (long tv = -22; tv <= 22; ++tv) {
        if (tv == 0) continue;
        Int t(tv);
        IntPoly f = defining_polynomial(t);
        Int c = ((t + 1) * t + 5) * t + 6;
        IntPoly fstar = depressed_transform(f, c);
        const Int Ev = eval(cat.E, t);
        const Int expect[6] = {-eval(cat.H, t) * Ev, -7 * eval(cat.J, t) * Ev,
                               -7 * eval(cat.I, t) * Ev, -7 * eval(cat.G, t) * Ev,
                               -7 * eval(cat.F, t) * Ev, -21 * Ev};
        for (int i = 0; i < 6; ++i) {
            if (fstar.coeff(i) != expect[i]) {
                std::ostringstream os;
                os << "h" << i << " mismatch at t = " << tv;
                return {false, os.str()};
            }
        }
        if (fstar.coeff(6) != 0) return {false, "X^6 term survives at t = " + std::to_string(tv)};
    }
    return {};
}

Verdict verify_disc_g(long t_min, long t_max, const FactorBudget& budget) {
    const auto& cat = FamilyCatalogue::get();
    for (long tv = t_min; tv <= t_max; ++tv) {
        if (tv == 0) continue;
        Int t(tv);
        SepticModel mod = build_model(t, budget, /*waive=*/true);
        Int num = pow_int(Int(7), 42) * pow_int(eval(cat.E, t), 6) * pow_int(t, 22) *
                  pow_int(eval(cat.disc_quartic, t), 2) * pow_int(eval(cat.disc_quintic, t), 2);
        Int m18 = pow_int(mod.m, 18);
        if (!mpz_divisible_p(num.get_mpz_t(), m18.get_mpz_t()))
            return {false, "m^18 does not divide the closed form at t = " + std::to_string(tv)};
        Int closed;
        mpz_divexact(closed.get_mpz_t(), num.get_mpz_t(), m18.get_mpz_t());
        if (discriminant(mod.g_scaled) != closed)
            return {false, "scaled discriminant mismatch at t = " + std::to_string(tv)};
        Int m42 = pow_int(mod.m, 42);
        if (discriminant(mod.g) * m42 != num)
            return {false, "monic discriminant mismatch at t = " + std::to_string(tv)};
    }
    return {};
}

Verdict verify_disc_f(long t_min, long t_max) {
    const auto& cat = FamilyCatalogue::get();
    for (long tv = t_min; tv <= t_max; ++tv) {
        if (tv == 0) continue;
        Int t(tv);
        IntPoly f = defining_polynomial(t);
        Int closed = pow_int(t, 22) * pow_int(eval(cat.E, t), 6) *
                     pow_int(eval(cat.disc_quartic, t), 2) *
                     pow_int(eval(cat.disc_quintic, t), 2);
        if (discriminant(f) != closed)
            return {false, "disc(f_t) mismatch at t = " + std::to_string(tv)};
    }
    return {};
}

Verdict verify_bezout() {
    const auto& cat = FamilyCatalogue::get();
    IntPoly lhs = cat.E * cat.L + cat.H * cat.M;
    if ((cat.E * cat.L).degree() != 20 || (cat.H * cat.M).degree() != 20)
        return {false, "unexpected product degrees"};
    if (lhs.degree() != 0 || lhs.coeff(0) != 26353376)
        return {false, "E*L + H*M != 26353376, got " + to_string(lhs)};
    if (Int(26353376) != pow_int(Int(2), 5) * pow_int(Int(7), 7))
        return {false, "constant is not 2^5 * 7^7"};
    return {};
}

Verdict verify_cyclotomic_identity() {
    const auto& cat = FamilyCatalogue::get();
    IntPoly lhs;
    IntPoly npow{1};
    for (int i = 0; i <= 6; ++i) {
        lhs = lhs + npow * pow_int(Int(14), 6 - i);
        if (i < 6) npow = npow * cat.w_numerator;
    }
    IntPoly rhs = cat.E * cat.W;
    if (lhs.degree() != 30 || rhs.degree() != 30)
        return {false, "unexpected degrees in cyclotomic identity"};
    if (lhs != rhs) {
        for (int i = 0; i <= 30; ++i)
            if (lhs.coeff(i) != rhs.coeff(i))
                return {false, "cyclotomic identity fails at X^" + std::to_string(i)};
    }
    return {};
}

Verdict verify_psi_identity() {
    const auto& cat = FamilyCatalogue::get();
    IntPoly lhs = compose(cat.E, IntPoly{2, 7});
    if (lhs != cat.psi * Int(49)) return {false, "E(7X+2) != 49*psi"};
    for (long s = 0; s < 7; ++s) {
        if (mod_nonneg(eval(cat.psi, Int(s)), 7) == 0)
            return {false, "7 | psi(" + std::to_string(s) + ")"};
    }
    return {};
}

int residue_class_valuation(const IntPoly& p, const Int& q, const Int& r, long lift_budget) {
    if (!is_prime(q)) throw std::domain_error("residue_class_valuation: q not prime");
    if (r < 0 || r >= q) throw std::domain_error("residue_class_valuation: residue out of range");
    Int base = eval(p, r);
    // the class valuation is bounded by the valuation at any one member;
    // if p vanishes at r itself, bound from the first nonvanishing lift
    Int probe = r;
    int guard = 0;
    while (base == 0) {
        probe += q;
        base = eval(p, probe);
        if (++guard > 64)
            throw std::domain_error("residue_class_valuation: polynomial vanishes on the class");
    }
    int bound = valuation(q, base);
    int best = 0;
    Int qk(1);  // q^(k-1)
    for (int k = 1; k <= bound; ++k) {
        if (!qk.fits_slong_p() || qk.get_si() > lift_budget)
            throw resource_error("residue_class_valuation: lift enumeration budget exceeded");
        Int qkk = qk * q;  // q^k
        bool all = true;
        for (Int m(0); m < qk; ++m) {
            Int x = r + q * m;
            if (eval(p, x) % qkk != 0) { all = false; break; }
        }
        if (!all) break;
        best = k;
        qk = qkk;
    }
    return best;
}

bool verify_no_repeated_roots(const IntPoly& p, int order) {
    if (p.degree() < order)
        throw std::domain_error("verify_no_repeated_roots: order exceeds degree");
    for (int k = 1; k <= order; ++k) {
        IntPoly d = derivative(p, k);
        if (primitive_gcd(p, d).degree() != 0) return false;
    }
    return true;
}

Verdict verify_valuation_table() {
    const auto& cat = FamilyCatalogue::get();
    const std::pair<const IntPoly*, int> expected[] = {
        {&cat.E, 2}, {&cat.F, 1}, {&cat.G, 2}, {&cat.I, 3}, {&cat.J, 4}, {&cat.H, 5}};
    const char* names = "EFGIJH";
    for (int i = 0; i < 6; ++i) {
        int v = residue_class_valuation(*expected[i].first, Int(7), Int(2));
        if (v != expected[i].second) {
            std::ostringstream os;
            os << "v_7(" << names[i] << " | t=2 mod 7) = " << v << ", expected "
               << expected[i].second;
            return {false, os.str()};
        }
    }
    for (long r = 0; r < 7; ++r) {
        if (r == 2) continue;
        if (residue_class_valuation(cat.E, Int(7), Int(r)) != 0)
            return {false, "v_7(E) nonzero on residue " + std::to_string(r)};
    }
    return {};
}

Verdict verify_uv_link() {
    const auto& cat = FamilyCatalogue::get();
    if (cat.U * Int(8) != compose(cat.E, IntPoly{0, 2}))
        return {false, "8U(x) != E(2x)"};
    if (cat.V != compose(cat.E, IntPoly{1, 2}))
        return {false, "V(x) != E(2x+1)"};
    for (long k = 0; k <= 1; ++k)
        if (mpz_even_p(eval(cat.U, Int(k)).get_mpz_t()))
            return {false, "U(" + std::to_string(k) + ") is even"};
    for (long tv = -10'000; tv <= 10'000; tv += 13)
        if (eval(cat.E, Int(tv)) <= 0)
            return {false, "E(" + std::to_string(tv) + ") <= 0"};
    return {};
}

}  // namespace septic
