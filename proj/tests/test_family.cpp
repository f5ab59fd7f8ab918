#include <doctest.h>

#include "septic/family.hpp"

using namespace septic;

namespace {

Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

TEST_CASE("defining polynomial") {
    IntPoly f1 = defining_polynomial(Int(1));
    CHECK(f1.degree() == 7);
    CHECK(f1.lc() == 1);
    CHECK(f1.coeff(0) == 1);  // a0(t) = t^7

    IntPoly fm1 = defining_polynomial(Int(-1));
    CHECK(fm1.coeff(0) == -1);
    CHECK(fm1.coeff(6) == -1);  // -((-1)^3 + (-1)^2 - 5 + 6)

    CHECK_THROWS_AS(defining_polynomial(Int(0)), std::domain_error);
}

TEST_CASE("catalogue identities") {
    CHECK(verify_h_factorization().ok);
    CHECK(verify_bezout().ok);
    CHECK(verify_cyclotomic_identity().ok);
    CHECK(verify_psi_identity().ok);
    CHECK(verify_uv_link().ok);

    const auto& cat = FamilyCatalogue::get();
    CHECK((cat.E * cat.L).degree() == 20);
    CHECK((cat.H * cat.M).degree() == 20);
    CHECK(primitive_gcd(cat.E, cat.H) == IntPoly{1});

    // single-point spot checks
    CHECK(eval(cat.psi, Int(1)) == 14771);
    CHECK(eval(cat.E, Int(9)) == 49 * 14771);
    CHECK(eval(cat.W, Int(0)) == 941192);
    CHECK(Int(7529536) == 8 * eval(cat.W, Int(0)));  // 14^6 = E(0) W(0)
    CHECK(eval(cat.U, Int(1)) == 49);
}

TEST_CASE("mutated catalogue data breaks the identities") {
    const auto& cat = FamilyCatalogue::get();
    // corrupted Bezout cofactor: E L + H (M + 1) picks up a degree-15 tail
    IntPoly bad = cat.E * cat.L + cat.H * (cat.M + IntPoly{1});
    CHECK(bad.degree() > 0);
    // corrupted E at one point: h5 identity fails there
    Int t(3);
    IntPoly f = defining_polynomial(t);
    SepticModel m = build_model(t, {}, /*waive=*/true);
    CHECK(m.h[5] == -21 * eval(cat.E, t));
    CHECK(m.h[5] != -21 * (eval(cat.E, t) + 1));
}

TEST_CASE("build_model") {
    SepticModel m1 = build_model(Int(1));
    CHECK(m1.m == 1);
    CHECK(m1.certificate_prime.has_value());
    CHECK(m1.fstar.coeff(6) == 0);
    CHECK(m1.g == m1.fstar);  // m = 1 keeps the transform

    SepticModel m2 = build_model(Int(2));
    CHECK(m2.m == 14);
    SepticModel m9 = build_model(Int(9));
    CHECK(m9.m == 7);
    SepticModel m16 = build_model(Int(16));
    CHECK(m16.m == 14);
    SepticModel mm5 = build_model(Int(-5));
    CHECK(mm5.m == 7);

    // 7 || m exactly on the t = 2 (mod 7) class, 7 never divides m otherwise
    for (long t : {2L, 9L, 16L, -5L, 23L}) CHECK(valuation(Int(7), build_model(Int(t), {}, true).m) == 1);
    for (long t : {1L, 3L, 4L, 5L, 6L, 8L, -1L}) CHECK(valuation(Int(7), build_model(Int(t), {}, true).m) == 0);

    CHECK_THROWS_AS(build_model(Int(0)), std::domain_error);
}

TEST_CASE("model invariants over a parameter sweep") {
    for (long tv = -50; tv <= 50; ++tv) {
        if (tv == 0) continue;
        SepticModel m = build_model(Int(tv), {}, /*waive=*/true);
        CHECK(m.fstar.coeff(6) == 0);
        CHECK(m.g.degree() == 7);
        CHECK(m.g.lc() == 1);
        CHECK(m.g.coeff(6) == 0);
        // k_i = h_i / m^(7-i) reconstructs h_i
        for (int i = 0; i < 6; ++i)
            CHECK(m.g.coeff(i) * pow_int(m.m, 7 - i) == m.h[i]);
        CHECK(m.g_scaled.lc() == m.m * m.m);
    }
}

TEST_CASE("discriminant closed forms") {
    CHECK(verify_disc_g(-10, 10).ok);
    CHECK(verify_disc_f(-20, 20).ok);

    // t = 1: disc(g_1) = disc(fstar_1) = 7^42 * 43^6 * 49 * 49
    SepticModel m1 = build_model(Int(1), {}, true);
    Int expected = pow_int(Int(7), 42) * pow_int(Int(43), 6) * 49 * 49;
    CHECK(discriminant(m1.g) == expected);
    CHECK(discriminant(m1.g_scaled) == expected);

    // t = 2: after the m^18 division exactly 7^36 remains
    SepticModel m2 = build_model(Int(2), {}, true);
    Int d2 = discriminant(m2.g_scaled);
    CHECK(valuation(Int(7), d2) == 36);
}

TEST_CASE("residue class valuations") {
    const auto& cat = FamilyCatalogue::get();
    CHECK(verify_valuation_table().ok);
    CHECK(residue_class_valuation(cat.E, Int(7), Int(2)) == 2);
    CHECK(residue_class_valuation(cat.H, Int(7), Int(2)) == 5);
    CHECK(residue_class_valuation(cat.E, Int(7), Int(0)) == 0);
    CHECK(residue_class_valuation(cat.E, Int(2), Int(0)) == 3);  // 2^3 || E(even)
    CHECK_THROWS_AS(residue_class_valuation(cat.E, Int(6), Int(1)), std::domain_error);
    CHECK_THROWS_AS(residue_class_valuation(cat.E, Int(7), Int(9)), std::domain_error);
    CHECK_THROWS_AS(residue_class_valuation(cat.H, Int(7), Int(2), /*lift_budget=*/10),
                    resource_error);
}

TEST_CASE("repeated root detection") {
    const auto& cat = FamilyCatalogue::get();
    CHECK(verify_no_repeated_roots(cat.psi, 4));
    CHECK(verify_no_repeated_roots(cat.E, 1));
    IntPoly quint = IntPoly{-1, 1};
    IntPoly p{1};
    for (int i = 0; i < 5; ++i) p = p * quint;  // (X-1)^5
    CHECK(!verify_no_repeated_roots(p, 4));
    CHECK_THROWS_AS(verify_no_repeated_roots(IntPoly{1, 1}, 3), std::domain_error);
}

TEST_CASE("pointwise 7-adic valuations never undershoot the class table") {
    const auto& cat = FamilyCatalogue::get();
    const std::pair<const IntPoly*, int> table[] = {
        {&cat.E, 2}, {&cat.F, 1}, {&cat.G, 2}, {&cat.I, 3}, {&cat.J, 4}, {&cat.H, 5}};
    for (long tv = -100; tv <= 100; ++tv) {
        Int t(tv);
        Int r = t % 7;
        if (r < 0) r += 7;
        if (r != 2) continue;
        CHECK(valuation(Int(7), eval(cat.E, t)) == 2);  // exact via the psi identity
        for (const auto& [p, v] : table) CHECK(valuation(Int(7), eval(*p, t)) >= v);
    }
}
