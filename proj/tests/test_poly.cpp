#include <doctest.h>

#include <random>

#include "septic/family.hpp"
#include "septic/poly.hpp"

using namespace septic;

namespace {

const IntPoly kE{8, 4, 16, 1, 11, 2, 1};
const IntPoly kX{0, 1};

IntPoly random_poly(std::mt19937_64& rng, int max_deg, long coeff_bound) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<long> dc(-coeff_bound, coeff_bound);
    int deg = dd(rng);
    std::vector<Int> c(deg + 1);
    for (auto& x : c) x = dc(rng);
    return IntPoly(std::move(c));
}

// remainder of lc(g)^k * f under g, zero iff g divides f over Q
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
    IntPoly r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        IntPoly lead = IntPoly::monomial(r.lc(), r.degree() - g.degree());
        r = r * g.lc() - lead * g;
    }
    return r;
}

}  // namespace

TEST_CASE("ring operations") {
    CHECK(kX + (-kX) == IntPoly());
    CHECK(IntPoly{1, 1} * IntPoly{-1, 1} == IntPoly{-1, 0, 1});
    CHECK(shift(IntPoly{0, 0, 1}, Int(1)) == IntPoly{1, 2, 1});
    CHECK(IntPoly{1, 2} * Int(3) == IntPoly{3, 6});
    CHECK(IntPoly{5}.degree() == 0);
    CHECK(IntPoly().degree() == -1);
}

TEST_CASE("evaluation of E") {
    CHECK(eval(kE, Int(1)) == 43);
    CHECK(eval(kE, Int(0)) == 8);
    CHECK(eval(kE, Int(2)) == 392);
    CHECK(eval(kE, Int(-1)) == 29);
}

TEST_CASE("composition") {
    CHECK(compose(IntPoly{0, 0, 1}, IntPoly{1, 1}) == IntPoly{1, 2, 1});
    IntPoly p{3, -2, 0, 5};
    CHECK(compose(p, kX) == p);
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        IntPoly a = random_poly(rng, 6, 50);
        IntPoly b = random_poly(rng, 4, 50);
        Int x(static_cast<long>(rng() % 19) - 9);
        CHECK(eval(compose(a, b), x) == eval(a, eval(b, x)));
    }
}

TEST_CASE("derivative") {
    CHECK(derivative(IntPoly{0, 0, 0, 1}) == IntPoly{0, 0, 3});
    CHECK(derivative(IntPoly{7}) == IntPoly());
    const IntPoly psi{8, 112, 686, 2303, 4459, 4802, 2401};
    CHECK(eval(derivative(psi), Int(0)) == 112);
}

TEST_CASE("primitive gcd") {
    CHECK(primitive_gcd(IntPoly{-1, 0, 1}, IntPoly{-1, 1}) == IntPoly{-1, 1});
    CHECK(primitive_gcd(IntPoly{2, 2}, IntPoly{4}) == IntPoly{1});
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        IntPoly a = random_poly(rng, 5, 20);
        IntPoly b = random_poly(rng, 5, 20);
        if (a.is_zero() || b.is_zero()) continue;
        IntPoly g = primitive_gcd(a, b);
        CHECK(g.lc() > 0);
        CHECK(pseudo_rem(a, g).is_zero());
        CHECK(pseudo_rem(b, g).is_zero());
    }
    // common factor surfaces
    IntPoly common{3, 1};
    IntPoly g = primitive_gcd(common * IntPoly{1, 0, 2}, common * IntPoly{-5, 7});
    CHECK(pseudo_rem(g, common).is_zero());
    CHECK(g.degree() == 1);
}

TEST_CASE("resultant basics") {
    // res(X-a, X-b) = a - b in the Sylvester orientation used throughout
    CHECK(resultant(IntPoly{-2, 1}, IntPoly{-5, 1}) == -3);
    CHECK(resultant(IntPoly{-5, 1}, IntPoly{-2, 1}) == 3);
    CHECK(resultant(IntPoly{1, 0, 1}, kX) == 1);
    CHECK(resultant(IntPoly{-2, 0, 1}, IntPoly{-2, 0, 1}) == 0);
    CHECK(resultant(IntPoly{5}, IntPoly{1, 2, 3}) == 25);
}

TEST_CASE("resultant: Sylvester and subresultant routes agree") {
    std::mt19937_64 rng(20240811);
    int nontrivial = 0;
    for (int i = 0; i < 200; ++i) {
        IntPoly a = random_poly(rng, 7, 1000);
        IntPoly b = random_poly(rng, 7, 1000);
        if (a.is_zero() || b.is_zero()) continue;
        Int r1 = resultant(a, b);
        Int r2 = resultant_prs(a, b);
        CHECK(r1 == r2);
        if (a.degree() > 0 && b.degree() > 0) {
            CHECK(resultant(b, a) == ((a.degree() * b.degree()) % 2 ? -r1 : r1));
            ++nontrivial;
        }
    }
    CHECK(nontrivial > 100);
}

TEST_CASE("discriminant") {
    CHECK(discriminant(IntPoly{-1, 0, 1}) == 4);
    CHECK(discriminant(IntPoly{-1, 0, 0, 1}) == -27);
    CHECK_THROWS_AS(discriminant(IntPoly{1, 1}), std::domain_error);

    Int expected;  // 43^6 * 7^4
    mpz_ui_pow_ui(expected.get_mpz_t(), 43, 6);
    expected *= 2401;
    CHECK(discriminant(defining_polynomial(Int(1))) == expected);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        IntPoly p = random_poly(rng, 7, 1000);
        if (p.degree() < 2) continue;
        Int r1 = resultant(p, derivative(p));
        Int r2 = resultant_prs(p, derivative(p));
        CHECK(r1 == r2);
    }
}

TEST_CASE("irreducibility certificate") {
    auto cert = certify_irreducible_deg7(defining_polynomial(Int(1)));
    REQUIRE(cert.has_value());
    CHECK(*cert >= 2);

    // f_0 = X^4 (X-2)^3 never certifies
    IntPoly f0{0, 0, 0, 0, -8, 12, -6, 1};
    CHECK(!certify_irreducible_deg7(f0).has_value());

    // X^7 - X splits or has roots mod every prime
    IntPoly x7x{0, -1, 0, 0, 0, 0, 0, 1};
    CHECK(!certify_irreducible_deg7(x7x).has_value());

    CHECK_THROWS_AS(certify_irreducible_deg7(IntPoly{1, 1}), std::domain_error);

    // never certifies a polynomial with an integer root
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        long a = static_cast<long>(rng() % 21) - 10;
        IntPoly q = random_poly(rng, 5, 30);
        std::vector<Int> top(7, Int(0));
        top[6] = 1;
        IntPoly p = IntPoly{-a, 1} * (q + IntPoly(std::move(top)));  // forced degree 6 cofactor
        if (p.degree() != 7) continue;
        CHECK(!certify_irreducible_deg7(p).has_value());
    }
}

TEST_CASE("text form") {
    CHECK(to_string(kE) == "8 + 4*X + 16*X^2 + 1*X^3 + 11*X^4 + 2*X^5 + 1*X^6");
    CHECK(parse_poly("8 + 4*X + 16*X^2 + 1*X^3 + 11*X^4 + 2*X^5 + 1*X^6") == kE);
    CHECK(parse_poly("-1 + X^2") == IntPoly{-1, 0, 1});
    CHECK(parse_poly("3*X^2 - 5") == IntPoly{-5, 0, 3});
    CHECK(to_string(IntPoly()) == "0");
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        IntPoly p = random_poly(rng, 9, 100000);
        if (p.is_zero()) continue;
        CHECK(parse_poly(to_string(p)) == p);
    }
    CHECK_THROWS_AS(parse_poly("2*Y + 1"), std::domain_error);
}
