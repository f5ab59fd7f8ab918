// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "septic/blocks.hpp"
#include "septic/family.hpp"
#include "septic/field.hpp"
#include "septic/integers.hpp"

using namespace septic;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const std::string& name, bool ok, double ms, const std::string& detail = "") {
    std::printf("%s %-52s (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), ms,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

// --- C1: identity suite under 60 s --------------------------------------
void criterion1() {
    auto start = Clock::now();
    std::string detail;
    bool ok = true;
    for (auto [name, v] : {std::pair<const char*, Verdict>{"h", verify_h_factorization()},
                           {"bezout", verify_bezout()},
                           {"cyclotomic", verify_cyclotomic_identity()},
                           {"psi", verify_psi_identity()}}) {
        if (!v.ok) {
            ok = false;
            detail += std::string(name) + ": " + v.detail + "; ";
        }
    }
    double ms = ms_since(start);
    if (ms >= 60'000) {
        ok = false;
        detail += "runtime budget exceeded";
    }
    report("C1 identity suite (< 60 s)", ok, ms, detail);
}

// --- C2: discriminant closed forms ---------------------------------------
void criterion2() {
    auto start = Clock::now();
    Verdict g = verify_disc_g(-10, 10);
    Verdict f = verify_disc_f(-20, 20);
    report("C2 discriminant closed forms (exact)", g.ok && f.ok, ms_since(start),
           g.ok ? f.detail : g.detail);
}

// --- C3: the 7-adic valuation table --------------------------------------
void criterion3() {
    auto start = Clock::now();
    Verdict v = verify_valuation_table();
    report("C3 residue-class valuation table", v.ok, ms_since(start), v.detail);
}

// --- C4: the 29^5 witness in under a second -------------------------------
void criterion4() {
    auto start = Clock::now();
    Int t(149396);
    Int Ev = eval(FamilyCatalogue::get().E, t);
    bool ok = valuation(Int(29), Ev) >= 5 && is_kth_power_free(Ev, 5) == Tri::no;
    double ms = ms_since(start);
    if (ms >= 1000) ok = false;
    report("C4 witness v29(E(149396)) >= 5 (< 1 s)", ok, ms);
}

// --- C5: derived field profiles -------------------------------------------
void criterion5() {
    auto start = Clock::now();
    bool ok = true;
    std::string detail;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += what + "; ";
        }
    };
    FieldReport r1 = field_report(Int(1));
    expect(r1.conductor.value() == 43, "t=1 conductor");
    expect(r1.is_polya == Tri::yes, "t=1 Polya");
    FieldReport r2 = field_report(Int(2));
    expect(r2.conductor.value() == 49, "t=2 conductor");
    expect(r2.is_polya == Tri::yes, "t=2 Polya");
    FieldReport r7 = field_report(Int(7));
    expect(r7.polya_rank.value() == 1 && r7.polya_order.value() == 7, "t=7 rank");
    FieldReport r9 = field_report(Int(9));
    expect(r9.conductor.value() == 723779, "t=9 conductor");
    expect(r9.polya_rank.value() == 1, "t=9 rank");
    report("C5 derived field profiles (t = 1, 2, 7, 9)", ok, ms_since(start), detail);
}

// --- C6: cross-check equalities over [-100, 100] ---------------------------
void criterion6() {
    auto start = Clock::now();
    bool ok = true;
    std::string detail;
    long checked = 0;
    for (long tv = -100; tv <= 100 && ok; ++tv) {
        if (tv == 0) continue;
        Int t(tv);
        auto direct = conductor(t);
        auto generic = conductor_crosscheck_sw(t);
        if (!direct || !generic) {
            ok = false;
            detail = "incomplete factorization at t = " + std::to_string(tv);
            break;
        }
        if (*direct != *generic) {
            ok = false;
            detail = "conductor mismatch at t = " + std::to_string(tv);
            break;
        }
        Int expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), 7, polya_group(t).rank);
        if (polya_order_chabert(t).value() != expected) {
            ok = false;
            detail = "Chabert order mismatch at t = " + std::to_string(tv);
            break;
        }
        ++checked;
    }
    if (ok && checked != 200) {
        ok = false;
        detail = "expected 200 parameters";
    }
    report("C6 cross-check equalities on [-100, 100]", ok, ms_since(start), detail);
}

// --- C7: prime congruence sweep --------------------------------------------
void criterion7() {
    auto start = Clock::now();
    bool ok = true;
    std::string detail;
    for (long tv = -200; tv <= 200; ++tv) {
        if (tv == 0) continue;
        if (prime_congruence_check(Int(tv)) != Tri::yes) {
            ok = false;
            detail = "failed at t = " + std::to_string(tv);
            break;
        }
    }
    report("C7 primes dividing E are 1 mod 7 on [-200, 200]", ok, ms_since(start), detail);
}

// --- C8: block construction -------------------------------------------------
void criterion8() {
    auto start = Clock::now();
    bool ok = true;
    std::string detail;
    try {
        BlockCertificate cert = build_block(3, 2);
        std::set<Int> primes;
        for (const auto& set : cert.prime_sets)
            for (const auto& pr : set) primes.insert(pr.prime);
        if (primes.size() != 9) {
            ok = false;
            detail = "expected 9 pairwise-distinct primes";
        }
        BlockVerification v = verify_block(cert, 3);
        if (!v.ok || v.detail.size() != 3) {
            ok = false;
            detail += " verification incomplete";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    double ms = ms_since(start);
    if (ms >= 120'000) {
        ok = false;
        detail += " runtime budget exceeded";
    }
    report("C8 build_block(3,2) + 3 samples (< 120 s)", ok, ms, detail);
}

// --- C9: property suites ------------------------------------------------------
void criterion9() {
    auto start = Clock::now();
    bool ok = true;
    std::string detail;
    auto expect = [&](bool cond, const std::string& what) {
        if (ok && !cond) {
            ok = false;
            detail = what;
        }
    };

    // factorization round trip, 10^4 random n < 10^14
    {
        std::mt19937_64 rng(0xacce97);
        std::uniform_int_distribution<long> dist(2, 99'999'999'999'999L);
        for (int i = 0; i < 10'000 && ok; ++i) {
            Int n(dist(rng));
            Factorization f = factor(n);
            expect(f.complete, "incomplete factorization below 10^14");
            expect(f.reconstruct() == n, "reconstruction mismatch");
            for (const auto& [p, e] : f.factors) expect(is_prime(p) && e >= 1, "bad factor");
        }
    }
    // CRT verification, 10^3 random systems
    {
        std::mt19937_64 rng(0xacce98);
        const auto& primes = small_primes();
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            ResidueSystem sys;
            std::set<size_t> used;
            int n = 1 + static_cast<int>(rng() % 6);
            for (int i = 0; i < n; ++i) {
                size_t idx;
                do { idx = rng() % 2000; } while (used.count(idx));
                used.insert(idx);
                sys.congruences.push_back(
                    {Int(static_cast<long>(rng() % primes[idx])), Int(primes[idx])});
            }
            auto [r, mod] = crt(sys);
            expect(r >= 0 && r < mod, "CRT residue out of range");
            for (const auto& cg : sys.congruences)
                expect(r % cg.modulus == cg.residue, "CRT congruence violated");
        }
    }
    // resultant route agreement and gcd divisibility, 10^3 random pairs
    {
        std::mt19937_64 rng(0xacce99);
        auto rand_poly = [&](int max_deg, long bound) {
            std::vector<Int> c(1 + rng() % (max_deg + 1));
            for (auto& x : c) x = static_cast<long>(rng() % (2 * bound + 1)) - bound;
            return IntPoly(std::move(c));
        };
        auto divides = [](const IntPoly& g, const IntPoly& f) {
            IntPoly r = f;
            while (!r.is_zero() && r.degree() >= g.degree()) {
                IntPoly lead = IntPoly::monomial(r.lc(), r.degree() - g.degree());
                r = r * g.lc() - lead * g;
            }
            return r.is_zero();
        };
        for (int i = 0; i < 1000 && ok; ++i) {
            IntPoly a = rand_poly(6, 500), b = rand_poly(6, 500);
            if (a.is_zero() || b.is_zero()) continue;
            expect(resultant(a, b) == resultant_prs(a, b), "resultant routes disagree");
            IntPoly g = primitive_gcd(a, b);
            expect(divides(g, a) && divides(g, b), "gcd does not divide");
        }
    }
    // power-free agreement against brute force, |n| <= 10^5
    {
        std::mt19937_64 rng(0xacce9a);
        for (int i = 0; i < 1500 && ok; ++i) {
            long n = static_cast<long>(rng() % 100'000) + 1;
            if (i % 2) n = -n;
            int k = 2 + static_cast<int>(rng() % 5);
            bool brute = true;
            for (long d = 2;; ++d) {
                Int dk;
                mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
                if (dk > std::abs(n)) break;
                if (std::abs(n) % dk.get_si() == 0) {
                    brute = false;
                    break;
                }
            }
            expect(is_kth_power_free(Int(n), k) == (brute ? Tri::yes : Tri::no),
                   "power-free mismatch at n = " + std::to_string(n));
        }
    }
    report("C9 property suites (>= 10^3 cases each)", ok, ms_since(start), detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria satisfied\n");
    return 0;
}
