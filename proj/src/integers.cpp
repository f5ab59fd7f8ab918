#include "septic/integers.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace septic {

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

Int Factorization::reconstruct() const {
    Int r = cofactor;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        r *= pe;
    }
    return r;
}

int Factorization::exponent_of(const Int& p) const {
    for (const auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

std::optional<int> Factorization::omega() const {
    if (!complete) return std::nullopt;
    return static_cast<int>(factors.size());
}

int Factorization::max_exponent() const {
    int m = 0;
    for (const auto& [p, e] : factors) m = std::max(m, e);
    return m;
}

std::string Factorization::str() const {
    if (factors.empty() && complete) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first) os << " * ";
        os << p.get_str() << '^' << e;
        first = false;
    }
    if (!complete) {
        if (!first) os << " * ";
        os << cofactor.get_str() << '?';
    }
    return os.str();
}

Factorization Factorization::parse(const std::string& text) {
    Factorization f;
    f.value = 1;
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, '*')) {
        std::string s;
        for (char ch : term)
            if (!isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s.empty()) throw std::domain_error("empty factorization term");
        if (s == "1") continue;
        if (s.back() == '?') {
            f.complete = false;
            Int c;
            if (mpz_set_str(c.get_mpz_t(), s.substr(0, s.size() - 1).c_str(), 10) != 0)
                throw std::domain_error("bad cofactor: " + term);
            f.cofactor = c;
            continue;
        }
        auto caret = s.find('^');
        Int p;
        long e = 1;
        std::string ps = caret == std::string::npos ? s : s.substr(0, caret);
        if (mpz_set_str(p.get_mpz_t(), ps.c_str(), 10) != 0)
            throw std::domain_error("bad prime: " + term);
        if (caret != std::string::npos) e = std::stol(s.substr(caret + 1));
        if (e < 1) throw std::domain_error("bad exponent: " + term);
        f.factors.emplace_back(p, static_cast<int>(e));
    }
    std::sort(f.factors.begin(), f.factors.end());
    f.value = f.reconstruct();
    return f;
}

// ---------------------------------------------------------------------------
// primality
// ---------------------------------------------------------------------------

namespace {

bool miller_rabin_round(const Int& n, const Int& nm1, const Int& d, unsigned long s,
                        const Int& base) {
    Int x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const long tiny[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (long p : tiny) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Int nm1 = n - 1;
    unsigned long s = mpz_scan1(nm1.get_mpz_t(), 0);
    Int d = nm1 >> s;
    // The twelve bases above are a proven witness set below 3.3 * 10^24,
    // which covers everything under 2^64.
    for (long p : tiny)
        if (!miller_rabin_round(n, nm1, d, s, Int(p))) return false;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return true;
    // 53 further rounds on reproducibly seeded bases: 65 total, so the
    // error probability is below 4^-65 < 2^-128.
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x5e71c5eedULL);
    for (int i = 0; i < 53; ++i) {
        Int base = rng.get_z_range(n - 3) + 2;
        if (!miller_rabin_round(n, nm1, d, s, base)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// factoring
// ---------------------------------------------------------------------------

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        const uint32_t limit = 1'000'000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (uint64_t j = static_cast<uint64_t>(i) * i; j <= limit; j += i)
                sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor of n or 0 if
// the iteration budget ran out.  n must be odd, composite, not a prime power
// caller-side concern.
Int brent_rho(const Int& n, long& budget) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), 2)) return Int(2);
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0xb5e27ULL + mpz_fdiv_ui(n.get_mpz_t(), 1000003));
    while (budget > 0) {
        Int y = rng.get_z_range(n - 3) + 1;
        Int c = rng.get_z_range(n - 3) + 1;
        Int x, ys, q(1), g(1);
        long r = 1;
        const long batch = 128;
        while (g == 1 && budget > 0) {
            x = y;
            for (long i = 0; i < r; ++i) y = (y * y + c) % n;
            long k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                long lim = std::min(batch, r - k);
                for (long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x - y;
                    q = q * diff % n;
                }
                budget -= lim;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += batch;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                Int diff = x - ys;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
        // cycle degenerated; retry with a fresh constant
    }
    return Int(0);
}

void push_factor(std::map<Int, int>& acc, const Int& p, int e) { acc[p] += e; }

}  // namespace

Factorization factor(const Int& n, const FactorBudget& budget) {
    if (n == 0) throw std::domain_error("factor(0)");
    Int a = abs(n);
    Factorization out;
    out.value = a;
    if (a == 1) return out;

    if (auto hit = FactorCache::instance().lookup(a)) return *hit;

    std::map<Int, int> acc;
    // trial division; the u64 fast path carries most of the sweep workloads
    const auto& primes = small_primes();
    bool fits = mpz_fits_ulong_p(a.get_mpz_t()) != 0;
    unsigned long av = fits ? mpz_get_ui(a.get_mpz_t()) : 0;
    for (uint32_t p : primes) {
        if (static_cast<long>(p) > budget.trial_limit) break;
        if (fits) {
            if (static_cast<unsigned long>(p) * p > av) break;
            if (av % p == 0) {
                int e = 0;
                while (av % p == 0) { av /= p; ++e; }
                push_factor(acc, Int(p), e);
            }
        } else if (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
            int e = 0;
            do {
                mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(a.get_mpz_t(), p));
            push_factor(acc, Int(p), e);
            fits = mpz_fits_ulong_p(a.get_mpz_t()) != 0;
            if (fits) av = mpz_get_ui(a.get_mpz_t());
        }
    }
    Int rem = fits ? Int(av) : a;

    // rho phase on whatever survived trial division
    long iter = budget.rho_iterations;
    std::vector<Int> stack;
    if (rem > 1) stack.push_back(rem);
    bool complete = true;
    Int leftover(1);
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) {
            push_factor(acc, m, 1);
            continue;
        }
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            Int r;
            mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
            stack.push_back(r);
            stack.push_back(r);
            continue;
        }
        Int d = brent_rho(m, iter);
        if (d == 0) {
            leftover *= m;
            complete = false;
            continue;
        }
        stack.push_back(d);
        Int q;
        mpz_divexact(q.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
        stack.push_back(q);
    }

    out.factors.assign(acc.begin(), acc.end());
    out.cofactor = leftover;
    out.complete = complete;
    if (complete) FactorCache::instance().store(out);
    return out;
}

std::optional<int> omega(const Int& n, const FactorBudget& budget) {
    if (n == 0) throw std::domain_error("omega(0)");
    return factor(n, budget).omega();
}

int valuation(const Int& p, const Int& n) {
    if (!is_prime(p)) throw std::domain_error("valuation: modulus " + p.get_str() + " is not prime");
    if (n == 0) throw std::domain_error("valuation of 0");
    Int a = abs(n);
    int e = 0;
    while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

Tri is_kth_power_free(const Int& n, int k, const FactorBudget& budget) {
    if (n == 0) throw std::domain_error("is_kth_power_free(0)");
    if (k < 2) throw std::domain_error("is_kth_power_free needs k >= 2");
    Factorization f = factor(n, budget);
    if (f.max_exponent() >= k) return Tri::no;  // sound even when incomplete
    if (!f.complete) return Tri::unknown;
    return Tri::yes;
}

// ---------------------------------------------------------------------------
// CRT
// ---------------------------------------------------------------------------

std::pair<Int, Int> crt(const ResidueSystem& system) {
    Int r(0), mod(1);
    for (const auto& cg : system.congruences) {
        if (cg.modulus < 2) throw std::domain_error("crt: modulus < 2");
        if (cg.residue < 0 || cg.residue >= cg.modulus)
            throw std::domain_error("crt: residue out of range");
        Int g, s, tt;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), tt.get_mpz_t(), mod.get_mpz_t(),
                   cg.modulus.get_mpz_t());
        if (g != 1)
            throw std::domain_error("crt: moduli not coprime, pair (" + mod.get_str() +
                                    ", " + cg.modulus.get_str() + ") shares " + g.get_str());
        // r + mod * x == residue (mod m2)  =>  x = (residue - r) * s mod m2
        Int x = (cg.residue - r) * s % cg.modulus;
        Int next_mod = mod * cg.modulus;
        r = (r + x * mod) % next_mod;
        if (r < 0) r += next_mod;
        mod = next_mod;
    }
    return {r, mod};
}

// ---------------------------------------------------------------------------
// rho' and the density product
// ---------------------------------------------------------------------------

long count_coprime_roots(const IntPoly& f, long d, long enumeration_budget) {
    if (d < 2) throw std::domain_error("count_coprime_roots: modulus < 2");
    if (d > enumeration_budget)
        throw resource_error("count_coprime_roots: modulus " + std::to_string(d) +
                             " exceeds enumeration budget");
    // reduce coefficients once; Horner in uint64 (d <= 1e7 keeps products
    // far below 2^63)
    std::vector<uint64_t> cs(f.coeffs().size());
    Int D(d);
    for (size_t i = 0; i < cs.size(); ++i) {
        Int m = f.coeffs()[i] % D;
        if (m < 0) m += D;
        cs[i] = m.get_ui();
    }
    long count = 0;
    const auto du = static_cast<uint64_t>(d);
    for (uint64_t x = 0; x < du; ++x) {
        if (std::gcd(x, du) != 1) continue;
        uint64_t v = 0;
        for (size_t i = cs.size(); i-- > 0;) v = (v * x + cs[i]) % du;
        if (v == 0) ++count;
    }
    return count;
}

Rat density_estimate(const IntPoly& f, int k, long prime_bound, long enumeration_budget) {
    if (f.degree() < 1) throw std::domain_error("density_estimate: constant polynomial");
    if (k < 1) throw std::domain_error("density_estimate: power < 1");
    Rat prod(1);
    for (uint32_t p : small_primes()) {
        if (static_cast<long>(p) > prime_bound) break;
        Int pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k));
        if (!pk.fits_slong_p() || pk.get_si() > enumeration_budget)
            throw resource_error("density_estimate: p^k exceeds enumeration budget at p = " +
                                 std::to_string(p));
        long d = pk.get_si();
        long rho = count_coprime_roots(f, d, enumeration_budget);
        long phi = d - d / p;  // phi(p^k)
        prod *= Rat(phi - rho, phi);
    }
    prod.canonicalize();
    return prod;
}

// ---------------------------------------------------------------------------
// cache
// ---------------------------------------------------------------------------

struct FactorCache::Impl {
    std::mutex mu;
    bool enabled = false;
    std::string path;
    std::unordered_map<std::string, std::string> map;  // decimal n -> str()
};

FactorCache::FactorCache() : impl_(new Impl) {}

FactorCache& FactorCache::instance() {
    static FactorCache cache;
    return cache;
}

void FactorCache::enable(const std::string& file_path) {
    std::lock_guard<std::mutex> lock(impl_->mu);
    impl_->enabled = true;
    impl_->path = file_path;
    if (file_path.empty()) return;
    std::ifstream in(file_path);
    std::string line;
    while (std::getline(in, line)) {
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        impl_->map[line.substr(0, tab)] = line.substr(tab + 1);  // last entry wins
    }
}

void FactorCache::disable() {
    std::lock_guard<std::mutex> lock(impl_->mu);
    impl_->enabled = false;
    impl_->map.clear();
    impl_->path.clear();
}

std::optional<Factorization> FactorCache::lookup(const Int& n) {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->enabled) return std::nullopt;
    auto it = impl_->map.find(n.get_str());
    if (it == impl_->map.end()) return std::nullopt;
    Factorization f = Factorization::parse(it->second);
    f.value = n;
    return f;
}

void FactorCache::store(const Factorization& f) {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->enabled || !f.complete) return;
    std::string key = f.value.get_str();
    if (impl_->map.count(key)) return;
    impl_->map[key] = f.str();
    if (!impl_->path.empty()) {
        std::ofstream out(impl_->path, std::ios::app);
        out << key << '\t' << f.str() << '\n';
    }
}

}  // namespace septic
