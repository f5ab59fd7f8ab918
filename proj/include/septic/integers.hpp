#ifndef SEPTIC_INTEGERS_HPP
#define SEPTIC_INTEGERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "septic/poly.hpp"

namespace septic {

using Rat = mpq_class;

/// Thrown when an enumeration or factoring budget runs out.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Tri { yes, no, unknown };

struct FactorBudget {
    long trial_limit = 1'000'000;      // trial division by primes up to here
    long rho_iterations = 10'000'000;  // total Brent-rho iterations
};

/// Multiset of (prime, exponent) pairs for |n|.  `cofactor` is the unsplit
/// composite part; it is 1 exactly when `complete` is true, so
/// value == cofactor * prod p^e always holds.
struct Factorization {
    Int value = 1;  // factored magnitude, > 0
    std::vector<std::pair<Int, int>> factors;  // strictly ascending primes
    Int cofactor = 1;
    bool complete = true;

    Int reconstruct() const;
    int exponent_of(const Int& p) const;  // 0 if absent
    std::optional<int> omega() const;     // nullopt while incomplete
    int max_exponent() const;

    /// "p1^e1 * p2^e2 * ..." ascending; "1" for a unit; an incomplete
    /// factorization ends in "<cofactor>?".
    std::string str() const;
    static Factorization parse(const std::string& text);
};

/// Deterministic (fixed witness set) for n < 2^64; above that, 65
/// Miller-Rabin rounds with reproducibly seeded bases, error < 2^-128.
bool is_prime(const Int& n);

/// Trial division to budget.trial_limit, then Brent rho with recursion.
/// Throws std::domain_error on n = 0.  Never loops past the budget:
/// whatever is left unsplit lands in cofactor with complete = false.
Factorization factor(const Int& n, const FactorBudget& budget = {});

std::optional<int> omega(const Int& n, const FactorBudget& budget = {});

/// Largest e with p^e | n.  p must be prime, n nonzero.
int valuation(const Int& p, const Int& n);

/// Tri::unknown when the factorization is incomplete and no found exponent
/// reaches k (the cofactor could hide a k-th power).
Tri is_kth_power_free(const Int& n, int k, const FactorBudget& budget = {});

struct Congruence {
    Int residue;
    Int modulus;
};

struct ResidueSystem {
    std::vector<Congruence> congruences;
};

/// Solves the system; returns (k0, C) with 0 <= k0 < C = prod moduli.
/// Throws std::domain_error naming the offending pair if two moduli share
/// a factor.
std::pair<Int, Int> crt(const ResidueSystem& system);

/// rho'(d) = #{ n mod d : gcd(n, d) = 1, d | f(n) }, by residue scan.
long count_coprime_roots(const IntPoly& f, long d, long enumeration_budget = 10'000'000);

/// Truncated product over primes p <= prime_bound of
/// (1 - rho'(p^k)/phi(p^k)), as an exact rational.
Rat density_estimate(const IntPoly& f, int k, long prime_bound,
                     long enumeration_budget = 10'000'000);

/// Primes up to the trial-division bound, sieved once.
const std::vector<uint32_t>& small_primes();

/// Process-wide factorization cache.  Disabled by default; results are
/// identical either way.  When given a path it loads "n<TAB>factorization"
/// lines (last entry wins) and appends every new complete factorization.
class FactorCache {
  public:
    static FactorCache& instance();
    void enable(const std::string& file_path);  // "" keeps it memory-only
    void disable();
    std::optional<Factorization> lookup(const Int& n);
    void store(const Factorization& f);

  private:
    struct Impl;
    Impl* impl_;
    FactorCache();
};

}  // namespace septic

#endif
