#ifndef SEPTIC_BLOCKS_HPP
#define SEPTIC_BLOCKS_HPP

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "septic/field.hpp"
#include "septic/integers.hpp"
#include "septic/poly.hpp"

namespace septic {

struct PrimeRoot {
    Int prime;
    Int root;  // smallest nonnegative root of the block polynomial mod prime
};

/// Witness that every k = k0 (mod C) starts a block of m consecutive
/// parameters t = 2k, ..., 2k+m-1 with omega(E(t)) >= r+1, hence (under the
/// fifth-power-free hypothesis) Polya 7-rank >= r for each K_t.
struct BlockCertificate {
    long m = 0;  // block length
    int r = 0;   // target rank
    std::vector<std::vector<PrimeRoot>> prime_sets;  // m pairwise-disjoint sets of r+1
    Int k0;
    Int C;  // product of all primes
    long samples_verified = 0;
};

struct HarvestBudget {
    long scan_limit = 10'000;  // how many arguments n = 1, 2, ... to factor
    FactorBudget factoring;
};

/// H_j(k) = U(k + j/2) for even j, V(k + (j-1)/2) for odd j, so that
/// H_j(k) tracks E(2k + j) (up to the fixed factor 8 when j is even).
std::vector<IntPoly> block_polynomials(long m);

/// Scans n = 0, 1, 2, ..., factors h(n), and collects `need` fresh primes
/// p (not excluded, p not dividing lc(h)) together with the smallest
/// nonnegative root of h mod p.  Discovery order.
std::vector<PrimeRoot> harvest_primes(const IntPoly& h, int need, const std::set<Int>& excluded,
                                      const HarvestBudget& budget = {});

/// m disjoint sets of r+1 primes, one per block polynomial, merged into a
/// single congruence k = k0 (mod C) by the CRT.
BlockCertificate build_block(long m, int r, const HarvestBudget& budget = {});

struct BlockSample {
    Int k;
    Int t_first;              // 2k
    bool divisibility_ok = false;
    bool profile_confirmed = false;  // full factorization re-derived the bound
    std::vector<std::string> notes;
};

struct BlockVerification {
    bool ok = false;
    long samples = 0;
    std::vector<BlockSample> detail;
    std::string conditional_note;  // the rank claim rests on Thm-style
                                   // fifth-power-free hypotheses
};

/// Checks p | H_j(k) for every certified prime at k = k0, k0+C, ... by
/// big-integer divisibility alone, and re-derives the full field profile
/// whenever the parameter is small enough to factor within budget.
/// Throws std::runtime_error on any divisibility failure (a broken
/// certificate, not a sampling miss).
BlockVerification verify_block(const BlockCertificate& cert, long samples,
                               const FactorBudget& budget = {});

nlohmann::json to_json(const BlockCertificate& cert);
nlohmann::json to_json(const BlockVerification& v);

}  // namespace septic

#endif
