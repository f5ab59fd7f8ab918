#ifndef SEPTIC_FIELD_HPP
#define SEPTIC_FIELD_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "septic/family.hpp"
#include "septic/integers.hpp"

namespace septic {

/// A stated theorem hypothesis fails for this parameter (for example E(t)
/// is not fifth-power free), so the formula gives no verdict.
struct hypothesis_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// E(t) = 7^alpha * A * B^2 * C^3 * D^4 with A, B, C, D pairwise coprime
/// and prime to 7; defined whenever E(t) is fifth-power free.
struct PowerfreeDecomposition {
    int alpha = 0;  // 0 or 2
    Int A, B, C, D;
};

/// The complete arithmetic profile of one field K_t.
struct FieldReport {
    Int t;
    Int E_value;
    Factorization E_factorization;
    Tri fifth_power_free = Tri::unknown;
    int alpha = 0;
    std::optional<Int> conductor;            // nullopt: unknown
    std::optional<Int> field_discriminant;   // conductor^6
    std::optional<int> polya_rank;           // nullopt: unknown / out of hypothesis
    Tri is_polya = Tri::unknown;
    std::optional<Int> polya_order;          // 7^rank
    std::optional<Int> polya_number_bound;   // = |Po|, an upper bound for po_K
    std::vector<Int> ramified_primes;        // primes of the conductor, ascending
    bool monogenic = false;                  // never monogenic in this family
    bool index_one_certified = false;
    std::vector<std::string> notes;          // reasons behind any unknowns
};

/// 2 iff t = 2 (mod 7), else 0.
int alpha_of(const Int& t);

/// 7^alpha times the product of primes q = 1 (mod 7) with q | E(t) and
/// v_q(E(t)) not divisible by 7, each to the first power.  nullopt when
/// the factorization of E(t) is incomplete.
std::optional<Int> conductor(const Int& t, const FactorBudget& budget = {});

/// The generic route: primes q = 1 (mod 7) dividing every k_i of the
/// reduced model, with the 7-exponent read off the discriminant branch
/// conditions of the conductor criterion.  Must agree with conductor().
std::optional<Int> conductor_crosscheck_sw(const Int& t, const FactorBudget& budget = {});

/// Throws hypothesis_error when E(t) is not fifth-power free and
/// resource_error when that cannot be decided within budget.
PowerfreeDecomposition powerfree_decomposition(const Int& t, const FactorBudget& budget = {});

struct PolyaGroup {
    int rank;       // Po(K_t) = (Z/7Z)^rank
    bool is_polya;  // rank == 0
};

/// rank = omega(E(t)) - 2 for even t, omega(E(t)) - 1 for odd t, valid
/// under the fifth-power-free hypothesis; otherwise hypothesis_error or
/// resource_error, never a silent number.
PolyaGroup polya_group(const Int& t, const FactorBudget& budget = {});

/// |Po(K_t)| = prod e_p / 7 = 7^(omega(conductor) - 1); needs only the
/// conductor, not the power-free hypothesis.
std::optional<Int> polya_order_chabert(const Int& t, const FactorBudget& budget = {});

/// Every prime p > 7 dividing E(t) satisfies p = 1 (mod 7).
Tri prime_congruence_check(const Int& t, const FactorBudget& budget = {});

struct MonogenicReport {
    bool monogenic = false;  // 2*7 + 1 = 15 is composite, so never monogenic
    bool index_one_certified = false;
};

/// index_one_certified: t odd and coprime to 15, confirmed constructively
/// by checking all closed-form factors of disc(f_t) against 2, 3, 5.
/// false means "not certified", not "index > 1".
MonogenicReport monogenic_report(const Int& t);

/// 7^rank, an upper bound for the Polya number of K_t.
Int polya_number_bound(const Int& t, const FactorBudget& budget = {});

/// Aggregates everything, mapping hypothesis violations and incomplete
/// factorizations to recorded unknowns instead of exceptions.
FieldReport field_report(const Int& t, const FactorBudget& budget = {});

nlohmann::json to_json(const FieldReport& report);

}  // namespace septic

#endif
