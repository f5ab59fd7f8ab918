#include "septic/field.hpp"

#include <algorithm>

namespace septic {

namespace {

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

long mod7(const Int& t) {
    Int r = t % 7;
    if (r < 0) r += 7;
    return r.get_si();
}

Int eval_E(const Int& t) { return eval(FamilyCatalogue::get().E, t); }

}  // namespace

int alpha_of(const Int& t) { return mod7(t) == 2 ? 2 : 0; }

std::optional<Int> conductor(const Int& t, const FactorBudget& budget) {
    if (t == 0) throw std::domain_error("conductor: t = 0");
    Factorization f = factor(eval_E(t), budget);
    if (!f.complete) return std::nullopt;
    Int cond = pow_int(Int(7), alpha_of(t));
    for (const auto& [q, e] : f.factors)
        if (mod7(q) == 1 && e % 7 != 0) cond *= q;
    return cond;
}

std::optional<Int> conductor_crosscheck_sw(const Int& t, const FactorBudget& budget) {
    SepticModel mod = build_model(t, budget);
    Int kgcd(0);
    for (int i = 0; i < 6; ++i)
        mpz_gcd(kgcd.get_mpz_t(), kgcd.get_mpz_t(), mod.g.coeff(i).get_mpz_t());
    Factorization fk = factor(kgcd, budget);
    if (!fk.complete) return std::nullopt;
    Int cond(1);
    for (const auto& [q, e] : fk.factors)
        if (mod7(q) == 1) cond *= q;

    // 7-exponent by the two discriminant branches of the criterion
    Int disc = discriminant(mod.g);
    bool div42 = mpz_divisible_p(disc.get_mpz_t(), pow_int(Int(7), 42).get_mpz_t()) != 0;
    bool alpha2;
    if (!div42) {
        alpha2 = true;
        for (int i = 1; i <= 5; ++i)
            if (mod.g.coeff(i) != 0 && valuation(Int(7), mod.g.coeff(i)) < 1) alpha2 = false;
    } else {
        // 7^6 || k0, 7^6 | k1, 7^6 | k2, 7^5 | k3, 7^4 | k4, 7^3 | k5
        static const int need[6] = {6, 6, 6, 5, 4, 3};
        alpha2 = mod.g.coeff(0) != 0 && valuation(Int(7), mod.g.coeff(0)) == 6;
        for (int i = 1; i <= 5 && alpha2; ++i)
            if (mod.g.coeff(i) != 0 && valuation(Int(7), mod.g.coeff(i)) < need[i]) alpha2 = false;
    }
    if (alpha2) cond *= 49;
    return cond;
}

PowerfreeDecomposition powerfree_decomposition(const Int& t, const FactorBudget& budget) {
    if (t == 0) throw std::domain_error("powerfree_decomposition: t = 0");
    Int Ev = eval_E(t);
    Factorization f = factor(Ev, budget);
    if (f.max_exponent() >= 5)
        throw hypothesis_error("E(" + t.get_str() + ") is not fifth-power free");
    if (!f.complete)
        throw resource_error("powerfree_decomposition: factorization of E(" + t.get_str() +
                             ") incomplete");
    PowerfreeDecomposition d;
    d.A = d.B = d.C = d.D = 1;
    for (const auto& [p, e] : f.factors) {
        if (p == 7) {
            d.alpha = e;
            continue;
        }
        switch (e) {
            case 1: d.A *= p; break;
            case 2: d.B *= p; break;
            case 3: d.C *= p; break;
            case 4: d.D *= p; break;
            default: throw std::logic_error("unreachable exponent");
        }
    }
    if (d.alpha != alpha_of(t))
        throw std::logic_error("v7(E) disagrees with the residue of t mod 7");
    return d;
}

PolyaGroup polya_group(const Int& t, const FactorBudget& budget) {
    if (t == 0) throw std::domain_error("polya_group: t = 0");
    Int Ev = eval_E(t);
    Factorization f = factor(Ev, budget);
    if (f.max_exponent() >= 5)
        throw hypothesis_error("polya_group: E(" + t.get_str() + ") is not fifth-power free");
    if (!f.complete)
        throw resource_error("polya_group: factorization of E(" + t.get_str() + ") incomplete");
    int om = static_cast<int>(f.factors.size());
    int rank = mpz_even_p(t.get_mpz_t()) ? om - 2 : om - 1;
    if (rank < 0) throw std::logic_error("negative rank; t = 0 should have been rejected");
    return {rank, rank == 0};
}

std::optional<Int> polya_order_chabert(const Int& t, const FactorBudget& budget) {
    if (t == 0) throw std::domain_error("polya_order_chabert: t = 0");
    Factorization f = factor(eval_E(t), budget);
    if (!f.complete) return std::nullopt;
    int om = alpha_of(t) == 2 ? 1 : 0;  // omega of the conductor
    for (const auto& [q, e] : f.factors)
        if (mod7(q) == 1 && e % 7 != 0) ++om;
    if (om < 1) throw std::logic_error("conductor 1 for a degree-7 field");
    return pow_int(Int(7), om - 1);
}

Tri prime_congruence_check(const Int& t, const FactorBudget& budget) {
    Factorization f = factor(eval_E(t), budget);
    for (const auto& [p, e] : f.factors)
        if (p > 7 && mod7(p) != 1) return Tri::no;
    if (!f.complete) return Tri::unknown;
    return Tri::yes;
}

MonogenicReport monogenic_report(const Int& t) {
    if (t == 0) throw std::domain_error("monogenic_report: t = 0");
    MonogenicReport r;
    Int g;
    mpz_gcd_ui(g.get_mpz_t(), t.get_mpz_t(), 15);
    if (mpz_odd_p(t.get_mpz_t()) && g == 1) {
        // constructive check: disc(f_t) = t^22 E^6 quartic^2 quintic^2 must
        // be coprime to 30; test every factor against 2, 3, 5
        const auto& cat = FamilyCatalogue::get();
        const Int vals[4] = {t, eval(cat.E, t), eval(cat.disc_quartic, t),
                             eval(cat.disc_quintic, t)};
        bool coprime = true;
        for (const Int& v : vals)
            for (long p : {2L, 3L, 5L})
                if (mpz_divisible_ui_p(v.get_mpz_t(), p)) coprime = false;
        r.index_one_certified = coprime;
    }
    return r;
}

Int polya_number_bound(const Int& t, const FactorBudget& budget) {
    return pow_int(Int(7), polya_group(t, budget).rank);
}

FieldReport field_report(const Int& t, const FactorBudget& budget) {
    if (t == 0) throw std::domain_error("field_report: t = 0");
    FieldReport rep;
    rep.t = t;
    rep.E_value = eval_E(t);
    rep.E_factorization = factor(rep.E_value, budget);
    rep.alpha = alpha_of(t);

    if (rep.E_factorization.max_exponent() >= 5) {
        rep.fifth_power_free = Tri::no;
    } else if (rep.E_factorization.complete) {
        rep.fifth_power_free = Tri::yes;
    } else {
        rep.fifth_power_free = Tri::unknown;
        rep.notes.push_back("factorization of E(t) incomplete within budget");
    }

    if (rep.E_factorization.complete) {
        Int cond = pow_int(Int(7), rep.alpha);
        for (const auto& [q, e] : rep.E_factorization.factors)
            if (q % 7 == 1 && e % 7 != 0) cond *= q;
        rep.conductor = cond;
        rep.field_discriminant = pow_int(cond, 6);
        if (rep.alpha == 2) rep.ramified_primes.push_back(7);
        for (const auto& [q, e] : rep.E_factorization.factors)
            if (q % 7 == 1 && e % 7 != 0) rep.ramified_primes.push_back(q);
        std::sort(rep.ramified_primes.begin(), rep.ramified_primes.end());
    } else {
        rep.notes.push_back("conductor unknown: needs the complete factorization of E(t)");
    }

    if (rep.fifth_power_free == Tri::yes) {
        int om = static_cast<int>(rep.E_factorization.factors.size());
        int rank = mpz_even_p(t.get_mpz_t()) ? om - 2 : om - 1;
        rep.polya_rank = rank;
        rep.is_polya = rank == 0 ? Tri::yes : Tri::no;
        rep.polya_order = pow_int(Int(7), rank);
        rep.polya_number_bound = rep.polya_order;
    } else if (rep.fifth_power_free == Tri::no) {
        rep.notes.push_back(
            "Polya group outside theorem hypothesis: E(t) is not fifth-power free");
    }
    auto mono = monogenic_report(t);
    rep.monogenic = mono.monogenic;
    rep.index_one_certified = mono.index_one_certified;
    return rep;
}

nlohmann::json to_json(const FieldReport& r) {
    using nlohmann::json;
    json j;
    j["t"] = r.t.get_str();
    j["E_value"] = r.E_value.get_str();
    j["E_factorization"] = r.E_factorization.str();
    auto tri = [](Tri v) -> json {
        switch (v) {
            case Tri::yes: return true;
            case Tri::no: return false;
            default: return "unknown";
        }
    };
    j["fifth_power_free"] = tri(r.fifth_power_free);
    j["alpha"] = r.alpha;
    j["conductor"] = r.conductor ? json(r.conductor->get_str()) : json("unknown");
    j["field_discriminant"] =
        r.field_discriminant ? json(r.field_discriminant->get_str()) : json("unknown");
    j["polya_rank"] = r.polya_rank ? json(*r.polya_rank) : json("unknown");
    j["is_polya"] = tri(r.is_polya);
    j["polya_order"] = r.polya_order ? json(r.polya_order->get_str()) : json("unknown");
    j["polya_number_bound"] =
        r.polya_number_bound ? json(r.polya_number_bound->get_str()) : json("unknown");
    json primes = json::array();
    for (const auto& p : r.ramified_primes) primes.push_back(p.get_str());
    j["ramified_primes"] = primes;
    j["monogenic"] = r.monogenic;
    j["index_one_certified"] = r.index_one_certified;
    j["notes"] = r.notes;
    return j;
}

}  // namespace septic
