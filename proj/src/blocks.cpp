#include "septic/blocks.hpp"

#include <stdexcept>

namespace septic {

std::vector<IntPoly> block_polynomials(long m) {
    if (m < 1) throw std::domain_error("block_polynomials: m < 1");
    const auto& cat = FamilyCatalogue::get();
    std::vector<IntPoly> out;
    out.reserve(m);
    for (long j = 0; j < m; ++j) {
        if (j % 2 == 0)
            out.push_back(shift(cat.U, Int(j / 2)));
        else
            out.push_back(shift(cat.V, Int((j - 1) / 2)));
    }
    return out;
}

std::vector<PrimeRoot> harvest_primes(const IntPoly& h, int need, const std::set<Int>& excluded,
                                      const HarvestBudget& budget) {
    if (h.degree() < 1) throw std::domain_error("harvest_primes: constant polynomial");
    std::vector<PrimeRoot> out;
    std::set<Int> taken = excluded;
    for (long n = 0; n <= budget.scan_limit && static_cast<int>(out.size()) < need; ++n) {
        Int val = eval(h, Int(n));
        if (val == 0) continue;
        Factorization f = factor(val, budget.factoring);
        for (const auto& [p, e] : f.factors) {
            if (static_cast<int>(out.size()) >= need) break;
            if (taken.count(p)) continue;
            if (mpz_divisible_p(h.lc().get_mpz_t(), p.get_mpz_t())) continue;
            // n is a root mod p, so the smallest nonnegative root is <= n
            Int root(0);
            while (eval(h, root) % p != 0) ++root;
            taken.insert(p);
            out.push_back({p, root});
        }
    }
    if (static_cast<int>(out.size()) < need)
        throw resource_error("harvest_primes: scan budget exhausted before " +
                             std::to_string(need) + " primes were found");
    return out;
}

BlockCertificate build_block(long m, int r, const HarvestBudget& budget) {
    if (m < 1) throw std::domain_error("build_block: m < 1");
    if (r < 1) throw std::domain_error("build_block: r < 1");
    BlockCertificate cert;
    cert.m = m;
    cert.r = r;
    auto polys = block_polynomials(m);
    std::set<Int> used;
    ResidueSystem system;
    for (const auto& h : polys) {
        auto set = harvest_primes(h, r + 1, used, budget);
        for (const auto& pr : set) {
            used.insert(pr.prime);
            system.congruences.push_back({pr.root, pr.prime});
        }
        cert.prime_sets.push_back(std::move(set));
    }
    auto [k0, C] = crt(system);
    cert.k0 = k0;
    cert.C = C;
    return cert;
}

BlockVerification verify_block(const BlockCertificate& cert, long samples,
                               const FactorBudget& budget) {
    BlockVerification out;
    out.samples = samples;
    out.conditional_note =
        "rank bounds are conditional on E(t) being fifth-power free at each sampled t";
    auto polys = block_polynomials(cert.m);

    // independent re-check of the CRT datum
    Int prod(1);
    for (const auto& set : cert.prime_sets)
        for (const auto& pr : set) {
            if ((cert.k0 - pr.root) % pr.prime != 0)
                throw std::runtime_error("certificate invalid: k0 violates k = " +
                                         pr.root.get_str() + " mod " + pr.prime.get_str());
            prod *= pr.prime;
        }
    if (prod != cert.C)
        throw std::runtime_error("certificate invalid: C is not the product of the primes");

    for (long s = 0; s < samples; ++s) {
        BlockSample sample;
        sample.k = cert.k0 + s * cert.C;
        sample.t_first = 2 * sample.k;
        sample.divisibility_ok = true;
        for (long j = 0; j < cert.m; ++j) {
            Int hv = eval(polys[j], sample.k);
            for (const auto& pr : cert.prime_sets[j]) {
                if (!mpz_divisible_p(hv.get_mpz_t(), pr.prime.get_mpz_t())) {
                    throw std::runtime_error("certificate invalid: " + pr.prime.get_str() +
                                             " does not divide H_" + std::to_string(j) + "(" +
                                             sample.k.get_str() + ")");
                }
            }
            // full profile when the parameter is small enough that E(t)
            // has a realistic chance of factoring inside the budget
            Int t = 2 * sample.k + j;
            if (mpz_sizeinbase(t.get_mpz_t(), 2) <= 15) {
                FieldReport rep = field_report(t, budget);
                if (rep.E_factorization.complete) {
                    auto om = rep.E_factorization.omega();
                    bool enough = om && *om >= cert.r + 1 + (mpz_even_p(t.get_mpz_t()) ? 1 : 0);
                    // omega(E(2k)) = omega(H_even(k)) + 1 via the factor 8
                    if (!enough)
                        throw std::runtime_error("certificate invalid: omega(E(" + t.get_str() +
                                                 ")) below the certified bound");
                    sample.profile_confirmed = true;
                    if (rep.polya_rank && *rep.polya_rank >= cert.r)
                        sample.notes.push_back("t = " + t.get_str() + ": rank " +
                                               std::to_string(*rep.polya_rank) + " >= " +
                                               std::to_string(cert.r));
                    else if (rep.fifth_power_free == Tri::no)
                        sample.notes.push_back("t = " + t.get_str() +
                                               ": outside the fifth-power-free hypothesis");
                } else {
                    sample.notes.push_back("t = " + t.get_str() +
                                           ": factorization incomplete, bound not re-derived");
                }
            }
        }
        out.detail.push_back(std::move(sample));
    }
    out.ok = true;
    return out;
}

nlohmann::json to_json(const BlockCertificate& cert) {
    using nlohmann::json;
    json j;
    j["m"] = cert.m;
    j["r"] = cert.r;
    json sets = json::array();
    for (const auto& set : cert.prime_sets) {
        json s = json::array();
        for (const auto& pr : set) s.push_back({{"p", pr.prime.get_str()}, {"root", pr.root.get_str()}});
        sets.push_back(s);
    }
    j["prime_sets"] = sets;
    j["k0"] = cert.k0.get_str();
    j["C"] = cert.C.get_str();
    return j;
}

nlohmann::json to_json(const BlockVerification& v) {
    using nlohmann::json;
    json j;
    j["ok"] = v.ok;
    j["samples"] = v.samples;
    j["conditional_note"] = v.conditional_note;
    json detail = json::array();
    for (const auto& s : v.detail) {
        json d;
        d["k"] = s.k.get_str();
        d["t_first"] = s.t_first.get_str();
        d["divisibility_ok"] = s.divisibility_ok;
        d["profile_confirmed"] = s.profile_confirmed;
        d["notes"] = s.notes;
        detail.push_back(d);
    }
    j["detail"] = detail;
    return j;
}

}  // namespace septic
