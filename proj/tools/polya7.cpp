// polya7 -- conductors, discriminants, Polya groups and block certificates
// for the Hashimoto-Hoshi family of cyclic septic fields.

#include <algorithm>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "septic/blocks.hpp"
#include "septic/family.hpp"
#include "septic/field.hpp"
#include "septic/integers.hpp"

using namespace septic;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

Int parse_int(const std::string& s) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::domain_error("not an integer: " + s);
    return v;
}

std::string tri_str(Tri v) {
    switch (v) {
        case Tri::yes: return "true";
        case Tri::no: return "false";
        default: return "unknown";
    }
}

struct SurveyRow {
    Int t;
    Int E_value;
    std::optional<int> omega;
    Tri fifth_power_free = Tri::unknown;
    int alpha = 0;
    std::optional<Int> conductor;
    std::optional<int> polya_rank;
    Tri is_polya = Tri::unknown;
    bool index_one_certified = false;
};

SurveyRow survey_row(const Int& t, const FactorBudget& budget) {
    FieldReport rep = field_report(t, budget);
    SurveyRow row;
    row.t = rep.t;
    row.E_value = rep.E_value;
    row.omega = rep.E_factorization.omega();
    row.fifth_power_free = rep.fifth_power_free;
    row.alpha = rep.alpha;
    row.conductor = rep.conductor;
    row.polya_rank = rep.polya_rank;
    row.is_polya = rep.is_polya;
    row.index_one_certified = rep.index_one_certified;
    return row;
}

int cmd_survey(long t_min, long t_max, const std::string& format, int jobs,
               const FactorBudget& budget) {
    std::vector<long> params;
    for (long t = t_min; t <= t_max; ++t)
        if (t != 0) params.push_back(t);
    std::vector<SurveyRow> rows(params.size());
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < params.size(); ++i) rows[i] = survey_row(Int(params[i]), budget);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) {
            pool.emplace_back([&, w] {
                for (size_t i = w; i < params.size(); i += jobs)
                    rows[i] = survey_row(Int(params[i]), budget);
            });
        }
        for (auto& th : pool) th.join();
    }

    auto opt_int = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("unknown");
    };
    auto opt_big = [](const std::optional<Int>& v) {
        return v ? v->get_str() : std::string("unknown");
    };
    if (format == "csv") {
        std::cout << "t,E_value,omega,fifth_power_free,alpha,conductor,polya_rank,"
                     "is_polya,index_one_certified\n";
        for (const auto& r : rows) {
            std::cout << r.t.get_str() << ',' << r.E_value.get_str() << ',' << opt_int(r.omega)
                      << ',' << tri_str(r.fifth_power_free) << ',' << r.alpha << ','
                      << opt_big(r.conductor) << ',' << opt_int(r.polya_rank) << ','
                      << tri_str(r.is_polya) << ',' << (r.index_one_certified ? "true" : "false")
                      << '\n';
        }
    } else {
        json arr = json::array();
        for (const auto& r : rows) {
            json j;
            j["t"] = r.t.get_str();
            j["E_value"] = r.E_value.get_str();
            j["omega"] = r.omega ? json(*r.omega) : json("unknown");
            j["fifth_power_free"] = tri_str(r.fifth_power_free);
            j["alpha"] = r.alpha;
            j["conductor"] = r.conductor ? json(r.conductor->get_str()) : json("unknown");
            j["polya_rank"] = r.polya_rank ? json(*r.polya_rank) : json("unknown");
            j["is_polya"] = tri_str(r.is_polya);
            j["index_one_certified"] = r.index_one_certified;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << '\n';
    }
    // summary statistics on the diagnostic stream, so stdout stays stable
    long known = 0, max_om = 0;
    double sum = 0;
    Int argmax(0);
    for (const auto& r : rows) {
        if (!r.omega) continue;
        ++known;
        sum += *r.omega;
        if (*r.omega > max_om) {
            max_om = *r.omega;
            argmax = r.t;
        }
    }
    if (known)
        std::cerr << "survey: " << rows.size() << " fields, mean omega(E) = " << sum / known
                  << ", max omega(E) = " << max_om << " at t = " << argmax.get_str() << '\n';
    return kExitOk;
}

int cmd_verify_identities() {
    struct Item {
        const char* name;
        Verdict verdict;
    };
    std::vector<Item> items;
    items.push_back({"coefficient-factorizations", verify_h_factorization()});
    items.push_back({"bezout-combination", verify_bezout()});
    items.push_back({"cyclotomic-resolvent", verify_cyclotomic_identity()});
    items.push_back({"psi-substitution", verify_psi_identity()});
    items.push_back({"uv-halving", verify_uv_link()});
    items.push_back({"valuation-table", verify_valuation_table()});
    items.push_back({"reduced-poly-discriminant[-10,10]", verify_disc_g(-10, 10)});
    items.push_back({"defining-poly-discriminant[-20,20]", verify_disc_f(-20, 20)});
    {
        const auto& cat = FamilyCatalogue::get();
        Verdict v;
        if (primitive_gcd(cat.E, cat.H).degree() != 0) v = {false, "gcd(E, H) nonconstant"};
        items.push_back({"E-H-coprimality", v});
        Verdict w;
        if (!verify_no_repeated_roots(cat.psi, 4)) w = {false, "psi shares a root with a derivative"};
        items.push_back({"psi-squarefree", w});
    }
    bool all = true;
    for (const auto& it : items) {
        if (it.verdict.ok) {
            std::cout << "PASS " << it.name << '\n';
        } else {
            std::cout << "FAIL " << it.name << ": " << it.verdict.detail << '\n';
            all = false;
        }
    }
    return all ? kExitOk : kExitVerifyFail;
}

const IntPoly* catalogue_poly(const std::string& name) {
    const auto& cat = FamilyCatalogue::get();
    if (name == "E") return &cat.E;
    if (name == "F") return &cat.F;
    if (name == "G") return &cat.G;
    if (name == "H") return &cat.H;
    if (name == "I") return &cat.I;
    if (name == "J") return &cat.J;
    if (name == "psi") return &cat.psi;
    if (name == "U") return &cat.U;
    if (name == "V") return &cat.V;
    if (name == "W") return &cat.W;
    return nullptr;
}

int cmd_valuations(const std::string& poly_name, const std::string& poly_text, long prime,
                   long residue) {
    if (poly_name.empty() && poly_text.empty()) {
        const auto& cat = FamilyCatalogue::get();
        const std::pair<const char*, const IntPoly*> rows[] = {
            {"E", &cat.E}, {"F", &cat.F}, {"G", &cat.G},
            {"I", &cat.I}, {"J", &cat.J}, {"H", &cat.H}};
        for (const auto& [name, p] : rows)
            std::cout << "v_7(" << name << " | t = 2 (mod 7)) = "
                      << residue_class_valuation(*p, Int(7), Int(2)) << '\n';
        for (long r = 0; r < 7; ++r)
            std::cout << "v_7(E | t = " << r << " (mod 7)) = "
                      << residue_class_valuation(cat.E, Int(7), Int(r)) << '\n';
        return kExitOk;
    }
    IntPoly poly;
    if (!poly_text.empty()) {
        poly = parse_poly(poly_text);
    } else {
        const IntPoly* p = catalogue_poly(poly_name);
        if (!p) throw std::domain_error("unknown catalogue polynomial: " + poly_name);
        poly = *p;
    }
    int v = residue_class_valuation(poly, Int(prime), Int(residue));
    std::cout << "v_" << prime << "(" << (poly_name.empty() ? to_string(poly) : poly_name)
              << " | t = " << residue << " (mod " << prime << ")) = " << v << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arithmetic of the Hashimoto-Hoshi cyclic septic fields"};
    app.require_subcommand(1);

    long budget_iters = 10'000'000;
    std::string cache_path;
    app.add_option("--budget", budget_iters, "rho iteration budget for factoring")
        ->envname("POLYA7_BUDGET");
    app.add_option("--cache", cache_path, "factorization cache file")
        ->envname("POLYA7_CACHE");

    auto* rep = app.add_subcommand("report", "full arithmetic profile of one field (JSON)");
    std::string rep_t;
    rep->add_option("t", rep_t, "family parameter, nonzero integer")->required();

    auto* sur = app.add_subcommand("survey", "profile a parameter range");
    long sur_min = 0, sur_max = 0;
    std::string sur_format = "csv";
    int sur_jobs = 1;
    sur->add_option("t_min", sur_min)->required();
    sur->add_option("t_max", sur_max)->required();
    sur->add_option("--format", sur_format)->check(CLI::IsMember({"csv", "json"}));
    sur->add_option("--jobs", sur_jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify-identities",
                                   "check every polynomial identity the family rests on");

    auto* val = app.add_subcommand("valuations", "residue-class valuations");
    std::string val_poly, val_text;
    long val_prime = 7, val_residue = 2;
    val->add_option("--poly", val_poly, "catalogue polynomial (E F G H I J psi U V W)");
    val->add_option("--text", val_text, "explicit polynomial, e.g. \"8 + 4*X + 1*X^2\"");
    val->add_option("--prime", val_prime);
    val->add_option("--residue", val_residue);

    auto* blk = app.add_subcommand("block", "certificate for m consecutive fields of 7-rank >= r");
    long blk_m = 0;
    int blk_r = 0;
    long blk_samples = 3;
    blk->add_option("m", blk_m, "block length")->required();
    blk->add_option("r", blk_r, "target 7-rank")->required();
    blk->add_option("--samples", blk_samples, "arithmetic-progression samples to verify");

    auto* dec = app.add_subcommand("decompose", "power-free decomposition of E(t)");
    std::string dec_t;
    dec->add_option("t", dec_t)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    FactorBudget budget;
    budget.rho_iterations = budget_iters;
    if (!cache_path.empty()) FactorCache::instance().enable(cache_path);

    try {
        if (*rep) {
            std::cout << to_json(field_report(parse_int(rep_t), budget)).dump(2) << '\n';
            return kExitOk;
        }
        if (*sur) {
            if (sur_min > sur_max) {
                std::cerr << "survey: inverted range\n";
                return kExitUsage;
            }
            return cmd_survey(sur_min, sur_max, sur_format, sur_jobs, budget);
        }
        if (*ver) return cmd_verify_identities();
        if (*val) return cmd_valuations(val_poly, val_text, val_prime, val_residue);
        if (*blk) {
            if (blk_m < 1 || blk_r < 1) {
                std::cerr << "block: need m >= 1 and r >= 1\n";
                return kExitUsage;
            }
            HarvestBudget hb;
            hb.factoring = budget;
            BlockCertificate cert = build_block(blk_m, blk_r, hb);
            BlockVerification verif = verify_block(cert, blk_samples, budget);
            cert.samples_verified = verif.samples;
            json out;
            out["certificate"] = to_json(cert);
            out["verification"] = to_json(verif);
            std::cout << out.dump(2) << '\n';
            return kExitOk;
        }
        if (*dec) {
            Int t = parse_int(dec_t);
            PowerfreeDecomposition d = powerfree_decomposition(t, budget);
            json j;
            j["t"] = t.get_str();
            j["E_value"] = eval(FamilyCatalogue::get().E, t).get_str();
            j["alpha"] = d.alpha;
            j["A"] = d.A.get_str();
            j["B"] = d.B.get_str();
            j["C"] = d.C.get_str();
            j["D"] = d.D.get_str();
            std::cout << j.dump(2) << '\n';
            return kExitOk;
        }
    } catch (const resource_error& e) {
        std::cerr << "resource exhausted: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFail;
    }
    return kExitUsage;
}
