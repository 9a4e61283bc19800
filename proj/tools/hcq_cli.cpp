// Command-line front end: bases, products, Specht quotients, Gram ranks,
// ideal data, classification tables, and the axiom verifier.
//
// Output is JSON on stdout (schema version 1, keys sorted, byte-identical
// across runs) or plain text with --format text.  Logs go to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 size cap exceeded, 4 internal invariant violation.
#include "CLI11.hpp"
#include "json.hpp"

#include "hcq/cellcheck.hpp"
#include "hcq/clifford.hpp"
#include "hcq/hecke.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using json = nlohmann::ordered_json;
using namespace hcq;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kHeckeCap = 6;
constexpr int kHcCap = 4;

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --ring ZaQ | Qaq | cyclo:e[,a=r] | gf:p,q=v,a=v | Q[,q=r,a=r]
Ring parse_ring(const std::string& spec) {
    auto parse_rat = [](const std::string& s) { return Rat(s); };
    if (spec == "ZaQ") return Ring::integer_laurent();
    if (spec == "Qaq" || spec == "Qq") return Ring::fraction_field();
    if (spec.rfind("cyclo:", 0) == 0) {
        std::string rest = spec.substr(6);
        auto comma = rest.find(',');
        int e = std::stoi(rest.substr(0, comma));
        Rat a = 1;
        if (comma != std::string::npos) {
            std::string opt = rest.substr(comma + 1);
            if (opt.rfind("a=", 0) != 0)
                throw CLI::ValidationError("--ring", "expected a=<rational> after cyclo:e,");
            a = parse_rat(opt.substr(2));
        }
        return Ring::cyclotomic(e, a);
    }
    if (spec.rfind("gf:", 0) == 0) {
        std::string rest = spec.substr(3);
        std::vector<std::string> fields;
        std::stringstream ss(rest);
        for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
        if (fields.size() != 3 || fields[1].rfind("q=", 0) != 0 || fields[2].rfind("a=", 0) != 0)
            throw CLI::ValidationError("--ring", "expected gf:p,q=v,a=v");
        return Ring::finite_field(std::stoll(fields[0]), std::stoll(fields[1].substr(2)),
                                  std::stoll(fields[2].substr(2)));
    }
    if (spec == "Q" || spec.rfind("Q,", 0) == 0) {
        Rat q = 1, a = 1;
        if (spec.size() > 1) {
            std::stringstream ss(spec.substr(2));
            for (std::string f; std::getline(ss, f, ',');) {
                if (f.rfind("q=", 0) == 0) q = parse_rat(f.substr(2));
                else if (f.rfind("a=", 0) == 0) a = parse_rat(f.substr(2));
                else throw CLI::ValidationError("--ring", "expected Q[,q=r][,a=r]");
            }
        }
        return Ring::rational(q, a);
    }
    throw CLI::ValidationError("--ring", "unknown ring spec '" + spec + "'");
}

Composition parse_comp(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    for (std::string f; std::getline(ss, f, ',');) parts.push_back(std::stoi(f));
    return Composition(parts);
}

Perm parse_perm(const std::string& s) {
    std::vector<int> img;
    std::stringstream ss(s);
    for (std::string f; std::getline(ss, f, ',');) img.push_back(std::stoi(f));
    return Perm(img);
}

std::uint32_t parse_mask(const std::string& s) {
    if (s.empty()) return 0;
    std::vector<int> pos;
    std::stringstream ss(s);
    for (std::string f; std::getline(ss, f, ',');) pos.push_back(std::stoi(f));
    return mask_from_positions(pos);
}

void check_cap(const std::string& algebra, int n, bool allow_large) {
    int cap = algebra == "hc" ? kHcCap : kHeckeCap;
    if (n > cap && !allow_large)
        throw CapExceeded("n=" + std::to_string(n) + " exceeds the default cap " +
                          std::to_string(cap) + " for algebra '" + algebra +
                          "'; pass --allow-large to proceed");
}

json comp_json(const Composition& c) {
    json a = json::array();
    Composition norm = c.normalized();
    for (int p : norm.parts()) a.push_back(p);
    return a;
}

void emit(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // text: flat "key: value" lines; arrays of objects become aligned rows
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_array() && !it->empty() && it->front().is_object()) {
            std::cout << it.key() << ":\n";
            for (const auto& row : *it) {
                std::cout << " ";
                for (auto f = row.begin(); f != row.end(); ++f)
                    std::cout << " " << f.key() << "=" << f.value().dump();
                std::cout << "\n";
            }
        } else {
            std::cout << it.key() << ": " << it->dump() << "\n";
        }
    }
}

json hecke_terms_json(const HeckeElement& x) {
    json terms = json::array();
    for (const auto& [w, c] : x.terms())
        terms.push_back({{"coeff", c.str()}, {"w", w.str()}});
    return terms;
}

json hc_terms_json(const HCElement& x) {
    json terms = json::array();
    for (const auto& [k, c] : x.terms()) {
        json pos = json::array();
        for (int i : mask_positions(k.first)) pos.push_back(i);
        terms.push_back({{"coeff", c.str()}, {"c", pos}, {"w", k.second.str()}});
    }
    return terms;
}

json verify_reports_json(const std::vector<AxiomReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) {
        json e = {{"axiom", r.axiom}, {"status", r.pass ? "pass" : "fail"}};
        if (!r.pass) e["witness"] = r.witness;
        arr.push_back(e);
    }
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hecke / Hecke-Clifford computations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    bool allow_large = false;
    app.add_flag("--allow-large", allow_large, "override the size caps");

    // shared option storage
    std::string algebra = "hecke", ring_spec = "Qaq", lambda_s, mu_s;
    std::string left_s, right_s, left_c_s, right_c_s;
    int n = 0, e = 0, jobs = 1;
    bool with_basis = false, chain = false;

    auto* basis = app.add_subcommand("basis", "list the standard basis");
    basis->add_option("--algebra", algebra)->check(CLI::IsMember({"hecke", "hc"}));
    basis->add_option("--n", n)->required();

    auto* product = app.add_subcommand("product", "multiply two basis words");
    product->add_option("--algebra", algebra)->check(CLI::IsMember({"hecke", "hc"}));
    product->add_option("--n", n)->required();
    product->add_option("--ring", ring_spec);
    product->add_option("--left", left_s, "one-line permutation, e.g. 2,1,3")->required();
    product->add_option("--right", right_s)->required();
    product->add_option("--left-c", left_c_s, "Clifford positions, e.g. 1,3 (hc only)");
    product->add_option("--right-c", right_c_s);

    auto* specht = app.add_subcommand("specht", "Specht quotient dimension");
    specht->add_option("--lambda", lambda_s)->required();
    specht->add_option("--mu", mu_s, "weight (default 1,...,1)");
    specht->add_option("--ring", ring_spec);
    specht->add_flag("--basis", with_basis, "include the semistandard basis");

    auto* gram = app.add_subcommand("gram", "Gram matrix rank of a Specht module");
    gram->add_option("--lambda", lambda_s)->required();
    gram->add_option("--ring", ring_spec);

    auto* classify = app.add_subcommand("classify", "simple H_n modules over a field");
    classify->add_option("--n", n)->required();
    classify->add_option("--e", e, "shortcut for --ring cyclo:e");
    classify->add_option("--ring", ring_spec);
    classify->add_option("--jobs", jobs, "worker threads across partitions");

    auto* csuper = app.add_subcommand("classify-super", "simple H^c_n supermodules");
    csuper->add_option("--n", n)->required();
    csuper->add_option("--ring", ring_spec);

    auto* ideal = app.add_subcommand("ideal", "trace-ideal and coefficient-ideal data");
    ideal->add_option("--algebra", algebra)->check(CLI::IsMember({"hecke", "hc"}));
    ideal->add_option("--lambda", lambda_s);
    ideal->add_option("--ring", ring_spec);
    ideal->add_option("--n", n);
    ideal->add_flag("--chain", chain, "coefficient ideal chain K_0..K_n (needs --n)");

    auto* verify = app.add_subcommand("verify", "run the axiom verifier");
    verify->add_option("--algebra", algebra)->check(CLI::IsMember({"hecke", "hc"}));
    verify->add_option("--n", n)->required();
    verify->add_option("--ring", ring_spec);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        json out;
        out["schema"] = kSchemaVersion;
        int rc = 0;

        if (*basis) {
            check_cap(algebra, n, allow_large);
            out["command"] = "basis";
            out["algebra"] = algebra;
            out["n"] = n;
            json arr = json::array();
            if (algebra == "hecke") {
                for (const auto& w : all_perms(n)) arr.push_back("T" + w.str());
            } else {
                for (std::uint32_t m = 0; m < (1u << n); ++m)
                    for (const auto& w : all_perms(n)) {
                        CliffordWord cw{n, m};
                        arr.push_back((m ? cw.str() + " " : "") + "T" + w.str());
                    }
            }
            out["dim"] = (int)arr.size();
            out["basis"] = arr;
        } else if (*product) {
            check_cap(algebra, n, allow_large);
            Ring r = parse_ring(ring_spec);
            out["command"] = "product";
            out["algebra"] = algebra;
            out["n"] = n;
            out["ring"] = r.str();
            if (algebra == "hecke") {
                if (!left_c_s.empty() || !right_c_s.empty())
                    throw CLI::ValidationError("--left-c", "only valid with --algebra hc");
                HeckeElement x = HeckeElement::basis(r, parse_perm(left_s));
                HeckeElement y = HeckeElement::basis(r, parse_perm(right_s));
                HeckeElement p = x * y;
                out["product"] = hecke_terms_json(p);
                out["str"] = p.str();
            } else {
                HCElement x = HCElement::basis(r, parse_mask(left_c_s), parse_perm(left_s));
                HCElement y = HCElement::basis(r, parse_mask(right_c_s), parse_perm(right_s));
                HCElement p = x * y;
                out["product"] = hc_terms_json(p);
                out["str"] = p.str();
            }
        } else if (*specht) {
            Composition lam = parse_comp(lambda_s);
            Composition mu = mu_s.empty() ? Composition(std::vector<int>(lam.n(), 1))
                                          : parse_comp(mu_s);
            check_cap("hecke", lam.n(), allow_large);
            Ring r = parse_ring(ring_spec);
            SpechtQuotient quot(lam, mu, r);
            auto tabs = enumerate_tableaux(lam, mu, TabFlavor::semistandard);
            out["command"] = "specht";
            out["lambda"] = comp_json(lam);
            out["mu"] = comp_json(mu);
            out["ring"] = r.str();
            out["dim"] = quot.dim();
            out["semistandard_count"] = (int)tabs.size();
            if (with_basis) {
                json arr = json::array();
                for (const auto& t : tabs) arr.push_back(t.str());
                out["basis"] = arr;
            }
        } else if (*gram) {
            Composition lam = parse_comp(lambda_s);
            check_cap("hecke", lam.n(), allow_large);
            Ring r = parse_ring(ring_spec);
            auto g = gram_matrix(lam, r);
            out["command"] = "gram";
            out["lambda"] = comp_json(lam);
            out["ring"] = r.str();
            out["size"] = (int)g.size();
            out["gram_rank"] = matrix_rank(g);
        } else if (*classify) {
            check_cap("hecke", n, allow_large);
            Ring r = e > 0 ? Ring::cyclotomic(e) : parse_ring(ring_spec);
            auto lams = partitions_of(n);
            std::vector<int> ranks(lams.size());
            int workers = std::max(1, jobs);
            if (workers == 1) {
                for (size_t i = 0; i < lams.size(); ++i)
                    ranks[i] = matrix_rank(gram_matrix(lams[i], r));
            } else {
                std::vector<std::thread> pool;
                std::atomic<size_t> next{0};
                for (int t = 0; t < workers; ++t)
                    pool.emplace_back([&] {
                        for (size_t i = next++; i < lams.size(); i = next++)
                            ranks[i] = matrix_rank(gram_matrix(lams[i], r));
                    });
                for (auto& t : pool) t.join();
            }
            int eff_e = q_characteristic(r, 2 * n + 4);
            int count = 0;
            json table = json::array();
            for (size_t i = 0; i < lams.size(); ++i) {
                if (ranks[i] > 0) ++count;
                table.push_back({{"lambda", comp_json(lams[i])},
                                 {"gram_rank", ranks[i]},
                                 {"e_restricted", is_e_restricted(lams[i], eff_e)}});
            }
            out["command"] = "classify";
            out["n"] = n;
            out["ring"] = r.str();
            out["e"] = eff_e;
            out["count"] = count;
            out["table"] = table;
        } else if (*csuper) {
            check_cap("hc", n, allow_large);
            Ring r = parse_ring(ring_spec);
            auto res = count_super_simples(n, r);
            out["command"] = "classify-super";
            out["n"] = n;
            out["ring"] = r.str();
            out["e"] = res.e;
            out["e2"] = res.e2;
            out["count"] = res.count;
            json table = json::array();
            for (const auto& entry : res.table)
                table.push_back({{"lambda", comp_json(entry.lambda)},
                                 {"strict", entry.e2_strict},
                                 {"e_restricted", entry.formula_restricted},
                                 {"simple_nonzero", entry.simple_nonzero}});
            out["table"] = table;
        } else if (*ideal) {
            out["command"] = "ideal";
            if (chain) {
                if (n <= 0) throw CLI::ValidationError("--chain", "needs --n");
                check_cap("hc", n, allow_large);
                Ring r = parse_ring(ring_spec);
                out["n"] = n;
                out["ring"] = r.str();
                json arr = json::array();
                for (const auto& c : K_ideal(n, r)) arr.push_back(c.str());
                out["K_generators"] = arr;
            } else if (algebra == "hecke") {
                Composition lam = parse_comp(lambda_s);
                check_cap("hecke", lam.n(), allow_large);
                auto ti = trace_ideal_J(lam);
                out["lambda"] = comp_json(lam);
                out["algebra"] = "hecke";
                out["f"] = ti.f.str();
                out["parts"] = ti.r;
                out["f_divides_generators"] = trace_ideal_f_divides(ti);
                out["contains_f_power"] = trace_ideal_contains_f_power(ti);
            } else {
                Composition lam = parse_comp(lambda_s);
                check_cap("hc", lam.n(), allow_large);
                Ring r = parse_ring(ring_spec);
                auto ti = trace_ideal_Jc(lam, r);
                out["lambda"] = comp_json(lam);
                out["algebra"] = "hc";
                out["ring"] = r.str();
                out["ideal_rank"] = ti.ideal_rank;
                out["theta_rank"] =
                    (int)gamma_ideal_span(r, lam, theta_ideal(lam, r)).rank();
                out["sandwich_lower"] = ti.sandwich_lower;
                out["sandwich_upper"] = ti.sandwich_upper;
            }
        } else if (*verify) {
            check_cap(algebra, n, allow_large);
            Ring r = parse_ring(ring_spec);
            FilteredAlgebraInstance inst = algebra == "hecke" ? hecke_cell_instance(n, r)
                                                              : hc_cell_instance(n, r);
            std::vector<AxiomReport> reports;
            for (auto& rep : verify_ideal_filter(inst)) reports.push_back(rep);
            for (auto& rep : verify_rigidity(inst)) reports.push_back(rep);
            for (int l = 0; l < (int)inst.labels.size(); ++l)
                for (auto& rep : verify_morita_context(inst, l)) reports.push_back(rep);
            for (auto& rep : verify_standard_basis(inst)) reports.push_back(rep);
            bool ok = all_pass(reports);
            out["command"] = "verify";
            out["algebra"] = algebra;
            out["n"] = n;
            out["ring"] = r.str();
            out["all_pass"] = ok;
            out["reports"] = verify_reports_json(reports);
            rc = ok ? 0 : 1;
        }

        emit(out, format);
        return rc;
    } catch (const CapExceeded& ex) {
        std::cerr << "size cap: " << ex.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& ex) {
        std::cerr << "usage: " << ex.what() << "\n";
        return 2;
    } catch (const internal_error& ex) {
        std::cerr << "internal invariant violation: " << ex.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "usage: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 4;
    }
}
