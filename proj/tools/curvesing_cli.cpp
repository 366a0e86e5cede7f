// Command-line front end: exact local invariants of plane curve
// singularities, family scans, and randomized ratio searches.
//
// Exit codes: 0 success, 1 computational failure or failed check,
// 2 usage/input error, 3 internal invariant violation.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvesing/curvesing.hpp"

namespace {

using namespace curvesing;

constexpr int kExitOk = 0;
constexpr int kExitComputational = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

VariableSet parse_vars(const std::string& spec) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            names.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) names.push_back(cur);
    return VariableSet(names);
}

std::string rho_text(const std::optional<Rational>& rho, bool approx) {
    if (!rho) return "undefined";
    std::string out = rho->to_string();
    if (approx) out += " (~" + rho->approx_string() + ")";
    return out;
}

void print_record_table(const InvariantRecord& rec, bool approx) {
    std::cout << "input: " << rec.input << "\n";
    std::cout << "mu: " << rec.mu << "\n";
    std::cout << "tau: " << rec.tau;
    if (rec.tau_prime) std::cout << "   tau': " << *rec.tau_prime;
    std::cout << "\n";
    std::cout << "m: " << rec.m << "   r: " << rec.r << "   delta: " << rec.delta
              << "   lambda: " << rec.lambda << "\n";
    std::cout << "rho: " << rho_text(rec.rho, approx) << "\n";
    if (rec.omega_codim_value) std::cout << "omega_codim: " << *rec.omega_codim_value << "\n";
    std::cout << "quasihomogeneous: " << (rec.quasihomogeneous ? "yes" : "no") << "\n";
    std::cout << "checks:";
    for (const auto& c : rec.checks) std::cout << " " << c.name << "=" << c.status;
    std::cout << "\n";
    for (const auto& c : rec.checks)
        if (c.status == "fail") std::cout << "  " << c.name << " FAILED: " << c.detail << "\n";
}

int exit_code_for_record(const InvariantRecord& rec) {
    return rec.all_checks_pass() ? kExitOk : kExitComputational;
}

std::string rename_generator(std::string text, const TowerPtr& field, std::size_t ordinal) {
    if (!field) return text;
    const std::string& from = field->gen_name;
    std::string to = "a" + std::to_string(ordinal);
    std::size_t pos = 0;
    while ((pos = text.find(from, pos)) != std::string::npos) {
        text.replace(pos, from.size(), to);
        pos += to.size();
    }
    return text;
}

std::string render_minpoly(const TowerPtr& field, std::size_t ordinal) {
    std::string var = "a" + std::to_string(ordinal);
    std::string out;
    for (std::size_t i = field->minpoly.size(); i-- > 0;) {
        const FieldElem& c = field->minpoly[i];
        if (c.is_zero()) continue;
        std::string term;
        if (i == 0) {
            term = c.rational().to_string();
        } else {
            std::string power = var + (i > 1 ? "^" + std::to_string(i) : "");
            term = c.is_one() ? power : c.rational().to_string() + "*" + power;
        }
        if (out.empty())
            out = term;
        else
            out += " + " + term;
    }
    return out + " = 0";
}

int cmd_invariants(const std::string& poly, const std::string& vars_spec, bool json, bool approx,
                   std::uint64_t precision) {
    VariableSet vars = parse_vars(vars_spec);
    Polynomial f = parse_polynomial(poly, vars);
    PuiseuxOptions popts;
    popts.precision = precision;
    InvariantRecord rec = full_record(f, popts);
    if (json)
        std::cout << record_to_json(rec).dump(2) << "\n";
    else
        print_record_table(rec, approx);
    return exit_code_for_record(rec);
}

int cmd_omega(const std::string& poly, const std::string& vars_spec, bool json,
              std::uint64_t precision) {
    VariableSet vars = parse_vars(vars_spec);
    Polynomial f = parse_polynomial(poly, vars);
    PuiseuxOptions popts;
    popts.precision = precision;
    struct Out {
        std::uint64_t codim, delta, conductor;
        std::vector<std::uint64_t> span_orders, gaps;
        PolIdentity pol;
    };
    Out o = with_precision_retry(f, popts, [&](const BranchSet& bs) {
        if (bs.branch_count() != 1) throw DomainError("precondition violated (reducible)");
        Out out;
        const PuiseuxBranch& b = bs.branches[0];
        ValueProfile prof = branch_value_profile(b);
        out.delta = prof.delta;
        out.conductor = prof.conductor;
        out.codim = omega_codim(b);
        std::uint64_t window = std::max<std::uint64_t>(16, 2 * prof.conductor + 2);
        FormSpan span = omega_span(b, std::min(window, b.trunc - 1));
        out.span_orders = span.orders;
        for (std::uint64_t k = 0; k <= span.trunc; ++k)
            if (!span.order_present(k)) out.gaps.push_back(k);
        out.pol = pol_identity_check(f, bs);
        return out;
    });
    if (json) {
        nlohmann::ordered_json j;
        j["input"] = f.to_string();
        j["omega_codim"] = o.codim;
        j["delta"] = o.delta;
        j["conductor"] = o.conductor;
        j["span_orders"] = o.span_orders;
        j["span_gaps"] = o.gaps;
        j["conductor_identity"] = o.pol.holds;
        j["jacobian_codim"] = o.pol.jacobian_codim;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "input: " << f.to_string() << "\n";
        std::cout << "omega_codim (dim Omegabar/Omega): " << o.codim << "\n";
        std::cout << "delta: " << o.delta << "   conductor: " << o.conductor << "\n";
        std::cout << "form span orders:";
        for (auto v : o.span_orders) std::cout << " " << v;
        std::cout << "\nform span gaps:";
        for (auto v : o.gaps) std::cout << " " << v;
        std::cout << "\nconductor identity: " << (o.pol.holds ? "holds" : "FAILS")
                  << "   jacobian codim: " << o.pol.jacobian_codim << "\n";
    }
    return o.pol.holds ? kExitOk : kExitComputational;
}

int cmd_tauprime(const std::vector<std::string>& gens_text, const std::string& vars_spec,
                 bool json) {
    VariableSet vars = parse_vars(vars_spec);
    std::vector<Polynomial> gens;
    for (const auto& g : gens_text) gens.push_back(parse_polynomial(g, vars));
    std::uint64_t tp = tjurina_prime(gens, vars);
    if (json) {
        nlohmann::ordered_json j;
        j["generators"] = gens_text;
        j["vars"] = vars.names();
        j["tau_prime"] = tp;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "tau': " << tp << "\n";
    }
    return kExitOk;
}

int cmd_branches(const std::string& poly, const std::string& vars_spec, bool json,
                 std::uint64_t precision) {
    VariableSet vars = parse_vars(vars_spec);
    Polynomial f = parse_polynomial(poly, vars);
    PuiseuxOptions popts;
    popts.precision = precision;
    BranchSet bs = puiseux_branches(f, popts);
    if (json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& b : bs.branches) {
            nlohmann::ordered_json j;
            j["parametrization"] = rename_generator(b.to_string(), b.field, b.leaf_index);
            j["ramification"] = b.e;
            j["conjugate"] = b.conj_index;
            j["conjugates"] = b.conj_count;
            if (b.field) j["minimal_polynomial"] = render_minpoly(b.field, b.leaf_index);
            arr.push_back(j);
        }
        nlohmann::ordered_json top;
        top["input"] = f.to_string();
        top["r"] = bs.branch_count();
        top["precision"] = bs.precision;
        top["branches"] = arr;
        std::cout << top.dump(2) << "\n";
    } else {
        std::cout << "input: " << f.to_string() << "\n";
        std::cout << "r = " << bs.branch_count() << " branches (series mod t^"
                  << bs.precision + 1 << "):\n";
        for (const auto& b : bs.branches) {
            std::cout << "  " << rename_generator(b.to_string(), b.field, b.leaf_index);
            if (b.conj_count > 1)
                std::cout << "   [conjugate " << b.conj_index + 1 << " of " << b.conj_count << "]";
            std::cout << "\n";
            if (b.field && b.conj_index == 0)
                std::cout << "      where " << render_minpoly(b.field, b.leaf_index) << "\n";
        }
    }
    return kExitOk;
}

void print_summary(const ScanSummary& s, bool approx) {
    std::cout << "summary: max rho = " << (s.max_rho ? s.max_rho->to_string() : "n/a");
    if (s.max_rho && approx) std::cout << " (~" << s.max_rho->approx_string() << ")";
    if (!s.argmax.empty()) std::cout << " at " << s.argmax;
    std::cout << ", rho monotonicity: " << s.rho_monotonicity << "\n";
    if (!s.check_failures.empty()) {
        std::cout << "CHECK FAILURES:";
        for (const auto& c : s.check_failures) std::cout << " " << c;
        std::cout << "\n";
    }
    for (const auto& id : s.refutation_candidates)
        std::cout << "candidate refutation at " << id
                  << " (rho >= 4/3) — requires independent re-verification with the jet oracle "
                     "and increased expansion precision\n";
}

nlohmann::ordered_json summary_to_json(const ScanSummary& s) {
    nlohmann::ordered_json j;
    j["max_rho"] = s.max_rho ? rational_to_json(*s.max_rho) : nlohmann::ordered_json(nullptr);
    j["argmax"] = s.argmax;
    j["rho_monotonicity"] = s.rho_monotonicity;
    j["check_failures"] = s.check_failures;
    j["refutation_candidates"] = s.refutation_candidates;
    return j;
}

int scan_exit(const ScanResult& r) {
    for (const auto& e : r.entries)
        if (!e.has_record()) return kExitComputational;
    return r.summary.check_failures.empty() ? kExitOk : kExitComputational;
}

int cmd_scan(const std::string& family, const std::string& param, const std::string& range,
             const std::string& vars_spec, bool json, bool approx, const std::string& out_path) {
    auto dots = range.find("..");
    if (dots == std::string::npos) throw DomainError("range must look like 2..5");
    FamilyTemplate t;
    t.text = family;
    t.param = param;
    t.vars = parse_vars(vars_spec);
    t.lo = std::stoull(range.substr(0, dots));
    t.hi = std::stoull(range.substr(dots + 2));
    ScanResult r = scan_family(t, out_path);
    if (json) {
        nlohmann::ordered_json j;
        j["header"] = r.header;
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const auto& e : r.entries) entries.push_back(entry_to_json(e));
        j["entries"] = entries;
        j["summary"] = summary_to_json(r.summary);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& e : r.entries) {
            std::cout << e.id << ": ";
            if (e.has_record()) {
                const auto& rec = e.record_json;
                std::cout << "mu=" << rec.at("mu").get<std::uint64_t>()
                          << " tau=" << rec.at("tau").get<std::uint64_t>();
                if (!rec.at("rho").is_null()) {
                    Rational rho(Integer::from_string(rec.at("rho").at("num").get<std::string>()),
                                 Integer::from_string(rec.at("rho").at("den").get<std::string>()));
                    std::cout << " rho=" << rho.to_string();
                    if (approx) std::cout << " (~" << rho.approx_string() << ")";
                }
                std::cout << "\n";
            } else {
                std::cout << "failed: " << e.error << "\n";
            }
        }
        print_summary(r.summary, approx);
    }
    return scan_exit(r);
}

int cmd_search(std::vector<std::string> support_specs, const std::string& coeffs_spec,
               std::uint64_t samples, std::uint64_t seed, unsigned threads,
               const std::string& vars_spec, bool json, bool approx, const std::string& out_path) {
    SearchConfig cfg;
    cfg.vars = parse_vars(vars_spec);
    if (support_specs.empty()) {
        cfg.supports = SearchConfig::default_supports();
    } else {
        for (const auto& spec : support_specs) {
            std::vector<std::string> monos;
            std::string cur;
            for (char c : spec) {
                if (c == ',') {
                    monos.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            if (!cur.empty()) monos.push_back(cur);
            cfg.supports.push_back(monos);
        }
    }
    if (!coeffs_spec.empty()) {
        cfg.coefficients.clear();
        std::string cur;
        for (char c : coeffs_spec + ",") {
            if (c == ',') {
                if (!cur.empty()) cfg.coefficients.push_back(std::stoll(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
    }
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.threads = threads;
    ScanResult r = search_support(cfg, out_path);
    if (json) {
        nlohmann::ordered_json j;
        j["header"] = r.header;
        j["results_file"] = out_path;
        j["summary"] = summary_to_json(r.summary);
        std::cout << j.dump(2) << "\n";
    } else {
        std::uint64_t ok = 0, failed = 0;
        for (const auto& e : r.entries) e.has_record() ? ++ok : ++failed;
        std::cout << "samples: " << r.entries.size() << " (" << ok << " records, " << failed
                  << " failures), results in " << out_path << "\n";
        print_summary(r.summary, approx);
    }
    return scan_exit(r);
}

int cmd_verify(const std::string& path, bool json) {
    VerifyReport report = path.empty() ? verify_bundled_corpus() : verify_corpus_file(path);
    if (json) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : report.rows)
            rows.push_back({{"name", row.name}, {"pass", row.pass}, {"detail", row.detail}});
        nlohmann::ordered_json j;
        j["items"] = report.items;
        j["all_pass"] = report.all_pass;
        j["rows"] = rows;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << report.items << " items\n";
        for (const auto& row : report.rows) {
            std::cout << (row.pass ? "PASS " : "FAIL ") << row.name;
            if (!row.pass) std::cout << "  (" << row.detail << ")";
            std::cout << "\n";
        }
        std::cout << (report.all_pass ? "all checks passed" : "FAILURES PRESENT") << "\n";
    }
    return report.all_pass ? kExitOk : kExitComputational;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvesing — exact local invariants of plane curve singularities"};
    app.require_subcommand(1);

    std::string poly, vars = "x,y", out_path, range = "2..5", family, param = "m";
    std::string coeffs_spec, corpus_path;
    std::vector<std::string> gens, supports;
    bool json = false, approx = false;
    std::uint64_t precision = 0, samples = 200, seed = 1;
    unsigned threads = 0;

    auto add_common = [&](CLI::App* sub, bool with_precision = false) {
        sub->add_flag("--json", json, "emit JSON instead of a table");
        sub->add_flag("--approx", approx, "annotate exact ratios with 6-digit decimals");
        sub->add_option("--vars", vars, "comma-separated variable list");
        if (with_precision)
            sub->add_option("--precision", precision, "series truncation floor for expansions");
    };

    CLI::App* inv = app.add_subcommand("invariants", "full invariant record of a plane germ");
    inv->add_option("poly", poly, "defining polynomial, e.g. \"x^3 - y^2\"")->required();
    add_common(inv, true);

    CLI::App* om = app.add_subcommand("omega", "differential-form data of an irreducible germ");
    om->add_option("poly", poly)->required();
    add_common(om, true);

    CLI::App* tp = app.add_subcommand("tauprime", "tau' of a complete intersection curve");
    tp->add_option("gens", gens, "n generators in n+1 variables")->required();
    std::string tp_vars = "x,y,z";
    tp->add_flag("--json", json);
    tp->add_option("--vars", tp_vars, "comma-separated variable list (default x,y,z)");

    CLI::App* br = app.add_subcommand("branches", "Puiseux branch parametrizations");
    br->add_option("poly", poly)->required();
    add_common(br, true);

    CLI::App* sc = app.add_subcommand("scan", "instantiate a one-parameter family");
    sc->add_option("--family", family, "polynomial template, e.g. \"x^(2m+1)+x^m*y^(m+1)+y^(2m)\"")
        ->required();
    sc->add_option("--param", param, "parameter symbol (default m)");
    sc->add_option("--range", range, "inclusive parameter range a..b");
    sc->add_option("--out", out_path, "append-only JSONL results file");
    add_common(sc);

    CLI::App* se = app.add_subcommand("search", "randomized coefficient search over supports");
    se->add_option("--support", supports,
                   "comma-separated monomials of one support (repeatable; default: family-like set)");
    se->add_option("--coeffs", coeffs_spec, "comma-separated nonzero integer coefficients");
    se->add_option("--samples", samples, "number of samples (default 200)");
    se->add_option("--seed", seed, "splitmix64 seed (default 1)");
    se->add_option("--threads", threads, "worker threads (default: hardware)");
    se->add_option("--out", out_path, "append-only JSONL results file")->required();
    add_common(se);

    CLI::App* ve = app.add_subcommand("verify", "run the identity suite over a corpus");
    ve->add_option("corpus", corpus_path, "corpus JSON file (default: the bundled corpus)");
    ve->add_flag("--json", json);

    CLI::App* co = app.add_subcommand("corpus", "print the bundled corpus as JSON");
    (void)co;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (inv->parsed()) return cmd_invariants(poly, vars, json, approx, precision);
        if (om->parsed()) return cmd_omega(poly, vars, json, precision);
        if (tp->parsed()) return cmd_tauprime(gens, tp_vars, json);
        if (br->parsed()) return cmd_branches(poly, vars, json, precision);
        if (sc->parsed()) return cmd_scan(family, param, range, vars, json, approx, out_path);
        if (se->parsed())
            return cmd_search(supports, coeffs_spec, samples, seed, threads, vars, json, approx,
                              out_path);
        if (ve->parsed()) return cmd_verify(corpus_path, json);
        if (co->parsed()) {
            std::cout << corpus_to_json().dump(2) << "\n";
            return kExitOk;
        }
        return kExitUsage;
    } catch (const InternalError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInternal;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputational;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputational;
    }
}
