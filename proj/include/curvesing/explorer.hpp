// Family scans and randomized support searches over plane curve germs, with
// append-only JSONL persistence, resumable runs, and a corpus verifier.
#pragma once

#include <atomic>
#include <condition_variable>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "curvesing/corpus.hpp"
#include "curvesing/invariants.hpp"
#include "curvesing/parser.hpp"

namespace curvesing {

// splitmix64: the documented generator behind every randomized run
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97f4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

// ---- family templates ----

namespace detail {

// minimal arithmetic evaluator for template exponent expressions:
// E := T (('+'|'-') T)*;  T := F (('*'|'/') F)*;  F := P ('^' F)?;
// P := number | '(' E ')' | '-' P
class ExprEval {
public:
    explicit ExprEval(std::string_view s) : s_(s) {}
    Rational run() {
        Rational v = expr();
        skip();
        if (pos_ != s_.size()) throw DomainError("malformed template expression");
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Rational expr() {
        Rational v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    Rational term() {
        Rational v = factor();
        for (;;) {
            if (eat('*'))
                v *= factor();
            else if (eat('/'))
                v /= factor();
            else
                return v;
        }
    }
    Rational factor() {
        Rational base = prim();
        if (eat('^')) {
            Rational e = factor();
            if (!e.den().is_one() || e.sign() < 0) throw DomainError("template exponent must be a natural");
            std::uint64_t k = e.num().to_u64();
            Rational r(1);
            for (std::uint64_t i = 0; i < k; ++i) r *= base;
            return r;
        }
        return base;
    }
    Rational prim() {
        skip();
        if (eat('-')) return -prim();
        if (eat('(')) {
            Rational v = expr();
            if (!eat(')')) throw DomainError("unbalanced template parentheses");
            return v;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw DomainError("malformed template expression");
        return Rational(Integer::from_string(s_.substr(start, pos_ - start)), Integer(1));
    }
};

inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace detail

// substitute an integer value for the parameter symbol and evaluate every
// parenthesized exponent down to a plain natural, producing text that the
// strict polynomial grammar accepts
inline std::string instantiate_template(const std::string& text, const std::string& param,
                                        std::uint64_t value) {
    // implicit products like "2m" become "2*m", then the symbol becomes "(v)"
    std::string pass1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        bool at_param = text.compare(i, param.size(), param) == 0 &&
                        (i + param.size() == text.size() || !detail::ident_char(text[i + param.size()])) &&
                        (i == 0 || !detail::ident_char(text[i - 1]) ||
                         std::isdigit(static_cast<unsigned char>(text[i - 1])));
        if (at_param && i > 0 && std::isdigit(static_cast<unsigned char>(text[i - 1]))) pass1 += '*';
        if (at_param) {
            pass1 += "(" + std::to_string(value) + ")";
            i += param.size() - 1;
        } else {
            pass1 += text[i];
        }
    }
    // evaluate ^(...) groups
    std::string out;
    for (std::size_t i = 0; i < pass1.size(); ++i) {
        if (pass1[i] != '^') {
            out += pass1[i];
            continue;
        }
        std::size_t j = i + 1;
        while (j < pass1.size() && std::isspace(static_cast<unsigned char>(pass1[j]))) ++j;
        if (j >= pass1.size() || pass1[j] != '(') {
            out += pass1[i];
            continue;
        }
        int depth = 0;
        std::size_t k = j;
        for (; k < pass1.size(); ++k) {
            if (pass1[k] == '(') ++depth;
            if (pass1[k] == ')' && --depth == 0) break;
        }
        if (depth != 0) throw DomainError("unbalanced parentheses in template exponent");
        Rational v = detail::ExprEval(pass1.substr(j + 1, k - j - 1)).run();
        if (!v.den().is_one() || v.sign() < 0)
            throw DomainError("template exponent did not evaluate to a natural");
        out += "^" + v.num().to_string();
        i = k;
    }
    return out;
}

struct FamilyTemplate {
    std::string text;
    std::string param = "m";
    VariableSet vars{std::vector<std::string>{"x", "y"}};
    std::uint64_t lo = 2, hi = 5;
};

struct ScanEntry {
    std::string id;
    std::string input;
    std::optional<InvariantRecord> record;   // live result, absent when resumed from disk
    nlohmann::ordered_json record_json;      // serialized record (authoritative for files)
    std::string error;

    bool has_record() const { return !record_json.is_null(); }
};

struct ScanSummary {
    std::optional<Rational> max_rho;
    std::string argmax;
    std::string rho_monotonicity;  // "strictly-increasing" | "not-monotone" | "n/a"
    std::vector<std::string> check_failures;
    std::vector<std::string> refutation_candidates;  // rho >= 4/3, to be re-verified
};

struct ScanResult {
    nlohmann::ordered_json header;
    std::vector<ScanEntry> entries;
    ScanSummary summary;
};

// summary is always derived from the entries (their serialized records),
// never trusted from disk
inline ScanSummary summarize(const std::vector<ScanEntry>& entries) {
    ScanSummary s;
    const Rational four_thirds(4, 3), two(2);
    std::optional<Rational> prev;
    bool increasing = true, any = false;
    for (const auto& e : entries) {
        if (!e.has_record()) continue;
        const auto& rec = e.record_json;
        for (const auto& c : rec.at("checks"))
            if (c.at("status") == "fail")
                s.check_failures.push_back(e.id + ":" + c.at("name").get<std::string>());
        if (rec.at("rho").is_null()) continue;
        Rational rho(Integer::from_string(rec.at("rho").at("num").get<std::string>()),
                     Integer::from_string(rec.at("rho").at("den").get<std::string>()));
        if (rho >= two)
            throw InternalError("rho >= 2 found for '" + e.input + "'; this contradicts a proven bound");
        if (rho >= four_thirds) s.refutation_candidates.push_back(e.id);
        if (!s.max_rho || rho > *s.max_rho) {
            s.max_rho = rho;
            s.argmax = e.id;
        }
        if (prev && !(rho > *prev)) increasing = false;
        prev = rho;
        any = true;
    }
    s.rho_monotonicity = !any ? "n/a" : increasing ? "strictly-increasing" : "not-monotone";
    return s;
}

inline ScanEntry scan_one(const std::string& id, const std::string& poly_text,
                          const VariableSet& vars) {
    ScanEntry e;
    e.id = id;
    e.input = poly_text;
    try {
        Polynomial f = parse_polynomial(poly_text, vars);
        e.record = full_record(f);
        e.record_json = record_to_json(*e.record);
    } catch (const InternalError&) {
        throw;
    } catch (const std::exception& ex) {
        e.error = ex.what();
    }
    return e;
}

inline nlohmann::ordered_json entry_to_json(const ScanEntry& e) {
    nlohmann::ordered_json j;
    j["id"] = e.id;
    j["input"] = e.input;
    if (e.has_record())
        j["record"] = e.record_json;
    else
        j["error"] = e.error;
    return j;
}

namespace detail {

// append-only persistence with idempotent keys: an existing file written by
// the same header is resumed after its last complete line
inline void load_resumable(const nlohmann::ordered_json& header, const std::string& path,
                           std::vector<ScanEntry>& entries,
                           const std::vector<std::string>& expected_ids) {
    std::ifstream in(path);
    if (!in) return;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(line);
        if (first) {
            first = false;
            if (j != header)
                throw DomainError("existing results file was produced by a different configuration");
            continue;
        }
        ScanEntry e;
        e.id = j.at("id").get<std::string>();
        e.input = j.at("input").get<std::string>();
        if (j.contains("error"))
            e.error = j.at("error").get<std::string>();
        else
            e.record_json = j.at("record");
        if (entries.size() >= expected_ids.size() || e.id != expected_ids[entries.size()])
            throw DomainError("results file does not match this run; refusing to resume");
        entries.push_back(std::move(e));
    }
}

// evaluate fn(k) for k in [0, n) on a worker pool, committing results in
// index order through `commit`
template <class Fn, class Commit>
void run_ordered(std::uint64_t n, unsigned threads, Fn&& fn, Commit&& commit) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, 8);
    if (n == 0) return;
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::uint64_t, ScanEntry> ready;
    std::atomic<std::uint64_t> next_job{0};
    std::exception_ptr fail;
    auto worker = [&]() {
        for (;;) {
            std::uint64_t k = next_job.fetch_add(1);
            if (k >= n) return;
            try {
                ScanEntry e = fn(k);
                std::lock_guard<std::mutex> lock(mu);
                ready.emplace(k, std::move(e));
                cv.notify_all();
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!fail) fail = std::current_exception();
                cv.notify_all();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    std::uint64_t emitted = 0;
    {
        std::unique_lock<std::mutex> lock(mu);
        while (emitted < n) {
            cv.wait(lock, [&] { return fail || ready.count(emitted) > 0; });
            if (fail) break;
            commit(emitted, ready.at(emitted));
            ready.erase(emitted);
            ++emitted;
        }
    }
    for (auto& t : pool) t.join();
    if (fail) std::rethrow_exception(fail);
}

}  // namespace detail

inline ScanResult scan_family(const FamilyTemplate& t, const std::string& path = "") {
    if (t.hi < t.lo) throw DomainError("empty parameter range");
    ScanResult out;
    out.header = nlohmann::ordered_json{
        {"schema_version", 1},
        {"kind", "scan"},
        {"config",
         {{"family", t.text}, {"param", t.param}, {"lo", t.lo}, {"hi", t.hi}, {"vars", t.vars.names()}}}};
    std::vector<std::string> ids, polys;
    for (std::uint64_t v = t.lo; v <= t.hi; ++v) {
        ids.push_back(t.param + "=" + std::to_string(v));
        polys.push_back(instantiate_template(t.text, t.param, v));
    }
    std::ofstream fout;
    if (!path.empty()) {
        detail::load_resumable(out.header, path, out.entries, ids);
        fout.open(path, out.entries.empty() ? std::ios::trunc : std::ios::app);
        if (!fout) throw DomainError("cannot open results file '" + path + "'");
        if (out.entries.empty()) fout << out.header.dump() << "\n";
    }
    std::size_t done = out.entries.size();
    detail::run_ordered(
        ids.size() - done, 0,
        [&](std::uint64_t i) { return scan_one(ids[done + i], polys[done + i], t.vars); },
        [&](std::uint64_t, const ScanEntry& e) {
            if (fout) {
                fout << entry_to_json(e).dump() << "\n";
                fout.flush();
            }
            out.entries.push_back(e);
        });
    out.summary = summarize(out.entries);
    return out;
}

// ---- randomized support search ----

struct SearchConfig {
    std::vector<std::vector<std::string>> supports;  // candidate Newton supports
    std::vector<std::int64_t> coefficients = {1, 2, 3, -1, -2, -3};
    std::uint64_t samples = 200;
    std::uint64_t seed = 1;
    VariableSet vars{std::vector<std::string>{"x", "y"}};
    unsigned threads = 0;  // 0 = hardware concurrency

    static std::vector<std::vector<std::string>> default_supports() {
        // shapes that mimic the bundled families' Newton polygons
        return {
            {"x^5", "x^2*y^3", "y^4"},
            {"x^5", "y^5", "x^3*y^3"},
            {"x^7", "x^3*y^4", "y^6"},
            {"x^7", "y^7", "x^4*y^4"},
            {"x^3", "y^4", "x^2*y^2"},
            {"x^4", "y^6", "x^2*y^3"},
            {"x^4", "y^5", "x^2*y^3"},
            {"x^2", "y^7", "x*y^2"},
        };
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json supports_json = nlohmann::ordered_json::array();
        for (const auto& s : supports) supports_json.push_back(s);
        return nlohmann::ordered_json{{"supports", supports_json},
                                      {"coefficients", coefficients},
                                      {"samples", samples},
                                      {"vars", vars.names()}};
    }
};

namespace detail {

// the inputs of all samples, drawn sequentially from one splitmix64 stream
inline std::vector<std::string> draw_samples(const SearchConfig& cfg) {
    SplitMix64 rng(cfg.seed);
    std::vector<std::string> polys;
    polys.reserve(cfg.samples);
    for (std::uint64_t k = 0; k < cfg.samples; ++k) {
        const auto& support = cfg.supports[k % cfg.supports.size()];
        std::string text;
        for (const auto& mono : support) {
            std::int64_t c = cfg.coefficients[rng.next() % cfg.coefficients.size()];
            if (text.empty())
                text += c < 0 ? "-" : "";
            else
                text += c < 0 ? " - " : " + ";
            text += std::to_string(c < 0 ? -c : c) + "*" + mono;
        }
        polys.push_back(std::move(text));
    }
    return polys;
}


}  // namespace detail

inline nlohmann::ordered_json search_header(const SearchConfig& cfg) {
    return nlohmann::ordered_json{
        {"schema_version", 1}, {"kind", "search"}, {"config", cfg.to_json()}, {"seed", cfg.seed}};
}

// run the search, appending one JSONL line per sample to `path`; when the
// stream already holds results from an identical config, those samples are
// skipped and the run resumes after them
inline ScanResult search_support(const SearchConfig& cfg, const std::string& path) {
    if (cfg.supports.empty()) throw DomainError("search needs at least one support");
    if (cfg.coefficients.empty()) throw DomainError("search needs a coefficient sample set");
    for (auto c : cfg.coefficients)
        if (c == 0) throw DomainError("coefficient sample set must exclude zero");
    if (cfg.samples < 1) throw DomainError("sample count must be at least 1");

    ScanResult out;
    out.header = search_header(cfg);
    std::vector<std::string> polys = detail::draw_samples(cfg);
    std::vector<std::string> ids;
    for (std::uint64_t k = 0; k < cfg.samples; ++k) ids.push_back("s" + std::to_string(k));

    detail::load_resumable(out.header, path, out.entries, ids);
    std::uint64_t done = out.entries.size();
    std::ofstream fout(path, done == 0 ? std::ios::trunc : std::ios::app);
    if (!fout) throw DomainError("cannot open results file '" + path + "'");
    if (done == 0) fout << out.header.dump() << "\n";

    detail::run_ordered(
        cfg.samples > done ? cfg.samples - done : 0, cfg.threads,
        [&](std::uint64_t i) {
            std::uint64_t k = done + i;
            return scan_one(ids[k], polys[k], cfg.vars);
        },
        [&](std::uint64_t, const ScanEntry& e) {
            out.entries.push_back(e);
            fout << entry_to_json(e).dump() << "\n";
            fout.flush();
        });
    out.summary = summarize(out.entries);
    return out;
}

// ---- corpus verification ----

struct VerifyRow {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    std::uint64_t items = 0;
    bool all_pass = true;
};

inline VerifyReport verify_corpus_items(const nlohmann::ordered_json& items) {
    VerifyReport report;
    report.items = items.size();
    for (const auto& item : items) {
        VerifyRow row;
        row.name = item.value("name", std::string("<unnamed>"));
        try {
            std::vector<std::string> names = item.contains("vars")
                                                 ? item.at("vars").get<std::vector<std::string>>()
                                                 : std::vector<std::string>{"x", "y"};
            VariableSet vars(names);
            Polynomial f = parse_polynomial(item.at("poly").get<std::string>(), vars);
            InvariantRecord rec = full_record(f);
            std::ostringstream detail;
            bool ok = true;
            auto expect_num = [&](const char* key, std::uint64_t got) {
                if (!item.contains("expect") || !item.at("expect").contains(key)) return;
                std::uint64_t want = item.at("expect").at(key).get<std::uint64_t>();
                if (want != got) {
                    ok = false;
                    detail << key << ": expected " << want << ", got " << got << "; ";
                }
            };
            expect_num("mu", rec.mu);
            expect_num("tau", rec.tau);
            expect_num("m", rec.m);
            expect_num("r", rec.r);
            expect_num("delta", rec.delta);
            if (item.contains("expect") && item.at("expect").contains("quasihomogeneous")) {
                bool want = item.at("expect").at("quasihomogeneous").get<bool>();
                if (want != rec.quasihomogeneous) {
                    ok = false;
                    detail << "quasihomogeneous flag mismatch; ";
                }
            }
            for (const auto& c : rec.checks)
                if (c.status == "fail") {
                    ok = false;
                    detail << c.name << " failed (" << c.detail << "); ";
                }
            row.pass = ok;
            row.detail = detail.str();
        } catch (const std::exception& ex) {
            row.pass = false;
            row.detail = ex.what();
        }
        if (!row.pass) report.all_pass = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

inline VerifyReport verify_bundled_corpus() { return verify_corpus_items(corpus_to_json()); }

inline VerifyReport verify_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open corpus file '" + path + "'");
    nlohmann::ordered_json items = nlohmann::ordered_json::parse(in);
    if (!items.is_array()) throw DomainError("corpus file must hold a JSON array");
    return verify_corpus_items(items);
}

}  // namespace curvesing
