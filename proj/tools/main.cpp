// chow: dimensions of secant varieties of Chow varieties over a prime
// field, with replayable induction certificates.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chow/cert_io.hpp"
#include "chow/conjecture.hpp"
#include "chow/monomials.hpp"
#include "chow/prime_field.hpp"
#include "chow/prover.hpp"
#include "chow/rng.hpp"
#include "chow/statement.hpp"
#include "chow/terracini.hpp"
#include "chow/thresholds.hpp"
#include "chow/version.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUncertified = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct RunConfig {
    std::uint64_t prime = chow::kDefaultPrime;
    std::string seed_text = std::to_string(chow::kDefaultSeed);
    std::uint64_t seed = chow::kDefaultSeed;
    int trials = 3;
    int jobs = 1;
    std::string format = "text";
    std::string out;
    bool no_trust = false;
    bool explain = false;
};

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kExitUsage;
}

bool resolve_seed(RunConfig& cfg) {
    if (cfg.seed_text == "random") {
        std::random_device rd;
        cfg.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        return true;
    }
    if (cfg.seed_text.empty() ||
        cfg.seed_text.find_first_not_of("0123456789") != std::string::npos)
        return false;
    try {
        cfg.seed = std::stoull(cfg.seed_text);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

// Machine-readable content goes to stdout or --out; progress to stderr.
int emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << cfg.out << " for writing\n";
        return kExitInternal;
    }
    f << payload;
    return f ? kExitOk : kExitInternal;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += fields[i];
    }
    line += '\n';
    return line;
}

int cmd_dim(const RunConfig& cfg, int n, int d, int s) {
    const chow::PrimeField field(static_cast<std::uint32_t>(cfg.prime));
    const chow::SecantDimResult r =
        chow::secant_dimension(n, d, s, cfg.trials, cfg.seed, field);
    std::string payload;
    if (cfg.format == "json") {
        json j;
        j["command"] = "dim";
        j["n"] = n;
        j["d"] = d;
        j["s"] = s;
        j["dim"] = r.dim_lower_bound;
        j["expected"] = r.expected;
        j["certified"] = r.nondefective_certified;
        j["fills"] = r.fills_ambient;
        j["prime"] = std::to_string(r.prime);
        j["seed"] = std::to_string(cfg.seed);
        j["trials_used"] = r.trials_used;
        payload = j.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        payload = csv_line({"n", "d", "s", "dim", "expected", "certified",
                            "fills", "trials_used"});
        payload += csv_line({std::to_string(n), std::to_string(d),
                             std::to_string(s), std::to_string(r.dim_lower_bound),
                             std::to_string(r.expected),
                             r.nondefective_certified ? "true" : "false",
                             r.fills_ambient ? "true" : "false",
                             std::to_string(r.trials_used)});
    } else {
        std::ostringstream os;
        os << "dim=" << r.dim_lower_bound << " expected=" << r.expected << " "
           << (r.nondefective_certified ? "CERTIFIED" : "defective(evidence)")
           << " fills=" << yesno(r.fills_ambient) << "\n";
        payload = os.str();
    }
    const int rc = emit(cfg, payload);
    if (rc != kExitOk) return rc;
    return r.nondefective_certified ? kExitOk : kExitUncertified;
}

int cmd_statement(const RunConfig& cfg, const chow::Statement& st) {
    const chow::PrimeField field(static_cast<std::uint32_t>(cfg.prime));
    const std::uint64_t a = chow::a_value(st);
    const bool sub = chow::is_subabundant(st);
    const chow::CheckOutcome r =
        chow::check_statement(st, cfg.trials, cfg.seed, field);
    std::string payload;
    if (cfg.format == "json") {
        json j;
        j["command"] = "statement";
        j["statement"] = {st.n, st.d, st.s, st.t, st.u, st.v};
        j["a"] = a;
        j["subabundant"] = sub;
        j["rank"] = r.achieved_rank;
        j["certified"] = r.certified;
        j["prime"] = std::to_string(r.prime);
        j["seed"] = std::to_string(cfg.seed);
        j["trials_used"] = r.trials_used;
        payload = j.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        payload = csv_line({"n", "d", "s", "t", "u", "v", "a", "subabundant",
                            "rank", "certified", "trials_used"});
        payload += csv_line(
            {std::to_string(st.n), std::to_string(st.d), std::to_string(st.s),
             std::to_string(st.t), std::to_string(st.u), std::to_string(st.v),
             std::to_string(a), sub ? "true" : "false",
             std::to_string(r.achieved_rank), r.certified ? "true" : "false",
             std::to_string(r.trials_used)});
    } else {
        std::ostringstream os;
        os << "a=" << a << " " << (sub ? "subabundant" : "superabundant");
        if (!sub)
            os << " IMPOSSIBLE (a > binom)";
        else if (r.certified && chow::is_empty_statement(st))
            os << " rank=" << r.achieved_rank << " TRUE (vacuous)";
        else if (r.certified)
            os << " rank=" << r.achieved_rank << " TRUE";
        else
            os << " rank=" << r.achieved_rank << " UNKNOWN (best of "
               << r.trials_used << " trials)";
        os << "\n";
        payload = os.str();
    }
    const int rc = emit(cfg, payload);
    if (rc != kExitOk) return rc;
    return r.certified ? kExitOk : kExitUncertified;
}

int cmd_prove(const RunConfig& cfg, const chow::Statement& st,
              std::uint64_t max_basis, int extend_to) {
    const chow::PrimeField field(static_cast<std::uint32_t>(cfg.prime));
    chow::Prover prover(field, cfg.seed, chow::BasePolicy{max_basis},
                        chow::SearchBudget{}, cfg.trials);
    chow::ProveOutcome out;
    if (extend_to > 0) {
        if (st.t != 0 || st.u != 0 || st.v != 0)
            return usage_error("--extend-to applies to (n,d,s,0,0,0) statements");
        out = prover.extend_n(st.n, st.d, st.s, extend_to);
    } else {
        out = prover.prove(st);
    }
    if (!out.proved()) {
        std::cerr << "not proved: " << out.detail << "\n";
        return kExitUncertified;
    }
    chow::CertificateFile file;
    file.prime = static_cast<std::uint32_t>(cfg.prime);
    file.root_seed = cfg.seed;
    file.tree = out.certificate;
    const int rc = emit(cfg, chow::certificate_to_json(file) + "\n");
    if (rc != kExitOk) return rc;
    std::cerr << "proved " << chow::to_string(out.certificate->statement)
              << " (" << prover.memo_entries() << " memo entries)\n";
    return kExitOk;
}

int cmd_verify_cert(const RunConfig& cfg, const std::string& path) {
    chow::CertificateFile file;
    try {
        file = chow::load_certificate(path);
    } catch (const std::exception& e) {
        std::cerr << "invalid certificate: " << e.what() << "\n";
        return kExitUncertified;
    }
    const chow::VerifyResult r = chow::verify_certificate(*file.tree);
    std::string payload;
    if (cfg.format == "json") {
        json j;
        j["command"] = "verify-cert";
        j["file"] = path;
        j["valid"] = r.ok;
        if (!r.ok) {
            j["node"] = r.path;
            j["reason"] = r.reason;
        }
        payload = j.dump(2) + "\n";
    } else {
        payload = r.ok ? "VALID " + chow::to_string(file.tree->statement) + "\n"
                       : "INVALID at " + r.path + ": " + r.reason + "\n";
    }
    const int rc = emit(cfg, payload);
    if (rc != kExitOk) return rc;
    return r.ok ? kExitOk : kExitUncertified;
}

void explain_cases(int s_max, std::ostream& os) {
    for (int s = 1; s <= s_max; ++s) {
        os << "s=" << s << ":\n";
        int lo = 3;
        while (!chow::int_lt_rational(s, chow::s2_threshold(lo))) ++lo;
        os << "  clause i   (d=3): n from " << lo
           << " (first n with s < s2(n); note s2 is applied to n here)"
           << " to " << chow::min_filling_n(s, 3) << " (first filling n)\n";
        int dmax = 3;
        for (int d = 4; static_cast<long long>(d) * d <= 18ll * s + 5; ++d)
            if (!chow::int_lt_rational(s, chow::s2_threshold(d))) dmax = d;
        if (dmax >= 4)
            os << "  clause ii  : d in [4, " << dmax
               << "] (last d with s >= s2(d)), n from 4 to first filling n\n";
        else
            os << "  clause ii  : empty (no d >= 4 has s >= s2(d))\n";
        int dlo = 3;
        while (!chow::int_lt_rational(s, chow::s2_threshold(dlo))) ++dlo;
        int dhi = 0;
        for (int d = 3; static_cast<long long>(d) * d <= 18ll * s + 5; ++d)
            if (chow::compare(chow::s1_threshold(d), s) < 0) dhi = d;
        if (dlo <= dhi)
            os << "  clause iii : d in [" << dlo << ", " << dhi
               << "] (s1(d) < s < s2(d)), n from 3 to first filling n\n";
        else
            os << "  clause iii : empty\n";
    }
}

int cmd_conjecture(const RunConfig& cfg, int max_s) {
    const chow::PrimeField field(static_cast<std::uint32_t>(cfg.prime));
    if (cfg.explain) explain_cases(max_s, std::cerr);
    const auto t0 = std::chrono::steady_clock::now();
    const chow::CaseProgressFn progress = [](const chow::CaseOutcome& c) {
        std::cerr << "checked s=" << c.c.s << " n=" << c.c.n << " d=" << c.c.d
                  << " dim=" << c.dim << "/" << c.expected
                  << (c.certified ? "" : " MISS") << "\n";
    };
    const chow::ConjectureReport report = chow::verify_conjecture(
        max_s, cfg.trials, cfg.seed, field, cfg.jobs, cfg.no_trust, progress);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    std::string payload;
    if (cfg.format == "json") {
        json cases = json::array();
        for (const chow::CaseOutcome& c : report.results) {
            json j;
            j["s"] = c.c.s;
            j["n"] = c.c.n;
            j["d"] = c.c.d;
            j["clause"] = c.c.clause;
            j["method"] = c.method;
            j["dim"] = c.dim;
            j["expected"] = c.expected;
            j["certified"] = c.certified;
            j["expected_exception"] = c.expected_exception;
            j["fills"] = c.fills;
            j["trials_used"] = c.trials_used;
            cases.push_back(std::move(j));
        }
        json j;
        j["command"] = "conjecture";
        j["max_s"] = report.s_max;
        j["prime"] = std::to_string(report.prime);
        j["seed"] = std::to_string(report.root_seed);
        j["trials"] = report.trials;
        j["no_trust"] = report.no_trust;
        j["cases"] = std::move(cases);
        j["exceptions"] = report.exceptions.size();
        j["failures"] = report.failures.size();
        j["ok"] = report.ok();
        payload = j.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        payload = csv_line({"s", "n", "d", "clause", "method", "dim", "expected",
                            "certified", "expected_exception", "fills",
                            "trials_used"});
        for (const chow::CaseOutcome& c : report.results)
            payload += csv_line(
                {std::to_string(c.c.s), std::to_string(c.c.n),
                 std::to_string(c.c.d), c.c.clause, c.method,
                 std::to_string(c.dim), std::to_string(c.expected),
                 c.certified ? "true" : "false",
                 c.expected_exception ? "true" : "false",
                 c.fills ? "true" : "false", std::to_string(c.trials_used)});
    } else {
        std::ostringstream os;
        for (const chow::CaseOutcome& c : report.results) {
            os << "s=" << c.c.s << " n=" << c.c.n << " d=" << c.c.d
               << " clause=" << c.c.clause << " method=" << c.method
               << " dim=" << c.dim << " expected=" << c.expected << " ";
            if (c.certified)
                os << (c.fills ? "CERTIFIED fills" : "CERTIFIED");
            else if (c.expected_exception)
                os << "DEFECTIVE (known d=2 exception)";
            else
                os << "FAILED";
            os << "\n";
        }
        os << "cases=" << report.results.size()
           << " exceptions=" << report.exceptions.size()
           << " failures=" << report.failures.size() << " elapsed=" << elapsed
           << "s\n";
        payload = os.str();
    }
    const int rc = emit(cfg, payload);
    if (rc != kExitOk) return rc;
    std::cerr << "conjecture max_s=" << max_s << ": "
              << report.results.size() - report.exceptions.size() -
                     report.failures.size()
              << " certified, " << report.exceptions.size()
              << " known d=2 exceptions, " << report.failures.size()
              << " failures in " << elapsed << "s\n";
    return report.ok() ? kExitOk : kExitUncertified;
}

int cmd_table(const RunConfig& cfg, bool chow_rank_mode, int d, int max_n,
              int max_d) {
    const chow::PrimeField field(static_cast<std::uint32_t>(cfg.prime));
    std::string payload;
    if (chow_rank_mode) {
        if (max_n < 1 || max_d < 1)
            return usage_error("table --chow-rank needs --max-n and --max-d");
        struct Row {
            int n, d;
            std::uint64_t rank;
            std::string status;
        };
        std::vector<Row> rows;
        for (int dd = 1; dd <= max_d; ++dd) {
            for (int n = 1; n <= max_n; ++n) {
                Row row{n, dd, 0, ""};
                if (dd == 1) {
                    row.rank = 1;
                    row.status = "trivial";
                } else if (dd == 2) {
                    row.rank = static_cast<std::uint64_t>(
                        chow::generic_chow_rank_d2(n));
                    row.status = "closed-form";
                } else {
                    row.rank = chow::generic_chow_rank(n, dd);
                    if (chow::basis_size(n, dd) <= 5000) {
                        const auto r = chow::secant_dimension(
                            n, dd, static_cast<int>(row.rank), cfg.trials,
                            chow::derive_seed(cfg.seed, n, dd, row.rank), field);
                        row.status = r.fills_ambient ? "certified" : "unverified";
                    } else {
                        row.status = "unchecked";
                    }
                }
                rows.push_back(row);
            }
        }
        if (cfg.format == "json") {
            json arr = json::array();
            for (const Row& r : rows)
                arr.push_back(json{{"n", r.n},
                                   {"d", r.d},
                                   {"chow_rank", r.rank},
                                   {"status", r.status}});
            json j;
            j["command"] = "table";
            j["mode"] = "chow-rank";
            j["rows"] = std::move(arr);
            payload = j.dump(2) + "\n";
        } else if (cfg.format == "csv") {
            payload = csv_line({"n", "d", "chow_rank", "status"});
            for (const Row& r : rows)
                payload += csv_line({std::to_string(r.n), std::to_string(r.d),
                                     std::to_string(r.rank), r.status});
        } else {
            std::ostringstream os;
            os << "| n | d | chow rank | status |\n|---|---|---|---|\n";
            for (const Row& r : rows)
                os << "| " << r.n << " | " << r.d << " | " << r.rank << " | "
                   << r.status << " |\n";
            payload = os.str();
        }
    } else {
        if (d != 2) return usage_error("table supports --d 2 or --chow-rank");
        if (max_n < 1) return usage_error("table --d 2 needs --max-n");
        struct Row {
            int n, s;
            std::uint64_t dim, expected;
            bool defective;
        };
        std::vector<Row> rows;
        for (int n = 1; n <= max_n; ++n) {
            const int fill_s = chow::generic_chow_rank_d2(n);
            for (int s = 1; s <= fill_s; ++s) {
                const std::uint64_t dim = chow::d2_dimension(n, s);
                const std::uint64_t exp = chow::expected_dimension(n, 2, s);
                rows.push_back(Row{n, s, dim, exp, dim < exp});
            }
        }
        if (cfg.format == "json") {
            json arr = json::array();
            for (const Row& r : rows)
                arr.push_back(json{{"n", r.n},
                                   {"s", r.s},
                                   {"dim", r.dim},
                                   {"expected", r.expected},
                                   {"defective", r.defective}});
            json j;
            j["command"] = "table";
            j["mode"] = "d2";
            j["rows"] = std::move(arr);
            payload = j.dump(2) + "\n";
        } else if (cfg.format == "csv") {
            payload = csv_line({"n", "s", "dim", "expected", "defective"});
            for (const Row& r : rows)
                payload += csv_line({std::to_string(r.n), std::to_string(r.s),
                                     std::to_string(r.dim),
                                     std::to_string(r.expected),
                                     r.defective ? "true" : "false"});
        } else {
            std::ostringstream os;
            os << "| n | s | dim | expected | defective |\n|---|---|---|---|---|\n";
            for (const Row& r : rows)
                os << "| " << r.n << " | " << r.s << " | " << r.dim << " | "
                   << r.expected << " | " << yesno(r.defective) << " |\n";
            payload = os.str();
        }
    }
    return emit(cfg, payload);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"secant dimensions of Chow varieties over a prime field"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--prime", cfg.prime,
                   "prime modulus (2^20 < p < 2^32; default 2^31 - 1)");
    app.add_option("--seed", cfg.seed_text,
                   "64-bit root seed, or 'random' for entropy");
    app.add_option("--trials", cfg.trials, "rank trials per statement")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", cfg.jobs, "worker threads for independent cases")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", cfg.out, "write machine output to this path");
    app.add_flag("--no-trust", cfg.no_trust,
                 "also rank-check cases covered by known results");
    app.add_flag("--explain", cfg.explain,
                 "print clause scan derivations to stderr");

    int n = 0, d = 0, s = 0, t = 0, u = 0, v = 0;

    CLI::App* dim = app.add_subcommand("dim", "secant variety dimension");
    dim->add_option("--n", n, "projective dimension")->required()
        ->check(CLI::PositiveNumber);
    dim->add_option("--d", d, "degree")->required()->check(CLI::PositiveNumber);
    dim->add_option("--s", s, "secant index")->required()
        ->check(CLI::PositiveNumber);

    CLI::App* stmt = app.add_subcommand("statement", "check one A(n,d,s,t,u,v)");
    stmt->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    stmt->add_option("--d", d)->required()->check(CLI::NonNegativeNumber);
    stmt->add_option("--s", s)->check(CLI::NonNegativeNumber);
    stmt->add_option("--t", t)->check(CLI::NonNegativeNumber);
    stmt->add_option("--u", u)->check(CLI::NonNegativeNumber);
    stmt->add_option("--v", v)->check(CLI::NonNegativeNumber);

    std::uint64_t max_basis = 5000;
    int extend_to = 0;
    CLI::App* prove = app.add_subcommand("prove", "derive a proof certificate");
    prove->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    prove->add_option("--d", d)->required()->check(CLI::NonNegativeNumber);
    prove->add_option("--s", s)->check(CLI::NonNegativeNumber);
    prove->add_option("--t", t)->check(CLI::NonNegativeNumber);
    prove->add_option("--u", u)->check(CLI::NonNegativeNumber);
    prove->add_option("--v", v)->check(CLI::NonNegativeNumber);
    prove->add_option("--max-basis", max_basis,
                      "direct rank checks allowed up to this basis size");
    prove->add_option("--extend-to", extend_to,
                      "chain the induction on n up to this n")
        ->check(CLI::PositiveNumber);

    std::string cert_path;
    CLI::App* verify = app.add_subcommand("verify-cert", "replay a certificate");
    verify->add_option("path", cert_path, "certificate JSON file")->required();

    int max_s = 0;
    CLI::App* conj =
        app.add_subcommand("conjecture", "verify the conjecture for s <= max-s");
    conj->add_option("--max-s", max_s)->required()->check(CLI::PositiveNumber);

    bool chow_rank_mode = false;
    int table_d = 0, table_max_n = 0, table_max_d = 0;
    CLI::App* table = app.add_subcommand("table", "closed-form tables");
    table->add_flag("--chow-rank", chow_rank_mode, "generic Chow rank table");
    table->add_option("--d", table_d, "degree (2 for the closed-form table)");
    table->add_option("--max-n", table_max_n)->check(CLI::PositiveNumber);
    table->add_option("--max-d", table_max_d)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (!resolve_seed(cfg)) return usage_error("--seed must be decimal or 'random'");
    if (cfg.prime <= (1ull << 20) || cfg.prime > 0xFFFFFFFFull ||
        !chow::is_prime_u64(cfg.prime))
        return usage_error("--prime must be a prime in (2^20, 2^32)");

    try {
        if (dim->parsed()) return cmd_dim(cfg, n, d, s);
        if (stmt->parsed() || prove->parsed()) {
            const chow::Statement st{n, d, s, t, u, v};
            try {
                chow::validate_statement(st);
            } catch (const std::exception& e) {
                return usage_error(e.what());
            }
            if (stmt->parsed()) return cmd_statement(cfg, st);
            if (extend_to > 0 && extend_to < n)
                return usage_error("--extend-to must be at least --n");
            return cmd_prove(cfg, st, max_basis, extend_to);
        }
        if (verify->parsed()) return cmd_verify_cert(cfg, cert_path);
        if (conj->parsed()) return cmd_conjecture(cfg, max_s);
        if (table->parsed())
            return cmd_table(cfg, chow_rank_mode, table_d, table_max_n,
                             table_max_d);
        return usage_error("no subcommand");
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
