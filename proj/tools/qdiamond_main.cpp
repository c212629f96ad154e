// qdiamond: batch verification tool for k-elongated partition diamond
// congruences. Subcommands: expand, verify, identities, certify, scan.
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 resource ceiling exceeded.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdiamond/claimspec.hpp"
#include "qdiamond/diamonds.hpp"
#include "qdiamond/identities.hpp"
#include "qdiamond/radu.hpp"

namespace {

using namespace qdiamond;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCeiling = 3;

struct GlobalOptions {
    std::size_t order_ceiling = kDefaultOrderCeiling;
    std::string ledger_path;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string format = "summary";
};

void append_ledger(const GlobalOptions& opts, const std::string& line) {
    std::ofstream out(opts.ledger_path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open ledger file: " + opts.ledger_path);
    out << line << "\n";
}

// Minimal '*' glob, enough for filters like "eq-6.2*".
bool glob_match(const std::string& pattern, const std::string& s) {
    std::size_t p = 0, i = 0, star = std::string::npos, mark = 0;
    while (i < s.size()) {
        if (p < pattern.size() && (pattern[p] == s[i])) {
            ++p, ++i;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = i;
        } else if (star != std::string::npos) {
            p = star + 1;
            i = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

template <class Fn>
std::vector<std::string> parallel_errors(std::size_t count, unsigned jobs, Fn&& fn) {
    std::vector<std::string> errors(count);
    std::atomic<std::size_t> next{0};
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(std::max(1u, jobs), count == 0 ? 1 : count));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t idx; (idx = next.fetch_add(1)) < count;) {
                try {
                    fn(idx);
                } catch (const std::exception& e) {
                    errors[idx] = e.what();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    return errors;
}

// --- expand -------------------------------------------------------------------

int cmd_expand(const GlobalOptions& opts, std::uint64_t k, std::size_t order,
               std::uint64_t modulus) {
    if (order > opts.order_ceiling) {
        std::cerr << "expand: order " << order << " exceeds ceiling " << opts.order_ceiling
                  << "\n";
        return kExitCeiling;
    }
    const Series s = dk_series(k, order, modulus);
    if (opts.format == "records") {
        for (std::size_t n = 0; n < order; ++n) {
            json j{{"schema", 1}, {"k", k}, {"n", n}, {"value", s.coeff(n).get_str()}};
            if (modulus) j["mod"] = modulus;
            std::cout << j.dump() << "\n";
        }
    } else {
        for (std::size_t n = 0; n < order; ++n)
            std::cout << n << "\t" << s.coeff(n).get_str() << "\n";
    }
    return kExitOk;
}

// --- verify / scan --------------------------------------------------------------

int run_claims(const GlobalOptions& opts, const std::string& command,
               const std::vector<std::tuple<CongruenceClaim, std::uint64_t, std::uint64_t>>& work) {
    std::vector<CheckReport> reports(work.size());
    const auto errors = parallel_errors(work.size(), opts.jobs, [&](std::size_t i) {
        const auto& [claim, n_max, j_max] = work[i];
        reports[i] = check_claim(claim, n_max, j_max, opts.order_ceiling);
    });

    bool all_ok = true;
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (!errors[i].empty()) {
            if (errors[i].find("ceiling") != std::string::npos) {
                std::cerr << "error: " << errors[i] << "\n";
                return kExitCeiling;
            }
            std::cerr << "error: " << errors[i] << "\n";
            return kExitUsage;
        }
        const CheckReport& rep = reports[i];
        all_ok = all_ok && rep.verified;
        std::cout << (rep.verified ? "[PASS] " : "[FAIL] ") << rep.claim.describe()
                  << "  (n <= " << rep.n_max;
        if (rep.claim.k_step) std::cout << ", j <= " << rep.j_max;
        std::cout << ")";
        if (rep.first_failure)
            std::cout << "  first failure: j=" << rep.first_failure->j
                      << " n=" << rep.first_failure->n
                      << " residue=" << rep.first_failure->residue;
        std::cout << "\n";
        append_ledger(opts, ledger_record(rep, command, now_timestamp()));
    }
    return all_ok ? kExitOk : kExitVerifyFailed;
}

// --- identities -----------------------------------------------------------------

int cmd_identities(const GlobalOptions& opts, const std::string& filter,
                   std::size_t order_override, const std::string& export_path) {
    const auto& registry = identity_registry();

    if (!export_path.empty()) {
        std::ofstream out(export_path);
        if (!out) {
            std::cerr << "identities: cannot open " << export_path << "\n";
            return kExitUsage;
        }
        for (const auto& e : list_registry()) {
            json j{{"id", e.id},
                   {"location", e.location},
                   {"modulus", e.modulus},
                   {"default_order", e.default_order}};
            out << j.dump() << "\n";
        }
    }

    std::vector<const IdentityRecord*> selected;
    for (const auto& r : registry)
        if (filter.empty() || glob_match(filter, r.id)) selected.push_back(&r);
    if (selected.empty()) {
        std::cerr << "identities: filter '" << filter << "' matches no registered id\n";
        return kExitUsage;
    }

    std::vector<VerifyOutcome> outcomes(selected.size());
    const auto errors = parallel_errors(selected.size(), opts.jobs, [&](std::size_t i) {
        const std::size_t order = order_override ? order_override : selected[i]->default_order;
        outcomes[i] = verify_record(*selected[i], order);
    });

    bool all_ok = true;
    for (std::size_t i = 0; i < selected.size(); ++i) {
        if (!errors[i].empty()) {
            std::cerr << "error in " << selected[i]->id << ": " << errors[i] << "\n";
            return kExitUsage;
        }
        const std::size_t order = order_override ? order_override : selected[i]->default_order;
        std::cout << (outcomes[i].ok ? "[PASS] " : "[FAIL] ") << selected[i]->id << "  ("
                  << selected[i]->location << ", "
                  << (selected[i]->modulus ? "mod " + std::to_string(selected[i]->modulus)
                                           : std::string("exact"))
                  << ", order " << order << ")";
        if (outcomes[i].first_mismatch_index)
            std::cout << "  first mismatch at q^" << *outcomes[i].first_mismatch_index;
        std::cout << "\n";
        all_ok = all_ok && outcomes[i].ok;
    }
    std::cout << (all_ok ? "identities: all " : "identities: FAILURES among ")
              << selected.size() << " record(s)\n";
    return all_ok ? kExitOk : kExitVerifyFailed;
}

// --- certify --------------------------------------------------------------------

std::vector<std::int32_t> parse_int_list(const std::string& text) {
    std::vector<std::int32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

EtaQuotient eta_from_divisor_list(std::uint64_t level, const std::vector<std::int32_t>& exps) {
    const auto divs = divisors_of(level);
    if (divs.size() != exps.size())
        throw std::invalid_argument("exponent list length " + std::to_string(exps.size()) +
                                    " does not match divisor count " +
                                    std::to_string(divs.size()));
    EtaQuotient eq;
    for (std::size_t i = 0; i < divs.size(); ++i)
        eq.exponents[static_cast<std::uint32_t>(divs[i])] = exps[i];
    return eq;
}

int cmd_certify(const GlobalOptions& opts, const std::string& row_tag,
                const std::string& tuple_spec, const std::string& r_spec,
                const std::string& rp_spec, std::uint64_t k, std::uint64_t u,
                std::string out_path) {
    RaduTuple tuple;
    CongruenceClaim claim;

    if (!row_tag.empty()) {
        const ChartRow& row = chart_row(row_tag);
        tuple = row.tuple;
        claim.k_step = 0;
        claim.k_base = row.k;
        claim.progression = Progression{tuple.m, tuple.t};
        claim.modulus = row.u;
        u = row.u;
        if (!row.note.empty()) std::cout << "note: " << row.note << "\n";
    } else {
        const auto parts = parse_int_list(tuple_spec);
        if (parts.size() != 4)
            throw std::invalid_argument("--tuple expects m,M,N,t");
        tuple.m = static_cast<std::uint64_t>(parts[0]);
        tuple.M = static_cast<std::uint64_t>(parts[1]);
        tuple.N = static_cast<std::uint64_t>(parts[2]);
        tuple.t = static_cast<std::uint64_t>(parts[3]);
        tuple.r = eta_from_divisor_list(tuple.M, parse_int_list(r_spec));
        tuple.r_prime = eta_from_divisor_list(tuple.N, parse_int_list(rp_spec));
        claim.k_step = 0;
        claim.k_base = k;
        claim.progression = Progression{tuple.m, tuple.t};
        claim.modulus = u;
    }

    const std::size_t needed = tuple.m * 128;  // rough pre-check; exact order known after nu
    if (needed > opts.order_ceiling * 8) {
        std::cerr << "certify: tuple implies orders beyond the ceiling\n";
        return kExitCeiling;
    }

    const Certificate cert = certify(tuple, claim, u);

    std::cout << "tuple: (m=" << tuple.m << ", M=" << tuple.M << ", N=" << tuple.N
              << ", t=" << tuple.t << ")\n";
    std::cout << "kappa: " << cert.kappa << "\n";
    if (cert.conditions.all()) {
        std::cout << "delta-star: all five conditions hold\n";
        std::cout << "P(t): {";
        bool first = true;
        for (std::uint64_t tp : cert.p_t_set) {
            if (!first) std::cout << ", ";
            std::cout << tp;
            first = false;
        }
        std::cout << "}\n";
        std::cout << "nu: " << cert.nu.nu.get_str() << "  floor: " << cert.nu.floor.get_str()
                  << "\n";
        std::cout << "finite checks: " << cert.finite_checks.size() << " coefficient(s)\n";
    }
    std::cout << (cert.verified ? "VERIFIED: " : "NOT VERIFIED: ") << claim.describe();
    if (!cert.verified) std::cout << "  [stage: " << cert.failure_stage << "]";
    std::cout << "\n";

    if (out_path.empty())
        out_path = "certificate-" + (row_tag.empty() ? "custom" : row_tag) + ".json";
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "certify: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    out << certificate_to_json(cert) << "\n";
    std::cout << "certificate written to " << out_path << "\n";

    json ledger{{"schema", 1},
                {"ts", now_timestamp()},
                {"command", "certify"},
                {"claim", claim.describe()},
                {"verified", cert.verified},
                {"nu_floor", cert.nu.floor.get_str()},
                {"certificate", out_path}};
    if (!cert.verified) ledger["failure_stage"] = cert.failure_stage;
    append_ledger(opts, ledger.dump());

    return cert.verified ? kExitOk : kExitVerifyFailed;
}

// --- scan -----------------------------------------------------------------------

int cmd_scan(const GlobalOptions& opts, const std::string& config_path,
             std::uint64_t default_nmax, std::uint64_t default_jmax) {
    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "scan: cannot open config " << config_path << "\n";
        return kExitUsage;
    }
    std::vector<std::tuple<CongruenceClaim, std::uint64_t, std::uint64_t>> work;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::string claim_text = line;
        std::uint64_t n_max = default_nmax, j_max = default_jmax;
        const auto at = line.find('@');
        if (at != std::string::npos) {
            claim_text = line.substr(0, at);
            std::stringstream tail(line.substr(at + 1));
            if (!(tail >> n_max)) {
                std::cerr << "scan: bad bounds on line " << line_no << "\n";
                return kExitUsage;
            }
            tail >> j_max;  // optional
        }
        try {
            work.emplace_back(parse_claim(claim_text), n_max, j_max);
        } catch (const ClaimParseError& e) {
            std::cerr << "scan: line " << line_no << ": " << e.what() << "\n";
            return kExitUsage;
        }
    }
    if (work.empty()) {
        std::cerr << "scan: no claims in config\n";
        return kExitUsage;
    }
    return run_claims(opts, "scan", work);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of k-elongated partition diamond congruences"};
    app.require_subcommand(1);

    GlobalOptions opts;
    if (const char* env = std::getenv("QDIAMOND_LEDGER")) opts.ledger_path = env;
    if (opts.ledger_path.empty()) opts.ledger_path = "qdiamond-ledger.jsonl";

    app.add_option("--order-ceiling", opts.order_ceiling, "Largest series order to allocate");
    app.add_option("--ledger", opts.ledger_path, "Append-only ledger file (JSON lines)");
    app.add_option("--jobs", opts.jobs, "Worker pool size");
    app.add_option("--format", opts.format, "Output format: summary | records")
        ->check(CLI::IsMember({"summary", "records"}));

    // expand
    auto* expand = app.add_subcommand("expand", "Print coefficients of d_k");
    std::uint64_t ex_k = 1, ex_mod = 0;
    std::size_t ex_order = 10;
    expand->add_option("-k,--k", ex_k, "Diamond index k >= 1")->required();
    expand->add_option("-N,--order", ex_order, "Number of coefficients")->required();
    expand->add_option("--mod", ex_mod, "Reduce mod this modulus");

    // verify
    auto* verify = app.add_subcommand("verify", "Check one congruence claim");
    std::string verify_claim;
    std::uint64_t verify_nmax = 20, verify_jmax = 3;
    verify->add_option("claim", verify_claim, "e.g. \"d[8j+7](4n+3) = 0 mod 8\"")->required();
    verify->add_option("--nmax", verify_nmax, "Largest n to check");
    verify->add_option("--jmax", verify_jmax, "Largest family index j to check");

    // identities
    auto* identities = app.add_subcommand("identities", "Verify the identity registry");
    std::string id_filter, id_export;
    std::size_t id_order = 0;
    identities->add_option("--filter", id_filter, "Glob over identity ids, e.g. eq-6.2*");
    identities->add_option("--order", id_order, "Override every record's default order");
    identities->add_option("--export", id_export, "Write the registry listing to a file");

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "Run the finite certification pipeline");
    std::string ct_row, ct_tuple, ct_r, ct_rp, ct_out;
    std::uint64_t ct_k = 1, ct_mod = 0;
    certify_cmd->add_option("--row", ct_row, "Chart preset tag, e.g. 6.2 or 6.14b");
    certify_cmd->add_option("--tuple", ct_tuple, "Custom tuple m,M,N,t");
    certify_cmd->add_option("--r", ct_r, "Exponents over divisors of M, e.g. 21,1,-5,0");
    certify_cmd->add_option("--rp", ct_rp, "Exponents over divisors of N");
    certify_cmd->add_option("-k,--k", ct_k, "Diamond index of the certified claim");
    certify_cmd->add_option("--mod", ct_mod, "Certified modulus u");
    certify_cmd->add_option("--out", ct_out, "Certificate output path");

    // scan
    auto* scan = app.add_subcommand("scan", "Run every claim in a config file");
    std::string scan_config;
    std::uint64_t scan_nmax = 20, scan_jmax = 3;
    scan->add_option("config", scan_config, "Config file, one claim per line")->required();
    scan->add_option("--nmax", scan_nmax, "Default largest n");
    scan->add_option("--jmax", scan_jmax, "Default largest j");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (expand->parsed()) return cmd_expand(opts, ex_k, ex_order, ex_mod);
        if (verify->parsed()) {
            CongruenceClaim claim;
            try {
                claim = parse_claim(verify_claim);
            } catch (const ClaimParseError& e) {
                std::cerr << "verify: " << e.what() << "\n";
                return kExitUsage;
            }
            return run_claims(opts, "verify", {{claim, verify_nmax, verify_jmax}});
        }
        if (identities->parsed()) return cmd_identities(opts, id_filter, id_order, id_export);
        if (certify_cmd->parsed()) {
            if (ct_row.empty() && (ct_tuple.empty() || ct_r.empty() || ct_rp.empty() ||
                                   ct_mod == 0)) {
                std::cerr << "certify: need --row, or --tuple/--r/--rp with -k and --mod\n";
                return kExitUsage;
            }
            return cmd_certify(opts, ct_row, ct_tuple, ct_r, ct_rp, ct_k, ct_mod, ct_out);
        }
        if (scan->parsed()) return cmd_scan(opts, scan_config, scan_nmax, scan_jmax);
    } catch (const std::length_error& e) {
        std::cerr << "resource ceiling: " << e.what() << "\n";
        return kExitCeiling;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
