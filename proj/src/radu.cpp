#include "qdiamond/radu.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qdiamond {

namespace {

using json = nlohmann::json;

mpz_class to_mpz(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

// gcd with the conventions gcd(x, 0) = |x|, gcd(0, 0) = 0.
mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
    mpz_class out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

bool is_squarefree(std::uint64_t n) {
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Ordered exponent vector of an eta quotient along the divisors of level.
std::vector<std::int64_t> aligned_exponents(const EtaQuotient& eq,
                                            const std::vector<std::uint64_t>& divisors) {
    std::vector<std::int64_t> out(divisors.size(), 0);
    for (const auto& [delta, e] : eq.exponents) {
        if (e == 0) continue;
        auto it = std::find(divisors.begin(), divisors.end(), delta);
        if (it == divisors.end())
            throw std::invalid_argument("eta exponent at delta=" + std::to_string(delta) +
                                        " lies outside the divisor support");
        out[static_cast<std::size_t>(it - divisors.begin())] = e;
    }
    return out;
}

// [Gamma : Gamma_0(N)] = N prod_{ell | N prime} (1 + 1/ell), an integer.
mpz_class gamma0_index(std::uint64_t N) {
    mpz_class idx = to_mpz(N);
    for (std::uint64_t p : prime_factors(N)) {
        idx /= static_cast<unsigned long>(p);
        idx *= static_cast<unsigned long>(p + 1);
    }
    return idx;
}

mpz_class sum_r(const EtaQuotient& eq) {
    mpz_class s = 0;
    for (const auto& [delta, e] : eq.exponents) s += e;
    return s;
}

mpz_class sum_delta_r(const EtaQuotient& eq) {
    mpz_class s = 0;
    for (const auto& [delta, e] : eq.exponents) s += mpz_class(e) * to_mpz(delta);
    return s;
}

void validate_tuple(const RaduTuple& tuple) {
    if (tuple.m == 0 || tuple.M == 0 || tuple.N == 0)
        throw std::invalid_argument("RaduTuple: m, M, N must be positive");
    if (tuple.t >= tuple.m)
        throw std::invalid_argument("RaduTuple: t must lie in [0, m)");
    (void)aligned_exponents(tuple.r, divisors_of(tuple.M));
    (void)aligned_exponents(tuple.r_prime, divisors_of(tuple.N));
}

}  // namespace

std::uint64_t kappa_of(std::uint64_t m) {
    const mpz_class m2 = to_mpz(m) * to_mpz(m) - 1;
    return gcd_z(m2, 24).get_ui();
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

DeltaStarReport delta_star_check(const RaduTuple& tuple) {
    validate_tuple(tuple);
    DeltaStarReport rep;
    rep.m_odd = (tuple.m % 2) == 1;
    if (!rep.m_odd) return rep;  // structural rejection before the conditions

    const std::uint64_t kappa = kappa_of(tuple.m);

    // 1. prime divisors of m are prime divisors of N
    rep.prime_support = true;
    for (std::uint64_t p : prime_factors(tuple.m))
        if (tuple.N % p != 0) rep.prime_support = false;

    // 2. delta | M with r_delta != 0 implies delta | mN
    rep.delta_divides_mn = true;
    for (const auto& [delta, e] : tuple.r.exponents) {
        if (e == 0) continue;
        const mpz_class mn = to_mpz(tuple.m) * to_mpz(tuple.N);
        if (mn % to_mpz(delta) != 0) rep.delta_divides_mn = false;
    }

    // 3. 24 | kappa N sum_delta r_delta m N / delta   (integral by condition 2)
    {
        mpq_class s = 0;
        for (const auto& [delta, e] : tuple.r.exponents) {
            mpq_class term(mpz_class(e) * to_mpz(tuple.m) * to_mpz(tuple.N), to_mpz(delta));
            term.canonicalize();
            s += term;
        }
        s *= mpq_class(to_mpz(kappa) * to_mpz(tuple.N));
        s /= 24;
        s.canonicalize();
        rep.cond_24 = s.get_den() == 1;
    }

    // 4. 8 | kappa N sum r_delta
    {
        const mpz_class v = to_mpz(kappa) * to_mpz(tuple.N) * sum_r(tuple.r);
        rep.cond_8 = v % 8 == 0;
    }

    // 5. 24m / gcd(-24 kappa t - kappa sum delta r_delta, 24m) divides N
    {
        const mpz_class arg = -24 * to_mpz(kappa) * to_mpz(tuple.t) -
                              to_mpz(kappa) * sum_delta_r(tuple.r);
        const mpz_class g = gcd_z(arg, 24 * to_mpz(tuple.m));
        const mpz_class quot = 24 * to_mpz(tuple.m) / g;
        rep.cond_orbit = to_mpz(tuple.N) % quot == 0;
    }

    return rep;
}

std::set<std::uint64_t> p_set(const RaduTuple& tuple) {
    validate_tuple(tuple);
    const std::uint64_t m24 = 24 * tuple.m;
    const mpz_class sum_dr = sum_delta_r(tuple.r);

    std::set<std::uint64_t> out;
    // Squares of the invertible residues mod 24m, by direct enumeration.
    // Every such square is 1 mod 24, so (s - 1)/24 below is exact.
    for (std::uint64_t x = 1; x < m24; ++x) {
        if (std::gcd(x, m24) != 1) continue;
        const std::uint64_t s =
            static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * x) % m24);
        const mpz_class w = (to_mpz(s) - 1) / 24;
        mpz_class tp = to_mpz(tuple.t) * to_mpz(s) + w * sum_dr;
        mpz_class tp_mod;
        mpz_fdiv_r(tp_mod.get_mpz_t(), tp.get_mpz_t(), to_mpz(tuple.m).get_mpz_t());
        out.insert(tp_mod.get_ui());
    }
    return out;
}

std::vector<CosetRep> coset_reps(std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("coset_reps: N must be positive");
    if (!is_squarefree(N) && !(N % 2 == 0 && is_squarefree(N / 2)))
        throw UnsupportedLevelError("coset_reps: neither N nor N/2 is square-free (N = " +
                                    std::to_string(N) + ")");
    std::vector<CosetRep> out;
    for (std::uint64_t d : divisors_of(N))
        out.push_back(CosetRep{1, 0, static_cast<std::int64_t>(d), 1});
    return out;
}

mpq_class slack(const RaduTuple& tuple, const CosetRep& gamma) {
    validate_tuple(tuple);
    const std::uint64_t kappa = kappa_of(tuple.m);
    const mpz_class a = gamma.a, c = gamma.c;

    // p(gamma) = min over lambda in [0, m) of
    //   (1/24) sum_{delta | M} r_delta gcd(delta (a + kappa lambda c), m c)^2 / (delta m)
    bool have_min = false;
    mpq_class pmin;
    const mpz_class mc = to_mpz(tuple.m) * c;
    for (std::uint64_t lambda = 0; lambda < tuple.m; ++lambda) {
        mpq_class val = 0;
        const mpz_class shifted = a + to_mpz(kappa) * to_mpz(lambda) * c;
        for (const auto& [delta, e] : tuple.r.exponents) {
            if (e == 0) continue;
            const mpz_class g = gcd_z(to_mpz(delta) * shifted, mc);
            mpq_class term(mpz_class(e) * g * g, to_mpz(delta) * to_mpz(tuple.m));
            term.canonicalize();
            val += term;
        }
        val /= 24;
        val.canonicalize();
        if (!have_min || val < pmin) {
            pmin = val;
            have_min = true;
        }
    }
    if (!have_min) pmin = 0;

    // p'(gamma) = (1/24) sum_{delta | N} r'_delta gcd(delta, c)^2 / delta
    mpq_class pprime = 0;
    for (const auto& [delta, e] : tuple.r_prime.exponents) {
        if (e == 0) continue;
        const mpz_class g = gcd_z(to_mpz(delta), c);
        mpq_class term(mpz_class(e) * g * g, to_mpz(delta));
        term.canonicalize();
        pprime += term;
    }
    pprime /= 24;
    pprime.canonicalize();

    mpq_class out = pmin + pprime;
    out.canonicalize();
    return out;
}

NuBound nu_bound(const RaduTuple& tuple) {
    validate_tuple(tuple);
    const mpz_class index = gamma0_index(tuple.N);
    const std::set<std::uint64_t> orbit = p_set(tuple);
    const std::uint64_t t_min = *orbit.begin();

    mpq_class nu = mpq_class(sum_r(tuple.r) + sum_r(tuple.r_prime)) * mpq_class(index);
    nu -= mpq_class(sum_delta_r(tuple.r_prime));
    nu -= mpq_class(sum_delta_r(tuple.r), to_mpz(tuple.m));
    nu /= 24;
    nu -= mpq_class(to_mpz(t_min), to_mpz(tuple.m));
    nu.canonicalize();

    NuBound out;
    out.nu = nu;
    mpz_fdiv_q(out.floor.get_mpz_t(), nu.get_num().get_mpz_t(), nu.get_den().get_mpz_t());
    return out;
}

Certificate certify(const RaduTuple& tuple, const CongruenceClaim& claim, std::uint64_t u) {
    validate_tuple(tuple);
    if (u < 2) throw std::invalid_argument("certify: modulus u must be >= 2");

    Certificate cert;
    cert.tuple = tuple;
    cert.claim = claim;
    cert.u = u;
    cert.kappa = kappa_of(tuple.m);

    cert.conditions = delta_star_check(tuple);
    if (!cert.conditions.all()) {
        cert.failure_stage = "delta-star admissibility";
        return cert;
    }

    cert.p_t_set = p_set(tuple);

    // The claim must be one of the progressions this tuple can certify.
    if (claim.progression.step != tuple.m ||
        cert.p_t_set.find(claim.progression.offset) == cert.p_t_set.end() ||
        claim.modulus != u || claim.k_step != 0) {
        cert.failure_stage = "claim does not match the tuple's progression orbit";
        return cert;
    }

    std::vector<CosetRep> reps;
    try {
        reps = coset_reps(tuple.N);
    } catch (const UnsupportedLevelError&) {
        cert.failure_stage = "unsupported level (square-free condition)";
        return cert;
    }

    for (const CosetRep& g : reps) {
        cert.slacks.push_back(slack(tuple, g));
        if (cert.slacks.back() < 0) {
            cert.failure_stage = "negative slack at coset representative c = " +
                                 std::to_string(g.c);
            return cert;
        }
    }

    cert.nu = nu_bound(tuple);
    if (cert.nu.floor < 0) {
        cert.failure_stage = "negative nu floor";
        return cert;
    }
    const std::uint64_t nu_floor = cert.nu.floor.get_ui();

    // Congruence precondition: A = prod f_delta^{r_delta} must agree with the
    // claimed d_k series mod u far enough to cover every finite check.
    const std::size_t order = static_cast<std::size_t>(tuple.m) * (nu_floor + 1);
    cert.precondition_order = order;
    const Series a_series = eta_quotient(tuple.r, order, Ring::residues(u));
    const Series dk = dk_series(claim.k_base, order, u);
    if (first_mismatch(a_series, dk, order) >= 0) {
        cert.failure_stage = "congruence precondition (A != d_k mod u)";
        return cert;
    }

    for (std::uint64_t tp : cert.p_t_set) {
        for (std::uint64_t n = 0; n <= nu_floor; ++n) {
            // idx <= m(nu_floor + 1) - 1 < order by construction
            const std::size_t idx = static_cast<std::size_t>(tuple.m) * n + tp;
            const std::uint64_t res = a_series.residue_coeffs()[idx];
            cert.finite_checks.push_back(FiniteCheck{tp, n, res});
            if (res != 0) {
                cert.failure_stage = "finite check A(" + std::to_string(idx) + ") != 0 mod " +
                                     std::to_string(u);
                return cert;
            }
        }
    }

    cert.verified = true;
    return cert;
}

// --- serialization ------------------------------------------------------------

namespace {

json eta_to_json(const EtaQuotient& eq) {
    json out = json::object();
    for (const auto& [delta, e] : eq.exponents) out[std::to_string(delta)] = e;
    return out;
}

EtaQuotient eta_from_json(const json& j) {
    EtaQuotient eq;
    for (auto it = j.begin(); it != j.end(); ++it)
        eq.exponents[static_cast<std::uint32_t>(std::stoul(it.key()))] =
            it.value().get<std::int32_t>();
    return eq;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
    json j;
    j["schema_version"] = Certificate::kSchemaVersion;
    j["tuple"] = {{"m", cert.tuple.m}, {"M", cert.tuple.M}, {"N", cert.tuple.N},
                  {"t", cert.tuple.t}, {"r", eta_to_json(cert.tuple.r)},
                  {"r_prime", eta_to_json(cert.tuple.r_prime)}};
    j["claim"] = {{"k_step", cert.claim.k_step},
                  {"k_base", cert.claim.k_base},
                  {"step", cert.claim.progression.step},
                  {"offset", cert.claim.progression.offset},
                  {"modulus", cert.claim.modulus}};
    j["u"] = cert.u;
    j["conditions"] = {cert.conditions.prime_support, cert.conditions.delta_divides_mn,
                       cert.conditions.cond_24, cert.conditions.cond_8,
                       cert.conditions.cond_orbit};
    j["m_odd"] = cert.conditions.m_odd;
    j["kappa"] = cert.kappa;
    j["p_t_set"] = cert.p_t_set;
    json slacks = json::array();
    for (const mpq_class& s : cert.slacks)
        slacks.push_back({{"num", s.get_num().get_str()}, {"den", s.get_den().get_str()}});
    j["slacks"] = slacks;
    j["nu_num"] = cert.nu.nu.get_num().get_str();
    j["nu_den"] = cert.nu.nu.get_den().get_str();
    j["nu_floor"] = cert.nu.floor.get_str();
    j["precondition_order"] = cert.precondition_order;
    json checks = json::array();
    for (const FiniteCheck& f : cert.finite_checks)
        checks.push_back({{"t_prime", f.t_prime}, {"n", f.n}, {"residue", f.residue}});
    j["finite_checks"] = checks;
    j["verified"] = cert.verified;
    j["failure_stage"] = cert.failure_stage;
    return j.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.at("schema_version").get<int>() != Certificate::kSchemaVersion)
        throw std::invalid_argument("certificate schema version mismatch");
    Certificate cert;
    const json& jt = j.at("tuple");
    cert.tuple.m = jt.at("m").get<std::uint64_t>();
    cert.tuple.M = jt.at("M").get<std::uint64_t>();
    cert.tuple.N = jt.at("N").get<std::uint64_t>();
    cert.tuple.t = jt.at("t").get<std::uint64_t>();
    cert.tuple.r = eta_from_json(jt.at("r"));
    cert.tuple.r_prime = eta_from_json(jt.at("r_prime"));
    const json& jc = j.at("claim");
    cert.claim.k_step = jc.at("k_step").get<std::uint64_t>();
    cert.claim.k_base = jc.at("k_base").get<std::uint64_t>();
    cert.claim.progression.step = jc.at("step").get<std::uint64_t>();
    cert.claim.progression.offset = jc.at("offset").get<std::uint64_t>();
    cert.claim.modulus = jc.at("modulus").get<std::uint64_t>();
    cert.u = j.at("u").get<std::uint64_t>();
    const auto conds = j.at("conditions");
    cert.conditions.m_odd = j.at("m_odd").get<bool>();
    cert.conditions.prime_support = conds.at(0).get<bool>();
    cert.conditions.delta_divides_mn = conds.at(1).get<bool>();
    cert.conditions.cond_24 = conds.at(2).get<bool>();
    cert.conditions.cond_8 = conds.at(3).get<bool>();
    cert.conditions.cond_orbit = conds.at(4).get<bool>();
    cert.kappa = j.at("kappa").get<std::uint64_t>();
    for (const auto& v : j.at("p_t_set")) cert.p_t_set.insert(v.get<std::uint64_t>());
    for (const auto& v : j.at("slacks")) {
        mpq_class s(mpz_class(v.at("num").get<std::string>()),
                    mpz_class(v.at("den").get<std::string>()));
        s.canonicalize();
        cert.slacks.push_back(s);
    }
    cert.nu.nu = mpq_class(mpz_class(j.at("nu_num").get<std::string>()),
                           mpz_class(j.at("nu_den").get<std::string>()));
    cert.nu.nu.canonicalize();
    cert.nu.floor = mpz_class(j.at("nu_floor").get<std::string>());
    cert.precondition_order = j.at("precondition_order").get<std::size_t>();
    for (const auto& v : j.at("finite_checks"))
        cert.finite_checks.push_back(FiniteCheck{v.at("t_prime").get<std::uint64_t>(),
                                                 v.at("n").get<std::uint64_t>(),
                                                 v.at("residue").get<std::uint64_t>()});
    cert.verified = j.at("verified").get<bool>();
    cert.failure_stage = j.at("failure_stage").get<std::string>();
    return cert;
}

bool revalidate_certificate(const Certificate& cert) {
    const Certificate fresh = certify(cert.tuple, cert.claim, cert.u);
    if (fresh.verified != cert.verified) return false;
    if (fresh.kappa != cert.kappa) return false;
    if (fresh.p_t_set != cert.p_t_set) return false;
    if (fresh.slacks.size() != cert.slacks.size()) return false;
    for (std::size_t i = 0; i < fresh.slacks.size(); ++i)
        if (fresh.slacks[i] != cert.slacks[i]) return false;
    if (fresh.nu.nu != cert.nu.nu || fresh.nu.floor != cert.nu.floor) return false;
    if (fresh.precondition_order != cert.precondition_order) return false;
    if (fresh.finite_checks.size() != cert.finite_checks.size()) return false;
    for (std::size_t i = 0; i < fresh.finite_checks.size(); ++i) {
        const FiniteCheck &x = fresh.finite_checks[i], &y = cert.finite_checks[i];
        if (x.t_prime != y.t_prime || x.n != y.n || x.residue != y.residue) return false;
    }
    return true;
}

}  // namespace qdiamond
