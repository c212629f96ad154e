#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qdiamond/diamonds.hpp"
#include "qdiamond/qfactory.hpp"

namespace qdiamond {

/**
 * The finite verification machinery that upgrades a desk-scale congruence
 * check into a certificate valid for all n: admissibility conditions for
 * the tuple (m, M, N, t, (r_delta)), the orbit P(t), double-coset
 * representatives, the lower-bound functions p, p', and the nu threshold.
 * Everything here is exact big-integer / big-rational arithmetic; floating
 * point is banned in this module.
 */
struct RaduTuple {
    std::uint64_t m = 1;  // odd
    std::uint64_t M = 1;
    std::uint64_t N = 1;
    std::uint64_t t = 0;  // 0 <= t < m
    EtaQuotient r;        // support in divisors of M
    EtaQuotient r_prime;  // support in divisors of N
};

// kappa = gcd(m^2 - 1, 24).
std::uint64_t kappa_of(std::uint64_t m);

std::vector<std::uint64_t> divisors_of(std::uint64_t n);

struct DeltaStarReport {
    bool m_odd = false;             // structural: 2 does not divide m
    bool prime_support = false;     // condition 1
    bool delta_divides_mn = false;  // condition 2
    bool cond_24 = false;           // condition 3
    bool cond_8 = false;            // condition 4
    bool cond_orbit = false;        // condition 5

    bool all() const {
        return m_odd && prime_support && delta_divides_mn && cond_24 && cond_8 && cond_orbit;
    }
};

// Evaluates the five admissibility conditions (plus the structural oddness
// requirement on m) by exact integer arithmetic.
DeltaStarReport delta_star_check(const RaduTuple& tuple);

// P(t): the orbit of t under t' = t s + (s-1)/24 * sum(delta r_delta) mod m,
// with s ranging over the squares of the invertible residues mod 24m (each
// such square is 1 mod 24, so the division is exact).
std::set<std::uint64_t> p_set(const RaduTuple& tuple);

struct CosetRep {
    std::int64_t a = 1, b = 0, c = 0, d = 1;  // det = 1
};

// One representative (1 0; delta 1) per divisor delta of N. Requires N or
// N/2 square-free; anything else is an unsupported level.
std::vector<CosetRep> coset_reps(std::uint64_t N);

struct UnsupportedLevelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// p(gamma) + p'(gamma) as an exact rational; a certificate requires this to
// be nonnegative for every representative.
mpq_class slack(const RaduTuple& tuple, const CosetRep& gamma);

struct NuBound {
    mpq_class nu;
    mpz_class floor;
};

NuBound nu_bound(const RaduTuple& tuple);

struct FiniteCheck {
    std::uint64_t t_prime = 0;
    std::uint64_t n = 0;
    std::uint64_t residue = 0;  // must be 0 in a verified certificate
};

// Transcript of a completed (or failed) certification run.
struct Certificate {
    static constexpr int kSchemaVersion = 1;

    RaduTuple tuple;
    CongruenceClaim claim;
    std::uint64_t u = 0;  // certified modulus
    DeltaStarReport conditions;
    std::uint64_t kappa = 0;
    std::set<std::uint64_t> p_t_set;
    std::vector<mpq_class> slacks;       // one per coset representative
    NuBound nu;
    std::size_t precondition_order = 0;  // order of the A == d_k bridge check
    std::vector<FiniteCheck> finite_checks;
    bool verified = false;
    std::string failure_stage;  // empty when verified
};

// Runs the full pipeline for the tuple's eta quotient A = prod f_delta^{r_delta}:
// admissibility, coset representatives, slack nonnegativity, nu, the
// congruence precondition A == d_{claim.k_base} (mod u) to order m(floor(nu)+1),
// and the finite coefficient checks A(m n + t') == 0 (mod u) for every
// t' in P(t) and 0 <= n <= floor(nu). verified=true certifies the claim for
// all n; any hypothesis failure names its stage instead of throwing.
Certificate certify(const RaduTuple& tuple, const CongruenceClaim& claim, std::uint64_t u);

// --- certificate files -------------------------------------------------------

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

// Re-runs the pipeline from the loaded tuple/claim and compares every
// recorded field; the transcript must reproduce bit-for-bit.
bool revalidate_certificate(const Certificate& cert);

// --- chart presets -----------------------------------------------------------

// A certification preset: the tuple, the congruence it certifies, and the
// published P(t) / floor(nu) golden values where the row comes from the
// source chart.
struct ChartRow {
    std::string tag;         // addressable id, e.g. "6.2", "6.14b"
    std::uint64_t k = 1;     // diamond index of the certified claim
    std::uint64_t u = 2;     // congruence modulus
    RaduTuple tuple;
    std::set<std::uint64_t> printed_p_set;
    std::int64_t printed_nu_floor = 0;
    std::uint64_t printed_t = 0;  // t as printed (may disagree with tuple.t; see note)
    std::string note;
};

const std::vector<ChartRow>& radu_chart();
const ChartRow& chart_row(const std::string& tag);

}  // namespace qdiamond
