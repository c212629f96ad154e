#include "qdiamond/diamonds.hpp"

#include <limits>
#include <stdexcept>

namespace qdiamond {

namespace {

// Literal Euler product prod_{j>=1} (1 - q^{nj}) by in-place sparse factors.
// Shares no code with pochhammer_f (which fills pentagonal exponents).
std::vector<mpz_class> literal_euler(std::uint64_t n, std::size_t order) {
    std::vector<mpz_class> buf(order);
    buf[0] = 1;
    for (std::uint64_t e = n; e < order; e += n)
        for (std::size_t i = order; i-- > e;) buf[i] -= buf[i - e];
    return buf;
}

std::vector<mpz_class> naive_mul(const std::vector<mpz_class>& a,
                                 const std::vector<mpz_class>& b, std::size_t n) {
    std::vector<mpz_class> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n && j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// num / den by long division; den[0] must be +-1.
std::vector<mpz_class> long_division(const std::vector<mpz_class>& num,
                                     const std::vector<mpz_class>& den, std::size_t n) {
    if (den[0] != 1 && den[0] != -1)
        throw std::domain_error("long_division: constant term is not a unit in Z");
    std::vector<mpz_class> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class acc = i < num.size() ? num[i] : mpz_class(0);
        for (std::size_t j = 1; j <= i && j < den.size(); ++j) acc -= den[j] * out[i - j];
        out[i] = den[0] == 1 ? acc : -acc;
    }
    return out;
}

}  // namespace

std::string CongruenceClaim::describe() const {
    std::string k_part = k_step == 0 ? std::to_string(k_base)
                                     : std::to_string(k_step) + "j+" + std::to_string(k_base);
    return "d[" + k_part + "](" + std::to_string(progression.step) + "n+" +
           std::to_string(progression.offset) + ") = 0 mod " + std::to_string(modulus);
}

Series dk_series(std::uint64_t k, std::size_t order, std::uint64_t modulus) {
    if (k == 0) throw std::invalid_argument("dk_series: k must be >= 1");
    if (order == 0) throw std::invalid_argument("dk_series: order must be >= 1");
    const Ring ring = modulus == 0 ? Ring::integers() : Ring::residues(modulus);
    EtaQuotient eq;
    eq.exponents[2] = static_cast<std::int32_t>(k);
    eq.exponents[1] = -static_cast<std::int32_t>(3 * k + 1);
    if (3 * k + 1 > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
        throw std::invalid_argument("dk_series: k too large");
    return eta_quotient(eq, order, ring);
}

Series dk_oracle(std::uint64_t k, std::size_t order) {
    if (k == 0) throw std::invalid_argument("dk_oracle: k must be >= 1");
    if (order == 0 || order > kOracleOrderBound)
        throw std::invalid_argument("dk_oracle: order outside the naive bound");
    const std::vector<mpz_class> f1 = literal_euler(1, order);
    const std::vector<mpz_class> f2 = literal_euler(2, order);
    std::vector<mpz_class> num(order);
    num[0] = 1;
    for (std::uint64_t i = 0; i < k; ++i) num = naive_mul(num, f2, order);
    std::vector<mpz_class> den(order);
    den[0] = 1;
    for (std::uint64_t i = 0; i < 3 * k + 1; ++i) den = naive_mul(den, f1, order);
    return Series::from_exact(long_division(num, den, order));
}

CheckReport check_claim(const CongruenceClaim& claim, std::uint64_t n_max,
                        std::uint64_t j_max, std::size_t order_ceiling) {
    const std::uint64_t A = claim.progression.step;
    const std::uint64_t B = claim.progression.offset;
    if (A == 0 || B >= A) throw std::invalid_argument("check_claim: need 0 <= B < A");
    if (claim.modulus < 2) throw std::invalid_argument("check_claim: modulus must be >= 2");
    if (claim.k_step == 0 && claim.k_base == 0)
        throw std::invalid_argument("check_claim: k must be >= 1");

    CheckReport report;
    report.claim = claim;
    report.n_max = n_max;
    report.j_max = claim.k_step == 0 ? 0 : j_max;
    report.verified = true;

    const std::size_t order = static_cast<std::size_t>(A) * n_max + B + 1;
    if (order > order_ceiling)
        throw std::length_error("check_claim: required order " + std::to_string(order) +
                                " exceeds ceiling " + std::to_string(order_ceiling));

    const std::uint64_t j_hi = claim.k_step == 0 ? 0 : j_max;
    for (std::uint64_t j = 0; j <= j_hi; ++j) {
        const std::uint64_t k = claim.k_step * j + claim.k_base;
        const Series dk = dk_series(k, order, claim.modulus);
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            const std::uint64_t res = dk.residue_coeffs()[A * n + B];
            if (res != 0) {
                report.verified = false;
                report.first_failure = FailureWitness{j, n, res};
                return report;
            }
        }
    }
    return report;
}

CheckReport check_smoot_refinement(std::uint32_t k_max, std::uint64_t n_ceiling) {
    if (k_max == 0) throw std::invalid_argument("check_smoot_refinement: k_max must be >= 1");
    // Largest modulus needed is 3^{floor(k_max/2)+1}; residues for smaller k
    // follow by reduction since each smaller power divides it.
    std::uint64_t top_modulus = 1;
    for (std::uint32_t i = 0; i < k_max / 2 + 1; ++i) top_modulus *= 3;

    CheckReport report;
    report.claim.k_step = 0;
    report.claim.k_base = 2;
    report.claim.progression = Progression{1, 0};
    report.claim.modulus = top_modulus;
    report.n_max = n_ceiling;
    report.j_max = k_max;
    report.verified = true;

    const Series d2 = dk_series(2, static_cast<std::size_t>(n_ceiling) + 1, top_modulus);

    std::uint64_t pk = 1;  // 3^k
    for (std::uint32_t k = 1; k <= k_max; ++k) {
        pk *= 3;
        std::uint64_t target = 1;  // 3^{floor(k/2)+1}
        for (std::uint32_t i = 0; i < k / 2 + 1; ++i) target *= 3;
        for (std::uint64_t n = 0; n <= n_ceiling; ++n) {
            if ((8 * n) % pk != 1 % pk) continue;
            const std::uint64_t res = d2.residue_coeffs()[n] % target;
            if (res != 0) {
                report.verified = false;
                report.first_failure = FailureWitness{k, n, res};
                return report;
            }
        }
    }
    return report;
}

ExtensionReport check_extension_theorem(std::uint64_t p, std::uint32_t M_exp,
                                        std::uint32_t N_exp, std::uint64_t k,
                                        std::uint64_t r, std::uint64_t j_max,
                                        std::uint64_t n_max) {
    if (p < 2) throw std::invalid_argument("check_extension_theorem: p must be prime >= 2");
    std::uint64_t pM = 1;
    for (std::uint32_t i = 0; i < M_exp; ++i) pM *= p;
    std::uint64_t pN = 1;
    for (std::uint32_t i = 0; i < N_exp; ++i) pN *= p;
    if (r < 1 || r > pM - 1)
        throw std::invalid_argument("check_extension_theorem: need 1 <= r <= p^M - 1");

    std::uint64_t k_step = 1;  // p^{M+N-1}
    for (std::uint32_t i = 0; i + 1 < M_exp + N_exp; ++i) k_step *= p;

    ExtensionReport out;
    CongruenceClaim hyp;
    hyp.k_step = 0;
    hyp.k_base = k;
    hyp.progression = Progression{pM, r};
    hyp.modulus = pN;
    out.hypothesis = check_claim(hyp, n_max, 0);
    out.hypothesis_holds = out.hypothesis.verified;
    if (!out.hypothesis_holds) {
        out.conclusion.claim = hyp;
        out.conclusion.claim.k_step = k_step;
        out.verified = false;
        return out;
    }

    CongruenceClaim conc = hyp;
    conc.k_step = k_step;
    out.conclusion = check_claim(conc, n_max, j_max);
    out.verified = out.conclusion.verified;
    return out;
}

}  // namespace qdiamond
