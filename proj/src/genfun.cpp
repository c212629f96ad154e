#include <limits>
#include <stdexcept>
#include <vector>

#include "qdiamond/diamonds.hpp"
#include "qdiamond/identities.hpp"

// Closed-form generating functions for the extracted progressions
// d_{4j+3}(4n+2), d_{4j+3}(4n+3), d_{8j+7}(4n+2), d_{8j+7}(4n+3), and
// d_{16j+15}(4n+3): double binomial sums whose terms are eta quotients in
// f1, f2, f4, f8 with exponents linear in the summation indices. Each sum
// factors through a geometric step series, so terms are accumulated by one
// running power per index instead of a fresh eta quotient per term.

namespace qdiamond {

namespace {

mpz_class binom(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

std::int32_t checked_exp(std::int64_t e) {
    if (e > std::numeric_limits<std::int32_t>::max() ||
        e < std::numeric_limits<std::int32_t>::min())
        throw std::length_error("exact_genfun: eta exponent out of range (j too large)");
    return static_cast<std::int32_t>(e);
}

EtaQuotient eta4(std::int64_t e1, std::int64_t e2, std::int64_t e4, std::int64_t e8 = 0) {
    EtaQuotient eq;
    if (e1) eq.exponents[1] = checked_exp(e1);
    if (e2) eq.exponents[2] = checked_exp(e2);
    if (e4) eq.exponents[4] = checked_exp(e4);
    if (e8) eq.exponents[8] = checked_exp(e8);
    return eq;
}

// sum_i weights[i] * step^i, by one running multiplication per index.
Series weighted_geometric(const Series& step, const std::vector<mpz_class>& weights,
                          std::size_t order) {
    Series acc = Series::zero(step.ring(), order);
    Series cur = Series::one(step.ring(), order);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i > 0) cur = mul(cur, step);
        if (weights[i] != 0) acc = add(acc, scale(weights[i], cur));
    }
    return acc;
}

// q * f1^8 f4^16 / f2^24 — the common per-index step of all five families.
Series k_step_series(std::size_t order) {
    return shift(truncate(eta_quotient(eta4(8, -24, 16), order), order > 1 ? order - 1 : 1), 1);
}

// q * f2^4 f8^8 / f4^12 — the m-direction step of the d_{4j+3} families.
Series m_step_series(std::size_t order) {
    return shift(truncate(eta_quotient(eta4(0, 4, -12, 8), order), order > 1 ? order - 1 : 1), 1);
}

mpz_class pow2(std::uint64_t e) {
    mpz_class out = 1;
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), e);
    return out;
}

struct D4Piece {
    std::int64_t e1, e2, e4, e8;  // base eta exponents at k = m = 0
    std::uint64_t k_hi, m_hi;     // inclusive upper bounds
    std::uint64_t k_off, m_off;   // binomial lower-index offsets 4k+k_off, 2m+m_off
    mpz_class outer;              // scalar folded into the piece
};

Series eval_d4_piece(const D4Piece& p, std::uint64_t top_k, std::uint64_t top_m,
                     std::size_t order) {
    std::vector<mpz_class> wk(p.k_hi + 1), wm(p.m_hi + 1);
    for (std::uint64_t k = 0; k <= p.k_hi; ++k)
        wk[k] = pow2(4 * k) * binom(top_k, static_cast<std::int64_t>(4 * k + p.k_off));
    for (std::uint64_t m = 0; m <= p.m_hi; ++m)
        wm[m] = pow2(2 * m) * binom(top_m, static_cast<std::int64_t>(2 * m + p.m_off));
    const Series base = eta_quotient(eta4(p.e1, p.e2, p.e4, p.e8), order);
    const Series ks = weighted_geometric(k_step_series(order), wk, order);
    const Series ms = weighted_geometric(m_step_series(order), wm, order);
    return scale(p.outer, mul(base, mul(ks, ms)));
}

// Readings of the separated d_{16j+15}(4n+3) display's third sum.
enum class ThirdSumReading { Corrected, AsPrinted };

Series eval_d16j15(std::uint64_t j, std::size_t order, ThirdSumReading reading) {
    const std::uint64_t b24 = 24 * j + 23, b26 = 26 * j + 25;
    const std::int64_t J = static_cast<std::int64_t>(j);
    const Series w = k_step_series(order);

    // isolated (k,m) = (0,0) term
    const mpz_class c0 = 3 * mpz_class(b24) * mpz_class(16 * j + 17) * mpz_class(j + 1);
    Series out = scale(c0, eta_quotient(eta4(-(364 * J + 344), 484 * J + 447,
                                             -(152 * J + 134)),
                                        order));

    // k = 0 column over m >= 1
    std::vector<mpz_class> w2(13 * j + 12);
    for (std::uint64_t m = 0; m <= 13 * j + 11; ++m)
        w2[m] = pow2(4 * m) * (binom(b24, 3) * binom(b26, static_cast<std::int64_t>(2 * m + 2)) +
                               mpz_class(b24) * binom(b26, static_cast<std::int64_t>(2 * m + 3)));

    // m = 0 column over k >= 1
    std::vector<mpz_class> w3(6 * j + 5);
    for (std::uint64_t k = 0; k <= 6 * j + 4; ++k) {
        mpz_class v;
        if (reading == ThirdSumReading::Corrected) {
            v = binom(b24, static_cast<std::int64_t>(4 * k + 7)) +
                mpz_class(b26) * binom(b24, static_cast<std::int64_t>(4 * k + 5));
        } else {
            v = binom(b24, 3) * binom(b26, static_cast<std::int64_t>(2 * k + 2)) +
                mpz_class(b24) * binom(b26, static_cast<std::int64_t>(2 * k + 3));
        }
        w3[k] = pow2(4 * k) * v;
    }

    const Series x0 = eta_quotient(eta4(-(364 * J + 336), 484 * J + 423,
                                        -(152 * J + 118)),
                                   order);
    Series cols = add(weighted_geometric(w, w2, order), weighted_geometric(w, w3, order));
    out = add(out, scale(8, shift(mul(x0, cols), 1)));

    // interior k >= 1, m >= 1 block, grouped by s = k + m
    std::vector<mpz_class> w4(6 * j + 5 + 13 * j + 12 - 1);
    for (std::uint64_t k = 0; k <= 6 * j + 4; ++k)
        for (std::uint64_t m = 0; m <= 13 * j + 11; ++m)
            w4[k + m] +=
                pow2(4 * (k + m)) *
                (binom(b24, static_cast<std::int64_t>(4 * k + 7)) *
                     binom(b26, static_cast<std::int64_t>(2 * m + 2)) +
                 binom(b24, static_cast<std::int64_t>(4 * k + 5)) *
                     binom(b26, static_cast<std::int64_t>(2 * m + 3)));
    const Series y0 = eta_quotient(eta4(-(364 * J + 328), 484 * J + 399,
                                        -(152 * J + 102)),
                                   order);
    out = add(out, scale(128, shift(mul(y0, weighted_geometric(w, w4, order)), 2)));

    return scale(16, truncate(out, order));
}

// The d_{8j+7} families share exponents depending on k + m only.
Series eval_d8j7(std::uint64_t j, std::size_t order, bool is_4n3) {
    const std::uint64_t t12 = 12 * j + 11, t13 = 13 * j + 12;
    const std::int64_t J = static_cast<std::int64_t>(j);
    const std::uint64_t k_hi = 3 * j + 2;

    std::vector<mpz_class> w(k_hi + (13 * j + 12) / 2 + 1);
    if (is_4n3) {
        const std::uint64_t m_hi = (13 * j + 12) / 2;
        for (std::uint64_t k = 0; k <= k_hi; ++k)
            for (std::uint64_t m = 0; m <= m_hi; ++m)
                w[k + m] += pow2(4 * (k + m)) *
                            (binom(t12, static_cast<std::int64_t>(4 * k + 1)) *
                                 binom(t13, static_cast<std::int64_t>(2 * m + 1)) +
                             binom(t12, static_cast<std::int64_t>(4 * k + 3)) *
                                 binom(t13, static_cast<std::int64_t>(2 * m)));
    } else {
        const std::uint64_t m_hi_a = (13 * j + 12) / 2;
        const std::uint64_t m_hi_b = (13 * j + 11) / 2;
        for (std::uint64_t k = 0; k <= k_hi; ++k) {
            for (std::uint64_t m = 0; m <= m_hi_a; ++m)
                w[k + m] += pow2(4 * (k + m)) *
                            binom(t12, static_cast<std::int64_t>(4 * k)) *
                            binom(t13, static_cast<std::int64_t>(2 * m + 1));
            for (std::uint64_t m = 0; m <= m_hi_b; ++m)
                w[k + m] += pow2(4 * (k + m)) *
                            binom(t12, static_cast<std::int64_t>(4 * k + 2)) *
                            binom(t13, static_cast<std::int64_t>(2 * m));
        }
    }

    const Series base = is_4n3
                            ? eta_quotient(eta4(-(182 * J + 162), 242 * J + 205,
                                                -(76 * J + 58)),
                                           order)
                            : eta_quotient(eta4(-(182 * J + 164), 242 * J + 211,
                                                -(76 * J + 62)),
                                           order);
    Series out = mul(base, weighted_geometric(k_step_series(order), w, order));
    return scale(is_4n3 ? 8 : 4, out);
}

Series eval_d4j3(std::uint64_t j, std::size_t order, bool is_4n3) {
    const std::uint64_t top_k = 6 * j + 5, top_m = 13 * j + 11;
    const std::int64_t J = static_cast<std::int64_t>(j);
    D4Piece a, b;
    if (is_4n3) {
        a = D4Piece{-(65 * J + 49), 30 * J + 7, 53 * J + 57, -(26 * J + 22),
                    (3 * j + 1) / 2, (13 * j + 11) / 2, 3, 0, mpz_class(2)};
        b = D4Piece{-(65 * J + 53), 30 * J + 21, 53 * J + 43, -(26 * J + 18),
                    (3 * j + 2) / 2, (13 * j + 10) / 2, 1, 1, mpz_class(1)};
    } else {
        a = D4Piece{-(65 * J + 55), 30 * J + 27, 53 * J + 39, -(26 * J + 18),
                    (3 * j + 2) / 2, (13 * j + 10) / 2, 0, 1, mpz_class(1)};
        b = D4Piece{-(65 * J + 51), 30 * J + 13, 53 * J + 53, -(26 * J + 22),
                    (3 * j + 1) / 2, (13 * j + 11) / 2, 2, 0, mpz_class(2)};
    }
    Series out = add(eval_d4_piece(a, top_k, top_m, order),
                     eval_d4_piece(b, top_k, top_m, order));
    return scale(is_4n3 ? 4 : 2, out);
}

struct FamilyTarget {
    std::uint64_t k_step, k_base;  // diamond index k_step j + k_base
    std::uint64_t residue;         // progression 4n + residue
};

FamilyTarget target_of(GenFunFamily family) {
    switch (family) {
        case GenFunFamily::D4J3_4N2: return {4, 3, 2};
        case GenFunFamily::D4J3_4N3: return {4, 3, 3};
        case GenFunFamily::D8J7_4N2: return {8, 7, 2};
        case GenFunFamily::D8J7_4N3: return {8, 7, 3};
        case GenFunFamily::D16J15_4N3: return {16, 15, 3};
    }
    throw std::logic_error("unknown generating-function family");
}

}  // namespace

Series exact_genfun(GenFunFamily family, std::uint64_t j, std::size_t order,
                    std::size_t order_ceiling) {
    if (order == 0) throw std::invalid_argument("exact_genfun: order must be >= 1");
    if (order > order_ceiling)
        throw std::length_error("exact_genfun: order exceeds the configured ceiling");
    switch (family) {
        case GenFunFamily::D4J3_4N2: return eval_d4j3(j, order, false);
        case GenFunFamily::D4J3_4N3: return eval_d4j3(j, order, true);
        case GenFunFamily::D8J7_4N2: return eval_d8j7(j, order, false);
        case GenFunFamily::D8J7_4N3: return eval_d8j7(j, order, true);
        case GenFunFamily::D16J15_4N3:
            return eval_d16j15(j, order, ThirdSumReading::Corrected);
    }
    throw std::logic_error("unknown generating-function family");
}

Series genfun_extraction(GenFunFamily family, std::uint64_t j, std::size_t order) {
    const FamilyTarget t = target_of(family);
    const std::uint64_t k = t.k_step * j + t.k_base;
    const std::size_t source_order = 4 * (order - 1) + t.residue + 1;
    const Series dk = dk_series(k, source_order);
    return truncate(dissect(dk, 4).parts[t.residue], order);
}

D16J15ReadingReport d16j15_reading_report(std::uint64_t j, std::size_t order) {
    D16J15ReadingReport report;
    report.j = j;
    report.order = order;
    const Series truth = genfun_extraction(GenFunFamily::D16J15_4N3, j, order);
    const Series corrected = eval_d16j15(j, order, ThirdSumReading::Corrected);
    const Series printed = eval_d16j15(j, order, ThirdSumReading::AsPrinted);
    report.corrected_matches = equal_to_order(truth, corrected, order);
    report.printed_matches = equal_to_order(truth, printed, order);
    return report;
}

}  // namespace qdiamond
