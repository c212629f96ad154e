#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qdiamond/qfactory.hpp"
#include "qdiamond/series.hpp"

namespace qdiamond {

// Arithmetic progression A n + B with 0 <= B < A.
struct Progression {
    std::uint64_t step = 1;    // A
    std::uint64_t offset = 0;  // B
};

// One row of a congruence theorem: d_{k_step j + k_base}(A n + B) == 0
// (mod modulus) for all n >= 0 (and all j >= 0 when k_step > 0).
// k_step == 0 means a single diamond index k_base.
struct CongruenceClaim {
    std::uint64_t k_step = 0;
    std::uint64_t k_base = 1;
    Progression progression;
    std::uint64_t modulus = 2;

    std::string describe() const;
};

struct FailureWitness {
    std::uint64_t j = 0;  // family index (or auxiliary index, per check)
    std::uint64_t n = 0;
    std::uint64_t residue = 0;  // offending nonzero residue
};

struct CheckReport {
    CongruenceClaim claim;
    std::uint64_t n_max = 0;
    std::uint64_t j_max = 0;
    bool verified = false;
    std::optional<FailureWitness> first_failure;
};

inline constexpr std::size_t kDefaultOrderCeiling = 200000;

// sum d_k(n) q^n = f_2^k / f_1^{3k+1} to the given order; computed over
// Z/modulus when modulus != 0 (valid before inversion since the constant
// terms are 1), exactly otherwise.
Series dk_series(std::uint64_t k, std::size_t order, std::uint64_t modulus = 0);

// Same series by a deliberately naive independent route: f_1 and f_2 as
// literal products of (1 - q^j) factors, exponentiation by repeated
// multiplication, inversion by long division. Bounded because it is slow.
Series dk_oracle(std::uint64_t k, std::size_t order);

inline constexpr std::size_t kOracleOrderBound = 2000;

// Checks claim coefficients for n <= n_max and, for family claims,
// j <= j_max. Residue arithmetic end to end; reports the first (j, n)
// counterexample if any.
CheckReport check_claim(const CongruenceClaim& claim, std::uint64_t n_max,
                        std::uint64_t j_max,
                        std::size_t order_ceiling = kDefaultOrderCeiling);

// Smoot's refinement: every n <= n_ceiling with 8n == 1 (mod 3^k) has
// d_2(n) == 0 (mod 3^{floor(k/2)+1}), checked for 1 <= k <= k_max. The
// witness's j field carries the exponent k.
CheckReport check_smoot_refinement(std::uint32_t k_max, std::uint64_t n_ceiling);

struct ExtensionReport {
    CheckReport hypothesis;  // d_k(p^M n + r) == 0 (mod p^N)
    CheckReport conclusion;  // d_{p^{M+N-1} j + k}(p^M n + r) == 0 (mod p^N)
    bool hypothesis_holds = false;
    bool verified = false;
};

// Instance check of the family-extension theorem: verifies the hypothesis
// first and reports its failure distinctly from a conclusion failure.
ExtensionReport check_extension_theorem(std::uint64_t p, std::uint32_t M_exp,
                                        std::uint32_t N_exp, std::uint64_t k,
                                        std::uint64_t r, std::uint64_t j_max,
                                        std::uint64_t n_max);

}  // namespace qdiamond
