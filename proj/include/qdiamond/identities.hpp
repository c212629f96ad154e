#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qdiamond/qfactory.hpp"
#include "qdiamond/series.hpp"

namespace qdiamond {

/**
 * Identity recipes are data, not code: each side of a registered identity is
 * an expression tree over the series/qfactory operations, so the registry is
 * auditable and the CLI can print any identity's construction.
 */
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    enum class Kind {
        Constant,       // integer constant series
        Eta,            // prod f_delta^{r_delta}
        BorweinA,       // a(q)
        RogersRamanujan,  // R(q) as the classical product
        JacobiCubeSum,  // sum side of f_1^3
        TriangularSum,  // sum side of f_2^2/f_1
        PentagonalThetaSum,  // sum side of f_2^5/f_1^2
        SparseProduct,  // (q^a; q^b)_inf
        PAlphaBeta,     // P_{alpha,beta}
        Dk,             // f_2^k / f_1^{3k+1}
        Scale,          // c * child
        Shift,          // q^j * child
        Sum,
        Product,
        Power,          // child^e, negative e inverts
        Inflate,        // q -> q^m
        Extract,        // part r of the m-dissection
    };

    Kind kind() const { return kind_; }
    const mpz_class& constant_value() const { return const_value_; }
    const EtaQuotient& eta() const { return eta_; }
    std::int64_t exponent() const { return i0_; }
    std::uint64_t param0() const { return u0_; }  // a / alpha / m / j / k
    std::int64_t param1() const { return i0_; }   // b / beta / r / e
    const std::vector<ExprPtr>& children() const { return children_; }

    static ExprPtr constant(mpz_class v);
    static ExprPtr eta(EtaQuotient eq);
    static ExprPtr borwein_a();
    static ExprPtr rogers_ramanujan();
    static ExprPtr jacobi_cube_sum();
    static ExprPtr triangular_sum();
    static ExprPtr pentagonal_theta_sum();
    static ExprPtr sparse_product(std::uint64_t a, std::uint64_t b);
    static ExprPtr p_alpha_beta(std::uint32_t alpha, std::int32_t beta);
    static ExprPtr dk(std::uint64_t k);
    static ExprPtr scale(mpz_class c, ExprPtr child);
    static ExprPtr shift(std::uint64_t j, ExprPtr child);
    static ExprPtr sum(std::vector<ExprPtr> children);
    static ExprPtr product(std::vector<ExprPtr> children);
    static ExprPtr pow(ExprPtr child, std::int64_t e);
    static ExprPtr inflate(std::uint64_t m, ExprPtr child);
    static ExprPtr extract(std::uint64_t m, std::uint64_t r, ExprPtr child);

private:
    Expr() = default;
    struct NodeInit;
    static ExprPtr make(NodeInit init);

    Kind kind_ = Kind::Constant;
    mpz_class const_value_;
    EtaQuotient eta_;
    std::uint64_t u0_ = 0;
    std::int64_t i0_ = 0;
    std::vector<ExprPtr> children_;
};

// Evaluate a recipe to the given order over the given ring.
Series eval(const ExprPtr& expr, std::size_t order, const Ring& ring);

// Human-readable rendering of a recipe, for registry export and audits.
std::string to_string(const ExprPtr& expr);

// --- identity registry -------------------------------------------------------

struct IdentityRecord {
    std::string id;        // unique tag, e.g. "eq-2.1"
    std::string location;  // where the display lives in the source material
    std::uint64_t modulus = 0;  // 0: compare over Z; else compare in Z/mZ
    std::size_t default_order = 200;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct VerifyOutcome {
    bool ok = false;
    std::optional<std::size_t> first_mismatch_index;
};

// The full registry, ordered by id; built once, immutable afterwards.
const std::vector<IdentityRecord>& identity_registry();

// Verify one record at the given order (its registered modulus applies).
// modulus_override replaces the comparison modulus; it must divide the
// registered modulus (reduction-consistency checks use this).
VerifyOutcome verify_record(const IdentityRecord& record, std::size_t order,
                            std::uint64_t modulus_override = 0);

// Lookup + verify by id; throws std::out_of_range for an unknown id.
VerifyOutcome verify_identity(const std::string& id, std::size_t order);

const IdentityRecord& find_identity(const std::string& id);

struct RegistryEntry {
    std::string id;
    std::string location;
    std::uint64_t modulus;
    std::size_t default_order;
};

// Deterministic (id-ordered) listing for documentation and CLI export.
std::vector<RegistryEntry> list_registry();

// --- exact binomial generating functions -------------------------------------

// The five closed-form families with double binomial sums and eta-quotient
// weights.
enum class GenFunFamily {
    D4J3_4N2,    // d_{4j+3}(4n+2)
    D4J3_4N3,    // d_{4j+3}(4n+3)
    D8J7_4N2,    // d_{8j+7}(4n+2)
    D8J7_4N3,    // d_{8j+7}(4n+3)
    D16J15_4N3,  // d_{16j+15}(4n+3), separated form
};

// Evaluates the closed form over exact integers. For D16J15_4N3 the
// separated display's third sum is evaluated in its corrected reading (see
// d16j15_reading_report for the printed one).
Series exact_genfun(GenFunFamily family, std::uint64_t j, std::size_t order,
                    std::size_t order_ceiling = 200000);

// The extraction route: sum d_k(A n + B) q^n via dk_series + dissection,
// over exact integers.
Series genfun_extraction(GenFunFamily family, std::uint64_t j, std::size_t order);

// Both readings of the separated d_{16j+15}(4n+3) display's third sum,
// compared against the extraction route.
struct D16J15ReadingReport {
    std::uint64_t j = 0;
    std::size_t order = 0;
    bool corrected_matches = false;  // column weights C(24j+23,4k+7) + (26j+25) C(24j+23,4k+5)
    bool printed_matches = false;    // printed binomials read with m := k
};

D16J15ReadingReport d16j15_reading_report(std::uint64_t j, std::size_t order);

}  // namespace qdiamond
