#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdiamond/ring.hpp"

namespace qdiamond {

/**
 * Truncated formal power series: the coefficients c_0 .. c_{order-1} of a
 * series known modulo q^order, over an exact-integer or residue ring.
 *
 * Exact coefficients are arbitrary precision (mpz). Residue coefficients are
 * stored as canonical uint64 representatives in [0, modulus) and every
 * operation reduces eagerly, so convolutions stay in machine words.
 *
 * Values are immutable after construction; operations return fresh series,
 * so sharing across threads is safe.
 */
class Series {
public:
    // Zero series of the given order (order >= 1).
    static Series zero(const Ring& ring, std::size_t order);
    // Constant series 1 of the given order.
    static Series one(const Ring& ring, std::size_t order);

    const Ring& ring() const { return ring_; }
    std::size_t order() const {
        return ring_.is_exact() ? exact_.size() : residue_.size();
    }

    // Coefficient as an integer regardless of ring (residues come back in
    // canonical range). Index must be < order().
    mpz_class coeff(std::size_t i) const;

    // Signed convenience accessor; throws if the value does not fit a long.
    long coeff_si(std::size_t i) const;

    bool is_zero() const;

    bool operator==(const Series&) const = default;

    // Raw storage, for kernels and iteration. Exactly one is populated.
    const std::vector<mpz_class>& exact_coeffs() const { return exact_; }
    const std::vector<std::uint64_t>& residue_coeffs() const { return residue_; }

    // Internal constructors used by the operation kernels.
    static Series from_exact(std::vector<mpz_class> coeffs);
    static Series from_residue(const Ring& ring, std::vector<std::uint64_t> coeffs);

private:
    explicit Series(const Ring& ring) : ring_(ring) {}

    Ring ring_;
    std::vector<mpz_class> exact_;
    std::vector<std::uint64_t> residue_;
};

// An m-dissection of a series: parts[r] holds sum_n c_{mn+r} q^n.
struct Dissection {
    std::uint64_t modulus = 1;
    std::vector<Series> parts;
};

// --- construction ---------------------------------------------------------

// Series with order = coeffs.size(); residue coefficients are normalized
// into canonical range. Throws on an empty coefficient list.
Series make_series(const Ring& ring, const std::vector<mpz_class>& coeffs);
Series make_series(const Ring& ring, const std::vector<long>& coeffs);

// --- arithmetic ------------------------------------------------------------

// Binary operations require identical rings and truncate to the minimum of
// the two orders; that truncation is never an error.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series mul(const Series& a, const Series& b);

// Multiply every coefficient by an integer scalar.
Series scale(const mpz_class& c, const Series& a);

// a^e by binary exponentiation, truncated to a.order(); power(a, 0) = 1.
Series power(const Series& a, std::uint64_t e);

// Multiplicative inverse to a.order() via Newton iteration. The constant
// term must be a unit (+-1 over Z, coprime to the modulus otherwise).
Series invert(const Series& a);

// a^e with e possibly negative (invert of the positive power).
Series int_power(const Series& a, std::int64_t e);

// --- reindexing ------------------------------------------------------------

// Truncate (or error if n exceeds the order; use pad for extension-by-zero
// semantics only where a caller explicitly wants it).
Series truncate(const Series& a, std::size_t n);

// parts[r][n] = a[mn+r]; part r has order max(1, ceil((order - r) / m)).
Dissection dissect(const Series& a, std::uint64_t m);

// Substitution q -> q^m: result[mn] = a[n], order = a.order() * m.
Series inflate(const Series& a, std::uint64_t m);

// Multiplication by q^j: result[n+j] = a[n], order = a.order() + j.
Series shift(const Series& a, std::uint64_t j);

// --- ring movement ----------------------------------------------------------

// Reduce an exact-integer series into Z/MZ (M >= 2).
Series reduce_mod(const Series& a, std::uint64_t M);

// --- comparison helpers ------------------------------------------------------

// True when a and b agree coefficient-wise up to order n (both must reach n).
bool equal_to_order(const Series& a, const Series& b, std::size_t n);

// Smallest index where a and b differ, checked to min(order, order) or n.
// Returns -1 when no mismatch is found in range.
std::ptrdiff_t first_mismatch(const Series& a, const Series& b, std::size_t n);

}  // namespace qdiamond
