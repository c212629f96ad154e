#include "qdiamond/series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qdiamond {

namespace {

void require_order(std::size_t order) {
    if (order == 0) throw std::invalid_argument("series order must be >= 1");
}

void require_same_ring(const Series& a, const Series& b) {
    if (!(a.ring() == b.ring()))
        throw std::invalid_argument("ring mismatch: " + a.ring().describe() +
                                    " vs " + b.ring().describe());
}

std::uint64_t canonical_residue(const mpz_class& v, std::uint64_t m) {
    // mpz_fdiv_ui rounds toward -infinity, so the remainder is in [0, m).
    return mpz_fdiv_ui(v.get_mpz_t(), m);
}

// Schoolbook convolution over Z. Skips zero coefficients of a, which matters
// for the sparse pentagonal/theta inputs that dominate this code base.
std::vector<mpz_class> conv_exact(const std::vector<mpz_class>& a,
                                  const std::vector<mpz_class>& b,
                                  std::size_t n) {
    std::vector<mpz_class> out(n);
    const std::size_t na = std::min(a.size(), n);
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        const std::size_t nb = std::min(b.size(), n - i);
        for (std::size_t j = 0; j < nb; ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

std::uint64_t mulmod_u64(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % m);
}

// Schoolbook convolution over Z/mZ. For m below 2^31 every product fits in
// 62 bits, so partial sums accumulate in 128-bit lanes and reduce once per
// output coefficient; larger moduli fall back to mulmod per term.
std::vector<std::uint64_t> conv_residue(const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b,
                                        std::size_t n, std::uint64_t m) {
    if (m <= (std::uint64_t(1) << 31)) {
        std::vector<unsigned __int128> acc(n, 0);
        const std::size_t na = std::min(a.size(), n);
        for (std::size_t i = 0; i < na; ++i) {
            const std::uint64_t ai = a[i];
            if (ai == 0) continue;
            const std::size_t nb = std::min(b.size(), n - i);
            unsigned __int128* dst = acc.data() + i;
            for (std::size_t j = 0; j < nb; ++j)
                dst[j] += static_cast<unsigned __int128>(ai) * b[j];
        }
        std::vector<std::uint64_t> out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = static_cast<std::uint64_t>(acc[i] % m);
        return out;
    }
    std::vector<std::uint64_t> out(n, 0);
    const std::size_t na = std::min(a.size(), n);
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        const std::size_t nb = std::min(b.size(), n - i);
        for (std::size_t j = 0; j < nb; ++j) {
            std::uint64_t t = mulmod_u64(a[i], b[j], m);
            std::uint64_t s = out[i + j] + t;
            if (s < t || s >= m) s -= m;  // wrap-free add: both operands < m
            out[i + j] = s;
        }
    }
    return out;
}

}  // namespace

Series Series::from_exact(std::vector<mpz_class> coeffs) {
    require_order(coeffs.size());
    Series s(Ring::integers());
    s.exact_ = std::move(coeffs);
    return s;
}

Series Series::from_residue(const Ring& ring, std::vector<std::uint64_t> coeffs) {
    require_order(coeffs.size());
    if (ring.is_exact())
        throw std::invalid_argument("from_residue requires a residue ring");
    Series s(ring);
    s.residue_ = std::move(coeffs);
    return s;
}

Series Series::zero(const Ring& ring, std::size_t order) {
    require_order(order);
    if (ring.is_exact()) return from_exact(std::vector<mpz_class>(order));
    return from_residue(ring, std::vector<std::uint64_t>(order, 0));
}

Series Series::one(const Ring& ring, std::size_t order) {
    Series s = zero(ring, order);
    if (ring.is_exact())
        s.exact_[0] = 1;
    else
        s.residue_[0] = 1;
    return s;
}

mpz_class Series::coeff(std::size_t i) const {
    if (i >= order()) throw std::out_of_range("series coefficient index");
    if (ring_.is_exact()) return exact_[i];
    return mpz_class(static_cast<unsigned long>(residue_[i]));
}

long Series::coeff_si(std::size_t i) const {
    mpz_class v = coeff(i);
    if (!v.fits_slong_p()) throw std::overflow_error("coefficient does not fit a long");
    return v.get_si();
}

bool Series::is_zero() const {
    if (ring_.is_exact())
        return std::all_of(exact_.begin(), exact_.end(),
                           [](const mpz_class& c) { return c == 0; });
    return std::all_of(residue_.begin(), residue_.end(),
                       [](std::uint64_t c) { return c == 0; });
}

Series make_series(const Ring& ring, const std::vector<mpz_class>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("make_series: empty coefficient list");
    if (ring.is_exact()) return Series::from_exact(coeffs);
    std::vector<std::uint64_t> rc(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        rc[i] = canonical_residue(coeffs[i], ring.modulus());
    return Series::from_residue(ring, std::move(rc));
}

Series make_series(const Ring& ring, const std::vector<long>& coeffs) {
    std::vector<mpz_class> z(coeffs.begin(), coeffs.end());
    return make_series(ring, z);
}

Series add(const Series& a, const Series& b) {
    require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    if (a.ring().is_exact()) {
        std::vector<mpz_class> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = a.exact_coeffs()[i] + b.exact_coeffs()[i];
        return Series::from_exact(std::move(out));
    }
    const std::uint64_t m = a.ring().modulus();
    std::vector<std::uint64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = a.residue_coeffs()[i] + b.residue_coeffs()[i];
        if (s < a.residue_coeffs()[i] || s >= m) s -= m;
        out[i] = s;
    }
    return Series::from_residue(a.ring(), std::move(out));
}

Series sub(const Series& a, const Series& b) { return add(a, negate(b)); }

Series negate(const Series& a) {
    const std::size_t n = a.order();
    if (a.ring().is_exact()) {
        std::vector<mpz_class> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = -a.exact_coeffs()[i];
        return Series::from_exact(std::move(out));
    }
    const std::uint64_t m = a.ring().modulus();
    std::vector<std::uint64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t c = a.residue_coeffs()[i];
        out[i] = c == 0 ? 0 : m - c;
    }
    return Series::from_residue(a.ring(), std::move(out));
}

Series mul(const Series& a, const Series& b) {
    require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    if (a.ring().is_exact())
        return Series::from_exact(conv_exact(a.exact_coeffs(), b.exact_coeffs(), n));
    return Series::from_residue(
        a.ring(), conv_residue(a.residue_coeffs(), b.residue_coeffs(), n, a.ring().modulus()));
}

Series scale(const mpz_class& c, const Series& a) {
    const std::size_t n = a.order();
    if (a.ring().is_exact()) {
        std::vector<mpz_class> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = c * a.exact_coeffs()[i];
        return Series::from_exact(std::move(out));
    }
    const std::uint64_t m = a.ring().modulus();
    const std::uint64_t cr = canonical_residue(c, m);
    std::vector<std::uint64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = mulmod_u64(cr, a.residue_coeffs()[i], m);
    return Series::from_residue(a.ring(), std::move(out));
}

Series power(const Series& a, std::uint64_t e) {
    Series result = Series::one(a.ring(), a.order());
    Series base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

Series invert(const Series& a) {
    const std::size_t n = a.order();
    if (a.ring().is_exact()) {
        const mpz_class& c0 = a.exact_coeffs()[0];
        if (c0 != 1 && c0 != -1)
            throw std::domain_error("invert: constant term " + c0.get_str() +
                                    " is not a unit in Z");
        // Newton iteration b <- b (2 - a b), doubling the correct order.
        std::vector<mpz_class> b(1, c0);  // c0^{-1} = c0 for +-1
        std::size_t k = 1;
        while (k < n) {
            k = std::min(n, 2 * k);
            std::vector<mpz_class> ab =
                conv_exact(a.exact_coeffs(), b, k);
            for (auto& c : ab) c = -c;
            ab[0] += 2;
            b = conv_exact(b, ab, k);
        }
        return Series::from_exact(std::move(b));
    }
    const std::uint64_t m = a.ring().modulus();
    mpz_class c0 = a.coeff(0), minv;
    mpz_class mz(static_cast<unsigned long>(m));
    if (mpz_invert(minv.get_mpz_t(), c0.get_mpz_t(), mz.get_mpz_t()) == 0)
        throw std::domain_error("invert: constant term " + c0.get_str() +
                                " is not a unit mod " + std::to_string(m));
    std::vector<std::uint64_t> b(1, canonical_residue(minv, m));
    std::size_t k = 1;
    while (k < n) {
        k = std::min(n, 2 * k);
        std::vector<std::uint64_t> ab = conv_residue(a.residue_coeffs(), b, k, m);
        for (auto& c : ab) c = c == 0 ? 0 : m - c;
        ab[0] += 2;
        if (ab[0] >= m) ab[0] -= m;
        b = conv_residue(b, ab, k, m);
    }
    return Series::from_residue(a.ring(), std::move(b));
}

Series int_power(const Series& a, std::int64_t e) {
    if (e >= 0) return power(a, static_cast<std::uint64_t>(e));
    return invert(power(a, static_cast<std::uint64_t>(-e)));
}

Series truncate(const Series& a, std::size_t n) {
    require_order(n);
    if (n > a.order()) throw std::invalid_argument("truncate: order exceeds series order");
    if (n == a.order()) return a;
    if (a.ring().is_exact())
        return Series::from_exact(std::vector<mpz_class>(a.exact_coeffs().begin(),
                                                         a.exact_coeffs().begin() + n));
    return Series::from_residue(
        a.ring(), std::vector<std::uint64_t>(a.residue_coeffs().begin(),
                                             a.residue_coeffs().begin() + n));
}

Dissection dissect(const Series& a, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("dissect: modulus must be >= 1");
    const std::size_t n = a.order();
    Dissection d;
    d.modulus = m;
    d.parts.reserve(m);
    for (std::uint64_t r = 0; r < m; ++r) {
        std::size_t len = r < n ? (n - r + m - 1) / m : 0;
        if (len == 0) len = 1;  // keep the order >= 1 invariant
        if (a.ring().is_exact()) {
            std::vector<mpz_class> part(len);
            for (std::size_t i = 0; r + i * m < n; ++i) part[i] = a.exact_coeffs()[r + i * m];
            d.parts.push_back(Series::from_exact(std::move(part)));
        } else {
            std::vector<std::uint64_t> part(len, 0);
            for (std::size_t i = 0; r + i * m < n; ++i) part[i] = a.residue_coeffs()[r + i * m];
            d.parts.push_back(Series::from_residue(a.ring(), std::move(part)));
        }
    }
    return d;
}

Series inflate(const Series& a, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("inflate: modulus must be >= 1");
    const std::size_t n = a.order();
    if (m > 1 && n > std::numeric_limits<std::size_t>::max() / m)
        throw std::length_error("inflate: resulting order overflows");
    const std::size_t out_n = n * m;
    if (a.ring().is_exact()) {
        std::vector<mpz_class> out(out_n);
        for (std::size_t i = 0; i < n; ++i) out[i * m] = a.exact_coeffs()[i];
        return Series::from_exact(std::move(out));
    }
    std::vector<std::uint64_t> out(out_n, 0);
    for (std::size_t i = 0; i < n; ++i) out[i * m] = a.residue_coeffs()[i];
    return Series::from_residue(a.ring(), std::move(out));
}

Series shift(const Series& a, std::uint64_t j) {
    const std::size_t n = a.order();
    const std::size_t out_n = n + j;
    if (a.ring().is_exact()) {
        std::vector<mpz_class> out(out_n);
        for (std::size_t i = 0; i < n; ++i) out[i + j] = a.exact_coeffs()[i];
        return Series::from_exact(std::move(out));
    }
    std::vector<std::uint64_t> out(out_n, 0);
    for (std::size_t i = 0; i < n; ++i) out[i + j] = a.residue_coeffs()[i];
    return Series::from_residue(a.ring(), std::move(out));
}

Series reduce_mod(const Series& a, std::uint64_t M) {
    if (!a.ring().is_exact())
        throw std::invalid_argument("reduce_mod: input must be over exact integers");
    const Ring target = Ring::residues(M);
    std::vector<std::uint64_t> out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        out[i] = canonical_residue(a.exact_coeffs()[i], M);
    return Series::from_residue(target, std::move(out));
}

bool equal_to_order(const Series& a, const Series& b, std::size_t n) {
    return first_mismatch(a, b, n) < 0;
}

std::ptrdiff_t first_mismatch(const Series& a, const Series& b, std::size_t n) {
    require_same_ring(a, b);
    if (a.order() < n || b.order() < n)
        throw std::invalid_argument("first_mismatch: series shorter than comparison order");
    if (a.ring().is_exact()) {
        for (std::size_t i = 0; i < n; ++i)
            if (a.exact_coeffs()[i] != b.exact_coeffs()[i]) return static_cast<std::ptrdiff_t>(i);
        return -1;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (a.residue_coeffs()[i] != b.residue_coeffs()[i]) return static_cast<std::ptrdiff_t>(i);
    return -1;
}

}  // namespace qdiamond
