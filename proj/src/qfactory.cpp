#include "qdiamond/qfactory.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace qdiamond {

namespace {

// Writes c into position e of a signed accumulation buffer.
void add_signed_term(std::vector<mpz_class>& buf, std::size_t e, long c) {
    buf[e] += c;
}

Series finish(std::vector<mpz_class> buf, const Ring& ring) {
    if (ring.is_exact()) return Series::from_exact(std::move(buf));
    return make_series(ring, buf);
}

}  // namespace

Series pochhammer_f(std::uint32_t n, std::size_t order, const Ring& ring) {
    if (n == 0) throw std::invalid_argument("pochhammer_f: n must be >= 1");
    if (order == 0) throw std::invalid_argument("pochhammer_f: order must be >= 1");
    std::vector<mpz_class> buf(order);
    buf[0] = 1;
    // f_1 = sum_{k in Z} (-1)^k q^{k(3k-1)/2}; generalized pentagonal numbers
    // come in pairs k(3k-1)/2 and k(3k+1)/2 with sign (-1)^k.
    for (std::uint64_t k = 1;; ++k) {
        const std::uint64_t g1 = k * (3 * k - 1) / 2;
        if (g1 * n >= order) break;  // g2 > g1, so both are out of range
        const long sign = (k & 1) ? -1 : 1;
        add_signed_term(buf, g1 * n, sign);
        const std::uint64_t g2 = k * (3 * k + 1) / 2;
        if (g2 * n < order) add_signed_term(buf, g2 * n, sign);
    }
    return finish(std::move(buf), ring);
}

Series eta_quotient(const EtaQuotient& eq, std::size_t order, const Ring& ring) {
    if (order == 0) throw std::invalid_argument("eta_quotient: order must be >= 1");
    Series num = Series::one(ring, order);
    Series den = Series::one(ring, order);
    bool have_den = false;
    for (const auto& [delta, e] : eq.exponents) {
        if (e == 0) continue;
        if (delta == 0) throw std::invalid_argument("eta_quotient: delta must be >= 1");
        Series f = pochhammer_f(delta, order, ring);
        if (e > 0) {
            num = mul(num, power(f, static_cast<std::uint64_t>(e)));
        } else {
            den = mul(den, power(f, static_cast<std::uint64_t>(-static_cast<std::int64_t>(e))));
            have_den = true;
        }
    }
    return have_den ? mul(num, invert(den)) : num;
}

Series sparse_product(std::uint64_t a, std::uint64_t b, std::size_t order, const Ring& ring) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("sparse_product: a and b must be >= 1");
    std::vector<mpz_class> buf(order);
    buf[0] = 1;
    // Multiply in place by (1 - q^e) for each factor with e < order.
    for (std::uint64_t e = a; e < order; e += b)
        for (std::size_t i = order; i-- > e;) buf[i] -= buf[i - e];
    return finish(std::move(buf), ring);
}

Series jacobi_cube(std::size_t order, const Ring& ring) {
    std::vector<mpz_class> buf(order);
    for (std::uint64_t j = 0;; ++j) {
        const std::uint64_t e = j * (j + 1) / 2;
        if (e >= order) break;
        buf[e] += (j & 1) ? -static_cast<long>(2 * j + 1) : static_cast<long>(2 * j + 1);
    }
    return finish(std::move(buf), ring);
}

Series theta_f22_over_f1(std::size_t order, const Ring& ring) {
    std::vector<mpz_class> buf(order);
    for (std::uint64_t j = 0;; ++j) {
        const std::uint64_t e = j * (j + 1) / 2;
        if (e >= order) break;
        buf[e] += 1;
    }
    return finish(std::move(buf), ring);
}

Series theta_f25_over_f12(std::size_t order, const Ring& ring) {
    std::vector<mpz_class> buf(order);
    buf[0] = 1;  // j = 0 term
    const std::int64_t n = static_cast<std::int64_t>(order);
    for (std::int64_t j = 1;; ++j) {
        const std::int64_t e_plus = 3 * j * j + 2 * j;   // exponent at +j
        const std::int64_t e_minus = 3 * j * j - 2 * j;  // exponent at -j
        if (e_minus >= n) break;                         // e_plus > e_minus
        const long sign = (j & 1) ? -1 : 1;
        add_signed_term(buf, static_cast<std::size_t>(e_minus),
                        sign * static_cast<long>(1 - 3 * j));
        if (e_plus < n)
            add_signed_term(buf, static_cast<std::size_t>(e_plus),
                            sign * static_cast<long>(3 * j + 1));
    }
    return finish(std::move(buf), ring);
}

Series borwein_a(std::size_t order, const Ring& ring) {
    std::vector<mpz_class> buf(order);
    // m^2 + mn + n^2 >= (3/4) max(|m|,|n|)^2, so |m|,|n| <= 2 sqrt(N/3) + 1
    // covers every lattice point with exponent below N.
    const std::int64_t bound =
        static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(static_cast<double>(order) / 3.0))) + 1;
    for (std::int64_t m = -bound; m <= bound; ++m) {
        for (std::int64_t n = -bound; n <= bound; ++n) {
            const std::int64_t e = m * m + m * n + n * n;
            if (e >= 0 && static_cast<std::uint64_t>(e) < order)
                buf[static_cast<std::size_t>(e)] += 1;
        }
    }
    return finish(std::move(buf), ring);
}

Series rr_product(std::size_t order, const Ring& ring) {
    Series num = mul(sparse_product(1, 5, order, ring), sparse_product(4, 5, order, ring));
    Series den = mul(sparse_product(2, 5, order, ring), sparse_product(3, 5, order, ring));
    return mul(num, invert(den));
}

Series p_alpha_beta(std::uint32_t alpha, std::int32_t beta, std::size_t order, const Ring& ring) {
    const std::int64_t e1 = static_cast<std::int64_t>(alpha) + 2 * static_cast<std::int64_t>(beta);
    const std::int64_t e2 = 2 * static_cast<std::int64_t>(alpha) - beta;
    const Series r1 = rr_product(order, ring);
    const Series r2 = truncate(inflate(rr_product((order + 1) / 2, ring), 2), order);
    const Series direct = mul(int_power(r1, e1), int_power(r2, e2));
    const Series inverse = mul(int_power(r1, -e1), int_power(r2, -e2));
    Series tail = shift(direct, 2 * alpha);
    if ((alpha + beta) & 1) tail = negate(tail);
    return add(inverse, truncate(tail, order));
}

}  // namespace qdiamond
