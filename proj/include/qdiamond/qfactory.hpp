#pragma once

#include <cstdint>
#include <map>

#include "qdiamond/series.hpp"

namespace qdiamond {

// A finite product  prod_delta f_delta^{r_delta}  with integer exponents,
// where f_n = (q^n; q^n)_inf. Well-defined as a power series because every
// f_delta has constant term 1.
struct EtaQuotient {
    std::map<std::uint32_t, std::int32_t> exponents;  // delta -> r_delta

    EtaQuotient() = default;
    EtaQuotient(std::initializer_list<std::pair<const std::uint32_t, std::int32_t>> init)
        : exponents(init) {}
};

// f_n = (q^n; q^n)_inf to the given order, filled from Euler's pentagonal
// number theorem applied in q^n.
Series pochhammer_f(std::uint32_t n, std::size_t order,
                    const Ring& ring = Ring::integers());

// prod f_delta^{r_delta}: positive exponents by power, negative by
// power-then-invert. Valid over residue rings since constant terms are 1.
Series eta_quotient(const EtaQuotient& eq, std::size_t order,
                    const Ring& ring = Ring::integers());

// (q^a; q^b)_inf = prod_{i>=0} (1 - q^{a+bi}), a >= 1, b >= 1. The inner
// factors of the 5- and 7-dissections are these sparse products.
Series sparse_product(std::uint64_t a, std::uint64_t b, std::size_t order,
                      const Ring& ring = Ring::integers());

// sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2} — the sum side of Jacobi's identity
// for f_1^3.
Series jacobi_cube(std::size_t order, const Ring& ring = Ring::integers());

// f_2^2/f_1 = sum_{j>=0} q^{j(j+1)/2} (triangular-number indicator),
// computed from the sum side.
Series theta_f22_over_f1(std::size_t order, const Ring& ring = Ring::integers());

// f_2^5/f_1^2 = sum_{j in Z} (-1)^j (3j+1) q^{3j^2+2j}, computed from the
// two-sided sum.
Series theta_f25_over_f12(std::size_t order, const Ring& ring = Ring::integers());

// Borwein's cubic theta function a(q) = sum_{m,n} q^{m^2+mn+n^2} by finite
// lattice scan.
Series borwein_a(std::size_t order, const Ring& ring = Ring::integers());

// Rogers-Ramanujan continued fraction R(q), realized as the product
// (q,q^4;q^5)_inf / (q^2,q^3;q^5)_inf with the fractional power q^{1/5}
// omitted. Constant term 1.
Series rr_product(std::size_t order, const Ring& ring = Ring::integers());

// P_{alpha,beta} = 1/(R(q)^{alpha+2beta} R(q^2)^{2alpha-beta})
//                + (-1)^{alpha+beta} q^{2alpha} R(q)^{alpha+2beta} R(q^2)^{2alpha-beta}.
// Either combined exponent may be negative.
Series p_alpha_beta(std::uint32_t alpha, std::int32_t beta, std::size_t order,
                    const Ring& ring = Ring::integers());

}  // namespace qdiamond
