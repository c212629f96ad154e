#include <stdexcept>

#include "qdiamond/radu.hpp"

// Compiled-in certification presets. Each row carries the published P(t) and
// floor(nu) as golden self-check data. Row 6.1 is not part of the published
// chart: its tuple realizes the same f1^{5a} == f5^a reduction pattern at
// m = 25 and its expected values are frozen from this implementation.

namespace qdiamond {

namespace {

EtaQuotient eta_on_divisors(std::uint64_t level, std::initializer_list<std::int32_t> exps) {
    const std::vector<std::uint64_t> divs = divisors_of(level);
    if (divs.size() != exps.size())
        throw std::logic_error("chart row exponent vector does not match divisor count");
    EtaQuotient eq;
    std::size_t i = 0;
    for (std::int32_t e : exps) eq.exponents[static_cast<std::uint32_t>(divs[i++])] = e;
    return eq;
}

ChartRow row(std::string tag, std::uint64_t k, std::uint64_t u, std::uint64_t m,
             std::uint64_t M, std::uint64_t N, std::uint64_t t,
             std::initializer_list<std::int32_t> r,
             std::initializer_list<std::int32_t> r_prime,
             std::set<std::uint64_t> printed_p, std::int64_t printed_nu,
             std::uint64_t printed_t, std::string note = "") {
    ChartRow out;
    out.tag = std::move(tag);
    out.k = k;
    out.u = u;
    out.tuple.m = m;
    out.tuple.M = M;
    out.tuple.N = N;
    out.tuple.t = t;
    out.tuple.r = eta_on_divisors(M, r);
    out.tuple.r_prime = eta_on_divisors(N, r_prime);
    out.printed_p_set = std::move(printed_p);
    out.printed_nu_floor = printed_nu;
    out.printed_t = printed_t;
    out.note = std::move(note);
    return out;
}

std::vector<ChartRow> build_chart() {
    std::vector<ChartRow> c;

    c.push_back(row("6.1", 1, 5, 25, 10, 10, 23, {1, 1, -1, 0}, {1, 0, 0, 0},
                    {23}, 0, 23,
                    "constructed companion row (not in the published chart); "
                    "expected values frozen from this implementation"));

    c.push_back(row("6.2", 1, 25, 125, 10, 10, 23, {21, 1, -5, 0}, {18, 0, 0, 0},
                    {23, 123}, 25, 23));

    c.push_back(row("6.3", 2, 5, 125, 10, 10, 97, {3, 2, -2, 0}, {30, 0, 0, 0},
                    {97, 122}, 22, 97));

    c.push_back(row("6.4a", 1, 7, 49, 14, 14, 45, {3, 1, -1, 0}, {4, 0, 0, 0},
                    {45}, 5, 45));

    c.push_back(row("6.4b", 1, 7, 49, 14, 14, 17, {3, 1, -1, 0}, {4, 0, 0, 0},
                    {17, 31, 38}, 6, 17));

    c.push_back(row("6.6", 3, 7, 49, 14, 14, 41, {4, 3, -2, 0}, {9, 0, 0, 0},
                    {41}, 12, 41));

    c.push_back(row("6.7", 3, 49, 343, 14, 14, 90, {39, 3, -7, 0}, {60, 0, 0, 0},
                    {90, 188, 237}, 92, 90));

    c.push_back(row("6.8", 4, 7, 343, 14, 14, 39, {1, 4, -2, 0}, {77, 0, 0, 0},
                    {39, 235, 284}, 76, 39));

    c.push_back(row("6.9", 4, 11, 121, 22, 22, 96, {9, 4, -2, 0}, {11, 0, 0, 0},
                    {96}, 31, 96));

    c.push_back(row("6.10", 5, 11, 121, 22, 22, 91, {6, 5, -2, 0}, {14, 0, 0, 0},
                    {91}, 33, 91));

    c.push_back(row("6.11", 7, 11, 121, 22, 22, 81, {0, 7, -2, 0}, {19, 0, 0, 0},
                    {81}, 34, 81));

    c.push_back(row("6.14a", 6, 17, 289, 34, 34, 205, {15, 6, -2, 0}, {16, 0, 0, 0},
                    {205}, 77, 205));

    c.push_back(row("6.14b", 6, 17, 289, 34, 34, 52, {15, 6, -2, 0}, {16, 0, 0, 0},
                    {52, 69, 137, 171}, 77, 52));

    c.push_back(row("6.14c", 6, 17, 289, 34, 34, 188, {15, 6, -2, 0}, {16, 0, 0, 0},
                    {188, 222, 239, 273}, 77, 52,
                    "printed t = 52 repeats the previous row but the printed "
                    "orbit is P(188); the effective t here is 188"));

    c.push_back(row("6.15", 3, 19, 19, 38, 38, 16, {9, 3, -1, 0}, {1, 0, 0, 0},
                    {16}, 29, 16));

    return c;
}

}  // namespace

const std::vector<ChartRow>& radu_chart() {
    static const std::vector<ChartRow> chart = build_chart();
    return chart;
}

const ChartRow& chart_row(const std::string& tag) {
    for (const ChartRow& r : radu_chart())
        if (r.tag == tag) return r;
    throw std::out_of_range("unknown chart row tag: " + tag);
}

}  // namespace qdiamond
