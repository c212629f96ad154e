#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qdiamond/identities.hpp"

// The identity registry. Every displayed dissection, product-to-sum identity,
// congruence identity, and proof-step display is transcribed here as a pair
// of expression trees; verification is "evaluate both sides, compare to
// order N" (in Z/mZ for congruence-typed records, which are false over Z).

namespace qdiamond {

namespace {

using E = ExprPtr;

E et(std::initializer_list<std::pair<const std::uint32_t, std::int32_t>> l) {
    return Expr::eta(EtaQuotient(l));
}
E cn(long v) { return Expr::constant(mpz_class(v)); }
E sc(long v, E x) { return Expr::scale(mpz_class(v), std::move(x)); }
E q(std::uint64_t j, E x) { return Expr::shift(j, std::move(x)); }
E sum(std::vector<E> v) { return Expr::sum(std::move(v)); }
E prod(std::vector<E> v) { return Expr::product(std::move(v)); }
E pw(E x, std::int64_t e) { return Expr::pow(std::move(x), e); }
E infl(std::uint64_t m, E x) { return Expr::inflate(m, std::move(x)); }
E ext(std::uint64_t m, std::uint64_t r, E x) { return Expr::extract(m, r, std::move(x)); }
E dk(std::uint64_t k) { return Expr::dk(k); }
E pab(std::uint32_t a, std::int32_t b) { return Expr::p_alpha_beta(a, b); }
E sp(std::uint64_t a, std::uint64_t b) { return Expr::sparse_product(a, b); }

// a(q)^e and a(q^3)^e
E aq(std::int64_t e) { return pw(Expr::borwein_a(), e); }
E aq3(std::int64_t e) { return pw(infl(3, Expr::borwein_a()), e); }
// R(q^5)^e
E R5(std::int64_t e) { return pw(infl(5, Expr::rogers_ramanujan()), e); }

void rec(std::vector<IdentityRecord>& out, std::string id, std::string location,
         std::uint64_t modulus, std::size_t default_order, E lhs, E rhs) {
    out.push_back(IdentityRecord{std::move(id), std::move(location), modulus, default_order,
                                 std::move(lhs), std::move(rhs)});
}

std::vector<IdentityRecord> build_registry() {
    std::vector<IdentityRecord> r;

    // ----- recalled 3-dissections and theta identities ---------------------
    rec(r, "eq-2.1", "3-dissection of f1^2/f2", 0, 300,
        et({{1, 2}, {2, -1}}),
        sum({et({{9, 2}, {18, -1}}),
             sc(-2, q(1, et({{3, 1}, {18, 2}, {6, -1}, {9, -1}})))}));

    rec(r, "eq-2.2", "3-dissection of f2^2/f1", 0, 300,
        et({{2, 2}, {1, -1}}),
        sum({et({{6, 1}, {9, 2}, {3, -1}, {18, -1}}), q(1, et({{18, 2}, {9, -1}}))}));

    rec(r, "eq-2.3", "3-dissection of f1/f2^2", 0, 300,
        et({{1, 1}, {2, -2}}),
        sum({et({{3, 2}, {9, 3}, {6, -6}}),
             sc(-1, q(1, et({{3, 3}, {18, 3}, {6, -7}}))),
             q(2, et({{3, 4}, {18, 6}, {6, -8}, {9, -3}}))}));

    rec(r, "eq-2.4", "3-dissection of f1^3", 0, 300,
        et({{1, 3}}),
        sum({prod({aq3(1), et({{3, 1}})}), sc(-3, q(1, et({{9, 3}})))}));

    rec(r, "eq-2.5", "3-dissection of 1/f1^3", 0, 300,
        et({{1, -3}}),
        sum({prod({aq3(2), et({{9, 3}, {3, -10}})}),
             sc(3, q(1, prod({aq3(2), et({{9, 6}, {3, -11}})}))),
             sc(9, q(2, et({{9, 9}, {3, -12}})))}));

    rec(r, "eq-2.6", "3-dissection of f1 f2", 0, 300,
        et({{1, 1}, {2, 1}}),
        sum({et({{6, 1}, {9, 4}, {3, -1}, {18, -2}}),
             sc(-1, q(1, et({{9, 1}, {18, 1}}))),
             sc(-2, q(2, et({{3, 1}, {18, 4}, {6, -1}, {9, -2}})))}));

    rec(r, "eq-2.7", "Borwein a(q) as an eta combination", 0, 300,
        aq(1),
        sum({et({{1, 3}, {3, -1}}), sc(9, q(1, et({{9, 3}, {3, -1}})))}));

    rec(r, "eq-2.8", "a^3(q) as an eta combination", 0, 300,
        aq(3),
        sum({et({{1, 9}, {3, -3}}), sc(27, q(1, et({{3, 9}, {1, -3}})))}));

    rec(r, "eq-2.9", "theta identity 8q f1^3 f6^5/(f2^3 f3) = f3^8/f6^4 - f1^8/f2^4", 0, 300,
        sc(8, q(1, et({{1, 3}, {6, 5}, {2, -3}, {3, -1}}))),
        sum({et({{3, 8}, {6, -4}}), sc(-1, et({{1, 8}, {2, -4}}))}));

    // ----- proof-step displays for the d2 conjectures ------------------------
    rec(r, "eq-2.10", "d2 generating function factored as (f2^2/f1)(1/f1^6)", 0, 300,
        dk(2), prod({et({{2, 2}, {1, -1}}), et({{1, -6}})}));

    rec(r, "eq-2.11", "d2(3n+2) extraction, exact", 0, 200,
        ext(3, 2, dk(2)),
        sum({sc(27, prod({aq(2), et({{2, 1}, {3, 14}, {1, -23}, {6, -1}})})),
             sc(6, prod({aq(3), et({{3, 8}, {6, 2}, {1, -21}})})),
             sc(81, q(1, et({{3, 17}, {6, 2}, {1, -24}})))}));

    rec(r, "eq-2.12", "d2(3n+2) exact, five-term form", 0, 200,
        ext(3, 2, dk(2)),
        sum({sc(6, et({{3, 5}, {6, 2}, {1, -12}})),
             sc(27, et({{2, 1}, {3, 12}, {1, -17}, {6, -1}})),
             sc(243, q(1, et({{3, 17}, {6, 2}, {1, -24}}))),
             sc(486, q(1, et({{2, 1}, {3, 12}, {9, 3}, {1, -20}, {6, -1}}))),
             sc(2187, q(2, et({{2, 1}, {3, 12}, {9, 6}, {1, -23}, {6, -1}})))}));

    rec(r, "eq-2.13", "d2(3n+2) mod 729 with f1^231", 729, 150,
        ext(3, 2, dk(2)),
        sum({sc(6, et({{1, 231}, {6, 2}, {3, -76}})),
             sc(27, et({{1, 10}, {2, 1}, {3, 3}, {6, -1}})),
             sc(243, q(1, et({{3, 9}, {6, 2}}))),
             sc(486, q(1, et({{1, 1}, {2, 1}, {3, 5}, {9, 3}, {6, -1}})))}));

    rec(r, "eq-2.14", "f1^231 mod 243 via a(q^3) powers", 243, 150,
        et({{1, 231}}),
        sum({prod({aq3(77), et({{3, 77}})}),
             sc(12, q(1, prod({aq3(76), et({{3, 76}, {9, 3}})}))),
             sc(90, q(2, prod({aq3(75), et({{3, 75}, {9, 6}})}))),
             sc(54, q(3, prod({aq3(74), et({{3, 74}, {9, 9}})}))),
             sc(162, q(4, prod({aq3(73), et({{3, 73}, {9, 12}})})))}));

    rec(r, "eq-2.15", "f1^10 f2 mod 27 via a(q^3) powers", 27, 200,
        et({{1, 10}, {2, 1}}),
        sum({sc(18, q(3, prod({aq3(2), et({{3, 3}, {9, 1}, {18, 4}, {6, -1}})}))),
             sc(9, q(2, prod({aq3(2), et({{3, 2}, {9, 4}, {18, 1}})}))),
             sc(-2, q(2, prod({aq3(3), et({{3, 4}, {18, 4}, {6, -1}, {9, -2}})}))),
             sc(-9, q(1, prod({aq3(2), et({{3, 1}, {6, 1}, {9, 7}, {18, -2}})}))),
             sc(-1, q(1, prod({aq3(3), et({{3, 3}, {9, 1}, {18, 1}})}))),
             prod({aq3(3), et({{3, 2}, {6, 1}, {9, 4}, {18, -2}})})}));

    rec(r, "eq-2.16", "d2(9n+8) mod 729, with a^2 tail term", 729, 120,
        ext(9, 8, dk(2)),
        sum({sc(540, prod({aq(75), et({{2, 2}, {3, 6}, {1, -1}})})),
             sc(-54, prod({aq(3), et({{1, 7}, {6, 4}, {2, -2}, {3, -2}})})),
             sc(-243, prod({aq(2), et({{1, 5}, {3, 4}, {6, 1}, {2, -1}})}))}));

    rec(r, "eq-2.16b", "d2(9n+8) mod 729, reduced tail term", 729, 120,
        ext(9, 8, dk(2)),
        sum({sc(540, prod({aq(75), et({{2, 2}, {3, 6}, {1, -1}})})),
             sc(-54, prod({aq(3), et({{1, 7}, {6, 4}, {2, -2}, {3, -2}})})),
             sc(-243, et({{1, 2}, {3, 5}, {6, 1}, {2, -1}}))}));

    rec(r, "eq-2.17", "a^75(q) f2^2 f3^6/f1 mod 27, 3-dissected", 27, 150,
        prod({aq(75), et({{2, 2}, {3, 6}, {1, -1}})}),
        sum({sc(18, q(2, prod({aq3(74), et({{3, 5}, {9, 2}, {18, 2}})}))),
             q(1, prod({aq3(75), et({{3, 6}, {18, 2}, {9, -1}})})),
             sc(18, q(1, prod({aq3(74), et({{3, 4}, {6, 1}, {9, 5}, {18, -1}})}))),
             prod({aq3(75), et({{3, 5}, {6, 1}, {9, 2}, {18, -1}})})}));

    rec(r, "eq-2.18", "a^3(q) f1^7 f6^4/(f2^2 f3^2) mod 27, 3-dissected", 27, 150,
        prod({aq(3), et({{1, 7}, {6, 4}, {2, -2}, {3, -2}})}),
        sum({sc(9, q(4, prod({aq3(3), et({{3, 2}, {9, 3}, {18, 6}, {6, -4}})}))),
             sc(-9, q(3, prod({aq3(3), et({{3, 1}, {9, 6}, {18, 3}, {6, -3}})}))),
             sc(12, q(3, prod({aq3(4), et({{3, 3}, {18, 6}, {6, -4}})}))),
             sc(9, q(2, prod({aq3(3), et({{9, 9}, {6, -2}})}))),
             sc(-12, q(2, prod({aq3(4), et({{3, 2}, {9, 3}, {18, 3}, {6, -3}})}))),
             q(2, prod({aq3(5), et({{3, 4}, {18, 6}, {6, -4}, {9, -3}})})),
             sc(12, q(1, prod({aq3(4), et({{3, 1}, {9, 6}, {6, -2}})}))),
             sc(-1, q(1, prod({aq3(5), et({{3, 3}, {18, 3}, {6, -3}})}))),
             prod({aq3(5), et({{3, 2}, {9, 3}, {6, -2}})})}));

    rec(r, "eq-2.19", "d2(27n+17) mod 729, with a-power coefficients", 729, 120,
        ext(27, 17, dk(2)),
        sum({sc(540, prod({aq(75), et({{1, 6}, {6, 2}, {3, -1}})})),
             sc(9720, prod({aq(74), et({{1, 4}, {2, 1}, {3, 5}, {6, -1}})})),
             sc(-648, prod({aq(4), et({{1, 1}, {3, 6}, {2, -2}})})),
             sc(-243, prod({aq(3), et({{1, 6}, {6, 2}, {3, -1}})})),
             sc(54, prod({aq(5), et({{1, 3}, {6, 3}, {2, -3}})})),
             sc(-486, q(1, prod({aq(3), et({{1, 2}, {3, 3}, {6, 6}, {2, -4}})})))}));

    rec(r, "eq-2.19b", "d2(27n+17) mod 729, partially reduced", 729, 120,
        ext(27, 17, dk(2)),
        sum({sc(540, prod({aq(75), et({{1, 6}, {6, 2}, {3, -1}})})),
             sc(9720, et({{1, 1}, {2, 1}, {3, 6}, {6, -1}})),
             sc(-648, prod({aq(1), et({{1, 1}, {3, 6}, {2, -2}})})),
             sc(-243, et({{3, 1}, {6, 2}})),
             sc(54, prod({aq(5), et({{1, 3}, {6, 3}, {2, -3}})})),
             sc(-486, q(1, et({{1, 2}, {3, 3}, {6, 5}, {2, -1}})))}));

    rec(r, "eq-2.20", "d2(27n+17) mod 81, two-term a-power form", 81, 150,
        ext(27, 17, dk(2)),
        sum({sc(54, prod({aq(75), et({{1, 6}, {6, 2}, {3, -1}})})),
             sc(54, prod({aq(5), et({{1, 3}, {6, 3}, {2, -3}})}))}));

    rec(r, "eq-2.20b", "d2(27n+17) mod 81 collapses to 27 f3 f6^2", 81, 150,
        ext(27, 17, dk(2)), sc(27, et({{3, 1}, {6, 2}})));

    rec(r, "eq-2.21", "d2(9n+8) mod 243, single-term form", 243, 150,
        ext(9, 8, dk(2)), sc(432, q(1, et({{1, 2}, {6, 9}, {2, -1}, {3, -3}}))));

    rec(r, "eq-2.21b", "d2(9n+8) mod 243, 3-dissected form", 243, 150,
        ext(9, 8, dk(2)),
        sum({sc(432, q(1, et({{6, 9}, {9, 2}, {3, -3}, {18, -1}}))),
             sc(-864, q(2, et({{6, 8}, {18, 2}, {3, -2}, {9, -1}})))}));

    // ----- unnumbered displays in the same proofs ----------------------------
    rec(r, "eq-2.u1", "d2(9n+8) mod 243, two-term a-power form", 243, 120,
        ext(9, 8, dk(2)),
        sum({sc(54, prod({aq(75), et({{2, 2}, {3, 6}, {1, -1}})})),
             sc(-54, prod({aq(3), et({{1, 7}, {6, 4}, {2, -2}, {3, -2}})}))}));

    rec(r, "eq-2.u2", "d2(9n+8) mod 243, eta-only two-term form", 243, 150,
        ext(9, 8, dk(2)),
        sum({sc(540, et({{2, 2}, {3, 12}, {1, -19}})),
             sc(-54, et({{1, 7}, {6, 4}, {2, -2}, {3, -2}}))}));

    rec(r, "eq-2.u3", "d2(9n+8) mod 243, factored through the theta identity", 243, 150,
        ext(9, 8, dk(2)),
        sc(54, prod({et({{2, 2}, {6, 4}, {1, -1}, {3, -2}}),
                     sum({et({{3, 8}, {6, -4}}), sc(-1, et({{1, 8}, {2, -4}}))})})));

    rec(r, "eq-2.u4", "a^75(q) f1^6 f6^2/f3 mod 27, 3-dissected", 27, 150,
        prod({aq(75), et({{1, 6}, {6, 2}, {3, -1}})}),
        sum({prod({aq3(77), et({{3, 1}, {6, 2}})}),
             sc(12, q(1, prod({aq3(76), et({{6, 2}, {9, 3}})}))),
             sc(9, q(2, prod({aq3(75), et({{6, 2}, {9, 6}, {3, -1}})})))}));

    rec(r, "eq-2.u5", "a(q) f1 f3^6/f2^2 mod 9, 3-dissected", 9, 200,
        prod({aq(1), et({{1, 1}, {3, 6}, {2, -2}})}),
        sum({prod({aq3(1), et({{3, 8}, {9, 3}, {6, -6}})}),
             sc(6, q(1, et({{3, 7}, {9, 6}, {6, -6}}))),
             sc(-1, q(1, prod({aq3(1), et({{3, 9}, {18, 3}, {6, -7}})}))),
             sc(-6, q(2, et({{3, 8}, {9, 3}, {18, 3}, {6, -7}}))),
             q(2, prod({aq3(1), et({{3, 10}, {18, 6}, {6, -8}, {9, -3}})})),
             sc(6, q(3, et({{3, 9}, {18, 6}, {6, -8}})))}));

    rec(r, "eq-2.u6", "a^5(q) f1^3 f6^3/f2^3 mod 27, 3-dissected", 27, 150,
        prod({aq(5), et({{1, 3}, {6, 3}, {2, -3}})}),
        sum({prod({aq3(7), et({{6, 3}, {9, 9}, {3, -10}, {18, -3}})}),
             sc(6, q(1, prod({aq3(6), et({{6, 3}, {9, 12}, {3, -11}, {18, -3}})}))),
             sc(-6, q(1, prod({aq3(7), et({{6, 2}, {9, 6}, {3, -9}})}))),
             sc(18, q(2, prod({aq3(6), et({{6, 2}, {9, 9}, {3, -10}})}))),
             sc(12, q(2, prod({aq3(7), et({{6, 1}, {9, 3}, {18, 3}, {3, -8}})}))),
             sc(18, q(3, prod({aq3(6), et({{6, 1}, {9, 6}, {18, 3}, {3, -9}})}))),
             sc(-8, q(3, prod({aq3(7), et({{18, 6}, {3, -7}})}))),
             sc(6, q(4, prod({aq3(6), et({{9, 3}, {18, 6}, {3, -8}})})))}));

    rec(r, "eq-2.u7", "d2(81n+71) mod 729, seven-term a-power form", 729, 100,
        ext(81, 71, dk(2)),
        sum({sc(-2430, et({{1, 8}, {3, 3}, {6, 3}, {2, -7}})),
             sc(4860, prod({aq(75), et({{2, 2}, {3, 6}, {1, -1}})})),
             sc(648, prod({aq(7), et({{2, 1}, {3, 3}, {6, 3}, {1, -8}})})),
             sc(972, prod({aq(6), et({{2, 2}, {3, 9}, {1, -10}})})),
             sc(9720, prod({aq(1), et({{1, 7}, {6, 4}, {2, -2}, {3, -2}})})),
             sc(-648, prod({aq(1), et({{1, 10}, {6, 6}, {2, -8}, {3, -3}})})),
             sc(-486, q(1, et({{1, 11}, {6, 12}, {2, -10}, {3, -6}})))}));

    rec(r, "eq-2.u8", "d2(81n+71) mod 729, six-term reduced form", 729, 100,
        ext(81, 71, dk(2)),
        sum({sc(-2430, et({{1, 2}, {3, 5}, {6, 1}, {2, -1}})),
             sc(5832, et({{2, 2}, {3, 6}, {1, -1}})),
             sc(648, prod({aq(1), et({{2, 1}, {3, 3}, {6, 3}, {1, -8}})})),
             sc(9720, et({{1, 1}, {6, 4}, {2, -2}})),
             sc(-648, prod({aq(1), et({{1, 1}, {6, 6}, {2, -8}})})),
             sc(-486, q(1, et({{1, 2}, {6, 9}, {2, -1}, {3, -3}})))}));

    rec(r, "eq-2.u9", "d2(81n+71) mod 729, three-term form", 729, 100,
        ext(81, 71, dk(2)),
        sum({sc(-2430, et({{1, 2}, {3, 5}, {6, 1}, {2, -1}})),
             sc(9720, et({{1, 1}, {6, 4}, {2, -2}})),
             sc(-486, q(1, et({{1, 2}, {6, 9}, {2, -1}, {3, -3}})))}));

    rec(r, "eq-2.u10", "d2(81n+71) mod 729, 3-dissected seven-term form", 729, 100,
        ext(81, 71, dk(2)),
        sum({sc(-2430, et({{3, 5}, {6, 1}, {9, 2}, {18, -1}})),
             sc(9720, et({{3, 2}, {9, 3}, {6, -2}})),
             sc(-486, q(1, et({{6, 9}, {9, 2}, {3, -3}, {18, -1}}))),
             sc(4860, q(1, et({{3, 6}, {18, 2}, {9, -1}}))),
             sc(-9720, q(1, et({{3, 3}, {18, 3}, {6, -3}}))),
             sc(972, q(2, et({{6, 8}, {18, 2}, {3, -2}, {9, -1}}))),
             sc(9720, q(2, et({{3, 4}, {18, 6}, {6, -4}, {9, -3}})))}));

    rec(r, "eq-2.u11", "d2(243n+71) mod 729, two-term form", 729, 100,
        ext(243, 71, dk(2)),
        sum({sc(-2430, et({{1, 5}, {2, 1}, {3, 2}, {6, -1}})),
             sc(9720, et({{1, 2}, {3, 3}, {2, -2}}))}));

    rec(r, "eq-2.u12", "d2(243n+71) mod 729 collapses to 7290 f1^2 f3^3/f2^2", 729, 100,
        ext(243, 71, dk(2)), sc(7290, et({{1, 2}, {3, 3}, {2, -2}})));

    // ----- 2-dissections used for the binomial generating functions ----------
    rec(r, "eq-3.12", "2-dissection of 1/f1^2", 0, 300,
        et({{1, -2}}),
        sum({et({{8, 5}, {2, -5}, {16, -2}}), sc(2, q(1, et({{4, 2}, {16, 2}, {2, -5}, {8, -1}})))}));

    rec(r, "eq-3.15", "2-dissection of f1^2", 0, 300,
        et({{1, 2}}),
        sum({et({{2, 1}, {8, 5}, {4, -2}, {16, -2}}),
             sc(-2, q(1, et({{2, 1}, {16, 2}, {8, -1}})))}));

    rec(r, "eq-3.16", "2-dissection of 1/f1^4", 0, 300,
        et({{1, -4}}),
        sum({et({{4, 14}, {2, -14}, {8, -4}}), sc(4, q(1, et({{4, 2}, {8, 4}, {2, -10}})))}));

    // ----- 5-dissections, P relations, 7-dissection ---------------------------
    rec(r, "eq-6.22", "5-dissection of f1", 0, 300,
        et({{1, 1}}),
        prod({et({{25, 1}}),
              sum({R5(-1), sc(-1, q(1, cn(1))), sc(-1, q(2, R5(1)))})}));

    rec(r, "eq-6.23", "5-dissection of 1/f1", 0, 300,
        et({{1, -1}}),
        prod({et({{25, 5}, {5, -6}}),
              sum({R5(-4), q(1, R5(-3)), sc(2, q(2, R5(-2))), sc(3, q(3, R5(-1))),
                   sc(5, q(4, cn(1))), sc(-3, q(5, R5(1))), sc(2, q(6, R5(2))),
                   sc(-1, q(7, R5(3))), q(8, R5(4))})}));

    rec(r, "eq-6.24", "d1(5n+3) through the P combinations, exact", 0, 200,
        ext(5, 3, dk(1)),
        prod({et({{5, 20}, {10, 1}, {1, -24}}),
              sum({sc(-4, pab(3, 6)), sc(40, pab(3, 5)), sc(-105, q(1, pab(2, 5))),
                   sc(-418, q(1, pab(2, 4))), sc(1100, q(1, pab(2, 3))),
                   sc(-1400, q(2, pab(1, 3))), sc(-1840, q(2, pab(1, 2))),
                   sc(1200, q(2, pab(1, 1))), sc(-1500, q(3, pab(0, 1))),
                   sc(-1015, q(3, cn(1)))})}));

    rec(r, "eq-6.24b", "d1(5n+3) as ten eta-quotient terms, exact", 0, 200,
        ext(5, 3, dk(1)),
        sum({sc(40, et({{2, 1}, {5, 13}, {1, -13}, {10, -4}})),
             sc(-4, et({{10, 1}, {5, 2}, {1, -6}})),
             sc(-470, q(1, et({{10, 1}, {5, 8}, {1, -12}}))),
             sc(1875, q(1, et({{2, 1}, {5, 19}, {1, -19}, {10, -4}}))),
             sc(15625, q(2, et({{2, 1}, {5, 25}, {1, -25}, {10, -4}}))),
             sc(-8750, q(2, et({{10, 1}, {5, 14}, {1, -18}}))),
             sc(-260, q(2, et({{10, 6}, {5, 3}, {1, -11}, {2, -1}}))),
             sc(-7500, q(3, et({{10, 6}, {5, 9}, {1, -17}, {2, -1}}))),
             sc(-46875, q(3, et({{10, 1}, {5, 20}, {1, -24}}))),
             sc(-62500, q(4, et({{10, 6}, {5, 15}, {1, -23}, {2, -1}})))}));

    rec(r, "eq-6.24c", "d1(5n+3) mod 5, eta form", 5, 200,
        ext(5, 3, dk(1)), sc(-4, et({{10, 1}, {5, 2}, {1, -6}})));

    rec(r, "eq-6.24d", "d1(5n+3) mod 5, reduced eta form", 5, 200,
        ext(5, 3, dk(1)), et({{10, 1}, {5, 1}, {1, -1}}));

    rec(r, "eq-6.25", "P(0,1) as an eta quotient", 0, 200,
        pab(0, 1), sc(4, q(1, et({{1, 1}, {10, 5}, {2, -1}, {5, -5}}))));

    rec(r, "eq-6.26", "P(1,1) as eta quotients", 0, 200,
        pab(1, 1),
        sum({et({{2, 1}, {5, 5}, {1, -1}, {10, -5}}), sc(2, q(1, cn(1))),
             sc(4, q(2, et({{1, 1}, {10, 5}, {2, -1}, {5, -5}})))}));

    rec(r, "eq-6.27", "P(1,2) as an eta quotient", 0, 200,
        pab(1, 2), sum({et({{1, 6}, {5, -6}}), sc(11, q(1, cn(1)))}));

    rec(r, "eq-P13", "P(1,3) = P(0,1) P(1,2) + P(1,1)", 0, 200,
        pab(1, 3), sum({prod({pab(0, 1), pab(1, 2)}), pab(1, 1)}));

    rec(r, "eq-P23", "P(2,3) = P(1,1) P(1,2) - q^2 P(0,1)", 0, 200,
        pab(2, 3), sum({prod({pab(1, 1), pab(1, 2)}), sc(-1, q(2, pab(0, 1)))}));

    rec(r, "eq-P24", "P(2,4) = P(1,2)^2 + 2 q^2", 0, 200,
        pab(2, 4), sum({pw(pab(1, 2), 2), sc(2, q(2, cn(1)))}));

    rec(r, "eq-P25", "P(2,5) = P(0,1) P(2,4) - P(2,3)", 0, 200,
        pab(2, 5), sum({prod({pab(0, 1), pab(2, 4)}), sc(-1, pab(2, 3))}));

    rec(r, "eq-P35", "P(3,5) = P(1,1) P(2,4) - q^2 P(1,3)", 0, 200,
        pab(3, 5), sum({prod({pab(1, 1), pab(2, 4)}), sc(-1, q(2, pab(1, 3)))}));

    rec(r, "eq-P36", "P(3,6) = P(1,2) P(2,4) + q^2 P(1,2)", 0, 200,
        pab(3, 6), sum({prod({pab(1, 2), pab(2, 4)}), q(2, pab(1, 2))}));

    rec(r, "eq-7diss-f1", "7-dissection of f1 with (q^a; q^49) inner products", 0, 250,
        et({{1, 1}}),
        prod({et({{49, 1}}),
              sum({prod({sp(14, 49), sp(35, 49), pw(sp(7, 49), -1), pw(sp(42, 49), -1)}),
                   sc(-1, q(1, prod({sp(21, 49), sp(28, 49), pw(sp(14, 49), -1),
                                     pw(sp(35, 49), -1)}))),
                   sc(-1, q(2, cn(1))),
                   q(5, prod({sp(7, 49), sp(42, 49), pw(sp(21, 49), -1),
                              pw(sp(28, 49), -1)}))})}));

    rec(r, "eq-6.28", "3-dissection of a(q)", 0, 300,
        aq(1), sum({aq3(1), sc(6, q(1, et({{9, 3}, {3, -1}})))}));

    rec(r, "eq-6.29", "d2 mod 7 reduces to f2^2/f7", 7, 300,
        dk(2), et({{2, 2}, {7, -1}}));

    rec(r, "eq-6.30", "d2(7n+1) mod 7 is f14^2/f1", 7, 200,
        ext(7, 1, dk(2)), et({{14, 2}, {1, -1}}));

    rec(r, "eq-6.31", "Jacobi identity for f1^3", 0, 300,
        et({{1, 3}}), Expr::jacobi_cube_sum());

    rec(r, "eq-6.32", "f2^2/f1 as the triangular-number sum", 0, 300,
        et({{2, 2}, {1, -1}}), Expr::triangular_sum());

    rec(r, "eq-6.33", "f2^5/f1^2 as a two-sided theta sum", 0, 300,
        et({{2, 5}, {1, -2}}), Expr::pentagonal_theta_sum());

    rec(r, "eq-6.34", "d3 mod 13 reduces to f1^3 f2^3/f13", 13, 200,
        dk(3), et({{1, 3}, {2, 3}, {13, -1}}));

    rec(r, "eq-6.34b", "d3 mod 13 through two Jacobi cube sums", 13, 200,
        dk(3),
        prod({et({{13, -1}}), Expr::jacobi_cube_sum(),
              infl(2, Expr::jacobi_cube_sum())}));

    std::sort(r.begin(), r.end(),
              [](const IdentityRecord& a, const IdentityRecord& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i].id == r[i - 1].id)
            throw std::logic_error("duplicate identity id: " + r[i].id);
    return r;
}

}  // namespace

const std::vector<IdentityRecord>& identity_registry() {
    static const std::vector<IdentityRecord> registry = build_registry();
    return registry;
}

}  // namespace qdiamond
