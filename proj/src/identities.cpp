#include "qdiamond/identities.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qdiamond/diamonds.hpp"

namespace qdiamond {

// Construction goes through this private initializer, which keeps trees
// immutable after building.
struct Expr::NodeInit {
    Expr::Kind kind;
    mpz_class const_value{};
    EtaQuotient eta{};
    std::uint64_t u0 = 0;
    std::int64_t i0 = 0;
    std::vector<ExprPtr> children{};
};

ExprPtr Expr::make(NodeInit init) {
    auto p = std::shared_ptr<Expr>(new Expr());
    p->kind_ = init.kind;
    p->const_value_ = std::move(init.const_value);
    p->eta_ = std::move(init.eta);
    p->u0_ = init.u0;
    p->i0_ = init.i0;
    p->children_ = std::move(init.children);
    return p;
}

ExprPtr Expr::constant(mpz_class v) {
    return make({.kind = Kind::Constant, .const_value = std::move(v)});
}

ExprPtr Expr::eta(EtaQuotient eq) { return make({.kind = Kind::Eta, .eta = std::move(eq)}); }

ExprPtr Expr::borwein_a() { return make({.kind = Kind::BorweinA}); }

ExprPtr Expr::rogers_ramanujan() { return make({.kind = Kind::RogersRamanujan}); }

ExprPtr Expr::jacobi_cube_sum() { return make({.kind = Kind::JacobiCubeSum}); }

ExprPtr Expr::triangular_sum() { return make({.kind = Kind::TriangularSum}); }

ExprPtr Expr::pentagonal_theta_sum() { return make({.kind = Kind::PentagonalThetaSum}); }

ExprPtr Expr::sparse_product(std::uint64_t a, std::uint64_t b) {
    return make({.kind = Kind::SparseProduct, .u0 = a, .i0 = static_cast<std::int64_t>(b)});
}

ExprPtr Expr::p_alpha_beta(std::uint32_t alpha, std::int32_t beta) {
    return make({.kind = Kind::PAlphaBeta, .u0 = alpha, .i0 = beta});
}

ExprPtr Expr::dk(std::uint64_t k) { return make({.kind = Kind::Dk, .u0 = k}); }

ExprPtr Expr::scale(mpz_class c, ExprPtr child) {
    return make({.kind = Kind::Scale, .const_value = std::move(c), .children = {std::move(child)}});
}

ExprPtr Expr::shift(std::uint64_t j, ExprPtr child) {
    return make({.kind = Kind::Shift, .u0 = j, .children = {std::move(child)}});
}

ExprPtr Expr::sum(std::vector<ExprPtr> children) {
    return make({.kind = Kind::Sum, .children = std::move(children)});
}

ExprPtr Expr::product(std::vector<ExprPtr> children) {
    return make({.kind = Kind::Product, .children = std::move(children)});
}

ExprPtr Expr::pow(ExprPtr child, std::int64_t e) {
    return make({.kind = Kind::Power, .i0 = e, .children = {std::move(child)}});
}

ExprPtr Expr::inflate(std::uint64_t m, ExprPtr child) {
    return make({.kind = Kind::Inflate, .u0 = m, .children = {std::move(child)}});
}

ExprPtr Expr::extract(std::uint64_t m, std::uint64_t r, ExprPtr child) {
    return make({.kind = Kind::Extract,
                 .u0 = m,
                 .i0 = static_cast<std::int64_t>(r),
                 .children = {std::move(child)}});
}

Series eval(const ExprPtr& expr, std::size_t order, const Ring& ring) {
    if (!expr) throw std::invalid_argument("eval: null expression");
    if (order == 0) throw std::invalid_argument("eval: order must be >= 1");
    switch (expr->kind()) {
        case Expr::Kind::Constant: {
            Series s = Series::zero(ring, order);
            std::vector<mpz_class> v(order);
            v[0] = expr->constant_value();
            return make_series(ring, v);
        }
        case Expr::Kind::Eta:
            return eta_quotient(expr->eta(), order, ring);
        case Expr::Kind::BorweinA:
            return borwein_a(order, ring);
        case Expr::Kind::RogersRamanujan:
            return rr_product(order, ring);
        case Expr::Kind::JacobiCubeSum:
            return jacobi_cube(order, ring);
        case Expr::Kind::TriangularSum:
            return theta_f22_over_f1(order, ring);
        case Expr::Kind::PentagonalThetaSum:
            return theta_f25_over_f12(order, ring);
        case Expr::Kind::SparseProduct:
            return sparse_product(expr->param0(),
                                  static_cast<std::uint64_t>(expr->param1()), order, ring);
        case Expr::Kind::PAlphaBeta:
            return p_alpha_beta(static_cast<std::uint32_t>(expr->param0()),
                                static_cast<std::int32_t>(expr->param1()), order, ring);
        case Expr::Kind::Dk: {
            EtaQuotient eq;
            eq.exponents[2] = static_cast<std::int32_t>(expr->param0());
            eq.exponents[1] = -static_cast<std::int32_t>(3 * expr->param0() + 1);
            return eta_quotient(eq, order, ring);
        }
        case Expr::Kind::Scale:
            return scale(expr->constant_value(), eval(expr->children()[0], order, ring));
        case Expr::Kind::Shift: {
            const std::uint64_t j = expr->param0();
            if (j >= order) return Series::zero(ring, order);
            Series inner = eval(expr->children()[0], order - j, ring);
            return shift(inner, j);
        }
        case Expr::Kind::Sum: {
            Series acc = Series::zero(ring, order);
            for (const auto& c : expr->children()) acc = add(acc, eval(c, order, ring));
            return acc;
        }
        case Expr::Kind::Product: {
            Series acc = Series::one(ring, order);
            for (const auto& c : expr->children()) acc = mul(acc, eval(c, order, ring));
            return acc;
        }
        case Expr::Kind::Power:
            return int_power(eval(expr->children()[0], order, ring), expr->param1());
        case Expr::Kind::Inflate: {
            const std::uint64_t m = expr->param0();
            Series inner = eval(expr->children()[0], (order + m - 1) / m, ring);
            return truncate(inflate(inner, m), order);
        }
        case Expr::Kind::Extract: {
            const std::uint64_t m = expr->param0();
            const std::uint64_t r = static_cast<std::uint64_t>(expr->param1());
            const std::size_t inner_order =
                static_cast<std::size_t>(m) * (order - 1) + r + 1;
            Series inner = eval(expr->children()[0], inner_order, ring);
            return truncate(dissect(inner, m).parts[r], order);
        }
    }
    throw std::logic_error("eval: unhandled expression kind");
}

namespace {

void render(const ExprPtr& e, std::ostream& os) {
    switch (e->kind()) {
        case Expr::Kind::Constant:
            os << e->constant_value();
            return;
        case Expr::Kind::Eta: {
            bool first = true;
            for (const auto& [d, r] : e->eta().exponents) {
                if (r == 0) continue;
                if (!first) os << "*";
                os << "f" << d;
                if (r != 1) os << "^" << r;
                first = false;
            }
            if (first) os << "1";
            return;
        }
        case Expr::Kind::BorweinA: os << "a(q)"; return;
        case Expr::Kind::RogersRamanujan: os << "R(q)"; return;
        case Expr::Kind::JacobiCubeSum: os << "sum_j (-1)^j (2j+1) q^(j(j+1)/2)"; return;
        case Expr::Kind::TriangularSum: os << "sum_j q^(j(j+1)/2)"; return;
        case Expr::Kind::PentagonalThetaSum: os << "sum_j (-1)^j (3j+1) q^(3j^2+2j)"; return;
        case Expr::Kind::SparseProduct:
            os << "(q^" << e->param0() << "; q^" << e->param1() << ")inf";
            return;
        case Expr::Kind::PAlphaBeta:
            os << "P[" << e->param0() << "," << e->param1() << "]";
            return;
        case Expr::Kind::Dk: os << "D" << e->param0() << "(q)"; return;
        case Expr::Kind::Scale:
            os << e->constant_value() << "*(";
            render(e->children()[0], os);
            os << ")";
            return;
        case Expr::Kind::Shift:
            os << "q^" << e->param0() << "*(";
            render(e->children()[0], os);
            os << ")";
            return;
        case Expr::Kind::Sum: {
            os << "(";
            for (std::size_t i = 0; i < e->children().size(); ++i) {
                if (i) os << " + ";
                render(e->children()[i], os);
            }
            os << ")";
            return;
        }
        case Expr::Kind::Product: {
            for (std::size_t i = 0; i < e->children().size(); ++i) {
                if (i) os << "*";
                os << "(";
                render(e->children()[i], os);
                os << ")";
            }
            return;
        }
        case Expr::Kind::Power:
            os << "(";
            render(e->children()[0], os);
            os << ")^" << e->param1();
            return;
        case Expr::Kind::Inflate:
            os << "subst[q->q^" << e->param0() << "](";
            render(e->children()[0], os);
            os << ")";
            return;
        case Expr::Kind::Extract:
            os << "extract[" << e->param0() << "n+" << e->param1() << "](";
            render(e->children()[0], os);
            os << ")";
            return;
    }
}

}  // namespace

std::string to_string(const ExprPtr& expr) {
    std::ostringstream os;
    render(expr, os);
    return os.str();
}

VerifyOutcome verify_record(const IdentityRecord& record, std::size_t order,
                            std::uint64_t modulus_override) {
    std::uint64_t modulus = record.modulus;
    if (modulus_override != 0) {
        if (record.modulus != 0 && record.modulus % modulus_override != 0)
            throw std::invalid_argument(
                "verify_record: override modulus must divide the registered one");
        modulus = modulus_override;
    }
    const Ring ring = modulus == 0 ? Ring::integers() : Ring::residues(modulus);
    const Series lhs = eval(record.lhs, order, ring);
    const Series rhs = eval(record.rhs, order, ring);
    const std::ptrdiff_t idx = first_mismatch(lhs, rhs, order);
    VerifyOutcome out;
    out.ok = idx < 0;
    if (idx >= 0) out.first_mismatch_index = static_cast<std::size_t>(idx);
    return out;
}

const IdentityRecord& find_identity(const std::string& id) {
    const auto& reg = identity_registry();
    auto it = std::lower_bound(reg.begin(), reg.end(), id,
                               [](const IdentityRecord& r, const std::string& key) {
                                   return r.id < key;
                               });
    if (it == reg.end() || it->id != id)
        throw std::out_of_range("unknown identity id: " + id);
    return *it;
}

VerifyOutcome verify_identity(const std::string& id, std::size_t order) {
    return verify_record(find_identity(id), order);
}

std::vector<RegistryEntry> list_registry() {
    std::vector<RegistryEntry> out;
    for (const auto& r : identity_registry())
        out.push_back(RegistryEntry{r.id, r.location, r.modulus, r.default_order});
    return out;
}

}  // namespace qdiamond
