#include "rcc/ring_r.hpp"

#include <sstream>

namespace rcc {

namespace {

void check_context(const RingContext& ctx) {
    require(ctx.k >= 1, ErrorKind::InvalidParameter, "ring needs k >= 1");
    require(ctx.p >= 2, ErrorKind::InvalidParameter, "ring needs a prime modulus");
}

void check_same(const RingElem& x, const RingElem& y) {
    if (!(x.context() == y.context()))
        throw Error(ErrorKind::ContextMismatch, "ring context mismatch: (p, k) = (" + std::to_string(x.context().p) +
                                                    ", " + std::to_string(x.context().k) + ") vs (" +
                                                    std::to_string(y.context().p) + ", " +
                                                    std::to_string(y.context().k) + ")");
}

}  // namespace

int reduce_exponent(int e, int k) {
    if (e <= k) return e;
    return ((e - 1) % k) + 1;
}

RingElem::RingElem(RingContext ctx) : ctx_(ctx), coeffs_(static_cast<std::size_t>(ctx.k) + 1, 0) {
    check_context(ctx);
}

RingElem::RingElem(RingContext ctx, std::vector<Residue> coeffs) : ctx_(ctx), coeffs_(std::move(coeffs)) {
    check_context(ctx);
    if (coeffs_.size() != static_cast<std::size_t>(ctx.k) + 1)
        throw Error(ErrorKind::ContextMismatch, "ring element needs exactly k + 1 = " + std::to_string(ctx.k + 1) +
                                                    " coefficients, got " + std::to_string(coeffs_.size()));
    for (auto& c : coeffs_) c %= ctx.p;
}

RingElem::RingElem(RingContext ctx, std::initializer_list<std::int64_t> coeffs) : RingElem(ctx) {
    if (coeffs.size() > coeffs_.size())
        throw Error(ErrorKind::ContextMismatch, "too many coefficients for k = " + std::to_string(ctx.k));
    std::size_t j = 0;
    for (auto c : coeffs) coeffs_[j++] = fp::reduce(c, ctx.p);
}

RingElem RingElem::constant(RingContext ctx, std::int64_t c) {
    RingElem r(ctx);
    r.coeffs_[0] = fp::reduce(c, ctx.p);
    return r;
}

RingElem RingElem::u_power(RingContext ctx, int e) {
    require(e >= 0, ErrorKind::Precondition, "negative exponent of u");
    RingElem r(ctx);
    r.coeffs_[static_cast<std::size_t>(reduce_exponent(e, ctx.k))] = 1;
    return r;
}

bool RingElem::is_zero() const noexcept {
    for (auto c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool RingElem::is_one() const noexcept {
    if (coeffs_[0] != 1) return false;
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) return false;
    return true;
}

RingElem ring_add(const RingElem& x, const RingElem& y) {
    check_same(x, y);
    const Residue p = x.context().p;
    std::vector<Residue> c(x.coeffs().size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = fp::add(x.coeffs()[j], y.coeffs()[j], p);
    return RingElem(x.context(), std::move(c));
}

RingElem ring_sub(const RingElem& x, const RingElem& y) {
    check_same(x, y);
    const Residue p = x.context().p;
    std::vector<Residue> c(x.coeffs().size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = fp::sub(x.coeffs()[j], y.coeffs()[j], p);
    return RingElem(x.context(), std::move(c));
}

RingElem ring_neg(const RingElem& x) {
    const Residue p = x.context().p;
    std::vector<Residue> c(x.coeffs().size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = fp::neg(x.coeffs()[j], p);
    return RingElem(x.context(), std::move(c));
}

RingElem ring_scalar_mul(const RingElem& x, Residue s) {
    const Residue p = x.context().p;
    s %= p;
    std::vector<Residue> c(x.coeffs().size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = fp::mul(x.coeffs()[j], s, p);
    return RingElem(x.context(), std::move(c));
}

RingElem ring_mul(const RingElem& x, const RingElem& y) {
    check_same(x, y);
    const Residue p = x.context().p;
    const int k = x.context().k;
    std::vector<Residue> c(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 0; i <= k; ++i) {
        Residue xi = x.coeffs()[static_cast<std::size_t>(i)];
        if (xi == 0) continue;
        for (int j = 0; j <= k; ++j) {
            Residue yj = y.coeffs()[static_cast<std::size_t>(j)];
            if (yj == 0) continue;
            auto e = static_cast<std::size_t>(reduce_exponent(i + j, k));
            c[e] = fp::add(c[e], fp::mul(xi, yj, p), p);
        }
    }
    return RingElem(x.context(), std::move(c));
}

RingElem ring_pow(const RingElem& x, unsigned n) {
    RingElem r = RingElem::constant(x.context(), 1);
    RingElem b = x;
    while (n != 0) {
        if (n & 1U) r = r * b;
        b = b * b;
        n >>= 1U;
    }
    return r;
}

RingElem lambda_unit(RingContext ctx) {
    RingElem r = RingElem::constant(ctx, 1);
    return r - ring_scalar_mul(RingElem::u_power(ctx, ctx.k), 2);
}

RingElem sigma(int i, RingContext ctx) {
    require(i >= 1 && i <= 3, ErrorKind::Precondition, "sigma index must be 1, 2 or 3");
    RingElem uk = RingElem::u_power(ctx, ctx.k);
    if (i == 1) return RingElem::constant(ctx, 1) - uk;
    require(ctx.k >= 2, ErrorKind::Precondition,
            "sigma_" + std::to_string(i) + " is unsupported for k = 1 (u^{k-1} collapses to 1)");
    const Residue half = fp::inv(2, ctx.p);
    RingElem uk1 = RingElem::u_power(ctx, ctx.k - 1);
    if (i == 2) return ring_scalar_mul(uk1 + uk, half);
    return ring_scalar_mul(uk - uk1, half);
}

bool is_eval_point(RingContext ctx, Residue c) {
    c %= ctx.p;
    return fp::pow(c, static_cast<std::uint64_t>(ctx.k) + 1, ctx.p) == c;
}

FpElem ring_eval(const RingElem& x, Residue c) {
    const RingContext& ctx = x.context();
    c %= ctx.p;
    if (!is_eval_point(ctx, c))
        throw Error(ErrorKind::Precondition, "u -> " + std::to_string(c) + " is not a ring homomorphism for k = " +
                                                 std::to_string(ctx.k) + " (c^{k+1} != c)");
    Residue acc = 0;
    Residue power = 1;
    for (auto a : x.coeffs()) {
        acc = fp::add(acc, fp::mul(a, power, ctx.p), ctx.p);
        power = fp::mul(power, c, ctx.p);
    }
    return FpElem(acc, ctx.p);
}

bool IdempotentReport::idempotent(int i) const {
    auto idx = static_cast<std::size_t>(i - 1);
    return products.at(idx)[idx] == sigmas.at(idx);
}

bool IdempotentReport::orthogonal(int i, int j) const {
    return products.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1)).is_zero();
}

bool IdempotentReport::sum_is_one() const { return sum.is_one(); }

bool IdempotentReport::lambda_fixes_sigma1() const { return lambda_sigma[0] == sigmas[0]; }

bool IdempotentReport::lambda_negates(int i) const {
    auto idx = static_cast<std::size_t>(i - 1);
    return lambda_sigma.at(idx) == -sigmas.at(idx);
}

bool IdempotentReport::lambda_square_is_one() const { return lambda_squared.is_one(); }

bool IdempotentReport::all_hold() const {
    for (const auto& id : identities())
        if (!id.holds()) return false;
    return true;
}

std::vector<RingIdentity> IdempotentReport::identities() const {
    const RingElem zero(ctx);
    const RingElem one = RingElem::constant(ctx, 1);
    std::vector<RingIdentity> out;
    for (int i = 1; i <= 3; ++i) {
        auto idx = static_cast<std::size_t>(i - 1);
        out.push_back({"sigma" + std::to_string(i) + "^2 = sigma" + std::to_string(i), products[idx][idx],
                       sigmas[idx]});
    }
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            out.push_back({"sigma" + std::to_string(i) + "*sigma" + std::to_string(j) + " = 0",
                           products[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)], zero});
    out.push_back({"sigma1 + sigma2 + sigma3 = 1", sum, one});
    out.push_back({"lambda*sigma1 = sigma1", lambda_sigma[0], sigmas[0]});
    out.push_back({"lambda*sigma2 = -sigma2", lambda_sigma[1], -sigmas[1]});
    out.push_back({"lambda*sigma3 = -sigma3", lambda_sigma[2], -sigmas[2]});
    out.push_back({"lambda^2 = 1", lambda_squared, one});
    return out;
}

IdempotentReport idempotent_report(RingContext ctx) {
    require(ctx.k >= 2, ErrorKind::Precondition, "idempotent report needs k >= 2");
    std::array<RingElem, 3> s{sigma(1, ctx), sigma(2, ctx), sigma(3, ctx)};
    RingElem lam = lambda_unit(ctx);
    RingElem zero(ctx);
    std::array<std::array<RingElem, 3>, 3> products{{{zero, zero, zero}, {zero, zero, zero}, {zero, zero, zero}}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) products[i][j] = s[i] * s[j];
    return IdempotentReport{ctx,
                            s,
                            lam,
                            products,
                            s[0] + s[1] + s[2],
                            {lam * s[0], lam * s[1], lam * s[2]},
                            lam * lam};
}

std::string to_array_string(const RingElem& x) {
    std::ostringstream os;
    os << '[';
    for (std::size_t j = 0; j < x.coeffs().size(); ++j) os << (j ? "," : "") << x.coeffs()[j];
    os << ']';
    return os.str();
}

std::string to_pretty_string(const RingElem& x) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
        Residue c = x.coeffs()[j];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c;
        os << 'u';
        if (j > 1) os << '^' << j;
    }
    if (first) os << '0';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElem& x) { return os << to_array_string(x); }

}  // namespace rcc
