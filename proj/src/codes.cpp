#include "rcc/codes.hpp"

#include <algorithm>

namespace rcc {

std::string to_string(ShiftKind kind) {
    switch (kind) {
        case ShiftKind::Alpha: return "alpha";
        case ShiftKind::Beta: return "beta";
        case ShiftKind::Gamma: return "gamma";
    }
    return "?";
}

std::string to_string(UnitTag tag) {
    switch (tag) {
        case UnitTag::Cyclic: return "cyclic";
        case UnitTag::Negacyclic: return "negacyclic";
        case UnitTag::Lambda: return "lambda";
    }
    return "?";
}

UnitTag parse_unit_tag(const std::string& s) {
    if (s == "cyclic") return UnitTag::Cyclic;
    if (s == "negacyclic") return UnitTag::Negacyclic;
    if (s == "lambda") return UnitTag::Lambda;
    throw Error(ErrorKind::Schema, "unknown unit tag '" + s + "' (expected cyclic, negacyclic or lambda)");
}

ShiftKind shift_for(UnitTag tag) {
    switch (tag) {
        case UnitTag::Cyclic: return ShiftKind::Alpha;
        case UnitTag::Negacyclic: return ShiftKind::Beta;
        case UnitTag::Lambda: return ShiftKind::Gamma;
    }
    return ShiftKind::Gamma;
}

std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > cap / p) return std::nullopt;
        r *= p;
    }
    if (r > cap) return std::nullopt;
    return r;
}

// ---------------------------------------------------------------- LinearCodeFp

namespace {

linalg::Rref rref_of(Residue p, std::size_t n, const std::vector<FpVector>& gens) {
    std::vector<linalg::Row> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) rows.push_back(g.entries());
    return linalg::rref(p, n, std::move(rows));
}

}  // namespace

LinearCodeFp::LinearCodeFp(Residue p, std::size_t length, std::vector<FpVector> generators)
    : p_(p), length_(length), generators_(std::move(generators)) {
    for (const auto& g : generators_) {
        if (g.modulus() != p_) throw Error(ErrorKind::ContextMismatch, "generator modulus mismatch");
        if (g.size() != length_)
            throw Error(ErrorKind::ContextMismatch, "generator of length " + std::to_string(g.size()) +
                                                        " in a code of length " + std::to_string(length_));
    }
    rref_ = rref_of(p_, length_, generators_);
}

LinearCodeFp LinearCodeFp::zero(Residue p, std::size_t length) { return LinearCodeFp(p, length, {}); }

LinearCodeFp LinearCodeFp::full(Residue p, std::size_t length) {
    std::vector<FpVector> rows;
    for (std::size_t i = 0; i < length; ++i) {
        FpVector e(p, length);
        e.set(i, 1);
        rows.push_back(std::move(e));
    }
    return LinearCodeFp(p, length, std::move(rows));
}

std::vector<FpVector> LinearCodeFp::basis() const {
    std::vector<FpVector> out;
    out.reserve(rref_.rows.size());
    for (const auto& r : rref_.rows) out.emplace_back(p_, r);
    return out;
}

bool LinearCodeFp::contains(const FpVector& v) const {
    if (v.modulus() != p_ || v.size() != length_) throw Error(ErrorKind::ContextMismatch, "membership: shape mismatch");
    return linalg::in_span(rref_, v.entries());
}

bool LinearCodeFp::contains(const LinearCodeFp& other) const {
    if (other.p_ != p_ || other.length_ != length_) throw Error(ErrorKind::ContextMismatch, "containment: shape mismatch");
    for (const auto& r : other.rref_.rows)
        if (!linalg::in_span(rref_, r)) return false;
    return true;
}

std::uint64_t LinearCodeFp::size(std::uint64_t cap) const {
    auto n = checked_power(p_, dimension(), cap);
    if (!n)
        throw Error(ErrorKind::CapExceeded, "code has " + std::to_string(p_) + "^" + std::to_string(dimension()) +
                                                " codewords, above the cap of " + std::to_string(cap));
    return *n;
}

void LinearCodeFp::for_each_codeword(const std::function<void(const FpVector&)>& fn, std::uint64_t cap) const {
    const std::uint64_t total = size(cap);
    const std::size_t d = dimension();
    std::vector<Residue> digits(d, 0);
    std::vector<Residue> word(length_, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (digits[i] == 0) continue;
            const auto& r = rref_.rows[i];
            for (std::size_t j = 0; j < length_; ++j) word[j] = fp::add(word[j], fp::mul(digits[i], r[j], p_), p_);
        }
        fn(FpVector(p_, word));
        for (std::size_t i = 0; i < d; ++i) {
            if (++digits[i] < p_) break;
            digits[i] = 0;
        }
    }
}

// ---------------------------------------------------------------- words over R

RWord zero_word(RingContext ctx, std::size_t m) { return RWord(m, RingElem(ctx)); }

FpVector expand(const RWord& w) {
    if (w.empty()) throw Error(ErrorKind::Precondition, "cannot expand an empty word");
    const RingContext ctx = w.front().context();
    const std::size_t width = static_cast<std::size_t>(ctx.k) + 1;
    std::vector<Residue> out;
    out.reserve(w.size() * width);
    for (const auto& s : w) {
        if (!(s.context() == ctx)) throw Error(ErrorKind::ContextMismatch, "word with mixed ring contexts");
        out.insert(out.end(), s.coeffs().begin(), s.coeffs().end());
    }
    return FpVector(ctx.p, std::move(out));
}

RWord collapse(RingContext ctx, const FpVector& v) {
    const std::size_t width = static_cast<std::size_t>(ctx.k) + 1;
    if (v.size() % width != 0 || v.modulus() != ctx.p)
        throw Error(ErrorKind::ContextMismatch, "vector does not expand a word over this ring");
    RWord w;
    w.reserve(v.size() / width);
    for (std::size_t i = 0; i < v.size(); i += width)
        w.emplace_back(ctx, std::vector<Residue>(v.entries().begin() + static_cast<std::ptrdiff_t>(i),
                                                 v.entries().begin() + static_cast<std::ptrdiff_t>(i + width)));
    return w;
}

RingElem inner_product(const RWord& x, const RWord& y) {
    if (x.size() != y.size() || x.empty()) throw Error(ErrorKind::ContextMismatch, "inner product: length mismatch");
    RingElem acc(x.front().context());
    for (std::size_t i = 0; i < x.size(); ++i) acc = acc + x[i] * y[i];
    return acc;
}

namespace {

/// u * (a_0 + ... + a_k u^k) = (a_0 + a_k) u + a_1 u^2 + ... + a_{k-1} u^k.
void times_u(std::vector<Residue>& w, std::size_t k, Residue p) {
    const std::size_t width = k + 1;
    for (std::size_t base = 0; base < w.size(); base += width) {
        Residue top = w[base + k];
        for (std::size_t j = k; j >= 2; --j) w[base + j] = w[base + j - 1];
        w[base + 1] = fp::add(w[base], top, p);
        w[base] = 0;
    }
}

}  // namespace

ConstaCodeR::ConstaCodeR(RingContext ctx, std::size_t length, UnitTag unit, std::vector<RWord> generators)
    : ctx_(ctx),
      length_(length),
      unit_(unit),
      generators_(std::move(generators)),
      expanded_(LinearCodeFp::zero(ctx.p, length * (static_cast<std::size_t>(ctx.k) + 1))) {
    require(length >= 1, ErrorKind::Precondition, "code length must be >= 1");
    const std::size_t k = static_cast<std::size_t>(ctx.k);
    std::vector<FpVector> rows;
    rows.reserve(generators_.size() * (k + 1));
    for (const auto& g : generators_) {
        if (g.size() != length_)
            throw Error(ErrorKind::ContextMismatch, "generator of length " + std::to_string(g.size()) +
                                                        " in a code of length " + std::to_string(length_));
        std::vector<Residue> cur = expand(g).entries();
        if (!(g.front().context() == ctx_)) throw Error(ErrorKind::ContextMismatch, "generator ring context mismatch");
        for (std::size_t e = 0; e <= k; ++e) {
            rows.emplace_back(ctx_.p, cur);
            times_u(cur, k, ctx_.p);
        }
    }
    expanded_ = LinearCodeFp(ctx_.p, length_ * (k + 1), std::move(rows));
}

ConstaCodeR ConstaCodeR::zero(RingContext ctx, std::size_t length, UnitTag unit) {
    return ConstaCodeR(ctx, length, unit, {});
}

ConstaCodeR ConstaCodeR::full(RingContext ctx, std::size_t length, UnitTag unit) {
    std::vector<RWord> gens;
    for (std::size_t i = 0; i < length; ++i) {
        RWord w = zero_word(ctx, length);
        w[i] = RingElem::constant(ctx, 1);
        gens.push_back(std::move(w));
    }
    return ConstaCodeR(ctx, length, unit, std::move(gens));
}

std::vector<RWord> ConstaCodeR::basis_words() const {
    std::vector<RWord> out;
    for (const auto& v : expanded_.basis()) out.push_back(collapse(ctx_, v));
    return out;
}

bool ConstaCodeR::contains(const RWord& w) const {
    if (w.size() != length_) throw Error(ErrorKind::ContextMismatch, "membership: length mismatch");
    return expanded_.contains(expand(w));
}

// ---------------------------------------------------------------- shifts

FpVector shift(const FpVector& v, ShiftKind kind) {
    if (kind == ShiftKind::Gamma) throw Error(ErrorKind::Precondition, "gamma shift needs a word over R");
    const std::size_t m = v.size();
    FpVector out(v.modulus(), m);
    if (m == 0) return out;
    for (std::size_t i = 1; i < m; ++i) out.set(i, v[i - 1]);
    out.set(0, kind == ShiftKind::Alpha ? v[m - 1] : fp::neg(v[m - 1], v.modulus()));
    return out;
}

RWord shift(const RWord& v, ShiftKind kind) {
    const std::size_t m = v.size();
    if (m == 0) return v;
    RWord out(v);
    for (std::size_t i = 1; i < m; ++i) out[i] = v[i - 1];
    switch (kind) {
        case ShiftKind::Alpha: out[0] = v[m - 1]; break;
        case ShiftKind::Beta: out[0] = -v[m - 1]; break;
        case ShiftKind::Gamma: out[0] = lambda_unit(v[m - 1].context()) * v[m - 1]; break;
    }
    return out;
}

bool is_invariant(const LinearCodeFp& code, ShiftKind kind) {
    if (kind == ShiftKind::Gamma) throw Error(ErrorKind::Precondition, "gamma invariance needs a code over R");
    for (const auto& b : code.basis())
        if (!code.contains(shift(b, kind))) return false;
    return true;
}

bool is_invariant(const ConstaCodeR& code, ShiftKind kind) {
    for (const auto& w : code.basis_words())
        if (!code.contains(shift(w, kind))) return false;
    return true;
}

// ---------------------------------------------------------------- polynomial view

QuotientModulus quotient_for(RingContext ctx, std::size_t m, UnitTag unit) {
    switch (unit) {
        case UnitTag::Cyclic: return QuotientModulus::cyclic(ctx, m);
        case UnitTag::Negacyclic: return QuotientModulus::negacyclic(ctx, m);
        case UnitTag::Lambda: return QuotientModulus::constacyclic(ctx, m);
    }
    return QuotientModulus::constacyclic(ctx, m);
}

PolyR word_to_poly(const RWord& w) {
    if (w.empty()) throw Error(ErrorKind::Precondition, "empty word");
    return PolyR(w.front().context(), w);
}

RWord poly_to_word(RingContext ctx, const PolyR& f, std::size_t m) {
    if (f.degree().value_or(0) >= m && !f.is_zero())
        throw Error(ErrorKind::Precondition, "polynomial of degree >= m has no word representative");
    RWord w = zero_word(ctx, m);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) w[i] = f.coeffs()[i];
    return w;
}

std::vector<PolyR> poly_repr(const ConstaCodeR& code) {
    std::vector<PolyR> out;
    for (const auto& g : code.generators()) out.push_back(word_to_poly(g));
    return out;
}

bool ideal_closed_under_a(const ConstaCodeR& code) {
    const RingContext& ctx = code.context();
    const QuotientModulus mod = quotient_for(ctx, code.length(), code.unit());
    const PolyR a = PolyR::monomial(RingElem::constant(ctx, 1), 1);
    for (const auto& w : code.basis_words()) {
        PolyR prod = reduce(a * word_to_poly(w), mod);
        if (!code.contains(poly_to_word(ctx, prod, code.length()))) return false;
    }
    return true;
}

ConstaCodeR ideal_code(RingContext ctx, std::size_t m, UnitTag unit, const std::vector<PolyR>& generators) {
    const QuotientModulus mod = quotient_for(ctx, m, unit);
    const PolyR a = PolyR::monomial(RingElem::constant(ctx, 1), 1);
    std::vector<RWord> rows;
    for (const auto& g : generators) {
        PolyR cur = reduce(g, mod);
        for (std::size_t i = 0; i < m; ++i) {
            rows.push_back(poly_to_word(ctx, cur, m));
            cur = reduce(a * cur, mod);
        }
    }
    return ConstaCodeR(ctx, m, unit, std::move(rows));
}

namespace {

PolyFp sign_modulus(Residue p, std::size_t m, Sign sign) { return PolyFp::binomial(p, m, sign == Sign::Plus ? 1 : -1); }

PolyFp vector_poly(const FpVector& v) { return PolyFp(v.modulus(), v.entries()); }

FpVector poly_vector(const PolyFp& f, std::size_t m) {
    FpVector v(f.modulus(), m);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) v.set(i, f.coeffs()[i]);
    return v;
}

}  // namespace

LinearCodeFp poly_code(Residue p, std::size_t m, const PolyFp& h, Sign sign) {
    const PolyFp mod = sign_modulus(p, m, sign);
    const PolyFp a = PolyFp::monomial(p, 1);
    std::vector<FpVector> rows;
    PolyFp cur = h % mod;
    for (std::size_t i = 0; i < m; ++i) {
        rows.push_back(poly_vector(cur, m));
        cur = (a * cur) % mod;
    }
    return LinearCodeFp(p, m, std::move(rows));
}

// ---------------------------------------------------------------- sigma decomposition

void require_sigma_decomposition(RingContext ctx) {
    if (ctx.k == 2) return;
    if (ctx.k < 2)
        throw Error(ErrorKind::Precondition,
                    "sigma decomposition needs k = 2: sigma_2 and sigma_3 are undefined for k = 1");
    const IdempotentReport report = idempotent_report(ctx);
    for (const auto& id : report.identities())
        if (!id.holds())
            throw Error(ErrorKind::Precondition, "sigma decomposition needs k = 2: for k = " + std::to_string(ctx.k) +
                                                     " the identity '" + id.name + "' fails");
    throw Error(ErrorKind::Precondition, "sigma decomposition is supported for k = 2 only");
}

Decomposition decompose(const ConstaCodeR& code) {
    const RingContext& ctx = code.context();
    if (ctx.k % 2 != 0)
        throw Error(ErrorKind::Precondition, "decompose needs even k (u -> -1 is not a homomorphism for k = " +
                                                 std::to_string(ctx.k) + ")");
    Decomposition out{{LinearCodeFp::zero(ctx.p, code.length()), LinearCodeFp::zero(ctx.p, code.length()),
                       LinearCodeFp::zero(ctx.p, code.length())},
                      {}};
    if (ctx.k != 2) {
        for (const auto& id : idempotent_report(ctx).identities())
            if (!id.holds()) out.warnings.push_back("identity '" + id.name + "' fails for k = " + std::to_string(ctx.k));
    }
    const std::array<Residue, 3> points{0, 1, ctx.p - 1};
    std::array<std::vector<FpVector>, 3> rows;
    for (const auto& w : code.basis_words()) {
        for (std::size_t t = 0; t < 3; ++t) {
            FpVector v(ctx.p, code.length());
            for (std::size_t i = 0; i < w.size(); ++i) v.set(i, ring_eval(w[i], points[t]).value());
            rows[t].push_back(std::move(v));
        }
    }
    out.triple = SigmaTriple{LinearCodeFp(ctx.p, code.length(), std::move(rows[0])),
                             LinearCodeFp(ctx.p, code.length(), std::move(rows[1])),
                             LinearCodeFp(ctx.p, code.length(), std::move(rows[2]))};
    return out;
}

namespace {

void check_triple(const SigmaTriple& t, RingContext ctx) {
    const std::size_t m = t.l1.length();
    if (t.l2.length() != m || t.l3.length() != m)
        throw Error(ErrorKind::ContextMismatch, "sigma triple components differ in length");
    if (t.l1.modulus() != ctx.p || t.l2.modulus() != ctx.p || t.l3.modulus() != ctx.p)
        throw Error(ErrorKind::ContextMismatch, "sigma triple modulus differs from the ring");
}

}  // namespace

ConstaCodeR build_from_triple(const SigmaTriple& t, RingContext ctx) {
    require_sigma_decomposition(ctx);
    check_triple(t, ctx);
    const std::size_t m = t.l1.length();
    std::vector<RWord> gens;
    const std::array<const LinearCodeFp*, 3> parts{&t.l1, &t.l2, &t.l3};
    for (int i = 0; i < 3; ++i) {
        const RingElem s = sigma(i + 1, ctx);
        for (const auto& b : parts[static_cast<std::size_t>(i)]->basis()) {
            RWord w = zero_word(ctx, m);
            for (std::size_t j = 0; j < m; ++j) w[j] = ring_scalar_mul(s, b[j]);
            gens.push_back(std::move(w));
        }
    }
    return ConstaCodeR(ctx, m, UnitTag::Lambda, std::move(gens));
}

PolyFp generator_polynomial(const LinearCodeFp& code, Sign sign) {
    const ShiftKind kind = sign == Sign::Plus ? ShiftKind::Alpha : ShiftKind::Beta;
    if (!is_invariant(code, kind))
        throw Error(ErrorKind::Precondition,
                    std::string("code is not ") + (sign == Sign::Plus ? "cyclic" : "negacyclic"));
    PolyFp g = sign_modulus(code.modulus(), code.length(), sign);
    for (const auto& b : code.basis()) g = poly_gcd(g, vector_poly(b));
    return monic(g);
}

namespace {

std::array<PolyFp, 3> component_generators(const SigmaTriple& t) {
    return {generator_polynomial(t.l1, Sign::Plus), generator_polynomial(t.l2, Sign::Minus),
            generator_polynomial(t.l3, Sign::Minus)};
}

PolyR sigma_combination(RingContext ctx, const std::array<PolyFp, 3>& parts) {
    PolyR sum(ctx);
    for (int i = 0; i < 3; ++i) sum = sum + sigma(i + 1, ctx) * PolyR::from_fp(ctx, parts[static_cast<std::size_t>(i)]);
    return sum;
}

}  // namespace

SingleGenerator single_generator(const SigmaTriple& t, RingContext ctx) {
    require_sigma_decomposition(ctx);
    check_triple(t, ctx);
    SingleGenerator out{component_generators(t), {PolyR(ctx), PolyR(ctx), PolyR(ctx)}, PolyR(ctx)};
    for (int i = 0; i < 3; ++i) {
        auto idx = static_cast<std::size_t>(i);
        out.triple_form[idx] = sigma(i + 1, ctx) * PolyR::from_fp(ctx, out.components[idx]);
    }
    out.h = sigma_combination(ctx, out.components);
    return out;
}

HkProduct check_hk_product(const SigmaTriple& t, RingContext ctx) {
    require_sigma_decomposition(ctx);
    check_triple(t, ctx);
    const std::size_t m = t.l1.length();
    const auto h = component_generators(t);
    const std::array<Sign, 3> signs{Sign::Plus, Sign::Minus, Sign::Minus};
    std::array<PolyFp, 3> k{PolyFp(ctx.p), PolyFp(ctx.p), PolyFp(ctx.p)};
    for (std::size_t i = 0; i < 3; ++i) {
        DivMod qr = poly_divmod(sign_modulus(ctx.p, m, signs[i]), h[i]);
        if (!qr.remainder.is_zero()) throw Error(ErrorKind::Precondition, "generator does not divide a^m -/+ 1");
        k[i] = qr.quotient;
    }
    PolyR hp = sigma_combination(ctx, h);
    PolyR kp = sigma_combination(ctx, k);
    return HkProduct{h, k, hp, kp, hp * kp, QuotientModulus::constacyclic(ctx, m).as_poly()};
}

// ---------------------------------------------------------------- duals

LinearCodeFp dual_fp(const LinearCodeFp& code) {
    std::vector<FpVector> rows;
    for (auto& r : linalg::null_space(code.rref())) rows.emplace_back(code.modulus(), std::move(r));
    return LinearCodeFp(code.modulus(), code.length(), std::move(rows));
}

ConstaCodeR dual_R(const ConstaCodeR& code) {
    const RingContext& ctx = code.context();
    const std::size_t k = static_cast<std::size_t>(ctx.k);
    const std::size_t width = k + 1;
    const std::size_t n = code.length() * width;
    std::vector<linalg::Row> eqs;
    // Coefficient e of sum_i x_i g_i, as a linear form in the (i, a) coordinates of x.
    for (const auto& w : code.basis_words()) {
        std::vector<linalg::Row> block(width, linalg::Row(n, 0));
        for (std::size_t i = 0; i < code.length(); ++i)
            for (std::size_t a = 0; a <= k; ++a)
                for (std::size_t b = 0; b <= k; ++b) {
                    const Residue gb = w[i].coeffs()[b];
                    if (gb == 0) continue;
                    auto e = static_cast<std::size_t>(reduce_exponent(static_cast<int>(a + b), ctx.k));
                    Residue& slot = block[e][i * width + a];
                    slot = fp::add(slot, gb, ctx.p);
                }
        for (auto& r : block) eqs.push_back(std::move(r));
    }
    const linalg::Rref sys = linalg::rref(ctx.p, n, std::move(eqs));
    std::vector<RWord> gens;
    for (const auto& x : linalg::null_space(sys)) gens.push_back(collapse(ctx, FpVector(ctx.p, x)));
    return ConstaCodeR(ctx, code.length(), code.unit(), std::move(gens));
}

ReciprocalDual dual_via_reciprocal(const SigmaTriple& t, RingContext ctx) {
    const HkProduct hk = check_hk_product(t, ctx);
    const std::size_t m = t.l1.length();
    std::array<PolyFp, 3> rec{reciprocal(hk.k_components[0]), reciprocal(hk.k_components[1]),
                              reciprocal(hk.k_components[2])};
    std::vector<PolyR> triple_gens;
    std::size_t exponent = 0;
    for (int i = 0; i < 3; ++i) {
        auto idx = static_cast<std::size_t>(i);
        triple_gens.push_back(sigma(i + 1, ctx) * PolyR::from_fp(ctx, rec[idx]));
        exponent += hk.h_components[idx].degree().value_or(0);
    }
    PolyR single = sigma_combination(ctx, rec);
    return ReciprocalDual{rec, single, ideal_code(ctx, m, UnitTag::Lambda, triple_gens),
                          ideal_code(ctx, m, UnitTag::Lambda, {single}), exponent};
}

// ---------------------------------------------------------------- distance, orthogonality

std::size_t min_distance(const LinearCodeFp& code, std::uint64_t cap) {
    if (code.dimension() == 0) throw Error(ErrorKind::Precondition, "minimum distance of the zero code is undefined");
    std::size_t best = code.length();
    code.for_each_codeword(
        [&](const FpVector& v) {
            std::size_t w = v.weight();
            if (w != 0) best = std::min(best, w);
        },
        cap);
    return best;
}

std::size_t min_distance(const ConstaCodeR& code, std::uint64_t cap) {
    const LinearCodeFp& ex = code.expanded();
    if (ex.dimension() == 0) throw Error(ErrorKind::Precondition, "minimum distance of the zero code is undefined");
    const std::size_t width = static_cast<std::size_t>(code.context().k) + 1;
    std::size_t best = code.length();
    ex.for_each_codeword(
        [&](const FpVector& v) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < code.length(); ++i)
                for (std::size_t j = 0; j < width; ++j)
                    if (v[i * width + j] != 0) {
                        ++w;
                        break;
                    }
            if (w != 0) best = std::min(best, w);
        },
        cap);
    return best;
}

bool is_self_orthogonal(const LinearCodeFp& code) {
    const auto b = code.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i; j < b.size(); ++j)
            if (dot(b[i], b[j]) != 0) return false;
    return true;
}

bool is_self_orthogonal(const ConstaCodeR& code) {
    const auto& g = code.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g.size(); ++j)
            if (!inner_product(g[i], g[j]).is_zero()) return false;
    return true;
}

RWord mu_bar(const RWord& v) {
    RWord out(v);
    if (v.empty()) return out;
    const RingElem lam = lambda_unit(v.front().context());
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = lam * out[i];
    return out;
}

}  // namespace rcc
