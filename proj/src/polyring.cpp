#include "rcc/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>
#include <sstream>

namespace rcc {

// ---------------------------------------------------------------- PolyFp

PolyFp::PolyFp(Residue p) : p_(p) { require(p >= 2, ErrorKind::InvalidParameter, "polynomial modulus must be >= 2"); }

PolyFp::PolyFp(Residue p, std::vector<Residue> ascending) : p_(p), c_(std::move(ascending)) {
    require(p >= 2, ErrorKind::InvalidParameter, "polynomial modulus must be >= 2");
    for (auto& c : c_) c %= p_;
    trim();
}

PolyFp::PolyFp(Residue p, std::initializer_list<std::int64_t> ascending) : PolyFp(p) {
    c_.reserve(ascending.size());
    for (auto c : ascending) c_.push_back(fp::reduce(c, p_));
    trim();
}

PolyFp PolyFp::constant(Residue p, std::int64_t c) { return PolyFp(p, {c}); }

PolyFp PolyFp::monomial(Residue p, std::size_t degree, std::int64_t c) {
    std::vector<Residue> v(degree + 1, 0);
    v[degree] = fp::reduce(c, p);
    return PolyFp(p, std::move(v));
}

PolyFp PolyFp::binomial(Residue p, std::size_t m, std::int64_t c) {
    std::vector<Residue> v(m + 1, 0);
    v[m] = 1;
    v[0] = fp::sub(v[0], fp::reduce(c, p), p);
    return PolyFp(p, std::move(v));
}

Degree PolyFp::degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

void PolyFp::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

namespace {

void check_same(const PolyFp& f, const PolyFp& g) {
    if (f.modulus() != g.modulus()) throw Error(ErrorKind::ContextMismatch, "polynomial modulus mismatch");
}

}  // namespace

PolyFp operator+(const PolyFp& f, const PolyFp& g) {
    check_same(f, g);
    const Residue p = f.modulus();
    std::vector<Residue> r(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fp::add(f.coeff(i), g.coeff(i), p);
    return PolyFp(p, std::move(r));
}

PolyFp operator-(const PolyFp& f, const PolyFp& g) {
    check_same(f, g);
    const Residue p = f.modulus();
    std::vector<Residue> r(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fp::sub(f.coeff(i), g.coeff(i), p);
    return PolyFp(p, std::move(r));
}

PolyFp operator-(const PolyFp& f) { return PolyFp(f.modulus()) - f; }

PolyFp operator*(const PolyFp& f, const PolyFp& g) {
    check_same(f, g);
    const Residue p = f.modulus();
    if (f.is_zero() || g.is_zero()) return PolyFp(p);
    std::vector<Residue> r(f.coeffs().size() + g.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            r[i + j] = fp::add(r[i + j], fp::mul(f.coeffs()[i], g.coeffs()[j], p), p);
    }
    return PolyFp(p, std::move(r));
}

PolyFp scale(const PolyFp& f, Residue c) {
    std::vector<Residue> r(f.coeffs());
    for (auto& x : r) x = fp::mul(x, c % f.modulus(), f.modulus());
    return PolyFp(f.modulus(), std::move(r));
}

bool poly_less(const PolyFp& f, const PolyFp& g) {
    if (f.coeffs().size() != g.coeffs().size()) return f.coeffs().size() < g.coeffs().size();
    return std::lexicographical_compare(f.coeffs().rbegin(), f.coeffs().rend(), g.coeffs().rbegin(),
                                        g.coeffs().rend());
}

DivMod poly_divmod(const PolyFp& f, const PolyFp& g) {
    check_same(f, g);
    if (g.is_zero()) throw Error(ErrorKind::Precondition, "polynomial division by zero");
    const Residue p = f.modulus();
    if (f.coeffs().size() < g.coeffs().size()) return {PolyFp(p), f};
    std::vector<Residue> rem(f.coeffs());
    const std::size_t dg = g.coeffs().size() - 1;
    std::vector<Residue> quo(rem.size() - dg, 0);
    const Residue lead_inv = fp::inv(g.lead(), p);
    for (std::size_t i = rem.size(); i-- > dg;) {
        Residue c = fp::mul(rem[i], lead_inv, p);
        if (c == 0) continue;
        quo[i - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j)
            rem[i - dg + j] = fp::sub(rem[i - dg + j], fp::mul(c, g.coeffs()[j], p), p);
    }
    rem.resize(dg);
    return {PolyFp(p, std::move(quo)), PolyFp(p, std::move(rem))};
}

PolyFp operator/(const PolyFp& f, const PolyFp& g) { return poly_divmod(f, g).quotient; }
PolyFp operator%(const PolyFp& f, const PolyFp& g) { return poly_divmod(f, g).remainder; }

bool divides(const PolyFp& d, const PolyFp& f) { return (f % d).is_zero(); }

PolyFp monic(const PolyFp& f) {
    if (f.is_zero()) return f;
    return scale(f, fp::inv(f.lead(), f.modulus()));
}

PolyFp derivative(const PolyFp& f) {
    if (f.coeffs().size() <= 1) return PolyFp(f.modulus());
    std::vector<Residue> r(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        r[i - 1] = fp::mul(f.coeffs()[i], static_cast<Residue>(i % f.modulus()), f.modulus());
    return PolyFp(f.modulus(), std::move(r));
}

Residue evaluate(const PolyFp& f, Residue x) {
    Residue acc = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;)
        acc = fp::add(fp::mul(acc, x, f.modulus()), f.coeffs()[i], f.modulus());
    return acc;
}

PolyFp pow_mod(const PolyFp& base, std::uint64_t e, const PolyFp& mod) {
    PolyFp result = PolyFp::constant(base.modulus(), 1) % mod;
    PolyFp b = base % mod;
    while (e != 0) {
        if (e & 1U) result = (result * b) % mod;
        e >>= 1U;
        if (e != 0) b = (b * b) % mod;
    }
    return result;
}

GcdExt poly_gcd_ext(const PolyFp& f, const PolyFp& g) {
    check_same(f, g);
    const Residue p = f.modulus();
    if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::Precondition, "gcd of two zero polynomials");
    PolyFp r0 = f, r1 = g;
    PolyFp s0 = PolyFp::constant(p, 1), s1(p);
    PolyFp t0(p), t1 = PolyFp::constant(p, 1);
    while (!r1.is_zero()) {
        DivMod qr = poly_divmod(r0, r1);
        r0 = std::exchange(r1, qr.remainder);
        s0 = std::exchange(s1, s0 - qr.quotient * s1);
        t0 = std::exchange(t1, t0 - qr.quotient * t1);
    }
    const Residue li = fp::inv(r0.lead(), p);
    return {scale(r0, li), scale(s0, li), scale(t0, li)};
}

PolyFp poly_gcd(const PolyFp& f, const PolyFp& g) { return poly_gcd_ext(f, g).d; }

// ---------------------------------------------------------------- factorization

namespace {

using Split = std::vector<FactorPower>;

/// f(a) = g(a)^p with all exponents of f multiples of p.
PolyFp pth_root(const PolyFp& f) {
    const Residue p = f.modulus();
    std::vector<Residue> r(f.coeffs().size() / p + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) r[i / p] = f.coeffs()[i];
    return PolyFp(p, std::move(r));
}

void squarefree(const PolyFp& f, int mult, Split& out) {
    const Residue p = f.modulus();
    if (f.coeffs().size() <= 1) return;
    PolyFp df = derivative(f);
    if (df.is_zero()) {
        squarefree(pth_root(f), mult * static_cast<int>(p), out);
        return;
    }
    PolyFp c = poly_gcd(f, df);
    PolyFp w = f / c;
    int i = 1;
    while (!w.is_one()) {
        PolyFp y = poly_gcd(w, c);
        PolyFp z = w / y;
        if (!z.is_one()) out.push_back({monic(z), i * mult});
        ++i;
        w = y;
        c = c / y;
    }
    if (!c.is_one()) squarefree(pth_root(c), mult * static_cast<int>(p), out);
}

/// Pairs (g, d): g is the product of all degree-d irreducible factors of the squarefree monic f.
std::vector<std::pair<PolyFp, std::size_t>> distinct_degree(const PolyFp& f) {
    const Residue p = f.modulus();
    std::vector<std::pair<PolyFp, std::size_t>> out;
    PolyFp rest = f;
    const PolyFp x = PolyFp::monomial(p, 1);
    PolyFp h = x % rest;
    for (std::size_t d = 1; 2 * d <= *rest.degree(); ++d) {
        h = pow_mod(h, p, rest);
        PolyFp g = poly_gcd(rest, h - x);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree().value_or(0) > 0) out.emplace_back(rest, *rest.degree());
    return out;
}

PolyFp random_poly(Residue p, std::size_t below_degree, std::mt19937_64& rng) {
    std::vector<Residue> c(below_degree);
    for (auto& x : c) x = static_cast<Residue>(rng() % p);
    return PolyFp(p, std::move(c));
}

/// Splitting polynomial for Cantor-Zassenhaus: r^{(p^d-1)/2} - 1 for odd p, the trace for p = 2.
PolyFp splitter(const PolyFp& r, std::size_t d, const PolyFp& f) {
    const Residue p = f.modulus();
    if (p == 2) {
        PolyFp t = r % f;
        PolyFp acc = t;
        for (std::size_t i = 1; i < d; ++i) {
            t = (t * t) % f;
            acc = acc + t;
        }
        return acc;
    }
    // (p^d - 1)/2 = (1 + p + ... + p^{d-1}) (p - 1)/2
    PolyFp t = r % f;
    PolyFp norm = t;
    for (std::size_t i = 1; i < d; ++i) {
        t = pow_mod(t, p, f);
        norm = (norm * t) % f;
    }
    return pow_mod(norm, (p - 1) / 2, f) - PolyFp::constant(p, 1);
}

/// Deterministic fallback: finds a monic factor of degree d by enumeration.
std::optional<PolyFp> exhaustive_factor(const PolyFp& f, std::size_t d) {
    const Residue p = f.modulus();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) {
        count *= p;
        if (count > 1000000) return std::nullopt;
    }
    std::vector<Residue> c(d + 1, 0);
    c[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t i = 0; i < d; ++i) {
            c[i] = static_cast<Residue>(v % p);
            v /= p;
        }
        PolyFp g(p, c);
        if (divides(g, f)) return g;
    }
    return std::nullopt;
}

void equal_degree(const PolyFp& f, std::size_t d, std::mt19937_64& rng, std::vector<PolyFp>& out) {
    const std::size_t n = *f.degree();
    if (n == d) {
        out.push_back(f);
        return;
    }
    constexpr int kRandomAttempts = 64;
    for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
        PolyFp r = random_poly(f.modulus(), n, rng);
        if (r.degree().value_or(0) == 0) continue;
        PolyFp g = poly_gcd(f, splitter(r, d, f));
        std::size_t dg = *g.degree();
        if (dg > 0 && dg < n) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
    if (auto g = exhaustive_factor(f, d)) {
        out.push_back(*g);
        equal_degree(f / *g, d, rng, out);
        return;
    }
    // Each random attempt splits with probability about 1/2; keep going.
    for (;;) {
        PolyFp r = random_poly(f.modulus(), n, rng);
        PolyFp g = poly_gcd(f, splitter(r, d, f));
        std::size_t dg = g.degree().value_or(0);
        if (dg > 0 && dg < n) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

PolyFp Factorization::product(Residue p) const {
    PolyFp r = PolyFp::constant(p, unit);
    for (const auto& fp : factors)
        for (int i = 0; i < fp.multiplicity; ++i) r = r * fp.factor;
    return r;
}

Factorization factor_poly(const PolyFp& f, std::uint64_t seed) {
    if (f.degree().value_or(0) < 1) throw Error(ErrorKind::Precondition, "factor_poly needs degree >= 1");
    std::mt19937_64 rng(seed);
    Factorization result{f.lead(), {}};
    Split sqf;
    squarefree(monic(f), 1, sqf);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [g, d] : distinct_degree(part)) {
            std::vector<PolyFp> irreducibles;
            equal_degree(g, d, rng, irreducibles);
            for (auto& q : irreducibles) result.factors.push_back({monic(q), mult});
        }
    }
    // Merge repeated factors (a factor can surface from several squarefree layers only once,
    // but keep the representation canonical regardless).
    std::sort(result.factors.begin(), result.factors.end(),
              [](const FactorPower& a, const FactorPower& b) { return poly_less(a.factor, b.factor); });
    std::vector<FactorPower> merged;
    for (auto& fp : result.factors) {
        if (!merged.empty() && merged.back().factor == fp.factor)
            merged.back().multiplicity += fp.multiplicity;
        else
            merged.push_back(fp);
    }
    result.factors = std::move(merged);
    return result;
}

bool is_irreducible(const PolyFp& f) {
    auto deg = f.degree();
    if (!deg || *deg == 0) return false;
    const std::size_t n = *deg;
    const Residue p = f.modulus();
    const PolyFp g = monic(f);
    const PolyFp x = PolyFp::monomial(p, 1);
    // x^{p^n} = x mod g, and gcd(x^{p^{n/q}} - x, g) = 1 for every prime q | n.
    auto frob = [&](std::size_t times) {
        PolyFp h = x % g;
        for (std::size_t i = 0; i < times; ++i) h = pow_mod(h, p, g);
        return h;
    };
    if (!(frob(n) - x % g).is_zero()) return false;
    for (std::size_t q = 2; q <= n; ++q) {
        if (n % q != 0 || !is_prime(q)) continue;
        if (!poly_gcd(g, frob(n / q) - x).is_one()) return false;
    }
    return true;
}

std::vector<PolyFp> divisors_of(const PolyFp& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(ErrorKind::Precondition, "divisors of the zero polynomial");
    const Residue p = f.modulus();
    std::vector<PolyFp> out{PolyFp::constant(p, 1)};
    if (f.degree().value_or(0) == 0) return out;
    for (const auto& [factor, mult] : factor_poly(f, seed).factors) {
        std::vector<PolyFp> next;
        for (const auto& d : out) {
            PolyFp cur = d;
            next.push_back(cur);
            for (int e = 1; e <= mult; ++e) {
                cur = cur * factor;
                next.push_back(cur);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), poly_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PolyFp reciprocal(const PolyFp& f) {
    if (f.is_zero() || f.coeff(0) == 0)
        throw Error(ErrorKind::Precondition, "reciprocal needs a nonzero constant term");
    std::vector<Residue> r(f.coeffs().rbegin(), f.coeffs().rend());
    return monic(PolyFp(f.modulus(), std::move(r)));
}

// ---------------------------------------------------------------- text form

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, Residue p) : s_(text), p_(p) {}

    PolyFp parse() {
        skip_ws();
        if (peek() == '[') return parse_array();
        std::vector<Residue> acc;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) {
                if (first) fail("empty polynomial");
                break;
            }
            std::int64_t sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            parse_term(sign, acc);
        }
        return PolyFp(p_, std::move(acc));
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::Parse, "malformed polynomial '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
    }
    bool is_var(char c) const { return c == 'a' || c == 'x'; }

    std::optional<std::int64_t> number() {
        std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000'000) fail("number too large");
            ++pos_;
        }
        if (pos_ == start) return std::nullopt;
        return v;
    }

    void parse_term(std::int64_t sign, std::vector<Residue>& acc) {
        std::int64_t coef = 1;
        std::size_t exp = 0;
        auto n = number();
        skip_ws();
        if (n) coef = *n;
        if (peek() == '*') {
            if (!n) fail("'*' without coefficient");
            ++pos_;
            skip_ws();
            if (!is_var(peek())) fail("expected variable after '*'");
        }
        if (is_var(peek())) {
            ++pos_;
            exp = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                auto e = number();
                if (!e) fail("expected exponent");
                if (*e > 100000) fail("exponent too large");
                exp = static_cast<std::size_t>(*e);
            }
        } else if (!n) {
            fail("expected coefficient or variable");
        }
        if (acc.size() <= exp) acc.resize(exp + 1, 0);
        acc[exp] = fp::add(acc[exp], fp::reduce(sign * coef, p_), p_);
    }

    PolyFp parse_array() {
        ++pos_;
        std::vector<Residue> acc;
        skip_ws();
        if (peek() == ']') {
            ++pos_;
        } else {
            while (true) {
                skip_ws();
                std::int64_t sign = 1;
                if (peek() == '-') {
                    sign = -1;
                    ++pos_;
                }
                auto n = number();
                if (!n) fail("expected integer");
                acc.push_back(fp::reduce(sign * *n, p_));
                skip_ws();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                if (peek() == ']') {
                    ++pos_;
                    break;
                }
                fail("expected ',' or ']'");
            }
        }
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return PolyFp(p_, std::move(acc));
    }

    const std::string& s_;
    Residue p_;
    std::size_t pos_ = 0;
};

}  // namespace

PolyFp parse_poly(const std::string& text, Residue p) { return PolyParser(text, p).parse(); }

std::string to_string(const PolyFp& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        Residue c = f.coeffs()[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c;
        os << 'a';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::string to_array_string(const PolyFp& f) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) os << (i ? "," : "") << f.coeffs()[i];
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyFp& f) { return os << to_string(f); }

// ---------------------------------------------------------------- PolyR

PolyR::PolyR(RingContext ctx) : ctx_(ctx) {}

PolyR::PolyR(RingContext ctx, std::vector<RingElem> ascending) : ctx_(ctx), c_(std::move(ascending)) {
    for (const auto& c : c_)
        if (!(c.context() == ctx_)) throw Error(ErrorKind::ContextMismatch, "PolyR coefficient context mismatch");
    trim();
}

PolyR PolyR::from_fp(RingContext ctx, const PolyFp& f) {
    if (f.modulus() != ctx.p) throw Error(ErrorKind::ContextMismatch, "embedding F_p polynomial with wrong modulus");
    std::vector<RingElem> c;
    c.reserve(f.coeffs().size());
    for (auto x : f.coeffs()) c.push_back(RingElem::constant(ctx, x));
    return PolyR(ctx, std::move(c));
}

PolyR PolyR::constant(const RingElem& c) { return PolyR(c.context(), {c}); }

PolyR PolyR::monomial(const RingElem& c, std::size_t degree) {
    std::vector<RingElem> v(degree + 1, RingElem(c.context()));
    v[degree] = c;
    return PolyR(c.context(), std::move(v));
}

RingElem PolyR::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RingElem(ctx_); }

Degree PolyR::degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

bool PolyR::is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }

void PolyR::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

namespace {

void check_same(const PolyR& f, const PolyR& g) {
    if (!(f.context() == g.context())) throw Error(ErrorKind::ContextMismatch, "PolyR context mismatch");
}

}  // namespace

PolyR operator+(const PolyR& f, const PolyR& g) {
    check_same(f, g);
    std::vector<RingElem> r;
    const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
    r.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.push_back(f.coeff(i) + g.coeff(i));
    return PolyR(f.context(), std::move(r));
}

PolyR operator-(const PolyR& f, const PolyR& g) {
    check_same(f, g);
    std::vector<RingElem> r;
    const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
    r.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.push_back(f.coeff(i) - g.coeff(i));
    return PolyR(f.context(), std::move(r));
}

PolyR operator*(const PolyR& f, const PolyR& g) {
    check_same(f, g);
    if (f.is_zero() || g.is_zero()) return PolyR(f.context());
    std::vector<RingElem> r(f.coeffs().size() + g.coeffs().size() - 1, RingElem(f.context()));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) r[i + j] = r[i + j] + f.coeffs()[i] * g.coeffs()[j];
    }
    return PolyR(f.context(), std::move(r));
}

PolyR operator*(const RingElem& c, const PolyR& f) { return PolyR::constant(c) * f; }

QuotientModulus QuotientModulus::cyclic(RingContext ctx, std::size_t m) {
    return {m, RingElem::constant(ctx, 1)};
}

QuotientModulus QuotientModulus::negacyclic(RingContext ctx, std::size_t m) {
    return {m, RingElem::constant(ctx, -1)};
}

QuotientModulus QuotientModulus::constacyclic(RingContext ctx, std::size_t m) { return {m, lambda_unit(ctx)}; }

PolyR QuotientModulus::as_poly() const {
    return PolyR::monomial(RingElem::constant(unit.context(), 1), m) - PolyR::constant(unit);
}

PolyR reduce(const PolyR& f, const QuotientModulus& mod) {
    if (!(f.context() == mod.unit.context())) throw Error(ErrorKind::ContextMismatch, "modulus context mismatch");
    require(mod.m >= 1, ErrorKind::Precondition, "quotient length must be >= 1");
    std::vector<RingElem> c(f.coeffs());
    for (std::size_t i = c.size(); i-- > mod.m;) {
        if (c[i].is_zero()) continue;
        c[i - mod.m] = c[i - mod.m] + c[i] * mod.unit;
        c[i] = RingElem(f.context());
    }
    return PolyR(f.context(), std::move(c));
}

PolyR qr_mul(const PolyR& f, const PolyR& g, const QuotientModulus& mod) {
    if (f.degree().value_or(0) >= mod.m || g.degree().value_or(0) >= mod.m)
        throw Error(ErrorKind::Precondition, "qr_mul operands must have degree < m");
    return reduce(f * g, mod);
}

PolyR mu_map(const PolyR& f) {
    const RingElem lam = lambda_unit(f.context());
    std::vector<RingElem> c(f.coeffs());
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = c[i] * lam;
    return PolyR(f.context(), std::move(c));
}

std::string to_string(const PolyR& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const RingElem& c = f.coeffs()[i];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << '(' << to_pretty_string(c) << ')';
            continue;
        }
        if (!c.is_one()) os << '(' << to_pretty_string(c) << ')';
        os << 'a';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyR& f) { return os << to_string(f); }

}  // namespace rcc
