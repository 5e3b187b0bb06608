#include "rcc/gf_prime.hpp"

#include <string>

namespace rcc {

namespace fp {

Residue inv(Residue a, Residue p) {
    a %= p;
    if (a == 0) throw Error(ErrorKind::NotInvertible, "0 has no inverse modulo " + std::to_string(p));
    Bezout b = ext_euclid(a, p);
    if (b.g != 1) throw Error(ErrorKind::NotInvertible, std::to_string(a) + " is not invertible modulo " + std::to_string(p));
    return reduce(b.s, p);
}

Residue pow(Residue a, std::uint64_t e, Residue p) {
    Residue r = 1 % p;
    Residue x = a % p;
    while (e != 0) {
        if (e & 1U) r = mul(r, x, p);
        x = mul(x, x, p);
        e >>= 1U;
    }
    return r;
}

}  // namespace fp

Bezout ext_euclid(std::int64_t a, std::int64_t b) {
    std::int64_t r0 = a, r1 = b;
    std::int64_t s0 = 1, s1 = 0;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0 < 0) return {-r0, -s0, -t0};
    return {r0, s0, t0};
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {

void check_same(const FpElem& x, const FpElem& y) {
    if (x.modulus() != y.modulus())
        throw Error(ErrorKind::ContextMismatch, "modulus mismatch: " + std::to_string(x.modulus()) + " vs " +
                                                    std::to_string(y.modulus()));
}

}  // namespace

FpElem::FpElem(std::int64_t value, Residue modulus) : value_(0), modulus_(modulus) {
    require(modulus >= 2, ErrorKind::InvalidParameter, "modulus must be at least 2");
    value_ = fp::reduce(value, modulus);
}

FpElem FpElem::inverse() const { return FpElem(fp::inv(value_, modulus_), modulus_); }

FpElem fp_add(const FpElem& x, const FpElem& y) {
    check_same(x, y);
    return FpElem(fp::add(x.value(), y.value(), x.modulus()), x.modulus());
}

FpElem fp_sub(const FpElem& x, const FpElem& y) {
    check_same(x, y);
    return FpElem(fp::sub(x.value(), y.value(), x.modulus()), x.modulus());
}

FpElem fp_mul(const FpElem& x, const FpElem& y) {
    check_same(x, y);
    return FpElem(fp::mul(x.value(), y.value(), x.modulus()), x.modulus());
}

FpElem fp_neg(const FpElem& x) { return FpElem(fp::neg(x.value(), x.modulus()), x.modulus()); }

FpElem fp_inv(const FpElem& x) { return x.inverse(); }

std::ostream& operator<<(std::ostream& os, const FpElem& x) { return os << x.value(); }

FpVector::FpVector(Residue p, std::vector<Residue> entries) : p_(p), entries_(std::move(entries)) {
    for (auto& e : entries_) e %= p_;
}

FpVector::FpVector(Residue p, std::initializer_list<std::int64_t> entries) : p_(p) {
    entries_.reserve(entries.size());
    for (auto e : entries) entries_.push_back(fp::reduce(e, p_));
}

bool FpVector::is_zero() const noexcept {
    for (auto e : entries_)
        if (e != 0) return false;
    return true;
}

std::size_t FpVector::weight() const noexcept {
    std::size_t w = 0;
    for (auto e : entries_) w += (e != 0);
    return w;
}

namespace {

void check_same(const FpVector& x, const FpVector& y) {
    if (x.modulus() != y.modulus()) throw Error(ErrorKind::ContextMismatch, "vector modulus mismatch");
    if (x.size() != y.size()) throw Error(ErrorKind::ContextMismatch, "vector length mismatch");
}

}  // namespace

FpVector operator+(const FpVector& x, const FpVector& y) {
    check_same(x, y);
    FpVector r(x.modulus(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r.set(i, fp::add(x[i], y[i], x.modulus()));
    return r;
}

FpVector operator-(const FpVector& x, const FpVector& y) {
    check_same(x, y);
    FpVector r(x.modulus(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r.set(i, fp::sub(x[i], y[i], x.modulus()));
    return r;
}

FpVector scale(const FpVector& x, Residue c) {
    FpVector r(x.modulus(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r.set(i, fp::mul(x[i], c % x.modulus(), x.modulus()));
    return r;
}

Residue dot(const FpVector& x, const FpVector& y) {
    check_same(x, y);
    Residue acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = fp::add(acc, fp::mul(x[i], y[i], x.modulus()), x.modulus());
    return acc;
}

std::ostream& operator<<(std::ostream& os, const FpVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os << ')';
}

Residue validate_prime(std::int64_t p, bool allow_two) {
    if (p == 2) {
        if (allow_two) return 2;
        throw Error(ErrorKind::InvalidParameter, "p = 2: 2 not invertible");
    }
    if (p < 2) throw Error(ErrorKind::InvalidParameter, "p = " + std::to_string(p) + ": p must be an odd prime");
    if (p % 2 == 0)
        throw Error(ErrorKind::InvalidParameter, "p = " + std::to_string(p) + " is even: 2 not invertible");
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw Error(ErrorKind::InvalidParameter, "p = " + std::to_string(p) + ": p not prime");
    if (p > static_cast<std::int64_t>(kMaxPrime))
        throw Error(ErrorKind::InvalidParameter, "p = " + std::to_string(p) + " exceeds the 2^16 cap");
    return static_cast<Residue>(p);
}

Params validate_params(std::int64_t p, std::int64_t k, std::int64_t m) {
    Residue q = validate_prime(p);
    if (k < 1) throw Error(ErrorKind::InvalidParameter, "k = " + std::to_string(k) + ": k must be at least 1");
    if (m < 1) throw Error(ErrorKind::InvalidParameter, "m = " + std::to_string(m) + ": m must be at least 1");
    if (k > 64 || m > 4096) throw Error(ErrorKind::InvalidParameter, "k or m beyond supported range");
    return Params{q, static_cast<int>(k), static_cast<int>(m)};
}

}  // namespace rcc
