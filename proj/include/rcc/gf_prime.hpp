#ifndef RCC_GF_PRIME_HPP
#define RCC_GF_PRIME_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "rcc/error.hpp"

namespace rcc {

using Residue = std::uint32_t;

/// Largest admissible modulus. Products of two residues fit in 32 bits.
inline constexpr Residue kMaxPrime = 65521;

namespace fp {

inline Residue add(Residue a, Residue b, Residue p) {
    Residue s = a + b;
    return s >= p ? s - p : s;
}
inline Residue sub(Residue a, Residue b, Residue p) { return a >= b ? a - b : a + p - b; }
inline Residue neg(Residue a, Residue p) { return a == 0 ? 0 : p - a; }
inline Residue mul(Residue a, Residue b, Residue p) {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p);
}
inline Residue reduce(std::int64_t v, Residue p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<Residue>(r < 0 ? r + p : r);
}

/// Inverse by the extended Euclidean algorithm; throws NotInvertible on 0.
Residue inv(Residue a, Residue p);

Residue pow(Residue a, std::uint64_t e, Residue p);

}  // namespace fp

/// Result of the integer extended Euclidean algorithm: s*a + t*b = g.
struct Bezout {
    std::int64_t g;
    std::int64_t s;
    std::int64_t t;
};

Bezout ext_euclid(std::int64_t a, std::int64_t b);

bool is_prime(std::uint64_t n);

/// A residue modulo an odd prime (or 2, for the factorization front end).
class FpElem {
public:
    FpElem(std::int64_t value, Residue modulus);

    Residue value() const noexcept { return value_; }
    Residue modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FpElem inverse() const;

    friend bool operator==(const FpElem&, const FpElem&) = default;

private:
    Residue value_;
    Residue modulus_;
};

FpElem fp_add(const FpElem& x, const FpElem& y);
FpElem fp_sub(const FpElem& x, const FpElem& y);
FpElem fp_mul(const FpElem& x, const FpElem& y);
FpElem fp_neg(const FpElem& x);
FpElem fp_inv(const FpElem& x);

inline FpElem operator+(const FpElem& x, const FpElem& y) { return fp_add(x, y); }
inline FpElem operator-(const FpElem& x, const FpElem& y) { return fp_sub(x, y); }
inline FpElem operator*(const FpElem& x, const FpElem& y) { return fp_mul(x, y); }
inline FpElem operator-(const FpElem& x) { return fp_neg(x); }

std::ostream& operator<<(std::ostream& os, const FpElem& x);

/// A vector over F_p. Entries are canonical residues sharing one modulus.
class FpVector {
public:
    FpVector(Residue p, std::size_t length) : p_(p), entries_(length, 0) {}
    FpVector(Residue p, std::vector<Residue> entries);
    FpVector(Residue p, std::initializer_list<std::int64_t> entries);

    Residue modulus() const noexcept { return p_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const std::vector<Residue>& entries() const noexcept { return entries_; }

    Residue operator[](std::size_t i) const { return entries_[i]; }
    void set(std::size_t i, std::int64_t v) { entries_[i] = fp::reduce(v, p_); }
    FpElem at(std::size_t i) const { return FpElem(entries_.at(i), p_); }

    bool is_zero() const noexcept;
    std::size_t weight() const noexcept;

    friend bool operator==(const FpVector&, const FpVector&) = default;
    friend auto operator<=>(const FpVector&, const FpVector&) = default;

private:
    Residue p_;
    std::vector<Residue> entries_;
};

FpVector operator+(const FpVector& x, const FpVector& y);
FpVector operator-(const FpVector& x, const FpVector& y);
FpVector scale(const FpVector& x, Residue c);
Residue dot(const FpVector& x, const FpVector& y);

std::ostream& operator<<(std::ostream& os, const FpVector& v);

/// Validated (p, k, m). Every ring and code construction takes one of these.
struct Params {
    Residue p;
    int k;
    int m;

    friend bool operator==(const Params&, const Params&) = default;
};

/// Accepts iff p is an odd prime below 2^16, k >= 1 and m >= 1.
Params validate_params(std::int64_t p, std::int64_t k, std::int64_t m);

/// Field-only validation. p = 2 passes only when allow_two is set.
Residue validate_prime(std::int64_t p, bool allow_two = false);

}  // namespace rcc

#endif
