#ifndef RCC_POLYRING_HPP
#define RCC_POLYRING_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rcc/gf_prime.hpp"
#include "rcc/ring_r.hpp"

namespace rcc {

/// Degree of a polynomial; std::nullopt stands for the zero polynomial (-infinity).
using Degree = std::optional<std::size_t>;

/// Dense polynomial over F_p in ascending coefficient order, never with a trailing zero.
class PolyFp {
public:
    explicit PolyFp(Residue p);
    PolyFp(Residue p, std::vector<Residue> ascending);
    PolyFp(Residue p, std::initializer_list<std::int64_t> ascending);

    static PolyFp constant(Residue p, std::int64_t c);
    static PolyFp monomial(Residue p, std::size_t degree, std::int64_t c = 1);
    /// a^m - c
    static PolyFp binomial(Residue p, std::size_t m, std::int64_t c);

    Residue modulus() const noexcept { return p_; }
    const std::vector<Residue>& coeffs() const noexcept { return c_; }
    Residue coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Degree degree() const noexcept;
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    Residue lead() const noexcept { return c_.empty() ? 0 : c_.back(); }

    friend bool operator==(const PolyFp&, const PolyFp&) = default;

private:
    void trim();

    Residue p_;
    std::vector<Residue> c_;
};

PolyFp operator+(const PolyFp& f, const PolyFp& g);
PolyFp operator-(const PolyFp& f, const PolyFp& g);
PolyFp operator-(const PolyFp& f);
PolyFp operator*(const PolyFp& f, const PolyFp& g);
PolyFp scale(const PolyFp& f, Residue c);

/// Degree ascending, then coefficients compared from the leading term down.
bool poly_less(const PolyFp& f, const PolyFp& g);

struct DivMod {
    PolyFp quotient;
    PolyFp remainder;
};

DivMod poly_divmod(const PolyFp& f, const PolyFp& g);
PolyFp operator/(const PolyFp& f, const PolyFp& g);
PolyFp operator%(const PolyFp& f, const PolyFp& g);
bool divides(const PolyFp& d, const PolyFp& f);

PolyFp monic(const PolyFp& f);
PolyFp derivative(const PolyFp& f);
Residue evaluate(const PolyFp& f, Residue x);
PolyFp pow_mod(const PolyFp& base, std::uint64_t e, const PolyFp& mod);

/// s*f + t*g = d with d monic (d = 0 only if both inputs are zero, which throws).
struct GcdExt {
    PolyFp d;
    PolyFp s;
    PolyFp t;
};

GcdExt poly_gcd_ext(const PolyFp& f, const PolyFp& g);
PolyFp poly_gcd(const PolyFp& f, const PolyFp& g);

struct FactorPower {
    PolyFp factor;
    int multiplicity;
};

/// unit * prod factor^multiplicity, factors monic irreducible and sorted by poly_less.
struct Factorization {
    Residue unit;
    std::vector<FactorPower> factors;

    PolyFp product(Residue p) const;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eedULL;

/// Squarefree split, distinct-degree split, then seeded equal-degree splitting.
Factorization factor_poly(const PolyFp& f, std::uint64_t seed = kDefaultFactorSeed);

/// Rabin's test.
bool is_irreducible(const PolyFp& f);

/// Every monic divisor, sorted by poly_less; includes 1 and monic(f).
std::vector<PolyFp> divisors_of(const PolyFp& f, std::uint64_t seed = kDefaultFactorSeed);

/// Monic normalization of a^{deg f} f(1/a). Throws Precondition on a zero constant term.
PolyFp reciprocal(const PolyFp& f);

/// Accepts "a^3+a+1", "2a^2 - 3", "3*x", "0" or an ascending array "[4,0,1]".
PolyFp parse_poly(const std::string& text, Residue p);
std::string to_string(const PolyFp& f);
std::string to_array_string(const PolyFp& f);
std::ostream& operator<<(std::ostream& os, const PolyFp& f);

/// Dense polynomial over R, ascending, never with a trailing zero coefficient.
class PolyR {
public:
    explicit PolyR(RingContext ctx);
    PolyR(RingContext ctx, std::vector<RingElem> ascending);

    /// F_p polynomial embedded through F_p -> R.
    static PolyR from_fp(RingContext ctx, const PolyFp& f);
    static PolyR constant(const RingElem& c);
    static PolyR monomial(const RingElem& c, std::size_t degree);

    const RingContext& context() const noexcept { return ctx_; }
    const std::vector<RingElem>& coeffs() const noexcept { return c_; }
    RingElem coeff(std::size_t i) const;
    Degree degree() const noexcept;
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept;

    friend bool operator==(const PolyR&, const PolyR&) = default;

private:
    void trim();

    RingContext ctx_;
    std::vector<RingElem> c_;
};

PolyR operator+(const PolyR& f, const PolyR& g);
PolyR operator-(const PolyR& f, const PolyR& g);
PolyR operator*(const PolyR& f, const PolyR& g);
PolyR operator*(const RingElem& c, const PolyR& f);

/// The modulus a^m - unit of a quotient ring R[a]/(a^m - unit); unit is 1, -1 or lambda.
struct QuotientModulus {
    std::size_t m;
    RingElem unit;

    static QuotientModulus cyclic(RingContext ctx, std::size_t m);
    static QuotientModulus negacyclic(RingContext ctx, std::size_t m);
    static QuotientModulus constacyclic(RingContext ctx, std::size_t m);

    PolyR as_poly() const;
};

/// Reduces any polynomial by repeatedly replacing a^m with the unit.
PolyR reduce(const PolyR& f, const QuotientModulus& mod);

/// Product in R[a]/(a^m - unit); both inputs must have degree < m.
PolyR qr_mul(const PolyR& f, const PolyR& g, const QuotientModulus& mod);

/// l(a) -> l(lambda a): coefficient i is multiplied by lambda^i.
PolyR mu_map(const PolyR& f);

std::string to_string(const PolyR& f);
std::ostream& operator<<(std::ostream& os, const PolyR& f);

}  // namespace rcc

#endif
