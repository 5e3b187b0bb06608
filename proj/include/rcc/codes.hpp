#ifndef RCC_CODES_HPP
#define RCC_CODES_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rcc/gf_prime.hpp"
#include "rcc/linalg.hpp"
#include "rcc/polyring.hpp"
#include "rcc/ring_r.hpp"

namespace rcc {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

enum class ShiftKind { Alpha, Beta, Gamma };
enum class UnitTag { Cyclic, Negacyclic, Lambda };

/// a^m - 1 or a^m + 1.
enum class Sign { Plus, Minus };

std::string to_string(ShiftKind kind);
std::string to_string(UnitTag tag);
UnitTag parse_unit_tag(const std::string& s);
ShiftKind shift_for(UnitTag tag);

/// p^e, or nullopt when it exceeds cap.
std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t e, std::uint64_t cap);

/// Linear code over F_p given by a spanning set. The RREF basis is computed at construction.
class LinearCodeFp {
public:
    LinearCodeFp(Residue p, std::size_t length, std::vector<FpVector> generators);

    static LinearCodeFp zero(Residue p, std::size_t length);
    static LinearCodeFp full(Residue p, std::size_t length);

    Residue modulus() const noexcept { return p_; }
    std::size_t length() const noexcept { return length_; }
    const std::vector<FpVector>& generators() const noexcept { return generators_; }
    const linalg::Rref& rref() const noexcept { return rref_; }
    std::vector<FpVector> basis() const;
    std::size_t dimension() const noexcept { return rref_.rank(); }
    bool contains(const FpVector& v) const;
    bool contains(const LinearCodeFp& other) const;

    /// p^dimension; throws CapExceeded above cap.
    std::uint64_t size(std::uint64_t cap = kDefaultEnumerationCap) const;
    void for_each_codeword(const std::function<void(const FpVector&)>& fn,
                           std::uint64_t cap = kDefaultEnumerationCap) const;

    /// Same row space.
    friend bool operator==(const LinearCodeFp& a, const LinearCodeFp& b) {
        return a.p_ == b.p_ && a.length_ == b.length_ && a.rref_ == b.rref_;
    }

private:
    Residue p_;
    std::size_t length_;
    std::vector<FpVector> generators_;
    linalg::Rref rref_;
};

/// A word of R^m.
using RWord = std::vector<RingElem>;

RWord zero_word(RingContext ctx, std::size_t m);
/// Coordinate-major expansion: entry i(k+1) + j is the u^j coefficient of coordinate i.
FpVector expand(const RWord& w);
RWord collapse(RingContext ctx, const FpVector& v);
RingElem inner_product(const RWord& x, const RWord& y);

/// R-submodule of R^m. The expanded F_p code is the span of u^e g over all generators g and
/// 0 <= e <= k, so it equals the R-span.
class ConstaCodeR {
public:
    ConstaCodeR(RingContext ctx, std::size_t length, UnitTag unit, std::vector<RWord> generators);

    static ConstaCodeR zero(RingContext ctx, std::size_t length, UnitTag unit);
    static ConstaCodeR full(RingContext ctx, std::size_t length, UnitTag unit);

    const RingContext& context() const noexcept { return ctx_; }
    std::size_t length() const noexcept { return length_; }
    UnitTag unit() const noexcept { return unit_; }
    const std::vector<RWord>& generators() const noexcept { return generators_; }
    const LinearCodeFp& expanded() const noexcept { return expanded_; }

    /// F_p basis of the code, as words over R.
    std::vector<RWord> basis_words() const;
    bool contains(const RWord& w) const;
    bool contains(const ConstaCodeR& other) const { return expanded_.contains(other.expanded_); }
    std::uint64_t size(std::uint64_t cap = kDefaultEnumerationCap) const { return expanded_.size(cap); }

    friend bool operator==(const ConstaCodeR& a, const ConstaCodeR& b) {
        return a.ctx_ == b.ctx_ && a.expanded_ == b.expanded_;
    }

private:
    RingContext ctx_;
    std::size_t length_;
    UnitTag unit_;
    std::vector<RWord> generators_;
    LinearCodeFp expanded_;
};

/// alpha rotates right; beta also negates the wrapped entry; gamma multiplies it by lambda.
FpVector shift(const FpVector& v, ShiftKind kind);
RWord shift(const RWord& v, ShiftKind kind);

bool is_invariant(const LinearCodeFp& code, ShiftKind kind);
bool is_invariant(const ConstaCodeR& code, ShiftKind kind);

QuotientModulus quotient_for(RingContext ctx, std::size_t m, UnitTag unit);

/// Positional map (s_0, ..., s_{m-1}) <-> sum s_i a^i.
PolyR word_to_poly(const RWord& w);
RWord poly_to_word(RingContext ctx, const PolyR& f, std::size_t m);
std::vector<PolyR> poly_repr(const ConstaCodeR& code);

/// True iff P(L) is closed under multiplication by a in R[a]/(a^m - unit), computed through
/// polynomial products rather than coordinate shifts.
bool ideal_closed_under_a(const ConstaCodeR& code);

/// The ideal generated by the given polynomials in R[a]/(a^m - unit), as a code.
ConstaCodeR ideal_code(RingContext ctx, std::size_t m, UnitTag unit, const std::vector<PolyR>& generators);

/// The F_p code spanned by a^i h mod (a^m -/+ 1).
LinearCodeFp poly_code(Residue p, std::size_t m, const PolyFp& h, Sign sign);

struct SigmaTriple {
    LinearCodeFp l1;
    LinearCodeFp l2;
    LinearCodeFp l3;

    friend bool operator==(const SigmaTriple&, const SigmaTriple&) = default;
};

struct Decomposition {
    SigmaTriple triple;
    std::vector<std::string> warnings;
};

/// Throws Precondition naming the first failing sigma identity unless k = 2.
void require_sigma_decomposition(RingContext ctx);

/// Coordinatewise images under u -> 0, 1, -1. Needs even k; warns when k != 2.
Decomposition decompose(const ConstaCodeR& code);

/// The code generated by sigma_1 L1, sigma_2 L2, sigma_3 L3. k = 2 only.
ConstaCodeR build_from_triple(const SigmaTriple& t, RingContext ctx);

/// Monic generator of a cyclic (Plus) or negacyclic (Minus) code; the zero code gets a^m -/+ 1.
PolyFp generator_polynomial(const LinearCodeFp& code, Sign sign);

/// h = sigma_1 h_1 + sigma_2 h_2 + sigma_3 h_3 with the h_i the component generator polynomials.
struct SingleGenerator {
    std::array<PolyFp, 3> components;
    std::array<PolyR, 3> triple_form;  // sigma_i h_i
    PolyR h;
};

SingleGenerator single_generator(const SigmaTriple& t, RingContext ctx);

/// h, k = sigma_1 k_1 + sigma_2 k_2 + sigma_3 k_3 with h_i k_i = a^m -/+ 1, and the product h k.
struct HkProduct {
    std::array<PolyFp, 3> h_components;
    std::array<PolyFp, 3> k_components;
    PolyR h;
    PolyR k;
    PolyR product;
    PolyR expected;  // a^m - lambda
    bool holds() const { return product == expected; }
};

HkProduct check_hk_product(const SigmaTriple& t, RingContext ctx);

LinearCodeFp dual_fp(const LinearCodeFp& code);

/// Euclidean dual over R, solved as k + 1 F_p-linear conditions per generator.
ConstaCodeR dual_R(const ConstaCodeR& code);

struct ReciprocalDual {
    std::array<PolyFp, 3> k_reciprocals;
    PolyR single;            // sigma_1 k_1* + sigma_2 k_2* + sigma_3 k_3*
    ConstaCodeR triple_code;  // ideal generated by the sigma_i k_i*
    ConstaCodeR single_code;  // ideal generated by single
    std::size_t size_exponent;  // sum of deg h_i
};

ReciprocalDual dual_via_reciprocal(const SigmaTriple& t, RingContext ctx);

/// Minimum Hamming weight over nonzero codewords. Throws Precondition for the zero code and
/// CapExceeded above cap.
std::size_t min_distance(const LinearCodeFp& code, std::uint64_t cap = kDefaultEnumerationCap);
/// Symbol-level weight over R.
std::size_t min_distance(const ConstaCodeR& code, std::uint64_t cap = kDefaultEnumerationCap);

bool is_self_orthogonal(const LinearCodeFp& code);
bool is_self_orthogonal(const ConstaCodeR& code);

/// Coordinate i multiplied by lambda^i.
RWord mu_bar(const RWord& v);

}  // namespace rcc

#endif
