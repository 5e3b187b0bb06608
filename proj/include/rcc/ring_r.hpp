#ifndef RCC_RING_R_HPP
#define RCC_RING_R_HPP

#include <array>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "rcc/gf_prime.hpp"

namespace rcc {

/// (p, k) for R = F_p[u]/(u^{k+1} - u).
struct RingContext {
    Residue p;
    int k;

    friend bool operator==(const RingContext&, const RingContext&) = default;
};

inline RingContext ring_context(const Params& params) { return RingContext{params.p, params.k}; }

/// Canonical exponent of u^e: e for e <= k, otherwise ((e - 1) mod k) + 1.
int reduce_exponent(int e, int k);

/// a_0 + a_1 u + ... + a_k u^k, stored as exactly k + 1 canonical residues.
class RingElem {
public:
    explicit RingElem(RingContext ctx);
    RingElem(RingContext ctx, std::vector<Residue> coeffs);
    /// Shorter lists are padded with zeros; longer ones are rejected.
    RingElem(RingContext ctx, std::initializer_list<std::int64_t> coeffs);

    static RingElem constant(RingContext ctx, std::int64_t c);
    static RingElem u_power(RingContext ctx, int e);

    const RingContext& context() const noexcept { return ctx_; }
    const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }
    Residue coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    friend bool operator==(const RingElem&, const RingElem&) = default;
    friend auto operator<=>(const RingElem&, const RingElem&) = default;

private:
    RingContext ctx_;
    std::vector<Residue> coeffs_;
};

RingElem ring_add(const RingElem& x, const RingElem& y);
RingElem ring_sub(const RingElem& x, const RingElem& y);
RingElem ring_neg(const RingElem& x);
RingElem ring_scalar_mul(const RingElem& x, Residue c);
RingElem ring_mul(const RingElem& x, const RingElem& y);
RingElem ring_pow(const RingElem& x, unsigned n);

inline RingElem operator+(const RingElem& x, const RingElem& y) { return ring_add(x, y); }
inline RingElem operator-(const RingElem& x, const RingElem& y) { return ring_sub(x, y); }
inline RingElem operator-(const RingElem& x) { return ring_neg(x); }
inline RingElem operator*(const RingElem& x, const RingElem& y) { return ring_mul(x, y); }

/// The unit 1 - 2u^k.
RingElem lambda_unit(RingContext ctx);

/// sigma_1 = 1 - u^k, sigma_2 = 2^{-1}(u^{k-1} + u^k), sigma_3 = 2^{-1}(-u^{k-1} + u^k).
/// sigma_2 and sigma_3 need k >= 2.
RingElem sigma(int i, RingContext ctx);

/// True iff u -> c extends to a ring homomorphism R -> F_p, i.e. c^{k+1} = c.
bool is_eval_point(RingContext ctx, Residue c);

/// Substitutes u = c. Throws Precondition unless is_eval_point(c).
FpElem ring_eval(const RingElem& x, Residue c);

struct RingIdentity {
    std::string name;
    RingElem lhs;
    RingElem rhs;
    bool holds() const { return lhs == rhs; }
};

/// Products, squares and lambda-multiples of the sigma elements. Verdicts are
/// computed on demand from the stored values and never thrown.
struct IdempotentReport {
    RingContext ctx;
    std::array<RingElem, 3> sigmas;
    RingElem lambda;
    std::array<std::array<RingElem, 3>, 3> products;  // products[i][j] = sigma_{i+1} sigma_{j+1}
    RingElem sum;
    std::array<RingElem, 3> lambda_sigma;
    RingElem lambda_squared;

    bool idempotent(int i) const;             // 1-based
    bool orthogonal(int i, int j) const;      // 1-based, i != j
    bool sum_is_one() const;
    bool lambda_fixes_sigma1() const;
    bool lambda_negates(int i) const;         // i in {2, 3}
    bool lambda_square_is_one() const;
    bool all_hold() const;

    /// Every identity the idempotent decomposition relies on, in a fixed order.
    std::vector<RingIdentity> identities() const;
};

IdempotentReport idempotent_report(RingContext ctx);

/// "[1,0,3]" for 1 + 3u^2.
std::string to_array_string(const RingElem& x);
/// "1 + 3u^2" style.
std::string to_pretty_string(const RingElem& x);
std::ostream& operator<<(std::ostream& os, const RingElem& x);

}  // namespace rcc

#endif
