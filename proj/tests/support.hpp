// Seeded generators and brute-force oracles shared by the test binaries. The oracles avoid the
// library's own algorithms: ring products reduce u^e one step at a time, irreducibility is trial
// division over every monic polynomial, code sizes come from enumerating spans.
#ifndef RCC_TESTS_SUPPORT_HPP
#define RCC_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rcc/codes.hpp"
#include "rcc/polyring.hpp"
#include "rcc/ring_r.hpp"

namespace rcc::oracle {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    Residue residue(Residue p) { return static_cast<Residue>(rng_() % p); }
    Residue nonzero(Residue p) { return 1 + static_cast<Residue>(rng_() % (p - 1)); }
    std::uint64_t below(std::uint64_t n) { return rng_() % n; }

    RingElem elem(RingContext ctx) {
        std::vector<Residue> c(static_cast<std::size_t>(ctx.k) + 1);
        for (auto& x : c) x = residue(ctx.p);
        return RingElem(ctx, std::move(c));
    }

    RWord word(RingContext ctx, std::size_t m) {
        RWord w;
        for (std::size_t i = 0; i < m; ++i) w.push_back(elem(ctx));
        return w;
    }

    FpVector vec(Residue p, std::size_t n) {
        FpVector v(p, n);
        for (std::size_t i = 0; i < n; ++i) v.set(i, residue(p));
        return v;
    }

    PolyFp poly(Residue p, std::size_t max_degree) {
        std::vector<Residue> c(max_degree + 1);
        for (auto& x : c) x = residue(p);
        return PolyFp(p, std::move(c));
    }

    PolyR poly_r(RingContext ctx, std::size_t max_degree) {
        std::vector<RingElem> c;
        for (std::size_t i = 0; i <= max_degree; ++i) c.push_back(elem(ctx));
        return PolyR(ctx, std::move(c));
    }

private:
    std::mt19937_64 rng_;
};

/// Schoolbook product in F_p[u] followed by u^e -> u^{e-k} one step at a time.
inline std::vector<Residue> oracle_ring_mul(const std::vector<Residue>& a, const std::vector<Residue>& b, Residue p,
                                            int k) {
    std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    const auto ku = static_cast<std::size_t>(k);
    for (std::size_t e = prod.size(); e-- > ku + 1;) {
        prod[e - ku] = (prod[e - ku] + prod[e]) % p;
        prod[e] = 0;
    }
    std::vector<Residue> out(ku + 1);
    for (std::size_t i = 0; i <= ku; ++i) out[i] = static_cast<Residue>(prod[i]);
    return out;
}

/// Every monic polynomial of the given degree over F_p.
inline std::vector<PolyFp> all_monic(Residue p, std::size_t degree) {
    std::vector<PolyFp> out;
    std::vector<Residue> c(degree + 1, 0);
    c[degree] = 1;
    for (;;) {
        out.emplace_back(p, c);
        std::size_t i = 0;
        while (i < degree && ++c[i] == p) c[i++] = 0;
        if (i == degree) break;
    }
    return out;
}

/// Trial division by every monic polynomial of degree 1 .. deg/2.
inline bool oracle_irreducible(const PolyFp& f) {
    const std::size_t d = f.degree().value_or(0);
    if (d == 0) return false;
    for (std::size_t e = 1; 2 * e <= d; ++e)
        for (const auto& g : all_monic(f.modulus(), e))
            if ((f % g).is_zero()) return false;
    return true;
}

/// Every vector of the F_p-span of the rows, grown one row at a time as {s + c r}; rows already
/// in the span are skipped.
inline std::set<std::vector<Residue>> oracle_span(Residue p, std::size_t n, const std::vector<FpVector>& rows) {
    std::set<std::vector<Residue>> out{std::vector<Residue>(n, 0)};
    for (const auto& r : rows) {
        std::vector<Residue> rv(n);
        for (std::size_t j = 0; j < n; ++j) rv[j] = r[j];
        if (out.count(rv)) continue;
        std::set<std::vector<Residue>> next;
        for (const auto& s : out)
            for (Residue c = 0; c < p; ++c) {
                std::vector<Residue> v(n);
                for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<Residue>((s[j] + std::uint64_t{c} * rv[j]) % p);
                next.insert(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

/// The R-span of words as a set of expanded vectors: F_p-span of u^e w over e = 0..k.
inline std::set<std::vector<Residue>> oracle_r_span(RingContext ctx, std::size_t m, const std::vector<RWord>& gens) {
    std::vector<FpVector> rows;
    for (const auto& g : gens)
        for (int e = 0; e <= ctx.k; ++e) {
            RWord w;
            for (const auto& x : g) w.push_back(RingElem(ctx, oracle_ring_mul(RingElem::u_power(ctx, e).coeffs(), x.coeffs(), ctx.p, ctx.k)));
            rows.push_back(expand(w));
        }
    return oracle_span(ctx.p, (static_cast<std::size_t>(ctx.k) + 1) * m, rows);
}

/// Minimum nonzero weight by enumeration of the span.
inline std::size_t oracle_min_distance(Residue p, std::size_t n, const std::vector<FpVector>& rows) {
    std::size_t best = n + 1;
    for (const auto& v : oracle_span(p, n, rows)) {
        std::size_t w = 0;
        for (auto x : v) w += x != 0;
        if (w > 0 && w < best) best = w;
    }
    return best;
}

/// Gray image of one element at k = 2, written out: (-a2, a1, 2a0 + a2).
inline std::vector<Residue> oracle_gray_k2(const RingElem& x) {
    const Residue p = x.context().p;
    const auto& a = x.coeffs();
    return {(p - a[2]) % p, a[1], static_cast<Residue>((2 * std::uint64_t{a[0]} + a[2]) % p)};
}

}  // namespace rcc::oracle

#endif
