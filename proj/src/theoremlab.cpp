#include "rcc/theoremlab.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "rcc/codes.hpp"
#include "rcc/error.hpp"
#include "rcc/graymaps.hpp"
#include "rcc/polyring.hpp"
#include "rcc/ring_r.hpp"

namespace rcc::lab {

using nlohmann::ordered_json;

std::string to_string(Strategy s) { return s == Strategy::Exhaustive ? "exhaustive" : "sampled"; }

std::string to_string(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::NotApplicable: return "not-applicable";
    }
    return "?";
}

ordered_json TheoremCheck::to_json() const {
    ordered_json j;
    j["claim"] = claim;
    j["part"] = part;
    j["p"] = p;
    j["k"] = k;
    j["m"] = m;
    j["seed"] = seed;
    j["strategy"] = to_string(strategy);
    j["status"] = to_string(status);
    j["evidence_count"] = evidence_count;
    j["premise_count"] = premise_count;
    j["sampled_count"] = sampled_count;
    j["violations"] = violations;
    j["note"] = note;
    if (counterexample) j["counterexample"] = *counterexample;
    return j;
}

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids{"T1.1",  "T2.1",  "T2.2",  "P2.3",  "P2.4",  "T2.5",  "T2.6",
                                              "T2.7",  "L2.8",  "T2.9a", "T2.9b", "T2.10", "C2.11", "T2.12",
                                              "C2.13", "C2.14", "P2.16", "C2.17", "C2.18", "E2.19", "NOTE-parity"};
    return ids;
}

bool is_registered(const std::string& id) {
    const auto& ids = claim_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

namespace {

constexpr int kParityMax = 10;
constexpr std::size_t kExampleLength = 7;

// ------------------------------------------------------------------ setup and sampling

struct Setup {
    RingContext ctx;
    std::size_t m;
    std::uint64_t seed;
    Caps caps;

    Residue p() const { return ctx.p; }
    std::size_t symbols() const { return (static_cast<std::size_t>(ctx.k) + 1) * m; }
};

std::uint64_t derive_seed(std::uint64_t seed, const std::string& claim, Residue p, int k, std::size_t m) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    for (char c : claim) feed(static_cast<unsigned char>(c));
    feed(p);
    feed(static_cast<std::uint64_t>(k));
    feed(m);
    feed(seed);
    return h;
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}
    Residue residue(Residue p) { return static_cast<Residue>(gen_() % p); }
    std::uint64_t below(std::uint64_t n) { return gen_() % n; }

private:
    std::mt19937_64 gen_;
};

/// Word number `index` of R^m; the u^0 coefficient of coordinate 0 varies fastest.
RWord word_at(const Setup& s, std::uint64_t index) {
    std::vector<Residue> flat(s.symbols(), 0);
    for (auto& c : flat) {
        c = static_cast<Residue>(index % s.p());
        index /= s.p();
    }
    return collapse(s.ctx, FpVector(s.p(), std::move(flat)));
}

RWord random_word(const Setup& s, Sampler& rng) {
    std::vector<Residue> flat(s.symbols());
    for (auto& c : flat) c = rng.residue(s.p());
    return collapse(s.ctx, FpVector(s.p(), std::move(flat)));
}

/// Random R-submodules (one or two generators) and random principal ideals.
std::vector<ConstaCodeR> random_codes(const Setup& s, UnitTag unit, Sampler& rng) {
    std::vector<ConstaCodeR> out;
    for (std::uint64_t i = 0; i < s.caps.random_codes; ++i) {
        if (i % 2 == 0) {
            std::vector<RWord> gens{random_word(s, rng)};
            if (rng.below(2) == 1) gens.push_back(random_word(s, rng));
            out.emplace_back(s.ctx, s.m, unit, std::move(gens));
        } else {
            out.push_back(ideal_code(s.ctx, s.m, unit, {word_to_poly(random_word(s, rng))}));
        }
    }
    return out;
}

// ------------------------------------------------------------------ JSON payloads

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::Schema, "counterexample: " + what); }

ordered_json word_json(const RWord& w) {
    ordered_json out = ordered_json::array();
    for (const auto& x : w) out.push_back(x.coeffs());
    return out;
}

RWord word_from_json(const Setup& s, const ordered_json& j) {
    if (!j.is_array() || j.size() != s.m) schema("a word must list m coordinates");
    RWord w;
    for (const auto& coord : j) {
        if (!coord.is_array() || coord.size() != static_cast<std::size_t>(s.ctx.k) + 1)
            schema("a coordinate must list k + 1 coefficients");
        std::vector<Residue> c;
        for (const auto& x : coord) {
            if (!x.is_number_integer()) schema("coefficients must be integers");
            c.push_back(fp::reduce(x.get<std::int64_t>(), s.p()));
        }
        w.emplace_back(s.ctx, std::move(c));
    }
    return w;
}

ordered_json vec_json(const FpVector& v) { return v.entries(); }

ordered_json poly_json(const PolyFp& f) { return f.coeffs(); }

PolyFp poly_from_json(Residue p, const ordered_json& j) {
    if (!j.is_array()) schema("a polynomial must be an ascending coefficient array");
    std::vector<Residue> c;
    for (const auto& x : j) {
        if (!x.is_number_integer()) schema("coefficients must be integers");
        c.push_back(fp::reduce(x.get<std::int64_t>(), p));
    }
    return PolyFp(p, std::move(c));
}

ordered_json poly_r_json(const PolyR& f) {
    ordered_json out = ordered_json::array();
    for (const auto& c : f.coeffs()) out.push_back(c.coeffs());
    return out;
}

ordered_json code_json(const ConstaCodeR& code) {
    ordered_json out;
    out["unit"] = to_string(code.unit());
    ordered_json gens = ordered_json::array();
    for (const auto& w : code.basis_words()) gens.push_back(word_json(w));
    out["generators"] = std::move(gens);
    return out;
}

ConstaCodeR code_from_json(const Setup& s, const ordered_json& j, UnitTag expected) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) schema("missing code generators");
    if (!j.contains("unit") || !j["unit"].is_string() || parse_unit_tag(j["unit"].get<std::string>()) != expected)
        schema("code has the wrong unit");
    std::vector<RWord> gens;
    for (const auto& w : j["generators"]) gens.push_back(word_from_json(s, w));
    return ConstaCodeR(s.ctx, s.m, expected, std::move(gens));
}

ordered_json fp_code_json(const LinearCodeFp& c) {
    ordered_json out = ordered_json::array();
    for (const auto& g : c.generators()) out.push_back(vec_json(g));
    return out;
}

using Triple = std::array<PolyFp, 3>;

ordered_json triple_json(const Triple& h) { return ordered_json::array({poly_json(h[0]), poly_json(h[1]), poly_json(h[2])}); }

Triple triple_from_json(Residue p, const ordered_json& j) {
    if (!j.is_array() || j.size() != 3) schema("expected three polynomials");
    return {poly_from_json(p, j[0]), poly_from_json(p, j[1]), poly_from_json(p, j[2])};
}

// ------------------------------------------------------------------ outcomes and tallies

struct Outcome {
    bool premise = true;
    bool violated = false;
    ordered_json payload;  // filled only when violated
};

struct Tally {
    std::uint64_t evidence = 0;
    std::uint64_t premise = 0;
    std::uint64_t sampled = 0;
    std::uint64_t violations = 0;
    std::optional<ordered_json> first;

    void add(Outcome o, bool extra) {
        (extra ? sampled : evidence) += 1;
        if (!o.premise) return;
        ++premise;
        if (!o.violated) return;
        ++violations;
        if (!first) first = std::move(o.payload);
    }
};

struct RowKey {
    std::string claim;
    std::string part;
};

TheoremCheck make_row(const RowKey& key, std::int64_t p, int k, int m, std::uint64_t seed, Strategy strategy,
                      const Tally& t, std::string note = {}) {
    TheoremCheck r;
    r.claim = key.claim;
    r.part = key.part;
    r.p = p;
    r.k = k;
    r.m = m;
    r.seed = seed;
    r.strategy = strategy;
    r.evidence_count = t.evidence;
    r.premise_count = t.premise;
    r.sampled_count = t.sampled;
    r.violations = t.violations;
    r.status = t.violations > 0 ? Status::Fails : Status::Holds;
    r.note = std::move(note);
    if (t.violations > 0) r.counterexample = t.first;
    return r;
}

TheoremCheck row(const RowKey& key, const Setup& s, Strategy strategy, const Tally& t, std::string note = {}) {
    return make_row(key, s.p(), s.ctx.k, static_cast<int>(s.m), s.seed, strategy, t, std::move(note));
}

TheoremCheck not_applicable(const RowKey& key, const Setup& s, std::string reason) {
    TheoremCheck r = row(key, s, Strategy::Exhaustive, Tally{}, std::move(reason));
    r.status = Status::NotApplicable;
    return r;
}

// ------------------------------------------------------------------ domains

/// Every word of R^m when the space is at most `cap`, otherwise `samples` random words.
struct WordDomain {
    Strategy strategy;
    std::uint64_t count;
};

WordDomain word_domain(const Setup& s, std::uint64_t cap) {
    if (auto n = checked_power(s.p(), s.symbols(), cap)) return {Strategy::Exhaustive, *n};
    return {Strategy::Sampled, s.caps.samples};
}

void for_each_word(const Setup& s, const WordDomain& d, Sampler& rng, const std::function<void(const RWord&)>& fn) {
    for (std::uint64_t i = 0; i < d.count; ++i) fn(d.strategy == Strategy::Exhaustive ? word_at(s, i) : random_word(s, rng));
}

PolyFp plus_modulus(const Setup& s) { return PolyFp::binomial(s.p(), s.m, 1); }
PolyFp minus_modulus(const Setup& s) { return PolyFp::binomial(s.p(), s.m, -1); }

/// (h1, h2, h3) with h1 | a^m - 1 and h2, h3 | a^m + 1 (all three | a^m - 1 when cyclic_only).
std::vector<Triple> divisor_triples(const Setup& s, bool cyclic_only = false) {
    const auto plus = divisors_of(plus_modulus(s));
    const auto minus = cyclic_only ? plus : divisors_of(minus_modulus(s));
    std::vector<Triple> out;
    for (const auto& h1 : plus)
        for (const auto& h2 : minus)
            for (const auto& h3 : minus) out.push_back({h1, h2, h3});
    return out;
}

SigmaTriple triple_codes(const Setup& s, const Triple& h) {
    return {poly_code(s.p(), s.m, h[0], Sign::Plus), poly_code(s.p(), s.m, h[1], Sign::Minus),
            poly_code(s.p(), s.m, h[2], Sign::Minus)};
}

PolyR sigma_sum(const Setup& s, const Triple& parts) {
    PolyR out(s.ctx);
    for (int i = 0; i < 3; ++i) out = out + sigma(i + 1, s.ctx) * PolyR::from_fp(s.ctx, parts[static_cast<std::size_t>(i)]);
    return out;
}

bool triple_divides(const Setup& s, const Triple& h, bool cyclic_only = false) {
    return divides(h[0], plus_modulus(s)) && divides(h[1], cyclic_only ? plus_modulus(s) : minus_modulus(s)) &&
           divides(h[2], cyclic_only ? plus_modulus(s) : minus_modulus(s));
}

/// The cyclic code <sigma_1 h1, sigma_2 h2, sigma_3 h3> in R[a]/(a^m - 1).
ConstaCodeR cyclic_triple_code(const Setup& s, const Triple& h) {
    std::vector<PolyR> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(sigma(i + 1, s.ctx) * PolyR::from_fp(s.ctx, h[static_cast<std::size_t>(i)]));
    return ideal_code(s.ctx, s.m, UnitTag::Cyclic, gens);
}

std::string rref_key(const LinearCodeFp& c) {
    std::string key;
    for (const auto& r : c.rref().rows) {
        for (auto x : r) key += std::to_string(x) + ',';
        key += ';';
    }
    return key;
}

/// Code-level domain: sigma-triple codes for k = 2, otherwise principal ideals of enumerated words;
/// seeded random codes are appended as a safety net.
struct CodeDomain {
    Strategy strategy;
    std::vector<ConstaCodeR> primary;
    std::vector<ConstaCodeR> extra;
    std::string note;
};

CodeDomain code_domain(const Setup& s, UnitTag unit, Sampler& rng) {
    CodeDomain d{Strategy::Exhaustive, {}, {}, {}};
    if (s.ctx.k == 2) {
        const bool cyclic = unit == UnitTag::Cyclic;
        for (const auto& h : divisor_triples(s, cyclic))
            d.primary.push_back(cyclic ? cyclic_triple_code(s, h) : build_from_triple(triple_codes(s, h), s.ctx));
        d.note = cyclic ? "sigma-combinations of divisors of a^m - 1" : "sigma-triple codes from divisor enumeration";
    } else {
        const WordDomain wd = word_domain(s, s.caps.ideal_words);
        d.strategy = wd.strategy;
        std::unordered_map<std::string, bool> seen;
        for_each_word(s, wd, rng, [&](const RWord& w) {
            ConstaCodeR c = ideal_code(s.ctx, s.m, unit, {word_to_poly(w)});
            if (seen.emplace(rref_key(c.expanded()), true).second) d.primary.push_back(std::move(c));
        });
        d.note = "distinct principal ideals of " + std::string(wd.strategy == Strategy::Exhaustive ? "all" : "sampled") + " words";
    }
    d.extra = random_codes(s, unit, rng);
    return d;
}

template <typename Eval>
Tally run_codes(const CodeDomain& d, Eval eval) {
    Tally t;
    for (const auto& c : d.primary) t.add(eval(c), false);
    for (const auto& c : d.extra) t.add(eval(c), true);
    return t;
}

/// Number of vectors of F_p^n lying in the code, by testing every vector.
std::uint64_t count_members(const LinearCodeFp& code) {
    const auto& rr = code.rref();
    const Residue p = code.modulus();
    const std::size_t n = code.length();
    std::vector<Residue> v(n, 0);
    std::vector<Residue> work(n);
    std::uint64_t count = 0;
    for (;;) {
        work = v;
        for (std::size_t r = 0; r < rr.rows.size(); ++r) {
            const Residue f = work[rr.pivots[r]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) work[j] = fp::sub(work[j], fp::mul(f, rr.rows[r][j], p), p);
        }
        if (std::all_of(work.begin(), work.end(), [](Residue x) { return x == 0; })) ++count;
        std::size_t i = 0;
        while (i < n && ++v[i] == p) v[i++] = 0;
        if (i == n) break;
    }
    return count;
}

std::uint64_t power(std::uint64_t p, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= p;
    return r;
}

std::size_t degree_sum(const Triple& h) {
    std::size_t d = 0;
    for (const auto& x : h) d += x.degree().value_or(0);
    return d;
}

/// A generator whose shift leaves the code, if any.
std::optional<FpVector> shift_witness(const LinearCodeFp& code, ShiftKind kind) {
    for (const auto& g : code.generators())
        if (!code.contains(shift(g, kind))) return g;
    return std::nullopt;
}

// ------------------------------------------------------------------ per-case evaluators

Outcome eval_gray_shift(const Setup& s, const RWord& w) {
    const GrayLayout layout(s.ctx);
    const FpVector lhs = gray_map(shift(w, ShiftKind::Gamma), layout);
    const FpVector rhs = shift(gray_map(w, layout), ShiftKind::Alpha);
    Outcome o;
    o.violated = lhs != rhs;
    if (o.violated)
        o.payload = {{"input", {{"word", word_json(w)}}}, {"lhs", vec_json(lhs)}, {"rhs", vec_json(rhs)},
                     {"identity", "gray(gamma(s)) = alpha(gray(s))"}};
    return o;
}

Outcome eval_gray_nechaev(const Setup& s, const RWord& w) {
    const GrayLayout layout(s.ctx);
    const FpVector lhs = gray_map(mu_bar(w), layout);
    const FpVector rhs = nechaev_rho(gray_map(w, layout), s.m);
    Outcome o;
    o.violated = lhs != rhs;
    if (o.violated)
        o.payload = {{"input", {{"word", word_json(w)}}}, {"lhs", vec_json(lhs)}, {"rhs", vec_json(rhs)},
                     {"identity", "gray(mu_bar(s)) = rho(gray(s))"}};
    return o;
}

Outcome eval_gray_cyclic(const Setup& s, const ConstaCodeR& code) {
    Outcome o;
    o.premise = is_invariant(code, ShiftKind::Gamma);
    if (!o.premise) return o;
    const LinearCodeFp image = gray_image(code, GrayLayout(s.ctx));
    const auto witness = shift_witness(image, ShiftKind::Alpha);
    o.violated = witness.has_value();
    if (o.violated)
        o.payload = {{"input", {{"code", code_json(code)}}},
                     {"gray_generators", fp_code_json(image)},
                     {"lhs", vec_json(shift(*witness, ShiftKind::Alpha))},
                     {"rhs", "not in the Gray image"},
                     {"witness", vec_json(*witness)}};
    return o;
}

Outcome eval_ideal_equivalence(const Setup&, const ConstaCodeR& code, bool forward) {
    const bool gamma = is_invariant(code, ShiftKind::Gamma);
    const bool ideal = ideal_closed_under_a(code);
    Outcome o;
    o.premise = forward ? gamma : ideal;
    o.violated = o.premise && !(forward ? ideal : gamma);
    if (o.violated)
        o.payload = {{"input", {{"code", code_json(code)}}}, {"lhs", {{"gamma_invariant", gamma}}},
                     {"rhs", {{"ideal", ideal}}}};
    return o;
}

Outcome eval_dual_invariance(const Setup&, const ConstaCodeR& code, bool forward) {
    const bool gamma = is_invariant(code, ShiftKind::Gamma);
    const ConstaCodeR dual = dual_R(code);
    const bool dual_gamma = is_invariant(dual, ShiftKind::Gamma);
    Outcome o;
    o.premise = forward ? gamma : dual_gamma;
    o.violated = o.premise && !(forward ? dual_gamma : gamma);
    if (o.violated)
        o.payload = {{"input", {{"code", code_json(code)}}},
                     {"lhs", {{"gamma_invariant", gamma}}},
                     {"rhs", {{"dual_gamma_invariant", dual_gamma}, {"dual", code_json(dual)}}}};
    return o;
}

Outcome eval_self_orthogonal(const Setup& s, const ConstaCodeR& code) {
    Outcome o;
    o.premise = is_self_orthogonal(code);
    if (!o.premise) return o;
    const LinearCodeFp image = gray_image(code, GrayLayout(s.ctx));
    const auto& g = image.generators();
    for (std::size_t i = 0; i < g.size() && !o.violated; ++i)
        for (std::size_t j = i; j < g.size(); ++j) {
            const Residue d = dot(g[i], g[j]);
            if (d == 0) continue;
            o.violated = true;
            o.payload = {{"input", {{"code", code_json(code)}}},
                         {"gray_generators", fp_code_json(image)},
                         {"lhs", {{"x", vec_json(g[i])}, {"y", vec_json(g[j])}, {"dot", d}}},
                         {"rhs", 0}};
            break;
        }
    return o;
}

bool components_invariant(const SigmaTriple& t) {
    return is_invariant(t.l1, ShiftKind::Alpha) && is_invariant(t.l2, ShiftKind::Beta) &&
           is_invariant(t.l3, ShiftKind::Beta);
}

Outcome eval_decomposition(const Setup& s, const ConstaCodeR& code, bool forward) {
    const SigmaTriple t = decompose(code).triple;
    const bool gamma = is_invariant(code, ShiftKind::Gamma);
    const bool parts = components_invariant(t);
    const bool rebuilt = build_from_triple(t, s.ctx) == code;
    Outcome o;
    o.premise = forward ? gamma : parts;
    o.violated = o.premise && !(forward ? parts && rebuilt : gamma);
    if (o.violated)
        o.payload = {{"input", {{"code", code_json(code)}}},
                     {"lhs", {{"gamma_invariant", gamma}}},
                     {"rhs",
                      {{"components_invariant", parts},
                       {"direct_sum", rebuilt},
                       {"components", ordered_json::array({fp_code_json(t.l1), fp_code_json(t.l2), fp_code_json(t.l3)})}}}};
    return o;
}

Outcome eval_generators(const Setup& s, const Triple& h) {
    Outcome o;
    o.premise = triple_divides(s, h);
    if (!o.premise) return o;
    const SigmaTriple t = triple_codes(s, h);
    const ConstaCodeR code = build_from_triple(t, s.ctx);
    std::vector<PolyR> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(sigma(i + 1, s.ctx) * PolyR::from_fp(s.ctx, h[static_cast<std::size_t>(i)]));
    const ConstaCodeR ideal = ideal_code(s.ctx, s.m, UnitTag::Lambda, gens);
    const std::size_t exponent = 3 * s.m - degree_sum(h);
    const std::uint64_t formula = power(s.p(), exponent);
    const bool count_it = checked_power(s.p(), s.symbols(), s.caps.ideal_words).has_value();
    const std::uint64_t counted = count_it ? count_members(code.expanded()) : power(s.p(), code.expanded().dimension());
    o.violated = !(ideal == code) || counted != formula;
    if (o.violated)
        o.payload = {{"input", {{"h", triple_json(h)}}},
                     {"lhs", {{"size", counted}, {"by", count_it ? "enumeration" : "dimension"}, {"ideal_equal", ideal == code}}},
                     {"rhs", {{"size", formula}}}};
    return o;
}

Outcome eval_single_generator(const Setup& s, const Triple& h) {
    Outcome o;
    o.premise = triple_divides(s, h);
    if (!o.premise) return o;
    const SigmaTriple t = triple_codes(s, h);
    const ConstaCodeR code = build_from_triple(t, s.ctx);
    const SingleGenerator sg = single_generator(t, s.ctx);
    const ConstaCodeR principal = ideal_code(s.ctx, s.m, UnitTag::Lambda, {sg.h});
    o.violated = !(principal == code);
    if (o.violated)
        o.payload = {{"input", {{"h", triple_json(h)}}},
                     {"lhs", {{"generator", poly_r_json(sg.h)}, {"dimension", principal.expanded().dimension()}}},
                     {"rhs", {{"dimension", code.expanded().dimension()}}}};
    return o;
}

/// Cofactors k_i with h_i k_i = a^m -/+ 1.
Triple cofactors(const Setup& s, const Triple& h) {
    return {plus_modulus(s) / h[0], minus_modulus(s) / h[1], minus_modulus(s) / h[2]};
}

bool coprime_to_cofactors(const Setup& s, const Triple& h, const Triple& g) {
    const Triple k = cofactors(s, h);
    for (std::size_t i = 0; i < 3; ++i) {
        if (g[i].is_zero()) return false;
        if (!poly_gcd(g[i], k[i]).is_one()) return false;
    }
    return true;
}

Outcome eval_cofactor(const Setup& s, const Triple& h, const Triple& g) {
    Outcome o;
    o.premise = triple_divides(s, h) && coprime_to_cofactors(s, h, g);
    if (!o.premise) return o;
    const PolyR hr = sigma_sum(s, h);
    const ConstaCodeR base = ideal_code(s.ctx, s.m, UnitTag::Lambda, {hr});
    const ConstaCodeR scaled = ideal_code(s.ctx, s.m, UnitTag::Lambda, {hr * sigma_sum(s, g)});
    o.violated = !(base == scaled);
    if (o.violated)
        o.payload = {{"input", {{"h", triple_json(h)}, {"g", triple_json(g)}}},
                     {"lhs", {{"dimension", scaled.expanded().dimension()}}},
                     {"rhs", {{"dimension", base.expanded().dimension()}}}};
    return o;
}

Outcome eval_hk(const Setup& s, const Triple& h) {
    Outcome o;
    o.premise = triple_divides(s, h);
    if (!o.premise) return o;
    const HkProduct hk = check_hk_product(triple_codes(s, h), s.ctx);
    o.violated = !hk.holds();
    if (o.violated)
        o.payload = {{"input", {{"h", triple_json(h)}}}, {"lhs", poly_r_json(hk.product)}, {"rhs", poly_r_json(hk.expected)}};
    return o;
}

Outcome eval_bezout(const Setup& s, const Triple& h, const Triple& g) {
    Outcome o;
    o.premise = triple_divides(s, h) && coprime_to_cofactors(s, h, g);
    if (!o.premise) return o;
    const Triple k = cofactors(s, h);
    Triple us{PolyFp(s.p()), PolyFp(s.p()), PolyFp(s.p())};
    Triple vs = us;
    for (std::size_t i = 0; i < 3; ++i) {
        const GcdExt e = poly_gcd_ext(g[i], k[i]);
        us[i] = e.s;
        vs[i] = e.t;
    }
    const PolyR lhs = sigma_sum(s, us) * sigma_sum(s, g) + sigma_sum(s, vs) * sigma_sum(s, k);
    o.violated = !lhs.is_one();
    if (o.violated)
        o.payload = {{"input", {{"h", triple_json(h)}, {"g", triple_json(g)}}}, {"lhs", poly_r_json(lhs)}, {"rhs", "1"}};
    return o;
}

Outcome eval_dual_decomposition(const Setup& s, const Triple& h) {
    Outcome o;
    o.premise = triple_divides(s, h);
    if (!o.premise) return o;
    const SigmaTriple t = triple_codes(s, h);
    const ConstaCodeR dual = dual_R(build_from_triple(t, s.ctx));
    const ConstaCodeR parts = build_from_triple({dual_fp(t.l1), dual_fp(t.l2), dual_fp(t.l3)}, s.ctx);
    o.violated = !(dual == parts);
    if (o.violated)
        o.payload = {{"input", {{"h", triple_json(h)}}},
                     {"lhs", code_json(dual)},
                     {"rhs", code_json(parts)}};
    return o;
}

Outcome eval_reciprocal_dual(const Setup& s, const Triple& h) {
    Outcome o;
    o.premise = triple_divides(s, h);
    if (!o.premise) return o;
    const SigmaTriple t = triple_codes(s, h);
    const ConstaCodeR dual = dual_R(build_from_triple(t, s.ctx));
    const ReciprocalDual rd = dual_via_reciprocal(t, s.ctx);
    const std::uint64_t formula = power(s.p(), degree_sum(h));
    const bool count_it = checked_power(s.p(), s.symbols(), s.caps.ideal_words).has_value();
    const std::uint64_t counted = count_it ? count_members(dual.expanded()) : power(s.p(), dual.expanded().dimension());
    const bool triple_ok = dual == rd.triple_code;
    const bool single_ok = dual == rd.single_code;
    o.violated = !triple_ok || !single_ok || counted != formula;
    if (o.violated)
        o.payload = {{"input", {{"h", triple_json(h)}}},
                     {"lhs", {{"dual", code_json(dual)}, {"size", counted}}},
                     {"rhs",
                      {{"reciprocal_generator", poly_r_json(rd.single)},
                       {"triple_equal", triple_ok},
                       {"single_equal", single_ok},
                       {"size", formula}}}};
    return o;
}

Outcome eval_mu_pair(const Setup& s, const RWord& f, const RWord& g) {
    const auto cyc = QuotientModulus::cyclic(s.ctx, s.m);
    const auto con = QuotientModulus::constacyclic(s.ctx, s.m);
    const PolyR pf = word_to_poly(f);
    const PolyR pg = word_to_poly(g);
    const PolyR lhs = mu_map(qr_mul(pf, pg, cyc));
    const PolyR rhs = qr_mul(mu_map(pf), mu_map(pg), con);
    Outcome o;
    o.violated = !(lhs == rhs);
    if (o.violated)
        o.payload = {{"input", {{"f", word_json(f)}, {"g", word_json(g)}}},
                     {"lhs", poly_r_json(lhs)},
                     {"rhs", poly_r_json(rhs)},
                     {"identity", "mu(f g) = mu(f) mu(g)"}};
    return o;
}

/// Rank of mu as an F_p-linear map on R^m.
std::size_t mu_rank(const Setup& s) {
    std::vector<linalg::Row> rows;
    for (std::size_t idx = 0; idx < s.symbols(); ++idx) {
        std::vector<Residue> e(s.symbols(), 0);
        e[idx] = 1;
        const RWord w = collapse(s.ctx, FpVector(s.p(), std::move(e)));
        rows.push_back(expand(poly_to_word(s.ctx, mu_map(word_to_poly(w)), s.m)).entries());
    }
    return linalg::rref(s.p(), s.symbols(), std::move(rows)).rank();
}

ConstaCodeR mu_image(const Setup& s, const ConstaCodeR& code) {
    std::vector<RWord> gens;
    for (const auto& w : code.basis_words()) gens.push_back(poly_to_word(s.ctx, mu_map(word_to_poly(w)), s.m));
    return ConstaCodeR(s.ctx, s.m, UnitTag::Lambda, std::move(gens));
}

ConstaCodeR mu_bar_image(const Setup& s, const ConstaCodeR& code) {
    std::vector<RWord> gens;
    for (const auto& w : code.basis_words()) gens.push_back(mu_bar(w));
    return ConstaCodeR(s.ctx, s.m, UnitTag::Lambda, std::move(gens));
}

Outcome eval_mu_ideal(const Setup& s, const ConstaCodeR& code, bool forward) {
    const bool ideal = ideal_closed_under_a(code);
    const ConstaCodeR image = mu_image(s, code);
    const bool image_ideal = ideal_closed_under_a(image);
    Outcome o;
    o.premise = forward ? ideal : image_ideal;
    o.violated = o.premise && !(forward ? image_ideal : ideal);
    if (o.violated)
        o.payload = {{"input", {{"code", code_json(code)}}},
                     {"lhs", {{"ideal", ideal}}},
                     {"rhs", {{"image_ideal", image_ideal}, {"image", code_json(image)}}}};
    return o;
}

Outcome eval_mu_bar(const Setup& s, const ConstaCodeR& code, bool forward) {
    const bool cyclic = is_invariant(code, ShiftKind::Alpha);
    const ConstaCodeR image = mu_bar_image(s, code);
    const bool gamma = is_invariant(image, ShiftKind::Gamma);
    Outcome o;
    o.premise = forward ? cyclic : gamma;
    o.violated = o.premise && !(forward ? gamma : cyclic);
    if (o.violated)
        o.payload = {{"input", {{"code", code_json(code)}}},
                     {"lhs", {{"cyclic", cyclic}}},
                     {"rhs", {{"image_gamma_invariant", gamma}, {"image", code_json(image)}}}};
    return o;
}

Outcome eval_rho_cyclic(const Setup& s, const ConstaCodeR& code) {
    Outcome o;
    o.premise = is_invariant(code, ShiftKind::Alpha);
    if (!o.premise) return o;
    const LinearCodeFp image = permute_code(gray_image(code, GrayLayout(s.ctx)), nechaev_rho_permutation(s.m));
    const auto witness = shift_witness(image, ShiftKind::Alpha);
    o.violated = witness.has_value();
    if (o.violated)
        o.payload = {{"input", {{"code", code_json(code)}}},
                     {"permuted_generators", fp_code_json(image)},
                     {"lhs", vec_json(shift(*witness, ShiftKind::Alpha))},
                     {"rhs", "not in rho(gray image)"},
                     {"witness", vec_json(*witness)}};
    return o;
}

Outcome eval_rho_equivalent(const Setup& s, const ConstaCodeR& code) {
    Outcome o;
    o.premise = is_invariant(code, ShiftKind::Alpha);
    if (!o.premise) return o;
    const LinearCodeFp image = gray_image(code, GrayLayout(s.ctx));
    const LinearCodeFp permuted = permute_code(image, nechaev_rho_permutation(s.m));
    const bool plain = is_invariant(image, ShiftKind::Alpha);
    const bool rho = is_invariant(permuted, ShiftKind::Alpha);
    o.violated = !plain && !rho;
    if (o.violated)
        o.payload = {{"input", {{"code", code_json(code)}}},
                     {"gray_generators", fp_code_json(image)},
                     {"lhs", {{"identity_cyclic", plain}, {"rho_cyclic", rho}}},
                     {"rhs", "some candidate permutation gives a cyclic code"}};
    return o;
}

std::vector<PolyFp> example_factors(Residue p) {
    return {PolyFp(p, {-1, 1}), PolyFp(p, {1, 1, 0, 1}), PolyFp(p, {1, 0, 1, 1})};
}

Outcome eval_example_field() {
    const Residue p = 2;
    const Factorization f = factor_poly(PolyFp::binomial(p, kExampleLength, 1));
    std::vector<PolyFp> got;
    bool simple = f.unit == 1;
    for (const auto& fac : f.factors) {
        got.push_back(fac.factor);
        simple = simple && fac.multiplicity == 1;
    }
    auto expected = example_factors(p);
    Outcome o;
    o.violated = !simple || got != expected;
    if (o.violated) {
        ordered_json g = ordered_json::array();
        for (const auto& x : got) g.push_back(poly_json(x));
        ordered_json e = ordered_json::array();
        for (const auto& x : expected) e.push_back(poly_json(x));
        o.payload = {{"input", {{"p", p}}}, {"lhs", g}, {"rhs", e}};
    }
    return o;
}

Outcome eval_example_ring(const Setup& s) {
    const RingContext& ctx = s.ctx;
    const auto fs = example_factors(s.p());
    PolyFp product = PolyFp::constant(s.p(), 1);
    for (const auto& f : fs) product = product * f;
    const PolyFp target = PolyFp::binomial(s.p(), kExampleLength, 1);
    const PolyR lhs = PolyR::from_fp(ctx, product);
    const PolyR rhs = PolyR::from_fp(ctx, target);

    // Image under mu: (a - lambda)(a^3 + a + lambda)(a^3 + lambda a^2 + lambda) against a^7 - lambda.
    const RingElem one = RingElem::constant(ctx, 1);
    const RingElem lam = lambda_unit(ctx);
    const RingElem zero(ctx);
    const PolyR mu_lhs = PolyR(ctx, {-lam, one}) * PolyR(ctx, {lam, one, zero, one}) * PolyR(ctx, {lam, zero, lam, one});
    const PolyR mu_rhs = PolyR::monomial(one, kExampleLength) - PolyR::constant(lam);

    Outcome o;
    o.violated = !(lhs == rhs) || !(mu_lhs == mu_rhs);
    if (o.violated)
        o.payload = {{"input", {{"p", s.p()}, {"k", ctx.k}}},
                     {"lhs", poly_json(product)},
                     {"rhs", poly_json(target)},
                     {"difference", poly_json(product - target)},
                     {"difference_text", to_string(product - target)},
                     {"mu_lhs", poly_r_json(mu_lhs)},
                     {"mu_rhs", poly_r_json(mu_rhs)}};
    return o;
}

Outcome eval_parity(const Setup& s, int m) {
    const RingElem lam = lambda_unit(s.ctx);
    const RingElem lhs = ring_pow(lam, static_cast<unsigned>(m));
    const RingElem rhs = m % 2 == 1 ? lam : RingElem::constant(s.ctx, 1);
    Outcome o;
    o.violated = lhs != rhs;
    if (o.violated)
        o.payload = {{"input", {{"exponent", m}}}, {"lhs", lhs.coeffs()}, {"rhs", rhs.coeffs()}};
    return o;
}

// ------------------------------------------------------------------ claim drivers

using Rows = std::vector<TheoremCheck>;

std::string sigma_reason(const Setup& s) {
    try {
        require_sigma_decomposition(s.ctx);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

constexpr const char* kOddM = "claim assumes odd m";

std::string odd_width_reason(const Setup& s) {
    if (s.m % 2 == 0) return kOddM;
    if (GrayLayout(s.ctx).width() != 3)
        return "Gray image has " + std::to_string(GrayLayout(s.ctx).width()) + "m positions, rho acts on 3m";
    return {};
}

Rows pointwise(const std::string& id, const Setup& s, Outcome (*eval)(const Setup&, const RWord&)) {
    Sampler rng(derive_seed(s.seed, id, s.p(), s.ctx.k, s.m));
    const WordDomain d = word_domain(s, s.caps.words);
    Tally t;
    for_each_word(s, d, rng, [&](const RWord& w) { t.add(eval(s, w), false); });
    return {row({id, ""}, s, d.strategy, t, d.strategy == Strategy::Exhaustive ? "all words of R^m" : "seeded words")};
}

template <typename Eval>
Rows directed_codes(const std::string& id, const Setup& s, UnitTag unit, Eval eval) {
    Sampler rng(derive_seed(s.seed, id, s.p(), s.ctx.k, s.m));
    const CodeDomain d = code_domain(s, unit, rng);
    Rows out;
    for (bool forward : {true, false}) {
        const Tally t = run_codes(d, [&](const ConstaCodeR& c) { return eval(s, c, forward); });
        out.push_back(row({id, forward ? "forward" : "reverse"}, s, d.strategy, t, d.note));
    }
    return out;
}

template <typename Eval>
Rows single_codes(const std::string& id, const Setup& s, UnitTag unit, Eval eval, std::string note = {}) {
    Sampler rng(derive_seed(s.seed, id, s.p(), s.ctx.k, s.m));
    const CodeDomain d = code_domain(s, unit, rng);
    const Tally t = run_codes(d, [&](const ConstaCodeR& c) { return eval(s, c); });
    return {row({id, ""}, s, d.strategy, t, note.empty() ? d.note : d.note + "; " + note)};
}

Rows triple_claim(const std::string& id, const Setup& s, Outcome (*eval)(const Setup&, const Triple&)) {
    if (auto r = sigma_reason(s); !r.empty()) return {not_applicable({id, ""}, s, r)};
    Tally t;
    for (const auto& h : divisor_triples(s)) t.add(eval(s, h), false);
    return {row({id, ""}, s, Strategy::Exhaustive, t, "all divisor triples")};
}

/// (h, g) with g_i in {1} and {a + c}; exhaustive up to the cofactor cap, otherwise sampled.
Rows cofactor_claim(const std::string& id, const Setup& s, Outcome (*eval)(const Setup&, const Triple&, const Triple&)) {
    if (auto r = sigma_reason(s); !r.empty()) return {not_applicable({id, ""}, s, r)};
    std::vector<PolyFp> choices{PolyFp::constant(s.p(), 1)};
    for (Residue c = 0; c < s.p(); ++c) choices.push_back(PolyFp(s.p(), std::vector<Residue>{c, 1}));
    const auto triples = divisor_triples(s);
    const std::uint64_t per = choices.size() * choices.size() * choices.size();
    const std::uint64_t total = triples.size() * per;
    auto gtriple = [&](std::uint64_t j) {
        const std::size_t n = choices.size();
        return Triple{choices[j % n], choices[(j / n) % n], choices[j / (n * n)]};
    };
    Tally t;
    if (total <= s.caps.cofactor_cases) {
        for (const auto& h : triples)
            for (std::uint64_t j = 0; j < per; ++j) t.add(eval(s, h, gtriple(j)), false);
        return {row({id, ""}, s, Strategy::Exhaustive, t, "divisor triples x cofactor choices {1, a + c}")};
    }
    Sampler rng(derive_seed(s.seed, id, s.p(), s.ctx.k, s.m));
    for (std::uint64_t i = 0; i < s.caps.samples; ++i) {
        const auto& h = triples[rng.below(triples.size())];
        t.add(eval(s, h, gtriple(rng.below(per))), false);
    }
    return {row({id, ""}, s, Strategy::Sampled, t, "seeded (triple, cofactor) pairs")};
}

Rows claim_t22(const Setup& s) {
    const std::string id = "T2.2";
    Sampler rng(derive_seed(s.seed, id, s.p(), s.ctx.k, s.m));
    const WordDomain d = word_domain(s, s.caps.ideal_words);
    std::unordered_map<std::string, Outcome> cache;
    Tally t;
    for_each_word(s, d, rng, [&](const RWord& w) {
        const ConstaCodeR code = ideal_code(s.ctx, s.m, UnitTag::Lambda, {word_to_poly(w)});
        const std::string key = rref_key(code.expanded());
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, eval_gray_cyclic(s, code)).first;
        t.add(it->second, false);
    });
    return {row({id, ""}, s, d.strategy, t, "principal ideals <w(a)> in word order")};
}

Rows claim_t212(const Setup& s) {
    const std::string id = "T2.12";
    if (s.m % 2 == 0) return {not_applicable({id, ""}, s, kOddM)};
    Tally t;
    std::string note;
    // Bijectivity: distinct images over all of R^m when small, otherwise full rank.
    if (auto n = checked_power(s.p(), s.symbols(), s.caps.words)) {
        std::unordered_map<std::string, bool> images;
        for (std::uint64_t i = 0; i < *n; ++i) {
            const RWord w = word_at(s, i);
            images.emplace(to_string(mu_map(word_to_poly(w))), true);
        }
        note = "bijective on all " + std::to_string(*n) + " words: " + (images.size() == *n ? "yes" : "no");
        if (images.size() != *n) {
            Outcome o;
            o.violated = true;
            o.payload = {{"input", {{"check", "bijectivity"}}}, {"lhs", images.size()}, {"rhs", *n}};
            t.add(std::move(o), true);
        }
    } else {
        const std::size_t rank = mu_rank(s);
        note = "rank " + std::to_string(rank) + " of " + std::to_string(s.symbols());
        if (rank != s.symbols()) {
            Outcome o;
            o.violated = true;
            o.payload = {{"input", {{"check", "bijectivity"}}}, {"lhs", rank}, {"rhs", s.symbols()}};
            t.add(std::move(o), true);
        }
    }
    Sampler rng(derive_seed(s.seed, id, s.p(), s.ctx.k, s.m));
    const auto n = checked_power(s.p(), s.symbols(), s.caps.pairs);
    Strategy strategy = Strategy::Sampled;
    if (n && *n * *n <= s.caps.pairs) {
        strategy = Strategy::Exhaustive;
        std::vector<RWord> words;
        for (std::uint64_t i = 0; i < *n; ++i) words.push_back(word_at(s, i));
        for (const auto& f : words)
            for (const auto& g : words) t.add(eval_mu_pair(s, f, g), false);
    } else {
        for (std::uint64_t i = 0; i < s.caps.pair_samples; ++i) {
            const RWord f = random_word(s, rng);
            t.add(eval_mu_pair(s, f, random_word(s, rng)), false);
        }
    }
    return {row({id, ""}, s, strategy, t, "multiplicativity over pairs; " + note)};
}

Rows claim_t25(const Setup& s) {
    const std::string id = "T2.5";
    if (auto r = sigma_reason(s); !r.empty())
        return {not_applicable({id, "forward"}, s, r), not_applicable({id, "reverse"}, s, r)};
    return directed_codes(id, s, UnitTag::Lambda, eval_decomposition);
}

Rows claim_e219(const Setup& s) {
    Rows out;
    Tally field;
    field.add(eval_example_field(), false);
    out.push_back(make_row({"E2.19", "F2"}, 2, 0, static_cast<int>(kExampleLength), s.seed, Strategy::Exhaustive, field,
                           "factorization of a^7 - 1 over F_2"));
    Setup ring = s;
    ring.m = kExampleLength;
    Tally t;
    t.add(eval_example_ring(ring), false);
    std::string note = "displayed product against a^7 - 1 in R[a]";
    if (t.first) note += "; difference " + (*t.first)["difference_text"].get<std::string>();
    out.push_back(row({"E2.19", "R"}, ring, Strategy::Exhaustive, t, note));
    return out;
}

Rows claim_parity(const Setup& s) {
    Setup norm = s;
    norm.m = kParityMax;
    Tally t;
    for (int m = 1; m <= kParityMax; ++m) t.add(eval_parity(norm, m), false);
    return {row({"NOTE-parity", ""}, norm, Strategy::Exhaustive, t, "exponents 1..10")};
}

Rows dispatch(const std::string& id, const Setup& s) {
    if (id == "T1.1") return directed_codes(id, s, UnitTag::Lambda, eval_ideal_equivalence);
    if (id == "T2.1") return pointwise(id, s, eval_gray_shift);
    if (id == "T2.2") return claim_t22(s);
    if (id == "P2.3") return directed_codes(id, s, UnitTag::Lambda, eval_dual_invariance);
    if (id == "P2.4") return single_codes(id, s, UnitTag::Lambda, eval_self_orthogonal, "filtered to self-orthogonal codes");
    if (id == "T2.5") return claim_t25(s);
    if (id == "T2.6") return triple_claim(id, s, eval_generators);
    if (id == "T2.7") return triple_claim(id, s, eval_single_generator);
    if (id == "L2.8") return cofactor_claim(id, s, eval_cofactor);
    if (id == "T2.9a") return triple_claim(id, s, eval_hk);
    if (id == "T2.9b") return cofactor_claim(id, s, eval_bezout);
    if (id == "T2.10") return triple_claim(id, s, eval_dual_decomposition);
    if (id == "C2.11") return triple_claim(id, s, eval_reciprocal_dual);
    if (id == "T2.12") return claim_t212(s);
    if (id == "C2.13" || id == "C2.14") {
        if (s.m % 2 == 0) return {not_applicable({id, "forward"}, s, kOddM), not_applicable({id, "reverse"}, s, kOddM)};
        return id == "C2.13" ? directed_codes(id, s, UnitTag::Cyclic, eval_mu_ideal)
                             : directed_codes(id, s, UnitTag::Cyclic, eval_mu_bar);
    }
    if (id == "P2.16") {
        if (auto r = odd_width_reason(s); !r.empty()) return {not_applicable({id, ""}, s, r)};
        return pointwise(id, s, eval_gray_nechaev);
    }
    if (id == "C2.17") {
        if (auto r = odd_width_reason(s); !r.empty()) return {not_applicable({id, ""}, s, r)};
        return single_codes(id, s, UnitTag::Cyclic, eval_rho_cyclic);
    }
    if (id == "C2.18") {
        if (auto r = odd_width_reason(s); !r.empty()) return {not_applicable({id, ""}, s, r)};
        return single_codes(id, s, UnitTag::Cyclic, eval_rho_equivalent, "candidate permutations: identity, rho");
    }
    if (id == "E2.19") return claim_e219(s);
    if (id == "NOTE-parity") return claim_parity(s);
    throw Error(ErrorKind::InvalidParameter, "unknown claim id '" + id + "'");
}

std::size_t claim_index(const std::string& id) {
    const auto& ids = claim_ids();
    return static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin());
}

int part_index(const std::string& part) {
    static const std::vector<std::string> order{"", "forward", "reverse", "F2", "R"};
    const auto it = std::find(order.begin(), order.end(), part);
    return static_cast<int>(it - order.begin());
}

}  // namespace

std::vector<TheoremCheck> check(const std::string& id, std::int64_t p, int k, int m, std::uint64_t seed, const Caps& caps) {
    if (!is_registered(id)) throw Error(ErrorKind::InvalidParameter, "unknown claim id '" + id + "'");
    const Params params = validate_params(p, k, m);
    const Setup s{ring_context(params), static_cast<std::size_t>(params.m), seed, caps};
    return dispatch(id, s);
}

std::size_t SuiteReport::count(Status s) const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [s](const TheoremCheck& r) { return r.status == s; }));
}

ordered_json SuiteReport::to_json() const {
    ordered_json doc;
    doc["seed"] = seed;
    doc["summary"] = {{"rows", rows.size()},
                      {"holds", count(Status::Holds)},
                      {"fails", count(Status::Fails)},
                      {"not_applicable", count(Status::NotApplicable)}};
    ordered_json results = ordered_json::array();
    for (const auto& r : rows) results.push_back(r.to_json());
    doc["results"] = std::move(results);
    return doc;
}

std::string SuiteReport::to_text() const {
    std::ostringstream os;
    os << std::left << std::setw(12) << "CLAIM" << std::setw(9) << "PART" << std::setw(7) << "P" << std::setw(4) << "K"
       << std::setw(4) << "M" << std::setw(12) << "STRATEGY" << std::setw(16) << "STATUS" << std::setw(10) << "EVIDENCE"
       << std::setw(7) << "EXTRA" << std::setw(7) << "VIOL" << "NOTE\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(12) << r.claim << std::setw(9) << (r.part.empty() ? "-" : r.part) << std::setw(7) << r.p
           << std::setw(4) << r.k << std::setw(4) << r.m << std::setw(12) << to_string(r.strategy) << std::setw(16)
           << to_string(r.status) << std::setw(10) << r.evidence_count << std::setw(7) << r.sampled_count << std::setw(7) << r.violations << r.note << '\n';
    }
    os << "rows: " << rows.size() << "  holds: " << count(Status::Holds) << "  fails: " << count(Status::Fails)
       << "  not-applicable: " << count(Status::NotApplicable) << '\n';
    return os.str();
}

SuiteReport run_suite(const Grid& grid, std::uint64_t seed, const Caps& caps, const std::vector<std::string>& ids) {
    const std::vector<std::string>& wanted = ids.empty() ? claim_ids() : ids;
    for (const auto& id : wanted)
        if (!is_registered(id)) throw Error(ErrorKind::InvalidParameter, "unknown claim id '" + id + "'");
    for (auto p : grid.ps)
        for (auto k : grid.ks)
            for (auto m : grid.ms) validate_params(p, k, m);

    using Key = std::tuple<std::size_t, std::int64_t, int, int, int>;
    std::map<Key, TheoremCheck> table;
    for (const auto& id : wanted)
        for (auto p : grid.ps)
            for (auto k : grid.ks)
                for (auto m : grid.ms) {
                    // Rows with normalized parameters repeat across grid points; compute them once.
                    if ((id == "E2.19" || id == "NOTE-parity") && m != grid.ms.front()) continue;
                    for (auto& r : check(id, p, k, m, seed, caps)) {
                        Key key{claim_index(r.claim), r.p, r.k, r.m, part_index(r.part)};
                        table.emplace(key, std::move(r));
                    }
                }
    SuiteReport report;
    report.seed = seed;
    for (auto& [key, r] : table) report.rows.push_back(std::move(r));
    return report;
}

bool recheck_counterexample(const ordered_json& row) {
    if (!row.is_object()) schema("expected a result row object");
    if (!row.contains("status") || !row["status"].is_string() || row["status"].get<std::string>() != "fails")
        schema("only rows with status 'fails' carry a counterexample");
    for (const char* key : {"claim", "part"})
        if (!row.contains(key) || !row[key].is_string()) schema(std::string("missing string field '") + key + "'");
    for (const char* key : {"p", "k", "m"})
        if (!row.contains(key) || !row[key].is_number_integer()) schema(std::string("missing integer field '") + key + "'");
    if (!row.contains("counterexample") || !row["counterexample"].is_object() || !row["counterexample"].contains("input") ||
        !row["counterexample"]["input"].is_object())
        schema("missing counterexample input");
    const std::string id = row["claim"].get<std::string>();
    const std::string part = row["part"].get<std::string>();
    if (!is_registered(id)) schema("unknown claim id '" + id + "'");
    const ordered_json& in = row["counterexample"]["input"];
    const std::int64_t p = row["p"].get<std::int64_t>();
    const std::int64_t k = row["k"].get<std::int64_t>();
    const std::int64_t m = row["m"].get<std::int64_t>();

    if (id == "E2.19" && part == "F2") {
        if (p != 2) schema("the F_2 example row must have p = 2");
        return eval_example_field().violated;
    }
    const Params params = validate_params(p, k, m);
    const Setup s{ring_context(params), static_cast<std::size_t>(params.m), row.value("seed", std::uint64_t{0}), Caps{}};
    auto field = [&](const char* key) -> const ordered_json& {
        if (!in.contains(key)) schema(std::string("missing input field '") + key + "'");
        return in[key];
    };
    auto confirmed = [](const Outcome& o) { return o.premise && o.violated; };
    auto direction = [&]() {
        if (part != "forward" && part != "reverse") schema("part must be 'forward' or 'reverse'");
        return part == "forward";
    };

    if (id == "T2.1") return confirmed(eval_gray_shift(s, word_from_json(s, field("word"))));
    if (id == "P2.16") {
        if (!odd_width_reason(s).empty()) schema(odd_width_reason(s));
        return confirmed(eval_gray_nechaev(s, word_from_json(s, field("word"))));
    }
    if (id == "T2.2") return confirmed(eval_gray_cyclic(s, code_from_json(s, field("code"), UnitTag::Lambda)));
    if (id == "P2.4") return confirmed(eval_self_orthogonal(s, code_from_json(s, field("code"), UnitTag::Lambda)));
    if (id == "T1.1") return confirmed(eval_ideal_equivalence(s, code_from_json(s, field("code"), UnitTag::Lambda), direction()));
    if (id == "P2.3") return confirmed(eval_dual_invariance(s, code_from_json(s, field("code"), UnitTag::Lambda), direction()));
    if (id == "C2.13" || id == "C2.14" || id == "C2.17" || id == "C2.18") {
        if (s.m % 2 == 0) schema(kOddM);
        const ConstaCodeR code = code_from_json(s, field("code"), UnitTag::Cyclic);
        if (id == "C2.13") return confirmed(eval_mu_ideal(s, code, direction()));
        if (id == "C2.14") return confirmed(eval_mu_bar(s, code, direction()));
        if (!odd_width_reason(s).empty()) schema(odd_width_reason(s));
        return confirmed(id == "C2.17" ? eval_rho_cyclic(s, code) : eval_rho_equivalent(s, code));
    }
    if (id == "NOTE-parity") {
        const ordered_json& e = field("exponent");
        if (!e.is_number_integer() || e.get<std::int64_t>() < 1 || e.get<std::int64_t>() > 4096) schema("bad exponent");
        return confirmed(eval_parity(s, static_cast<int>(e.get<std::int64_t>())));
    }
    if (id == "E2.19") {
        if (part != "R") schema("unknown E2.19 part");
        return confirmed(eval_example_ring(s));
    }
    if (id == "T2.12") {
        if (s.m % 2 == 0) schema(kOddM);
        if (in.contains("check")) return mu_rank(s) != s.symbols();
        return confirmed(eval_mu_pair(s, word_from_json(s, field("f")), word_from_json(s, field("g"))));
    }

    // The remaining claims are stated for the sigma decomposition.
    if (auto r = sigma_reason(s); !r.empty()) schema(r);
    if (id == "T2.5") return confirmed(eval_decomposition(s, code_from_json(s, field("code"), UnitTag::Lambda), direction()));
    const Triple h = triple_from_json(s.p(), field("h"));
    if (id == "L2.8" || id == "T2.9b") {
        const Triple g = triple_from_json(s.p(), field("g"));
        return confirmed(id == "L2.8" ? eval_cofactor(s, h, g) : eval_bezout(s, h, g));
    }
    if (id == "T2.6") return confirmed(eval_generators(s, h));
    if (id == "T2.7") return confirmed(eval_single_generator(s, h));
    if (id == "T2.9a") return confirmed(eval_hk(s, h));
    if (id == "T2.10") return confirmed(eval_dual_decomposition(s, h));
    if (id == "C2.11") return confirmed(eval_reciprocal_dual(s, h));
    schema("no recheck for claim '" + id + "'");
}

}  // namespace rcc::lab
