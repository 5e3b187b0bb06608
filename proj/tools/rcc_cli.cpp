#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rcc/codefile.hpp"
#include "rcc/codes.hpp"
#include "rcc/error.hpp"
#include "rcc/graymaps.hpp"
#include "rcc/polyring.hpp"
#include "rcc/ring_r.hpp"
#include "rcc/theoremlab.hpp"

using namespace rcc;
using nlohmann::ordered_json;

namespace {

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::Schema: return 1;
        case ErrorKind::InvalidParameter:
        case ErrorKind::NotInvertible:
        case ErrorKind::ContextMismatch:
        case ErrorKind::Precondition: return 2;
        case ErrorKind::CapExceeded: return 3;
        case ErrorKind::Io: return 4;
    }
    return 1;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const std::string& flag) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        const auto e = item.find_last_not_of(" \t");
        item = item.substr(b, e - b + 1);
        T v{};
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size())
            throw Error(ErrorKind::Parse, flag + ": '" + item + "' is not an integer");
        out.push_back(v);
    }
    return out;
}

std::vector<std::string> parse_ids(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& r : raw) {
        std::stringstream ss(r);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(item);
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorKind::Io, "cannot open '" + out_path + "' for writing");
    out << text;
    if (!out) throw Error(ErrorKind::Io, "write to '" + out_path + "' failed");
}

std::string factor_text(const PolyFp& f, const Factorization& fac) {
    std::ostringstream os;
    os << to_string(f) << " = ";
    if (fac.unit != 1) os << fac.unit;
    for (const auto& fp : fac.factors) {
        os << '(' << to_string(fp.factor) << ')';
        if (fp.multiplicity > 1) os << '^' << fp.multiplicity;
    }
    return os.str();
}

std::string matrix_text(const std::vector<FpVector>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
        os << '\n';
    }
    return os.str();
}

// ------------------------------------------------------------------ subcommands

struct FactorArgs {
    std::int64_t p = 0;
    std::string poly;
    std::uint64_t seed = kDefaultFactorSeed;
    std::string format = "text";
};

int cmd_factor(const FactorArgs& a) {
    const Residue p = validate_prime(a.p, true);
    const PolyFp f = parse_poly(a.poly, p);
    require(f.degree().value_or(0) >= 1, ErrorKind::Precondition, "factor needs a polynomial of degree at least 1");
    const Factorization fac = factor_poly(f, a.seed);
    if (a.format == "json") {
        ordered_json doc;
        doc["p"] = p;
        doc["poly"] = to_string(f);
        doc["unit"] = fac.unit;
        ordered_json fs = ordered_json::array();
        for (const auto& fp : fac.factors)
            fs.push_back({{"factor", to_string(fp.factor)}, {"coeffs", fp.factor.coeffs()}, {"multiplicity", fp.multiplicity}});
        doc["factors"] = std::move(fs);
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << factor_text(f, fac) << '\n';
    }
    return 0;
}

int cmd_ring_info(std::int64_t p_raw, std::int64_t k_raw) {
    const RingContext ctx = ring_context(validate_params(p_raw, k_raw, 1));
    const IdempotentReport rep = idempotent_report(ctx);
    std::cout << "R = F_" << ctx.p << "[u]/(u^" << ctx.k + 1 << " - u)\n";
    for (int i = 0; i < 3; ++i)
        std::cout << "sigma" << i + 1 << " = " << to_pretty_string(rep.sigmas[static_cast<std::size_t>(i)]) << '\n';
    std::cout << "lambda = " << to_pretty_string(rep.lambda) << '\n';
    for (const auto& id : rep.identities()) {
        std::cout << id.name << ": " << (id.holds() ? "true" : "false");
        if (!id.holds()) std::cout << "  (lhs = " << to_pretty_string(id.lhs) << ", rhs = " << to_pretty_string(id.rhs) << ')';
        std::cout << '\n';
    }
    std::cout << "all identities hold: " << (rep.all_hold() ? "true" : "false") << '\n';
    return 0;
}

struct BuildArgs {
    std::int64_t p = 0, k = 2, m = 0;
    std::string h1 = "1", h2 = "1", h3 = "1";
    std::string out;
    std::uint64_t cap = kDefaultEnumerationCap;
};

int cmd_code_build(const BuildArgs& a) {
    const Params params = validate_params(a.p, a.k, a.m);
    const RingContext ctx = ring_context(params);
    require_sigma_decomposition(ctx);
    const auto m = static_cast<std::size_t>(params.m);
    const PolyFp plus = PolyFp::binomial(ctx.p, m, 1);
    const PolyFp minus = PolyFp::binomial(ctx.p, m, -1);
    const std::array<std::string, 3> texts{a.h1, a.h2, a.h3};
    std::array<PolyFp, 3> hs{PolyFp(ctx.p), PolyFp(ctx.p), PolyFp(ctx.p)};
    for (std::size_t i = 0; i < 3; ++i) {
        const PolyFp h = parse_poly(texts[i], ctx.p);
        const PolyFp& target = i == 0 ? plus : minus;
        if (h.is_zero() || !divides(h, target))
            throw Error(ErrorKind::Precondition, "h" + std::to_string(i + 1) + " = " + to_string(h) + " does not divide " +
                                                     to_string(target) + " over F_" + std::to_string(ctx.p));
        hs[i] = monic(h);
    }
    const SigmaTriple t{poly_code(ctx.p, m, hs[0], Sign::Plus), poly_code(ctx.p, m, hs[1], Sign::Minus),
                        poly_code(ctx.p, m, hs[2], Sign::Minus)};
    const ConstaCodeR code = build_from_triple(t, ctx);
    const SingleGenerator sg = single_generator(t, ctx);
    std::cout << "|L| = " << code.size(a.cap) << '\n';
    std::cout << "dimension over F_" << ctx.p << ": " << code.expanded().dimension() << '\n';
    std::cout << "h(a) = " << to_string(sg.h) << '\n';
    if (!a.out.empty()) {
        write_json_file(a.out, code_document_json(code));
        std::cout << "wrote " << a.out << '\n';
    }
    return 0;
}

int cmd_code_dual(const std::string& in, const std::string& out) {
    const CodeDocument doc = read_code_file(in);
    ordered_json result;
    std::size_t dim = 0;
    if (const auto* fc = std::get_if<LinearCodeFp>(&doc.code)) {
        const LinearCodeFp d = dual_fp(*fc);
        dim = d.dimension();
        result = code_document_json(d, doc.unit);
    } else {
        const ConstaCodeR d = dual_R(std::get<ConstaCodeR>(doc.code));
        dim = d.expanded().dimension();
        result = code_document_json(d);
    }
    std::cout << "dual dimension over F_" << doc.p << ": " << dim << '\n';
    if (!out.empty()) {
        write_json_file(out, result);
        std::cout << "wrote " << out << '\n';
    } else {
        std::cout << result.dump(2) << '\n';
    }
    return 0;
}

const ConstaCodeR& ring_code(const CodeDocument& doc, const std::string& what) {
    const auto* rc = std::get_if<ConstaCodeR>(&doc.code);
    if (!rc) throw Error(ErrorKind::Precondition, what + " needs a code over R (k >= 1)");
    return *rc;
}

int cmd_code_gray(const std::string& in) {
    const CodeDocument doc = read_code_file(in);
    const ConstaCodeR& code = ring_code(doc, "gray");
    const GrayLayout layout(code.context());
    const LinearCodeFp image = gray_image(code, layout);
    std::cout << "Gray image: length " << image.length() << ", dimension " << image.dimension() << '\n';
    std::cout << matrix_text(image.basis());
    return 0;
}

int cmd_code_distance(const std::string& in, std::uint64_t cap) {
    const CodeDocument doc = read_code_file(in);
    if (const auto* fc = std::get_if<LinearCodeFp>(&doc.code)) {
        std::cout << "minimum distance: " << min_distance(*fc, cap) << '\n';
        return 0;
    }
    const auto& code = std::get<ConstaCodeR>(doc.code);
    std::cout << "minimum symbol distance over R: " << min_distance(code, cap) << '\n';
    std::cout << "minimum distance of Gray image: " << min_distance(gray_image(code, GrayLayout(code.context())), cap) << '\n';
    return 0;
}

int cmd_code_check(const std::string& in) {
    const CodeDocument doc = read_code_file(in);
    auto yes = [](bool b) { return b ? "true" : "false"; };
    if (const auto* fc = std::get_if<LinearCodeFp>(&doc.code)) {
        std::cout << "alpha-invariant: " << yes(is_invariant(*fc, ShiftKind::Alpha)) << '\n';
        std::cout << "beta-invariant: " << yes(is_invariant(*fc, ShiftKind::Beta)) << '\n';
        return 0;
    }
    const auto& code = std::get<ConstaCodeR>(doc.code);
    std::cout << "gamma-invariant: " << yes(is_invariant(code, ShiftKind::Gamma)) << '\n';
    std::cout << "alpha-invariant: " << yes(is_invariant(code, ShiftKind::Alpha)) << '\n';
    std::cout << "beta-invariant: " << yes(is_invariant(code, ShiftKind::Beta)) << '\n';
    std::cout << "ideal in R[a]/(a^m - " << to_string(code.unit()) << " unit): " << yes(ideal_closed_under_a(code)) << '\n';
    std::cout << "self-orthogonal: " << yes(is_self_orthogonal(code)) << '\n';
    return 0;
}

struct TheoremArgs {
    std::string ps = "3,5", ks = "2", ms = "1,2,3";
    std::uint64_t seed = 42;
    std::vector<std::string> ids;
    std::string format = "text";
    std::string out;
};

int cmd_theorems_run(const TheoremArgs& a) {
    lab::Grid grid{parse_list<std::int64_t>(a.ps, "--p"), parse_list<int>(a.ks, "--k"), parse_list<int>(a.ms, "--m")};
    const lab::SuiteReport report = lab::run_suite(grid, a.seed, {}, parse_ids(a.ids));
    emit(a.format == "json" ? report.to_json().dump(2) + "\n" : report.to_text(), a.out);
    return 0;
}

int cmd_theorems_recheck(const std::string& in) {
    std::ifstream file(in);
    if (!file) throw Error(ErrorKind::Io, "cannot open '" + in + "' for reading");
    ordered_json doc;
    try {
        file >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Schema, "'" + in + "' is not valid JSON: " + e.what());
    }
    std::vector<ordered_json> rows;
    if (doc.is_object() && doc.contains("results") && doc["results"].is_array()) {
        for (const auto& r : doc["results"])
            if (r.value("status", "") == "fails") rows.push_back(r);
    } else {
        rows.push_back(doc);
    }
    for (const auto& r : rows) {
        const bool still = lab::recheck_counterexample(r);
        std::cout << r.value("claim", "?") << ' ' << r.value("part", "") << " p=" << r.value("p", 0) << " k=" << r.value("k", 0)
                  << " m=" << r.value("m", 0) << ": " << (still ? "violation confirmed" : "not violated") << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constacyclic codes over F_p[u]/(u^{k+1} - u): factorization, codes, Gray images, claim checks"};
    app.require_subcommand(1);

    FactorArgs fa;
    auto* factor = app.add_subcommand("factor", "Factor a polynomial over F_p");
    factor->add_option("--p", fa.p, "Prime modulus (2 allowed here)")->required();
    factor->add_option("--poly", fa.poly, "Polynomial, e.g. a^7-1 or [4,0,1]")->required();
    factor->add_option("--seed", fa.seed, "Seed for equal-degree splitting");
    factor->add_option("--format", fa.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::int64_t ri_p = 0, ri_k = 0;
    auto* ring = app.add_subcommand("ring-info", "Print sigma_1..3, lambda and the idempotent identities");
    ring->add_option("--p", ri_p, "Odd prime")->required();
    ring->add_option("--k", ri_k, "Exponent k >= 2")->required();

    auto* code = app.add_subcommand("code", "Build and inspect codes");
    code->require_subcommand(1);
    BuildArgs ba;
    auto* build = code->add_subcommand("build", "Build <sigma1 h1, sigma2 h2, sigma3 h3>");
    build->add_option("--p", ba.p)->required();
    build->add_option("--k", ba.k);
    build->add_option("--m", ba.m)->required();
    build->add_option("--h1", ba.h1, "Divisor of a^m - 1");
    build->add_option("--h2", ba.h2, "Divisor of a^m + 1");
    build->add_option("--h3", ba.h3, "Divisor of a^m + 1");
    build->add_option("--out", ba.out, "Code file to write");
    build->add_option("--cap", ba.cap, "Largest code size to report");

    std::string in_path, out_path;
    std::uint64_t cap = kDefaultEnumerationCap;
    auto* dual = code->add_subcommand("dual", "Euclidean dual of a code file");
    dual->add_option("--in", in_path)->required();
    dual->add_option("--out", out_path);
    auto* gray = code->add_subcommand("gray", "Gray image generator matrix");
    gray->add_option("--in", in_path)->required();
    auto* distance = code->add_subcommand("distance", "Minimum distance by enumeration");
    distance->add_option("--in", in_path)->required();
    distance->add_option("--cap", cap, "Largest number of codewords to enumerate");
    auto* check = code->add_subcommand("check", "Shift invariance verdicts");
    check->add_option("--in", in_path)->required();

    auto* theorems = app.add_subcommand("theorems", "Check the claim catalogue on a parameter grid");
    theorems->require_subcommand(1);
    TheoremArgs ta;
    auto* run = theorems->add_subcommand("run", "Run the claim suite");
    run->add_option("--p", ta.ps, "Comma-separated primes");
    run->add_option("--k", ta.ks, "Comma-separated k values");
    run->add_option("--m", ta.ms, "Comma-separated lengths");
    run->add_option("--seed", ta.seed);
    run->add_option("--id", ta.ids, "Claim ids (repeatable or comma-separated)");
    run->add_option("--format", ta.format)->check(CLI::IsMember({"text", "json"}));
    run->add_option("--out", ta.out);
    std::string recheck_in;
    auto* recheck = theorems->add_subcommand("recheck", "Recompute counterexamples from a row or report file");
    recheck->add_option("--in", recheck_in)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*factor) return cmd_factor(fa);
        if (*ring) return cmd_ring_info(ri_p, ri_k);
        if (*build) return cmd_code_build(ba);
        if (*dual) return cmd_code_dual(in_path, out_path);
        if (*gray) return cmd_code_gray(in_path);
        if (*distance) return cmd_code_distance(in_path, cap);
        if (*check) return cmd_code_check(in_path);
        if (*run) return cmd_theorems_run(ta);
        if (*recheck) return cmd_theorems_recheck(recheck_in);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    }
    return 1;
}
