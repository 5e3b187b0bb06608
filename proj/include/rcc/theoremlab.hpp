#ifndef RCC_THEOREMLAB_HPP
#define RCC_THEOREMLAB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rcc/gf_prime.hpp"

namespace rcc::lab {

enum class Strategy { Exhaustive, Sampled };
enum class Status { Holds, Fails, NotApplicable };

std::string to_string(Strategy s);
std::string to_string(Status s);

/// Enumeration limits. Anything above a limit is sampled or reported not-applicable.
struct Caps {
    std::uint64_t words = 1'000'000;        // pointwise identities over R^m
    std::uint64_t ideal_words = 25'000;     // principal ideals <w(a)> over every word w
    std::uint64_t samples = 2'000;          // random words when a space is above its cap
    std::uint64_t pairs = 20'000;           // exhaustive pairs for multiplicativity of mu
    std::uint64_t pair_samples = 1'000;     // seeded pairs otherwise
    std::uint64_t random_codes = 16;        // random R-submodules added to code-level domains
    std::uint64_t cofactor_cases = 20'000;  // (triple, g) combinations for L2.8 / T2.9b
};

/// One verdict. For split claims (iff statements, E2.19) `part` names the direction or variant.
struct TheoremCheck {
    std::string claim;
    std::string part;
    std::int64_t p = 0;
    int k = 0;
    int m = 0;
    std::uint64_t seed = 0;
    Strategy strategy = Strategy::Exhaustive;
    Status status = Status::Holds;
    std::uint64_t evidence_count = 0;  // cases of the declared enumeration that were evaluated
    std::uint64_t premise_count = 0;   // cases whose hypothesis held
    std::uint64_t sampled_count = 0;   // extra seeded cases outside the declared enumeration
    std::uint64_t violations = 0;
    std::string note;
    std::optional<nlohmann::ordered_json> counterexample;

    nlohmann::ordered_json to_json() const;
};

/// Claim ids in report order.
const std::vector<std::string>& claim_ids();
bool is_registered(const std::string& id);

/// Checks one claim at (p, k, m). Split claims return one row per part; rows may carry
/// normalized parameters (E2.19 always reports m = 7, NOTE-parity m = 10).
std::vector<TheoremCheck> check(const std::string& id, std::int64_t p, int k, int m, std::uint64_t seed,
                                const Caps& caps = {});

struct Grid {
    std::vector<std::int64_t> ps;
    std::vector<int> ks;
    std::vector<int> ms;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    std::vector<TheoremCheck> rows;

    std::size_t count(Status s) const;
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

/// Every requested claim at every grid point, deduplicated on (claim, part, p, k, m) and ordered
/// by claim id, then parameters, then part.
SuiteReport run_suite(const Grid& grid, std::uint64_t seed, const Caps& caps = {},
                      const std::vector<std::string>& ids = {});

/// Recomputes the violated identity from the raw inputs of a fails row (as emitted by
/// TheoremCheck::to_json). True iff it is still violated. Throws Schema for rows that are not
/// fails rows or whose payload does not parse.
bool recheck_counterexample(const nlohmann::ordered_json& row);

}  // namespace rcc::lab

#endif
