#include <gtest/gtest.h>

#include "rcc/error.hpp"
#include "rcc/theoremlab.hpp"

using namespace rcc;
using namespace rcc::lab;
using nlohmann::ordered_json;

namespace {

TheoremCheck only(const std::vector<TheoremCheck>& rows) {
    EXPECT_EQ(rows.size(), 1u);
    return rows.front();
}

const TheoremCheck* find_part(const std::vector<TheoremCheck>& rows, const std::string& part) {
    for (const auto& r : rows)
        if (r.part == part) return &r;
    return nullptr;
}

}  // namespace

TEST(Registry, Ids) {
    const auto& ids = claim_ids();
    EXPECT_EQ(ids.front(), "T1.1");
    EXPECT_TRUE(is_registered("T2.5"));
    EXPECT_TRUE(is_registered("NOTE-parity"));
    EXPECT_FALSE(is_registered("T9.9"));
    EXPECT_THROW(check("T9.9", 3, 2, 1, 42), Error);
}

TEST(Check, GammaGrayCounterexample) {
    const TheoremCheck r = only(check("T2.1", 5, 2, 1, 42));
    EXPECT_EQ(r.status, Status::Fails);
    EXPECT_EQ(r.strategy, Strategy::Exhaustive);
    ASSERT_TRUE(r.counterexample.has_value());
    const auto& ce = *r.counterexample;
    EXPECT_EQ(ce["input"]["word"], ordered_json::parse("[[0,1,0]]"));
    EXPECT_EQ(ce["lhs"], ordered_json::parse("[0,4,0]"));
    EXPECT_EQ(ce["rhs"], ordered_json::parse("[0,0,1]"));
    EXPECT_TRUE(recheck_counterexample(r.to_json()));
}

TEST(Check, GrayImageOfCodeCounterexample) {
    const TheoremCheck r = only(check("T2.2", 3, 2, 1, 42));
    EXPECT_EQ(r.status, Status::Fails);
    ASSERT_TRUE(r.counterexample.has_value());
    EXPECT_EQ((*r.counterexample)["input"]["code"]["generators"], ordered_json::parse("[[[0,1,0]],[[0,0,1]]]"));
    EXPECT_TRUE(recheck_counterexample(r.to_json()));
}

TEST(Check, EquivalenceEnumeratesSixteenTriples) {
    const auto rows = check("T2.5", 3, 2, 2, 42);
    ASSERT_EQ(rows.size(), 2u);
    for (const auto& r : rows) {
        EXPECT_EQ(r.status, Status::Holds);
        EXPECT_EQ(r.evidence_count, 16u);
        EXPECT_EQ(r.violations, 0u);
    }
    EXPECT_NE(find_part(rows, "forward"), nullptr);
    EXPECT_NE(find_part(rows, "reverse"), nullptr);
}

TEST(Check, SigmaClaimsNotApplicableBeyondKTwo) {
    const TheoremCheck r = only(check("T2.6", 5, 3, 1, 42));
    EXPECT_EQ(r.status, Status::NotApplicable);
    EXPECT_NE(r.note.find("sigma2^2 = sigma2"), std::string::npos) << r.note;
}

TEST(Check, OddOnlyClaimsNotApplicableAtEvenM) {
    EXPECT_EQ(only(check("T2.12", 3, 2, 2, 42)).status, Status::NotApplicable);
    EXPECT_EQ(only(check("P2.16", 3, 2, 2, 42)).status, Status::NotApplicable);
}

TEST(Check, ParityAndExampleNormalizeM) {
    const TheoremCheck par = only(check("NOTE-parity", 5, 2, 3, 42));
    EXPECT_EQ(par.m, 10);
    EXPECT_EQ(par.status, Status::Holds);
    const auto ex = check("E2.19", 5, 2, 1, 42);
    ASSERT_EQ(ex.size(), 2u);
    EXPECT_EQ(find_part(ex, "F2")->status, Status::Holds);
    EXPECT_EQ(find_part(ex, "F2")->p, 2);
    const TheoremCheck* r = find_part(ex, "R");
    EXPECT_EQ(r->status, Status::Fails);
    EXPECT_EQ(r->m, 7);
    EXPECT_TRUE(recheck_counterexample(r->to_json()));
}

TEST(Check, InvalidParameters) {
    EXPECT_THROW(check("T2.1", 9, 2, 1, 42), Error);
    EXPECT_THROW(check("T2.1", 5, 0, 1, 42), Error);
    EXPECT_THROW(check("T2.1", 5, 2, 0, 42), Error);
}

TEST(Suite, EmptyGridGivesEmptyReport) {
    const SuiteReport r = run_suite({{}, {2}, {1}}, 42);
    EXPECT_TRUE(r.rows.empty());
    const auto j = r.to_json();
    EXPECT_EQ(j["summary"]["rows"], 0);
    EXPECT_TRUE(j["results"].empty());
}

TEST(Suite, DeterministicAndDeduplicated) {
    const Grid g{{3}, {2}, {1, 1}};
    const std::vector<std::string> ids{"T2.1", "NOTE-parity", "E2.19"};
    const SuiteReport a = run_suite(g, 7, {}, ids);
    const SuiteReport b = run_suite(g, 7, {}, ids);
    EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
    EXPECT_EQ(a.to_text(), b.to_text());
    EXPECT_EQ(a.rows.size(), 4u);
    EXPECT_EQ(a.count(Status::Holds) + a.count(Status::Fails) + a.count(Status::NotApplicable), a.rows.size());
}

TEST(Suite, SampledRowsDependOnSeedOnly) {
    const auto x = check("T2.1", 5, 2, 3, 1);
    const auto y = check("T2.1", 5, 2, 3, 1);
    EXPECT_EQ(only(x).to_json(), only(y).to_json());
    EXPECT_EQ(only(x).strategy, Strategy::Sampled);
}

TEST(Suite, RejectsBadGridBeforeRunning) {
    EXPECT_THROW(run_suite({{3, 4}, {2}, {1}}, 42), Error);
    EXPECT_THROW(run_suite({{3}, {2}, {1}}, 42, {}, {"nope"}), Error);
}

TEST(Recheck, RejectsHoldsRowsAndBrokenPayloads) {
    const TheoremCheck holds = only(check("T2.6", 3, 2, 1, 42));
    try {
        recheck_counterexample(holds.to_json());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Schema);
    }
    auto row = only(check("T2.1", 5, 2, 1, 42)).to_json();
    row["counterexample"].erase("input");
    EXPECT_THROW(recheck_counterexample(row), Error);
}

TEST(Recheck, TamperedInputIsNoLongerACounterexample) {
    auto row = only(check("T2.1", 5, 2, 1, 42)).to_json();
    row["counterexample"]["input"]["word"] = ordered_json::parse("[[0,0,0]]");
    EXPECT_FALSE(recheck_counterexample(row));
}
