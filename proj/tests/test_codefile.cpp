#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "rcc/codefile.hpp"
#include "rcc/error.hpp"

using namespace rcc;
using nlohmann::ordered_json;

namespace {

ErrorKind kind_of(const ordered_json& doc) {
    try {
        parse_code_document(doc);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "document accepted: " << doc.dump();
    return ErrorKind::Io;
}

ordered_json sample() {
    return ordered_json::parse(R"({"p":3,"k":2,"m":2,"unit":"lambda","generators":[[[1,0,0],[0,1,0]]]})");
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("rcc_codefile_" + name)).string();
}

}  // namespace

TEST(CodeFile, ParsesRingCode) {
    const CodeDocument d = parse_code_document(sample());
    EXPECT_EQ(d.p, 3u);
    EXPECT_EQ(d.k, 2);
    EXPECT_EQ(d.m, 2u);
    EXPECT_EQ(d.unit, UnitTag::Lambda);
    EXPECT_FALSE(d.over_field());
    const auto& c = std::get<ConstaCodeR>(d.code);
    EXPECT_EQ(c.generators().size(), 1u);
    EXPECT_EQ(c.generators()[0][1], RingElem::u_power({3, 2}, 1));
}

TEST(CodeFile, ParsesFieldCode) {
    const auto doc = ordered_json::parse(R"({"p":5,"k":0,"m":3,"unit":"cyclic","generators":[[[1],[1],[-1]]]})");
    const CodeDocument d = parse_code_document(doc);
    EXPECT_TRUE(d.over_field());
    EXPECT_EQ(std::get<LinearCodeFp>(d.code), LinearCodeFp(5, 3, {FpVector(5, {1, 1, 4})}));
}

TEST(CodeFile, RoundTrip) {
    const CodeDocument d = parse_code_document(sample());
    const ordered_json again = code_document_json(d);
    EXPECT_EQ(again, sample());
    EXPECT_EQ(std::get<ConstaCodeR>(parse_code_document(again).code), std::get<ConstaCodeR>(d.code));

    const LinearCodeFp f(5, 2, {FpVector(5, {1, 2})});
    EXPECT_EQ(std::get<LinearCodeFp>(parse_code_document(code_document_json(f, UnitTag::Negacyclic)).code), f);
}

TEST(CodeFile, Rejections) {
    auto d = sample();
    d.erase("p");
    EXPECT_EQ(kind_of(d), ErrorKind::Schema);
    d = sample();
    d["p"] = 9;
    EXPECT_EQ(kind_of(d), ErrorKind::InvalidParameter);
    d = sample();
    d["m"] = 0;
    EXPECT_EQ(kind_of(d), ErrorKind::InvalidParameter);
    d = sample();
    d["unit"] = "twisted";
    EXPECT_NE(kind_of(d), ErrorKind::Io);
    d = sample();
    d["generators"] = ordered_json::parse("[[[1,0,0]]]");
    EXPECT_EQ(kind_of(d), ErrorKind::Schema);
    d = sample();
    d["generators"] = ordered_json::parse("[[[1,0],[0,1]]]");
    EXPECT_EQ(kind_of(d), ErrorKind::Schema);
    d = sample();
    d["generators"] = ordered_json::parse(R"([[[1,0,"x"],[0,1,0]]])");
    EXPECT_EQ(kind_of(d), ErrorKind::Schema);
    EXPECT_EQ(kind_of(ordered_json::array()), ErrorKind::Schema);
    const auto lam = ordered_json::parse(R"({"p":5,"k":0,"m":1,"unit":"lambda","generators":[]})");
    EXPECT_EQ(kind_of(lam), ErrorKind::Schema);
}

TEST(CodeFile, FileIo) {
    const std::string path = temp_path("roundtrip.json");
    write_json_file(path, sample());
    EXPECT_EQ(std::get<ConstaCodeR>(read_code_file(path).code), std::get<ConstaCodeR>(parse_code_document(sample()).code));
    std::remove(path.c_str());

    try {
        read_code_file(temp_path("missing.json"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Io);
    }
    const std::string bad = temp_path("bad.json");
    std::ofstream(bad) << "{not json";
    try {
        read_code_file(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Schema);
    }
    std::remove(bad.c_str());
}
