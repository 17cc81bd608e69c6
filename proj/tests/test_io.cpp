#include <gtest/gtest.h>

#include <sstream>

#include "iacpoly/io.hpp"
#include "iacpoly/output.hpp"

using namespace iacpoly;

TEST(HRep, ParsesCommentsAndRelations) {
    const auto p = io::parse_hrep(
        "# header comment\n"
        "\n"
        "dim 2\n"
        "1 0 >= 0   # x >= 0\n"
        "0 1 >= 0\n"
        "1/2 1/2 <= 1/2\n");
    EXPECT_EQ(p.dim(), 2u);
    EXPECT_EQ(p.size(), 3u);
    EXPECT_EQ(volume(p), Rational(1, 2));
    EXPECT_EQ(io::parse_hrep("dim 1\n1 = 1/3\n").constraints().front().relation, Relation::Equal);
}

TEST(HRep, RoundTrip) {
    HPolytope p = standard_simplex(3);
    p.add_le({Rational(2, 3), -1, 0}, Rational(1, 5));
    p.add_eq({0, 0, 1}, Rational(1, 7));
    const auto q = io::parse_hrep(io::to_hrep(p));
    EXPECT_TRUE(q.same_constraints(p));
}

TEST(HRep, Errors) {
    for (const char* bad : {"", "# only a comment\n", "dimension 2\n", "dim 0\n", "dim x\n", "dim 2\n1 0 0 <= 1\n",
                            "dim 2\n1 0 < 1\n", "dim 2\n1 a <= 1\n", "dim 2\n1 0 <= 1/0\n"})
        EXPECT_THROW(io::parse_hrep(bad), ParseError) << bad;
    try {
        io::parse_hrep("dim 2\n1 0 <= 1\n1 0 ~ 1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos);
    }
    EXPECT_THROW(io::read_hrep_file("/nonexistent/file.hrep"), ParseError);
}

TEST(HRep, DataFiles) {
    const std::string dir = IACPOLY_DATA_DIR;
    EXPECT_EQ(volume(io::read_hrep_file(dir + "/simplex5.hrep")), Rational(1, 120));
    EXPECT_EQ(volume(io::read_hrep_file(dir + "/cube3.hrep")), Rational(1));
    EXPECT_EQ(volume(io::read_hrep_file(dir + "/empty.hrep")), Rational(0));
    EXPECT_EQ(volume(io::read_hrep_file(dir + "/condorcet_winner_a.hrep")), Rational(1, 384));
    EXPECT_THROW(volume(io::read_hrep_file(dir + "/unbounded.hrep")), UnboundedError);
}

TEST(GeneratingFunction, JsonRoundTrip) {
    const auto f = io::parse_gf_json(R"({"num": ["1", "1/2"], "den": ["1", "-2", 1]})");
    EXPECT_EQ(f.numerator(), (Polynomial{1, Rational(1, 2)}));
    EXPECT_EQ(f.denominator(), (Polynomial{1, -2, 1}));
    const auto g = io::parse_gf_json(io::to_gf_json(f));
    EXPECT_EQ(g.numerator(), f.numerator());
    EXPECT_EQ(g.denominator(), f.denominator());
}

TEST(GeneratingFunction, JsonErrors) {
    EXPECT_THROW(io::parse_gf_json("not json"), ParseError);
    EXPECT_THROW(io::parse_gf_json("[1,2]"), ParseError);
    EXPECT_THROW(io::parse_gf_json(R"({"num": ["1"]})"), ParseError);
    EXPECT_THROW(io::parse_gf_json(R"({"num": ["1"], "den": [1.5]})"), ParseError);
    EXPECT_THROW(io::parse_gf_json(R"({"num": ["x"], "den": ["1"]})"), ParseError);
    EXPECT_THROW(io::parse_gf_json(R"({"num": ["1"], "den": ["0", "1"]})"), DomainError);
}

TEST(GeneratingFunction, PluralityDataFile) {
    const auto f = io::read_gf_file(std::string(IACPOLY_DATA_DIR) + "/plurality_manipulable.gf.json");
    EXPECT_EQ(f.denominator().front(), Rational(1));
    EXPECT_EQ(gf_coefficients(f, 96).at(96), BigInt(4176821));
}

TEST(Output, Formats) {
    const std::vector<OutputRecord> rows{{"half", Rational(1, 2), true, "x"}, {"approx", Rational(1, 3), false, "a,b"}};
    std::ostringstream csv, json, text;
    write_records(csv, rows, Format::csv);
    EXPECT_EQ(csv.str(), "label,exact,decimal,spec\nhalf,1/2,0.50000,x\napprox,n/a,0.33333,\"a,b\"\n");
    write_records(json, rows, Format::json);
    const auto j = nlohmann::json::parse(json.str());
    EXPECT_EQ(j[0]["exact"], "1/2");
    EXPECT_DOUBLE_EQ(j[0]["decimal"].get<double>(), 0.5);
    EXPECT_TRUE(j[1]["exact"].is_null());
    EXPECT_EQ(j[1]["spec"], "a,b");
    write_records(text, rows, Format::text, "T");
    EXPECT_EQ(text.str(), "T\nhalf    1/2  0.50000  x\napprox  n/a  0.33333  a,b\n");
    EXPECT_THROW(parse_format("xml"), ParseError);
}

TEST(Output, SingleRecordJsonIsAnObject) {
    std::ostringstream os;
    write_record(os, {"v", Rational(7, 24), true, "manipulable:plurality"}, Format::json);
    const auto j = nlohmann::json::parse(os.str());
    EXPECT_EQ(j["label"], "v");
    EXPECT_EQ(j["exact"], "7/24");
    EXPECT_DOUBLE_EQ(j["decimal"].get<double>(), 0.29167);
}
