#include <gtest/gtest.h>

#include "core/error.hpp"
#include "core/report.hpp"

namespace swarmtrack {
namespace {

TEST(TableRow, PublishedRowFormat) {
    EXPECT_EQ(format_row(compute_row(1000, 2, 4)), "1000,2,4,12.566,50.265,54,1.47,Case3");
    EXPECT_EQ(format_row(compute_row(4, 2, 4)), "4,2,4,12.566,50.265,1,0.32,Case1");
    EXPECT_EQ(format_row(compute_row(1000, 7, 9)), "1000,7,9,153.938,254.469,20,0.32,Case1");
}

TEST(Table, ReferenceTableReproduces) {
    const auto ref = reference_table();
    ASSERT_EQ(ref.size(), 17u);
    const auto check = check_table(ref);
    EXPECT_TRUE(check.ok()) << (check.mismatches.empty() ? "" : check.mismatches.front());
}

TEST(Table, DoctoredExpectationIsCaught) {
    std::vector<TableRow> rows(reference_table().begin(), reference_table().end());
    rows[3].n = 5;
    rows[7].k = 1.30;
    rows[14].label = CaseLabel::Case3;
    const auto check = check_table(rows);
    EXPECT_EQ(check.mismatches.size(), 3u);
}

TEST(Table, CsvRoundTrip) {
    const auto text = table_csv(reference_table());
    EXPECT_EQ(text.substr(0, kTableHeader.size()), kTableHeader);
    const auto parsed = parse_table_csv(text);
    ASSERT_EQ(parsed.size(), 17u);
    EXPECT_TRUE(check_table(parsed).ok());
    EXPECT_EQ(table_csv(parsed), text);
}

TEST(Table, ParseRejectsMalformedRows) {
    EXPECT_THROW(parse_table_csv("1,2,3\n"), Error);
    EXPECT_THROW(parse_table_csv("1,2,4,1,1,1,1,Case9\n"), Error);
    EXPECT_THROW(parse_table_csv("x,2,4,1,1,1,1,Case1\n"), Error);
}

TEST(Sweep, CsvAndSvgShape) {
    const std::vector<double> areas{10, 100, 1000, 10000};
    const auto rows = sweep_area(SensorSpec{2, 4, 1}, areas);
    const auto csv = sweep_csv(rows);
    EXPECT_EQ(csv.substr(0, 11), "x,n,k,case\n");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
    EXPECT_EQ(csv.find(",\n"), std::string::npos);
    const auto svg = sweep_svg(rows, "area", SweepAxis::K);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("<polyline"), std::string::npos);
    EXPECT_NE(svg.find("log scale"), std::string::npos);
    EXPECT_NE(svg.find("K value"), std::string::npos);
    EXPECT_NE(sweep_svg(rows, "area", SweepAxis::N).find("number of sensors"), std::string::npos);
}

TEST(WriteText, UnwritablePathIsIoError) {
    try {
        write_text("/nonexistent-dir/x.csv", "a");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Io);
    }
}

}  // namespace
}  // namespace swarmtrack
