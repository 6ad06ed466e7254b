#include <sstream>

#include "concern_scan/corpus.hpp"
#include "concern_scan/errors.hpp"
#include "doctest.h"
#include "support/random_corpus.hpp"

using namespace concern_scan;
using namespace std::chrono;

TEST_CASE("iso dates") {
  auto d = parse_iso_date("2012-03-04");
  REQUIRE(d);
  CHECK(*d == year_month_day{year(2012), month(3), day(4)});
  CHECK(parse_iso_date("2012-03-04T10:00:00"));
  CHECK(parse_iso_date("2012-03-04 10:00"));
  CHECK_FALSE(parse_iso_date("2012-02-30"));
  CHECK_FALSE(parse_iso_date("2012/03/04"));
  CHECK_FALSE(parse_iso_date(""));
  CHECK(format_iso_date(*d) == "2012-03-04");
}

TEST_CASE("fixture loads with one duplicate removed") {
  auto r = load_reports(testgen::data_path("fixtures/corpus.csv"), {});
  CHECK(r.rows_read == 31);
  CHECK(r.duplicates == 1);
  CHECK(r.records.size() == 30);
  CHECK(r.issues.empty());
  std::size_t y2011 = 0;
  for (const auto& rec : r.records) y2011 += rec.year == 2011;
  CHECK(y2011 == 12);
}

TEST_CASE("year comes from the date when the year column is empty") {
  auto r = parse_reports("id,date,year,text\nA,2013-05-01,,Pain.\n", {});
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].year == 2013);
}

TEST_CASE("rejected rows are collected") {
  const char* csv =
      "id,date,year,text\n"
      "A,2012-13-01,,Bad date.\n"
      "B,,1800,Bad year.\n"
      "C,2012-01-01,,   \n"
      "D,2012-01-01,2013,Mismatch.\n"
      "E,2012-01-01\n"
      "F,2012-01-01,,Fine.\n";
  auto r = parse_reports(csv, {});
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].id == "F");
  REQUIRE(r.issues.size() == 5);
  CHECK(r.issues[0].kind == RowIssueKind::bad_date);
  CHECK(r.issues[0].row == 1);
  CHECK(r.issues[1].kind == RowIssueKind::bad_year);
  CHECK(r.issues[2].kind == RowIssueKind::empty_text);
  CHECK(r.issues[3].kind == RowIssueKind::bad_year);
  CHECK(r.issues[4].kind == RowIssueKind::field_count);
  CHECK_FALSE(r.issues[0].describe().empty());
}

TEST_CASE("strict mode throws on the first rejected row") {
  IngestConfig cfg;
  cfg.strict = true;
  try {
    parse_reports("id,date,year,text\nA,,,x\nB,bad,,y\n", cfg);
    FAIL("expected RowRejected");
  } catch (const RowRejected& e) {
    CHECK(e.issue().row == 1);
    CHECK(e.issue().kind == RowIssueKind::bad_date);
  }
}

TEST_CASE("same id with different content is rejected") {
  auto r = parse_reports("id,date,year,text\nA,,2012,one\nA,,2012,two\n", {});
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].text == "one");
  CHECK(r.duplicates == 0);
  REQUIRE(r.issues.size() == 1);
  CHECK(r.issues[0].kind == RowIssueKind::duplicate_id);
  CHECK(r.issues[0].row == 2);
}

TEST_CASE("byte-identical rows collapse to one") {
  auto r = parse_reports("id,date,year,text\nA,,2012,one\nA,,2012,one\n", {});
  CHECK(r.records.size() == 1);
  CHECK(r.duplicates == 1);
  CHECK(r.rows_read == 2);
}

TEST_CASE("header only gives no records") {
  auto r = parse_reports("id,date,year,text\n", {});
  CHECK(r.records.empty());
  CHECK(r.rows_read == 0);
}

TEST_CASE("missing configured column") {
  IngestConfig cfg;
  cfg.text_column = "narrative";
  CHECK_THROWS_AS(parse_reports("id,date,year,text\nA,,2012,x\n", cfg), MissingColumn);
}

TEST_CASE("positional columns without header, id defaults to row number") {
  IngestConfig cfg;
  cfg.has_header = false;
  cfg.id_column = "";
  cfg.date_column = "";
  cfg.year_column = "0";
  cfg.text_column = "1";
  auto r = parse_reports("2011,first\n2012,second\n", cfg);
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].id == "1");
  CHECK(r.records[1].id == "2");
  CHECK(r.records[1].year == 2012);
  CHECK(r.records[1].text == "second");
}

TEST_CASE("config validation") {
  IngestConfig cfg;
  cfg.text_column = "";
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  IngestConfig cfg2;
  cfg2.date_column = "";
  cfg2.year_column = "";
  CHECK_THROWS_AS(cfg2.validate(), std::invalid_argument);
}

TEST_CASE("ingest is idempotent through write_reports") {
  auto first = load_reports(testgen::data_path("fixtures/corpus.csv"), {});
  std::ostringstream a;
  write_reports(a, first.records);
  auto second = parse_reports(a.str(), {});
  CHECK(second.records == first.records);
  CHECK(second.duplicates == 0);
  std::ostringstream b;
  write_reports(b, second.records);
  CHECK(a.str() == b.str());
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(load_reports("/no/such/corpus.csv", {}), FileNotReadable);
}
