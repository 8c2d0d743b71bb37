#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "wrh/tables.hpp"

using namespace wrh;

TEST_CASE("fixtures as printed") {
  CHECK(additive_table().size() == 355);
  CHECK(multiplicative_table().size() == 77);
  CHECK(additive_table()[0].n == 0);
  CHECK(multiplicative_table()[1].n == 1);
  // verbatim typo
  const auto it = std::find_if(multiplicative_table().begin(), multiplicative_table().end(),
                               [](const TableRow& r) { return r.n == 1729; });
  REQUIRE(it != multiplicative_table().end());
  CHECK(it->terms == std::vector<Word>{0, 63});
  std::size_t low = 0;
  for (const auto& r : additive_table()) {
    low += r.low_confidence;
  }
  CHECK(low == 5);
}

TEST_CASE("compare_table partitions findings") {
  std::vector<ClassificationRecord> recs;
  for (Word n = 0; n < 30; ++n) {
    recs.push_back(classify(n, kDecimal, ModeSet{Mode::AdditiveWeak}));
  }
  const std::vector<TableRow> rows{{10, {4}, false}, {12, {5}, false}, {13, {1}, false}, {10, {4}, true}};
  const auto t = compare_table(rows, Mode::AdditiveWeak, recs);
  CHECK(t.count(FindingKind::Match) == 1);
  CHECK(t.count(FindingKind::ValueMismatch) == 1);
  CHECK(t.count(FindingKind::Extra) == 1);
  CHECK(t.count(FindingKind::Duplicate) == 1);
  // 0, 11, 14, 16, 18, 22 were not printed
  CHECK(t.count(FindingKind::Missing) == 6);
  CHECK(t.computed_count == 8);
}

TEST_CASE("multiplicative rows need exact sets") {
  std::vector<ClassificationRecord> recs{classify(252, kDecimal)};
  const std::vector<TableRow> exact{{252, {12, 3}, false}};
  const std::vector<TableRow> partial{{252, {3}, false}};
  CHECK(compare_table(exact, Mode::MultiplicativeWeak, recs).count(FindingKind::Match) == 1);
  CHECK(compare_table(partial, Mode::MultiplicativeWeak, recs).count(FindingKind::ValueMismatch) == 1);
  CHECK(compare_table(partial, Mode::AdditiveWeak, {}).count(FindingKind::Extra) == 1);
}

TEST_CASE("reproduction report") {
  const auto rep = reproduce_tables(2);
  CHECK(rep.additive.computed_count == 364);
  CHECK(rep.multiplicative.computed_count == 77);
  CHECK(rep.has_discrepancies());

  std::set<Word> typo;
  for (const auto& f : rep.multiplicative.discrepancies()) {
    CHECK(f.kind == FindingKind::ValueMismatch);
    typo.insert(f.n);
  }
  CHECK(typo == std::set<Word>{1729, 2520, 4606, 5092, 5740, 7650});

  std::ostringstream text;
  write_text(text, rep);
  CHECK(text.str().find("computed wARH count below 10000: 364") != std::string::npos);
  CHECK(text.str().find("introduction states 77 (disagrees)") != std::string::npos);
  CHECK(text.str().find("value-mismatch 1729 printed {0, 63} computed {0, 72}") != std::string::npos);
  std::ostringstream kv;
  write_kv(kv, rep);
  CHECK(kv.str().find("table=multiplicative finding=value-mismatch n=5740 printed=124,94 computed=124,394") !=
        std::string::npos);
}
