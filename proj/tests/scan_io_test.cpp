#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "wrh/io.hpp"
#include "wrh/scan.hpp"

using namespace wrh;

namespace {

std::vector<Word> members(Word hi, Mode mode) {
  ScanRequest r;
  r.hi = hi;
  r.modes = ModeSet{mode};
  std::vector<Word> out;
  for (const auto& [i, n] : collect_sequence(r, mode).terms) {
    out.push_back(n);
  }
  return out;
}

std::string store_text(const ScanRequest& r, bool serial) {
  std::ostringstream out;
  StoreWriter w(out);
  const RecordSink sink = [&](const ClassificationRecord& rec) { w.write(rec); };
  serial ? scan_serial(r, sink) : scan(r, sink);
  return out.str();
}

}  // namespace

TEST_CASE("scan members") {
  CHECK(members(100, Mode::AdditiveWeak) ==
        std::vector<Word>{0, 10, 11, 12, 14, 16, 18, 22, 33, 44, 55, 66, 77, 88, 99});
  CHECK(members(200, Mode::MultiplicativeWeak) == std::vector<Word>{0, 1, 10, 40, 81, 90, 100, 121, 160});
}

TEST_CASE("scan request validation") {
  ScanRequest r;
  r.lo = 5;
  r.hi = 5;
  CHECK_THROWS_AS(r.validate(), std::invalid_argument);
  r.hi = 6;
  r.chunk_size = 0;
  CHECK_THROWS_AS(r.validate(), std::invalid_argument);
  r.chunk_size = 1;
  r.workers = 0;
  CHECK_THROWS_AS(r.validate(), std::invalid_argument);
}

TEST_CASE("record for a range with no witnesses") {
  ScanRequest r;
  r.lo = 2;
  r.hi = 3;
  const auto recs = scan_all(r);
  REQUIRE(recs.size() == 1);
  for (Mode m : kAllModes) {
    CHECK(recs[0].witnesses(m).empty());
  }
}

TEST_CASE("output does not depend on chunking or workers") {
  ScanRequest r;
  r.lo = 0;
  r.hi = 3000;
  const auto serial = store_text(r, true);
  for (int workers : {1, 3, 8}) {
    for (std::size_t chunk : {1, 7, 4096}) {
      r.workers = workers;
      r.chunk_size = chunk;
      CHECK(store_text(r, false) == serial);
    }
  }
}

TEST_CASE("ranges concatenate") {
  ScanRequest a;
  a.hi = 1000;
  ScanRequest b;
  b.lo = 1000;
  b.hi = 2500;
  ScanRequest whole;
  whole.hi = 2500;
  auto left = scan_all(a);
  const auto right = scan_all(b);
  left.insert(left.end(), right.begin(), right.end());
  CHECK(left == scan_all(whole));
}

TEST_CASE("b-file") {
  ScanRequest r;
  r.hi = 100;
  std::ostringstream out;
  write_bfile(out, collect_sequence(r, Mode::AdditiveWeak));
  CHECK(out.str().rfind("1 0\n2 10\n3 11\n", 0) == 0);
  std::ostringstream empty;
  r.lo = 2;
  r.hi = 3;
  write_bfile(empty, collect_sequence(r, Mode::AdditiveWeak));
  CHECK(empty.str().empty());
  CHECK_THROWS_AS(export_bfile({}, "/nonexistent-dir/x.txt"), std::runtime_error);
}

TEST_CASE("store row format") {
  const auto row = store_row(classify(2268, kDecimal));
  CHECK(row.rfind("2268,10,18,false,true,", 0) == 0);
  CHECK(row.find(",18;45,") != std::string::npos);
  CHECK(store_row(classify(0, kDecimal)) == "0,10,0,true,true,0,0,,");
}

TEST_CASE("store roundtrip") {
  ScanRequest r;
  r.hi = 10000;
  const auto recs = scan_all(r);
  std::stringstream buf;
  persist(buf, recs);
  CHECK(load(buf) == recs);

  std::stringstream empty;
  persist(empty, {});
  CHECK(empty.str() == std::string(kStoreHeader) + "\n");
  CHECK(load(empty).empty());
  std::istringstream nothing;
  CHECK(load(nothing).empty());
}

TEST_CASE("store rows sorted by base then n") {
  std::vector<ClassificationRecord> recs{classify(5, Base(16)), classify(7, Base(2)), classify(3, Base(2))};
  std::stringstream buf;
  persist(buf, recs);
  const auto back = load(buf);
  CHECK(back[0].n == 3);
  CHECK(back[1].n == 7);
  CHECK(back[2].base.value() == 16);
}

TEST_CASE("store file roundtrip") {
  const auto path = std::filesystem::temp_directory_path() / "wrh_store_test.csv";
  std::vector<ClassificationRecord> recs{classify(2268, kDecimal), classify(63504, kDecimal)};
  persist(path, recs);
  CHECK(load(path) == recs);
  std::filesystem::remove(path);
}

TEST_CASE("malformed store rows carry the line number") {
  const std::string head = std::string(kStoreHeader) + "\n";
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      load(in);
    } catch (const FormatError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of(head + "1,10,1,true,true,,0,,\n2,10,x,true,true,,,,\n") == 3);
  CHECK(line_of(head + "1,10,1,true,true\n") == 2);
  CHECK(line_of(head + "1,10,1,yes,true,,,,\n") == 2);
  CHECK(line_of(head + "1,40,1,true,true,,,,\n") == 2);
  CHECK(line_of(head + "1,10,1,true,true,3;2,,,\n") == 2);
  CHECK(line_of("n,base\n") == 1);
}

TEST_CASE("text and json renderings") {
  const auto rec = classify(2268, kDecimal);
  CHECK(format_record(rec, false) == "2268: s=18 niven warh={} wmrh={18, 45} arh={} mrh={2}");
  CHECK(format_record(classify(5, Base(2)), true).rfind("5 [101]_2: s=2 palindrome", 0) == 0);
  CHECK(record_json(rec) ==
        R"({"n":2268,"base":10,"s":18,"palindrome":false,"niven":true,"warh":[],"wmrh":[18,45],"arh":[],"mrh":[2]})");
}

TEST_CASE("default workers from the environment") {
  setenv("WRH_JOBS", "3", 1);
  CHECK(default_workers() == 3);
  setenv("WRH_JOBS", "junk", 1);
  CHECK(default_workers() == 1);
  unsetenv("WRH_JOBS");
  CHECK(default_workers() == 1);
}
