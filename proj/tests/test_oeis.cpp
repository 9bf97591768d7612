#include "mdperm/oeis.hpp"

#include "doctest.h"
#include "mdperm/formulas.hpp"

using namespace mdperm;
using namespace mdperm::oeis;

namespace {
std::string bfile_path(const std::string& name) {
  return std::string(MDPERM_BFILE_DIR) + "/" + name;
}
} // namespace

TEST_CASE("b-file parsing") {
  const auto plain = parse_bfile("0 1\n1 1\n2 3\n3 11");
  REQUIRE(plain.entries.size() == 4);
  CHECK(plain.entries[0].index == 0);
  CHECK(plain.entries[3].value == 11);

  const auto commented = parse_bfile("# comment\n5 10");
  REQUIRE(commented.entries.size() == 1);
  CHECK(commented.entries[0].index == 5);

  CHECK(parse_bfile("").entries.empty());
  CHECK(parse_bfile("\n  \n# only comments\n").entries.empty());

  CHECK_THROWS_AS(parse_bfile("1 x"), MalformedLine);
  CHECK_THROWS_AS(parse_bfile("0 1\n0 2"), NonMonotoneIndex);
  CHECK_THROWS_AS(parse_bfile("0 1 7"), MalformedLine);
  try {
    parse_bfile("0 1\n1 x");
  } catch (const MalformedLine& e) {
    CHECK(e.line_number == 2);
  }
}

TEST_CASE("registry generators all resolve") {
  for (const auto& mapping : registry()) {
    CHECK_NOTHROW(generator_value(mapping.generator,
                                  mapping.first_bfile_index + mapping.index_shift));
  }
  CHECK_THROWS_AS(generator_value("no-such-sequence", 0), UnknownGenerator);
  CHECK_THROWS_AS(mapping_for("A999999"), UnknownGenerator);
  CHECK(mapping_for("A002047").provisional);
}

TEST_CASE("reconciliation passes for the shipped snapshots") {
  const struct {
    const char* id;
    const char* file;
  } cases[] = {
      {"A001586", "b001586.txt"}, {"A104018", "b104018.txt"},
      {"A008971", "b008971.txt"}, {"A000340", "b000340.txt"},
      {"A000363", "b000363.txt"}, {"A000507", "b000507.txt"},
      {"A003462", "b003462.txt"}, {"A023000", "b023000.txt"},
      {"A135518", "b135518.txt"}, {"A218734", "b218734.txt"},
      {"A002866", "b002866.txt"}, {"A052700", "b052700.txt"},
      {"A008776", "b008776.txt"}, {"A002023", "b002023.txt"},
      {"A235702", "b235702.txt"},
  };
  for (const auto& test_case : cases) {
    CAPTURE(test_case.id);
    const auto bfile = load_bfile(bfile_path(test_case.file), test_case.id);
    const auto report = reconcile(mapping_for(test_case.id), bfile, 64);
    CHECK(report.pass);
    CHECK_FALSE(report.items.empty());
    for (const auto& item : report.items) CHECK(item.match);
  }
}

TEST_CASE("the triangle is compared in row-reading order") {
  const auto bfile = load_bfile(bfile_path("b008971.txt"), "A008971");
  // First 8 rows (n = 0..7) flatten to 1+1+2+2+3+3+4+4 = 20 entries.
  const auto report = reconcile(mapping_for("A008971"), bfile, 20);
  CHECK(report.pass);
  CHECK(report.items.size() == 20);
  CHECK(report.items[5].expected == 5);  // row 3 is (1, 5)
}

TEST_CASE("a shifted b-file is diagnosed as an offset problem") {
  std::string shifted;
  for (int n = 0; n <= 8; ++n)
    shifted += std::to_string(n) + " " +
               formulas::weakly_increasing_count(n + 1).get_str() + "\n";
  const auto bfile = parse_bfile(shifted, "A001586");
  CHECK_THROWS_AS(reconcile(mapping_for("A001586"), bfile, 10), OffsetMismatch);
}

TEST_CASE("a b-file below the comparable range cannot align") {
  const auto bfile = parse_bfile("0 1\n1 1", "A002866");
  // Mapping compares from index 2 onwards; nothing usable here.
  CHECK_THROWS_AS(reconcile(mapping_for("A002866"), bfile, 10), OffsetMismatch);
}

TEST_CASE("reconcile reports are deterministic") {
  const auto bfile = load_bfile(bfile_path("b003462.txt"), "A003462");
  const auto once = reconcile(mapping_for("A003462"), bfile, 12);
  const auto twice = reconcile(mapping_for("A003462"), bfile, 12);
  REQUIRE(once.items.size() == twice.items.size());
  for (size_t i = 0; i < once.items.size(); ++i) {
    CHECK(once.items[i].index == twice.items[i].index);
    CHECK(once.items[i].computed == twice.items[i].computed);
  }
  CHECK(once.items.size() == 12);
}

TEST_CASE("provisional tabulation of the odd 4-dimensional minimal counts") {
  CHECK(generator_value("canonical-minimal-d4-odd", 0) == 1);
  CHECK(generator_value("canonical-minimal-d4-odd", 1) == 2);
  CHECK(generator_value("canonical-minimal-d4-odd", 2) == 6);
}
