#include "mdperm/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "mdperm/enumerate.hpp"
#include "mdperm/formulas.hpp"

namespace mdperm::oeis {

namespace {

bool is_integer_token(const std::string& tok) {
  if (tok.empty()) return false;
  size_t start = tok[0] == '-' ? 1 : 0;
  if (start == tok.size()) return false;
  return std::all_of(tok.begin() + static_cast<long>(start), tok.end(),
                     [](unsigned char ch) { return std::isdigit(ch); });
}

} // namespace

BFile parse_bfile(std::string_view text, std::string id) {
  BFile out;
  out.id = std::move(id);
  std::istringstream stream{std::string(text)};
  std::string line;
  long line_number = 0;
  bool have_previous = false;
  long previous_index = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank line
    if (first[0] == '#') continue;     // comment
    std::string second, extra;
    if (!(fields >> second) || (fields >> extra))
      throw MalformedLine("line " + std::to_string(line_number) +
                              ": expected '<index> <value>'",
                          line_number);
    if (!is_integer_token(first) || !is_integer_token(second))
      throw MalformedLine("line " + std::to_string(line_number) +
                              ": non-numeric field",
                          line_number);
    BFileEntry entry;
    entry.index = std::stol(first);
    entry.value = Int(second);
    if (have_previous && entry.index <= previous_index)
      throw NonMonotoneIndex("line " + std::to_string(line_number) +
                                 ": index " + first + " does not increase",
                             line_number);
    previous_index = entry.index;
    have_previous = true;
    out.entries.push_back(std::move(entry));
  }
  return out;
}

BFile load_bfile(const std::string& path, std::string id) {
  std::ifstream file(path);
  if (!file) throw Error("cannot open b-file '" + path + "'");
  std::ostringstream content;
  content << file.rdbuf();
  return parse_bfile(content.str(), std::move(id));
}

namespace {

// Linear position in the row-read repeats triangle -> (row, column).
std::pair<int, int> triangle_position(long linear) {
  long remaining = linear;
  for (int n = 0;; ++n) {
    const long row_len = n / 2 + 1;
    if (remaining < row_len) return {n, static_cast<int>(remaining)};
    remaining -= row_len;
  }
}

Int canonical_minimal_d4(long k) {
  if (k < 0) throw DomainError("index must be non-negative");
  const int n = static_cast<int>(2 * k + 1);
  const int target = formulas::level_bounds(4, n).min_of_max;
  enumeration::EnumerationScope scope{4, n, true, enumeration::default_guard()};
  return enumeration::count_if(scope, [&](const MultiPermutation& p) {
    return level_vector(p, LevelKind::EntrySum).max() == target;
  });
}

using Generator = std::function<Int(long)>;

const std::map<std::string, Generator>& generator_table() {
  static const std::map<std::string, Generator> table = {
      {"springer", [](long i) { return formulas::weakly_increasing_count(static_cast<int>(i)); }},
      {"unimodal", [](long i) { return formulas::unimodal_count(static_cast<int>(i)); }},
      {"repeats-triangle",
       [](long i) {
         if (i < 0) throw DomainError("index must be non-negative");
         auto [n, k] = triangle_position(i);
         return formulas::repeats_count(n, k);
       }},
      {"repeats-col1", [](long i) { return formulas::repeats_count(static_cast<int>(i), 1); }},
      {"repeats-col2", [](long i) { return formulas::repeats_count(static_cast<int>(i), 2); }},
      {"repeats-col3", [](long i) { return formulas::repeats_count(static_cast<int>(i), 3); }},
      {"hoe-d3", [](long i) { return formulas::hoe_count(static_cast<int>(i), 3); }},
      {"hoe-d4", [](long i) { return formulas::hoe_count(static_cast<int>(i), 4); }},
      {"hoe-d5", [](long i) { return formulas::hoe_count(static_cast<int>(i), 5); }},
      {"hoe-d6", [](long i) { return formulas::hoe_count(static_cast<int>(i), 6); }},
      {"c-bounded-full-c1",
       [](long i) { return formulas::c_bounded_count(static_cast<int>(i), 1, false); }},
      {"c-bounded-full-c2",
       [](long i) { return formulas::c_bounded_count(static_cast<int>(i), 2, false); }},
      {"c-bounded-canonical-c2",
       [](long i) { return formulas::c_bounded_count(static_cast<int>(i), 2, true); }},
      {"c-bounded-canonical-c3",
       [](long i) { return formulas::c_bounded_count(static_cast<int>(i), 3, true); }},
      {"c-bounded-canonical-c4",
       [](long i) { return formulas::c_bounded_count(static_cast<int>(i), 4, true); }},
      {"canonical-minimal-d4-odd", canonical_minimal_d4},
  };
  return table;
}

std::vector<SequenceMapping> build_registry() {
  std::vector<SequenceMapping> reg = {
      {"A001586", "springer", 0, 0, false, "Springer numbers"},
      {"A104018", "unimodal", 0, 1, false, "unimodal 3-dimensional permutation counts"},
      {"A008971", "repeats-triangle", 0, 0, false,
       "triangle read by rows, row n has floor(n/2)+1 entries"},
      {"A000340", "repeats-col1", 1, 0, false, "column k=1, shifted by one"},
      {"A000363", "repeats-col2", 0, 0, false, "column k=2, snapshot indexing"},
      {"A000507", "repeats-col3", 0, 0, false, "column k=3, snapshot indexing"},
      {"A003462", "hoe-d3", 1, 1, false, "(3^i - 1)/2"},
      {"A023000", "hoe-d4", 1, 1, false, "(7^i - 1)/6"},
      {"A135518", "hoe-d5", 1, 1, false, "(15^i - 1)/14"},
      {"A218734", "hoe-d6", 1, 1, false, "(31^i - 1)/30"},
      {"A002866", "c-bounded-full-c1", 0, 2, false, "2^(n-1) n! from n = 2"},
      {"A052700", "c-bounded-full-c2", 0, 3, false, "2 3^(n-2) n! from n = 3"},
      {"A008776", "c-bounded-canonical-c2", 2, 1, false, "2 3^i"},
      {"A002023", "c-bounded-canonical-c3", 3, 1, false, "6 4^i"},
      {"A235702", "c-bounded-canonical-c4", 3, 2, false, "24 5^(i-1)"},
      {"A002047", "canonical-minimal-d4-odd", 0, 0, true,
       "alignment with the published sequence not yet confirmed"},
  };
  for (const auto& entry : reg)
    if (!generator_table().count(entry.generator))
      throw UnknownGenerator("registry names unknown generator '" + entry.generator + "'");
  return reg;
}

} // namespace

const std::vector<SequenceMapping>& registry() {
  static const std::vector<SequenceMapping> reg = build_registry();
  return reg;
}

const SequenceMapping& mapping_for(const std::string& id) {
  for (const auto& entry : registry())
    if (entry.id == id) return entry;
  throw UnknownGenerator("no registry entry for '" + id + "'");
}

Int generator_value(const std::string& name, long index) {
  const auto& table = generator_table();
  auto it = table.find(name);
  if (it == table.end()) throw UnknownGenerator("unknown generator '" + name + "'");
  return it->second(index);
}

std::vector<std::string> generator_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : generator_table()) names.push_back(name);
  return names;
}

namespace {

// True when the first few usable entries agree under the given shift; used
// to distinguish an offset problem from a genuine value mismatch.
bool prefix_matches(const SequenceMapping& mapping, const BFile& bfile, long shift) {
  int probed = 0;
  for (const auto& entry : bfile.entries) {
    if (entry.index < mapping.first_bfile_index) continue;
    if (probed == 6) break;
    Int computed;
    try {
      computed = generator_value(mapping.generator, entry.index + shift);
    } catch (const Error&) {
      return false;
    }
    if (computed != entry.value) return false;
    ++probed;
  }
  return probed > 0;
}

} // namespace

ReconcileReport reconcile(const SequenceMapping& mapping, const BFile& bfile, long limit) {
  if (!generator_table().count(mapping.generator))
    throw UnknownGenerator("unknown generator '" + mapping.generator + "'");
  ReconcileReport report;
  report.id = mapping.id;
  report.generator = mapping.generator;
  report.provisional = mapping.provisional;

  bool any_usable = false;
  for (const auto& entry : bfile.entries)
    if (entry.index >= mapping.first_bfile_index) any_usable = true;
  if (!any_usable)
    throw OffsetMismatch("b-file for " + mapping.id + " has no entries at or past index " +
                         std::to_string(mapping.first_bfile_index));

  if (!prefix_matches(mapping, bfile, mapping.index_shift)) {
    for (long delta = -4; delta <= 4; ++delta) {
      if (delta == 0) continue;
      if (prefix_matches(mapping, bfile, mapping.index_shift + delta))
        throw OffsetMismatch("values for " + mapping.id + " align at index shift " +
                             std::to_string(mapping.index_shift + delta) +
                             ", registry declares " + std::to_string(mapping.index_shift));
    }
  }

  long taken = 0;
  for (const auto& entry : bfile.entries) {
    if (entry.index < mapping.first_bfile_index) continue;
    if (taken == limit) break;
    ReconcileItem item;
    item.index = entry.index;
    item.expected = entry.value;
    try {
      item.computed = generator_value(mapping.generator, entry.index + mapping.index_shift);
    } catch (const StateSpaceTooLarge&) {
      break;  // brute generator ran out of feasible range; compare what we have
    }
    item.match = item.computed == item.expected;
    report.items.push_back(std::move(item));
    ++taken;
  }
  report.pass = !report.items.empty() &&
                std::all_of(report.items.begin(), report.items.end(),
                            [](const ReconcileItem& it) { return it.match; });
  return report;
}

} // namespace mdperm::oeis
