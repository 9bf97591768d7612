#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mdperm/bigint.hpp"
#include "mdperm/errors.hpp"

namespace mdperm::oeis {

/// One "<index> <value>" line of a b-file.
struct BFileEntry {
  long index = 0;
  Int value;
};

struct BFile {
  std::string id;  // 'A' + six digits, may be empty when unknown
  std::vector<BFileEntry> entries;
};

/// Parses b-file text: '#' comment lines are skipped, data lines are
/// "<index> <value>", indices strictly increasing. Reports offending line
/// numbers via MalformedLine / NonMonotoneIndex.
BFile parse_bfile(std::string_view text, std::string id = "");
BFile load_bfile(const std::string& path, std::string id = "");

/// How a local sequence generator lines up with an OEIS b-file: the value at
/// b-file index i is compared with generator(i + index_shift), starting from
/// first_bfile_index.
struct SequenceMapping {
  std::string id;
  std::string generator;
  long index_shift = 0;
  long first_bfile_index = 0;
  bool provisional = false;  // alignment not yet confirmed against the source
  std::string note;
};

/// Built-in registry of the sequences this library reproduces. Every entry's
/// generator is validated to exist when the registry is first used.
const std::vector<SequenceMapping>& registry();
const SequenceMapping& mapping_for(const std::string& id);

/// Evaluates a registered generator; throws UnknownGenerator for unknown
/// names and DomainError below the generator's domain.
Int generator_value(const std::string& name, long index);
std::vector<std::string> generator_names();

struct ReconcileItem {
  long index = 0;
  Int expected;  // from the b-file
  Int computed;  // from the generator
  bool match = false;
};

struct ReconcileReport {
  std::string id;
  std::string generator;
  bool provisional = false;
  bool pass = false;
  std::vector<ReconcileItem> items;
};

/// Compares b-file entries against the mapped generator, at most `limit`
/// items. Throws OffsetMismatch when the declared alignment fails but a
/// nearby index shift would make the leading entries agree.
ReconcileReport reconcile(const SequenceMapping& mapping, const BFile& bfile, long limit);

} // namespace mdperm::oeis
