// Copyright 2026 The gpqspr Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Bundled molecules (31 n-alkanes, 20 PAHs, 14 octane isomers) and the
// on-disk formats they ship in.
//
// Graph files (*.graph): first non-comment line is the vertex count n, each
// following non-empty line is an edge "u v" with 1 <= u < v <= n. '#' starts
// a comment. Line order does not matter.
//
// A data directory holds:
//   properties.csv             name,family,split,mp
//   reference_descriptors.csv  name,family,aut_order,wiener,gp,source_table
//   published_models.csv       family,model,predictors,coefficients
//   graphs/<family>/<file>.graph

#ifndef GPQSPR_DATASET_H_
#define GPQSPR_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gpqspr/descriptors.h"
#include "gpqspr/graph.h"

namespace gpqspr {

enum class Family { kAlkane, kPah, kOctaneIsomer };
enum class Split { kTrain, kTest, kAll };

inline constexpr Family kAllFamilies[] = {Family::kAlkane, Family::kPah,
                                          Family::kOctaneIsomer};

// "alkane", "pah", "octane_isomer".
const char* ToString(Family family);
const char* ToString(Split split);
std::optional<Family> ParseFamily(std::string_view text);
std::optional<Split> ParseSplit(std::string_view text);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ParseError for malformed text, GraphError for invalid graphs.
MolecularGraph parse_graph_text(std::string_view text, std::string name = {});
// The graph is named after the file stem.
MolecularGraph load_graph_file(const std::filesystem::path& path);
// Writes the graph format; the name, if any, goes in a leading comment.
std::string format_graph_text(const MolecularGraph& g);

// Quote-aware CSV reader (RFC 4180 subset: quoted fields, doubled quotes).
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

struct MoleculeEntry {
  std::string name;
  MolecularGraph graph;
  double melting_point = 0;
  Family family = Family::kAlkane;
  Split split = Split::kAll;
};

// Descriptor values as printed in the source tables.
struct ReferenceValues {
  std::string name;
  Family family = Family::kAlkane;
  Rational gp;
  std::optional<std::int64_t> wiener;
  std::optional<std::int64_t> aut_order;
  std::string source_table;
};

struct PublishedModel {
  Family family = Family::kAlkane;
  std::string model;  // "log", "linear" or "multilinear"
  std::vector<std::string> predictors;
  std::vector<double> coefficients;
};

// File name for a molecule's graph: commas become dashes.
std::string graph_file_name(std::string_view molecule_name);

class Bundle {
 public:
  // Loads and validates a data directory. Throws DatasetError, ParseError or
  // GraphError.
  static Bundle Load(const std::filesystem::path& directory);
  // $GPQSPR_DATA_DIR if set, otherwise the directory configured at build.
  static std::filesystem::path DefaultDirectory();

  const std::vector<MoleculeEntry>& entries() const { return entries_; }
  std::vector<MoleculeEntry> family(Family family) const;
  const ReferenceValues& reference(Family family, std::string_view name) const;
  const PublishedModel* published_model(Family family,
                                        std::string_view model) const;

 private:
  std::vector<MoleculeEntry> entries_;
  std::vector<ReferenceValues> references_;
  std::vector<PublishedModel> models_;
};

// Entries of one family from the default bundle, in table order.
std::vector<MoleculeEntry> bundled_family(Family family);

// descriptor_record() for each entry, run concurrently; output order follows
// the input order.
std::vector<DescriptorRecord> compute_records(
    std::span<const MoleculeEntry> entries);

struct VerificationRow {
  std::string name;
  Family family = Family::kAlkane;
  DescriptorRecord computed;
  ReferenceValues published;
  bool ok = false;
  std::string detail;  // empty when ok
};

struct VerificationReport {
  std::vector<VerificationRow> rows;

  int passed(Family family) const;
  int total(Family family) const;
  bool all_passed() const;
};

// Compares computed GP (every table), W and |Aut| (where the table lists
// them) against the reference values.
VerificationReport verify_bundle(const Bundle& bundle,
                                 std::optional<Family> only = std::nullopt);

}  // namespace gpqspr

#endif  // GPQSPR_DATASET_H_
