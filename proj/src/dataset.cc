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

#include "gpqspr/dataset.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <future>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#ifndef GPQSPR_DEFAULT_DATA_DIR
#define GPQSPR_DEFAULT_DATA_DIR "data"
#endif

namespace gpqspr {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::optional<long long> ParseInt(std::string_view s) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

double ParseDouble(std::string_view s, const std::string& context) {
  const std::string copy(Trim(s));
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size()) {
    throw DatasetError(context + ": not a number: '" + copy + "'");
  }
  return value;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Rows of a CSV with a mandatory header naming exactly `columns`.
std::vector<std::vector<std::string>> ReadTable(
    const std::filesystem::path& path, const std::vector<std::string>& columns) {
  auto rows = parse_csv(ReadFile(path));
  if (rows.empty() || rows.front() != columns) {
    std::string expected;
    for (const auto& c : columns) expected += (expected.empty() ? "" : ",") + c;
    throw DatasetError(path.string() + ": header must be '" + expected + "'");
  }
  rows.erase(rows.begin());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != columns.size()) {
      throw DatasetError(path.string() + ": row " + std::to_string(i + 2) +
                         " has " + std::to_string(rows[i].size()) +
                         " fields, expected " + std::to_string(columns.size()));
    }
  }
  return rows;
}

bool IsTree(const MolecularGraph& g) {
  return static_cast<int>(g.edges().size()) == g.vertex_count() - 1;
}

int MaxDegree(const MolecularGraph& g) {
  int best = 0;
  for (int u = 1; u <= g.vertex_count(); ++u) best = std::max(best, g.degree(u));
  return best;
}

}  // namespace

const char* ToString(Family family) {
  switch (family) {
    case Family::kAlkane:
      return "alkane";
    case Family::kPah:
      return "pah";
    case Family::kOctaneIsomer:
      return "octane_isomer";
  }
  return "unknown";
}

const char* ToString(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kTest:
      return "test";
    case Split::kAll:
      return "all";
  }
  return "unknown";
}

std::optional<Family> ParseFamily(std::string_view text) {
  for (Family f : kAllFamilies) {
    if (text == ToString(f)) return f;
  }
  return std::nullopt;
}

std::optional<Split> ParseSplit(std::string_view text) {
  for (Split s : {Split::kTrain, Split::kTest, Split::kAll}) {
    if (text == ToString(s)) return s;
  }
  return std::nullopt;
}

MolecularGraph parse_graph_text(std::string_view text, std::string name) {
  std::optional<int> n;
  std::vector<std::pair<int, int>> edges;
  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto tokens = Tokens(line);
    if (!n) {
      const auto value = tokens.size() == 1 ? ParseInt(tokens[0]) : std::nullopt;
      if (!value || *value < 1 || *value > 100000) {
        throw ParseError(line_number, "expected a positive vertex count, got '" +
                                          std::string(line) + "'");
      }
      n = static_cast<int>(*value);
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_number,
                       "expected an edge 'u v', got '" + std::string(line) + "'");
    }
    const auto u = ParseInt(tokens[0]);
    const auto v = ParseInt(tokens[1]);
    if (!u || !v || *u < -1000000 || *u > 1000000 || *v < -1000000 ||
        *v > 1000000) {
      throw ParseError(line_number,
                       "edge endpoints must be integers, got '" +
                           std::string(line) + "'");
    }
    if (*u > *v) {
      throw ParseError(line_number, "edge endpoints must satisfy u < v, got '" +
                                        std::string(line) + "'");
    }
    edges.emplace_back(static_cast<int>(*u), static_cast<int>(*v));
  }
  if (!n) throw ParseError(line_number, "missing vertex count");
  return build_graph(*n, edges, std::move(name));
}

MolecularGraph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_text(buffer.str(), path.stem().string());
}

std::string format_graph_text(const MolecularGraph& g) {
  std::string out;
  if (!g.name().empty()) out += "# " + g.name() + "\n";
  out += std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool row_has_content = false;
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        row_has_content = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        row_has_content = true;
        break;
      case '\r':
        break;
      case '\n':
        if (row_has_content || !field.empty()) {
          row.push_back(std::move(field));
          rows.push_back(std::move(row));
        }
        field.clear();
        row.clear();
        row_has_content = false;
        break;
      default:
        field += c;
        row_has_content = true;
    }
  }
  if (row_has_content || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string graph_file_name(std::string_view molecule_name) {
  std::string out(molecule_name);
  std::replace(out.begin(), out.end(), ',', '-');
  return out + ".graph";
}

std::filesystem::path Bundle::DefaultDirectory() {
  if (const char* env = std::getenv("GPQSPR_DATA_DIR"); env && *env) {
    return env;
  }
  return GPQSPR_DEFAULT_DATA_DIR;
}

Bundle Bundle::Load(const std::filesystem::path& directory) {
  Bundle bundle;
  const auto properties =
      ReadTable(directory / "properties.csv", {"name", "family", "split", "mp"});
  std::set<std::pair<Family, std::string>> seen;
  for (const auto& row : properties) {
    const auto family = ParseFamily(row[1]);
    const auto split = ParseSplit(row[2]);
    if (!family) throw DatasetError("properties.csv: unknown family '" + row[1] + "'");
    if (!split) throw DatasetError("properties.csv: unknown split '" + row[2] + "'");
    if (!seen.emplace(*family, row[0]).second) {
      throw DatasetError("properties.csv: duplicate molecule '" + row[0] + "'");
    }
    const auto path =
        directory / "graphs" / ToString(*family) / graph_file_name(row[0]);
    MolecularGraph graph = [&] {
      try {
        return parse_graph_text(ReadFile(path), row[0]);
      } catch (const ParseError& e) {
        throw DatasetError(path.string() + ": " + e.what());
      }
    }();
    if (*family == Family::kPah && IsTree(graph)) {
      throw DatasetError("PAH '" + row[0] + "' has no ring");
    }
    if (*family != Family::kPah && (!IsTree(graph) || MaxDegree(graph) > 4)) {
      throw DatasetError("alkane skeleton '" + row[0] +
                         "' must be a tree with maximum degree 4");
    }
    bundle.entries_.push_back({row[0], std::move(graph),
                               ParseDouble(row[3], "mp of " + row[0]), *family,
                               *split});
  }

  const auto references =
      ReadTable(directory / "reference_descriptors.csv",
                {"name", "family", "aut_order", "wiener", "gp", "source_table"});
  for (const auto& row : references) {
    ReferenceValues ref;
    ref.name = row[0];
    const auto family = ParseFamily(row[1]);
    if (!family) {
      throw DatasetError("reference_descriptors.csv: unknown family '" + row[1] + "'");
    }
    ref.family = *family;
    auto optional_int = [&](const std::string& cell,
                            const char* what) -> std::optional<std::int64_t> {
      if (Trim(cell).empty()) return std::nullopt;
      const auto v = ParseInt(Trim(cell));
      if (!v) throw DatasetError(std::string(what) + " of " + row[0] + " is not an integer");
      return *v;
    };
    ref.aut_order = optional_int(row[2], "aut_order");
    ref.wiener = optional_int(row[3], "wiener");
    const std::string_view gp = Trim(row[4]);
    if (const auto slash = gp.find('/'); slash != std::string_view::npos) {
      const auto num = ParseInt(gp.substr(0, slash));
      const auto den = ParseInt(gp.substr(slash + 1));
      if (!num || !den || *den == 0) throw DatasetError("bad gp for " + row[0]);
      ref.gp = Rational(*num, *den);
    } else {
      const auto v = ParseInt(gp);
      if (!v) throw DatasetError("bad gp for " + row[0]);
      ref.gp = Rational(*v);
    }
    ref.source_table = row[5];
    bundle.references_.push_back(std::move(ref));
  }
  for (const auto& entry : bundle.entries_) {
    bundle.reference(entry.family, entry.name);  // throws if missing
  }

  const auto models = ReadTable(directory / "published_models.csv",
                                {"family", "model", "predictors", "coefficients"});
  for (const auto& row : models) {
    PublishedModel model;
    const auto family = ParseFamily(row[0]);
    if (!family) throw DatasetError("published_models.csv: unknown family '" + row[0] + "'");
    model.family = *family;
    model.model = row[1];
    for (auto token : Tokens(row[2])) model.predictors.emplace_back(token);
    for (auto token : Tokens(row[3])) {
      model.coefficients.push_back(ParseDouble(token, "coefficient"));
    }
    bundle.models_.push_back(std::move(model));
  }
  return bundle;
}

std::vector<MoleculeEntry> Bundle::family(Family family) const {
  std::vector<MoleculeEntry> out;
  for (const auto& entry : entries_) {
    if (entry.family == family) out.push_back(entry);
  }
  return out;
}

const ReferenceValues& Bundle::reference(Family family,
                                         std::string_view name) const {
  for (const auto& ref : references_) {
    if (ref.family == family && ref.name == name) return ref;
  }
  throw DatasetError("no reference values for " + std::string(ToString(family)) +
                     " '" + std::string(name) + "'");
}

const PublishedModel* Bundle::published_model(Family family,
                                              std::string_view model) const {
  for (const auto& m : models_) {
    if (m.family == family && m.model == model) return &m;
  }
  return nullptr;
}

std::vector<MoleculeEntry> bundled_family(Family family) {
  return Bundle::Load(Bundle::DefaultDirectory()).family(family);
}

std::vector<DescriptorRecord> compute_records(
    std::span<const MoleculeEntry> entries) {
  std::vector<std::future<DescriptorRecord>> pending;
  pending.reserve(entries.size());
  for (const auto& entry : entries) {
    pending.push_back(std::async(std::launch::async, [&entry] {
      return descriptor_record(entry.graph);
    }));
  }
  std::vector<DescriptorRecord> records;
  records.reserve(entries.size());
  for (auto& f : pending) records.push_back(f.get());
  return records;
}

int VerificationReport::passed(Family family) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [&](const auto& r) {
    return r.family == family && r.ok;
  }));
}

int VerificationReport::total(Family family) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [&](const auto& r) {
    return r.family == family;
  }));
}

bool VerificationReport::all_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok; });
}

VerificationReport verify_bundle(const Bundle& bundle, std::optional<Family> only) {
  std::vector<MoleculeEntry> selected;
  for (const auto& entry : bundle.entries()) {
    if (!only || entry.family == *only) selected.push_back(entry);
  }
  const auto records = compute_records(selected);
  VerificationReport report;
  for (size_t i = 0; i < selected.size(); ++i) {
    VerificationRow row;
    row.name = selected[i].name;
    row.family = selected[i].family;
    row.computed = records[i];
    row.published = bundle.reference(row.family, row.name);
    std::string detail;
    if (row.computed.gp != row.published.gp) {
      detail += "GP computed " + ToString(row.computed.gp) + " published " +
                ToString(row.published.gp) + "; ";
    }
    if (row.published.wiener && row.computed.wiener != *row.published.wiener) {
      detail += "W computed " + std::to_string(row.computed.wiener) +
                " published " + std::to_string(*row.published.wiener) + "; ";
    }
    if (row.published.aut_order &&
        row.computed.aut_order != *row.published.aut_order) {
      detail += "|Aut| computed " + std::to_string(row.computed.aut_order) +
                " published " + std::to_string(*row.published.aut_order) + "; ";
    }
    if (!detail.empty()) detail.resize(detail.size() - 2);
    row.ok = detail.empty();
    row.detail = std::move(detail);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace gpqspr
