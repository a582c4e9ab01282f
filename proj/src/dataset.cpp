// Copyright 2026 The fruaudit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fru/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "fru/errors.hpp"

namespace fru {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool is_missing_token(const std::string& cell) {
  return cell.empty() || cell == "?" || cell == "NA";
}

bool parse_double(const std::string& cell, double* out) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v)) return false;
  *out = v;
  return true;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(trim(cur));
  return cells;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) cells.push_back(tok);
  return cells;
}

// UCI German Credit layout: 20 attributes, class label last.
struct GermanColumn {
  const char* name;
  FeatureKind kind;
};
constexpr GermanColumn kGermanSchema[] = {
    {"checking_account", FeatureKind::Nominal},
    {"months", FeatureKind::Numeric},
    {"credit_history", FeatureKind::Nominal},
    {"purpose", FeatureKind::Nominal},
    {"credit_amount", FeatureKind::Numeric},
    {"savings_account", FeatureKind::Nominal},
    {"employment_since", FeatureKind::Nominal},
    {"installment_rate", FeatureKind::Numeric},
    {"personal_status_sex", FeatureKind::Nominal},
    {"other_debtors", FeatureKind::Nominal},
    {"residence_since", FeatureKind::Numeric},
    {"property", FeatureKind::Nominal},
    {"age", FeatureKind::Numeric},
    {"other_installment", FeatureKind::Nominal},
    {"housing", FeatureKind::Nominal},
    {"existing_credits", FeatureKind::Numeric},
    {"job", FeatureKind::Nominal},
    {"people_liable", FeatureKind::Numeric},
    {"telephone", FeatureKind::Nominal},
    {"foreign_worker", FeatureKind::Nominal},
};

const ColumnHint* find_hint(const SchemaHint* schema, const std::string& name) {
  if (schema == nullptr) return nullptr;
  for (const ColumnHint& h : schema->columns) {
    if (h.name == name) return &h;
  }
  return nullptr;
}

}  // namespace

std::optional<std::size_t> DataTable::feature_index(
    std::string_view name) const {
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (schema[i].name == name) return i;
  }
  return std::nullopt;
}

double DataTable::denormalize(std::size_t feature, double value) const {
  const FeatureSpec& spec = schema.at(feature);
  if (spec.kind != FeatureKind::Numeric) {
    throw ValidationError("denormalize: feature '" + spec.name +
                          "' is not numeric");
  }
  if (spec.constant) return spec.observed_min;
  return value * (spec.observed_max - spec.observed_min) + spec.observed_min;
}

FeatureMask FeatureMask::excluding(std::size_t n_features,
                                   std::initializer_list<std::size_t> indices) {
  FeatureMask m(n_features);
  for (std::size_t i : indices) m.exclude(i);
  return m;
}

void FeatureMask::exclude(std::size_t index) {
  if (index >= bits_.size()) {
    throw ValidationError("mask index " + std::to_string(index) +
                          " out of range (" + std::to_string(bits_.size()) +
                          " features)");
  }
  bits_[index] = 1;
}

std::size_t FeatureMask::excluded_count() const {
  std::size_t n = 0;
  for (std::uint8_t b : bits_) n += b;
  return n;
}

std::vector<std::size_t> FeatureMask::excluded_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

FeatureMask FeatureMask::unioned(const FeatureMask& other) const {
  if (bits_.empty()) return other;
  if (other.bits_.empty()) return *this;
  if (bits_.size() != other.bits_.size()) {
    throw ValidationError("cannot union masks of different sizes");
  }
  FeatureMask out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out.bits_[i] = bits_[i] | other.bits_[i];
  }
  return out;
}

TableView::TableView(const DataTable& table) : TableView(table, FeatureMask()) {}

TableView::TableView(const DataTable& table, FeatureMask mask)
    : table_(&table), mask_(std::move(mask)) {
  if (mask_.size() != 0 && mask_.size() != table.n_features()) {
    throw ValidationError("mask covers " + std::to_string(mask_.size()) +
                          " features but table has " +
                          std::to_string(table.n_features()));
  }
  active_.reserve(table.n_features());
  for (std::size_t i = 0; i < table.n_features(); ++i) {
    if (!mask_.excludes(i)) active_.push_back(static_cast<std::uint32_t>(i));
  }
  if (active_.empty()) {
    throw ValidationError("mask excludes every feature");
  }
}

TableView TableView::masked(const FeatureMask& more) const {
  return TableView(*table_, mask_.unioned(more));
}

TableView apply_mask(const DataTable& table, const FeatureMask& mask) {
  return TableView(table, mask);
}

SchemaHint parse_schema_hint(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("schema descriptor: ") + e.what());
  }
  SchemaHint hint;
  if (doc.contains("label")) hint.label_column = doc["label"].get<std::string>();
  if (doc.contains("classes")) {
    for (const auto& c : doc["classes"]) {
      hint.class_labels.push_back(c.get<std::string>());
    }
  }
  if (doc.contains("columns")) {
    for (const auto& col : doc["columns"]) {
      ColumnHint h;
      h.name = col.at("name").get<std::string>();
      if (col.contains("kind")) {
        std::string k = col["kind"].get<std::string>();
        if (k == "numeric") {
          h.kind = FeatureKind::Numeric;
        } else if (k == "nominal") {
          h.kind = FeatureKind::Nominal;
        } else {
          throw ValidationError("schema descriptor: unknown kind '" + k +
                                "' for column '" + h.name + "'");
        }
      }
      if (col.contains("protected")) h.is_protected = col["protected"].get<bool>();
      hint.columns.push_back(std::move(h));
    }
  }
  return hint;
}

void normalize_numeric_columns(DataTable& table, Warnings* warnings) {
  for (std::size_t f = 0; f < table.n_features(); ++f) {
    FeatureSpec& spec = table.schema[f];
    if (spec.kind != FeatureKind::Numeric) continue;
    std::vector<double>& col = table.columns[f].numeric;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : col) {
      if (std::isnan(v)) continue;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (!std::isfinite(lo)) {  // all cells missing
      lo = hi = 0.0;
    }
    spec.observed_min = lo;
    spec.observed_max = hi;
    if (lo == hi) {
      spec.constant = true;
      for (double& v : col) {
        if (!std::isnan(v)) v = 0.0;
      }
      if (warnings != nullptr) {
        warnings->push_back("numeric column '" + spec.name +
                            "' is constant; mapped to 0.0");
      }
      continue;
    }
    const double range = hi - lo;
    for (double& v : col) {
      if (!std::isnan(v)) v = (v - lo) / range;
    }
  }
}

DataTable load_table(std::istream& in, const LoadOptions& options,
                     Warnings* warnings) {
  const bool german = options.format == LoadOptions::Format::German;
  const SchemaHint* schema =
      options.schema.has_value() ? &*options.schema : nullptr;

  std::vector<std::string> lines;
  {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }
  // Drop trailing blank lines; interior blank lines are ragged rows.
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ValidationError("input table is empty");

  std::vector<std::string> names;
  std::size_t first_data_line = 0;
  std::size_t n_cols = 0;
  if (german) {
    n_cols = std::size(kGermanSchema) + 1;
    for (const GermanColumn& c : kGermanSchema) names.emplace_back(c.name);
    names.emplace_back("class");
  } else {
    names = split_csv(lines[0]);
    if (names.size() < 2) {
      throw ValidationError("CSV header needs at least two columns");
    }
    n_cols = names.size();
    first_data_line = 1;
  }

  // Locate the label column.
  std::size_t label_col = n_cols - 1;
  if (!german && schema != nullptr && schema->label_column.has_value()) {
    auto it = std::find(names.begin(), names.end(), *schema->label_column);
    if (it == names.end()) {
      throw ValidationError("label column '" + *schema->label_column +
                            "' not found in header");
    }
    label_col = static_cast<std::size_t>(it - names.begin());
  }

  // Tokenize all rows up front so kinds can be inferred in one pass.
  std::vector<std::vector<std::string>> rows;
  rows.reserve(lines.size() - first_data_line);
  for (std::size_t li = first_data_line; li < lines.size(); ++li) {
    std::vector<std::string> cells =
        german ? split_ws(lines[li]) : split_csv(lines[li]);
    if (cells.size() != n_cols) {
      throw ParseError("expected " + std::to_string(n_cols) +
                           " columns, found " + std::to_string(cells.size()),
                       li + 1);
    }
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw ValidationError("input table has no data rows");

  DataTable table;
  const std::size_t n = rows.size();

  // Feature specs and kinds.
  std::vector<std::size_t> feature_cols;
  for (std::size_t c = 0; c < n_cols; ++c) {
    if (c == label_col) continue;
    feature_cols.push_back(c);
    FeatureSpec spec;
    spec.name = names[c];
    const ColumnHint* hint = find_hint(schema, spec.name);
    if (german) {
      spec.kind = kGermanSchema[c].kind;
    } else if (hint != nullptr && hint->kind.has_value()) {
      spec.kind = *hint->kind;
    } else {
      // Numeric iff every present cell parses as a finite number.
      spec.kind = FeatureKind::Numeric;
      for (const auto& row : rows) {
        const std::string& cell = row[c];
        double v;
        if (is_missing_token(cell)) continue;
        if (!parse_double(cell, &v)) {
          spec.kind = FeatureKind::Nominal;
          break;
        }
      }
    }
    if (hint != nullptr) spec.is_protected = hint->is_protected;
    table.schema.push_back(std::move(spec));
  }

  // Cell values.
  table.columns.resize(table.schema.size());
  for (std::size_t fi = 0; fi < feature_cols.size(); ++fi) {
    const std::size_t c = feature_cols[fi];
    FeatureSpec& spec = table.schema[fi];
    Column& col = table.columns[fi];
    if (spec.kind == FeatureKind::Numeric) {
      col.numeric.reserve(n);
      for (std::size_t r = 0; r < n; ++r) {
        const std::string& cell = rows[r][c];
        if (is_missing_token(cell)) {
          if (!options.allow_missing) {
            throw ValidationError("missing value in column '" + spec.name +
                                  "', row " + std::to_string(r + 1) +
                                  " (use allow_missing to accept)");
          }
          col.numeric.push_back(kNaN);
          continue;
        }
        double v;
        if (!parse_double(cell, &v)) {
          throw ValidationError("column '" + spec.name +
                                "' declared numeric but cell '" + cell +
                                "' in row " + std::to_string(r + 1) +
                                " is not a number");
        }
        col.numeric.push_back(v);
      }
    } else {
      col.codes.reserve(n);
      std::unordered_map<std::string, std::int32_t> code_of;
      for (std::size_t r = 0; r < n; ++r) {
        const std::string& cell = rows[r][c];
        if (is_missing_token(cell)) {
          if (!options.allow_missing) {
            throw ValidationError("missing value in column '" + spec.name +
                                  "', row " + std::to_string(r + 1) +
                                  " (use allow_missing to accept)");
          }
          col.codes.push_back(-1);
          continue;
        }
        auto [it, inserted] = code_of.try_emplace(
            cell, static_cast<std::int32_t>(spec.categories.size()));
        if (inserted) spec.categories.push_back(cell);
        col.codes.push_back(it->second);
      }
      if (spec.categories.empty()) {
        throw ValidationError("nominal column '" + spec.name +
                              "' has no observed categories");
      }
    }
  }

  // Class labels, coded in first-seen order.
  std::unordered_map<std::string, std::int32_t> class_code;
  for (const std::string& allowed : (schema ? schema->class_labels
                                            : std::vector<std::string>{})) {
    class_code.try_emplace(allowed,
                           static_cast<std::int32_t>(table.class_names.size()));
    if (class_code.size() > table.class_names.size()) {
      table.class_names.push_back(allowed);
    }
  }
  const bool closed_classes = schema != nullptr && !schema->class_labels.empty();
  table.labels.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string& cell = rows[r][label_col];
    if (is_missing_token(cell)) {
      throw ValidationError("missing class label in row " +
                            std::to_string(r + 1));
    }
    auto it = class_code.find(cell);
    if (it == class_code.end()) {
      if (closed_classes) {
        throw ValidationError("unknown class label '" + cell + "' in row " +
                              std::to_string(r + 1));
      }
      it = class_code
               .emplace(cell, static_cast<std::int32_t>(table.class_names.size()))
               .first;
      table.class_names.push_back(cell);
    }
    table.labels.push_back(it->second);
  }

  if (options.normalize) normalize_numeric_columns(table, warnings);
  return table;
}

DataTable load_table_file(const std::string& path, const LoadOptions& options,
                          Warnings* warnings) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open data file: " + path);
  return load_table(in, options, warnings);
}

DataTable german_credit_adapter(const DataTable& raw) {
  auto idx = raw.feature_index("personal_status_sex");
  if (!idx.has_value()) {
    throw ValidationError(
        "german_credit_adapter: column 'personal_status_sex' not present "
        "(already adapted?)");
  }
  const std::size_t f = *idx;
  const FeatureSpec& status = raw.schema[f];
  if (status.kind != FeatureKind::Nominal) {
    throw ValidationError("german_credit_adapter: status column is not nominal");
  }

  // A92 and A95 are the female codes; A91/A93/A94 are male.
  std::vector<std::int32_t> gender_of_code(status.categories.size());
  for (std::size_t c = 0; c < status.categories.size(); ++c) {
    const std::string& cat = status.categories[c];
    if (cat == "A92" || cat == "A95") {
      gender_of_code[c] = 1;
    } else if (cat == "A91" || cat == "A93" || cat == "A94") {
      gender_of_code[c] = 0;
    } else {
      throw ValidationError("german_credit_adapter: unknown status code '" +
                            cat + "'");
    }
  }

  DataTable out = raw;
  FeatureSpec& spec = out.schema[f];
  spec.name = "gender";
  spec.categories = {"male", "female"};
  spec.is_protected = true;
  Column& col = out.columns[f];
  for (std::int32_t& code : col.codes) {
    if (code >= 0) code = gender_of_code[static_cast<std::size_t>(code)];
  }
  auto age = out.feature_index("age");
  if (age.has_value()) out.schema[*age].is_protected = true;
  return out;
}

DataTable binarize_age(const DataTable& table, double threshold_years,
                       Warnings* warnings) {
  auto idx = table.feature_index("age");
  if (!idx.has_value()) {
    throw ValidationError("binarize_age: no 'age' column");
  }
  const FeatureSpec& age = table.schema[*idx];
  if (age.kind != FeatureKind::Numeric) {
    throw ValidationError("binarize_age: 'age' column is not numeric");
  }
  if (warnings != nullptr &&
      (threshold_years <= age.observed_min ||
       threshold_years > age.observed_max)) {
    warnings->push_back("age threshold " + std::to_string(threshold_years) +
                        " lies outside the observed range [" +
                        std::to_string(age.observed_min) + ", " +
                        std::to_string(age.observed_max) +
                        "]; one group is empty");
  }
  // Compare in normalized space with the threshold mapped by the same
  // transform the cells went through, so integer ages land exactly.
  double t = threshold_years;
  if (!age.constant && age.observed_max > age.observed_min) {
    t = (threshold_years - age.observed_min) /
        (age.observed_max - age.observed_min);
  }

  DataTable out = table;
  FeatureSpec group;
  group.name = "age_group";
  group.kind = FeatureKind::Nominal;
  group.categories = {"young", "old"};
  Column col;
  col.codes.reserve(table.n_instances());
  for (double v : table.columns[*idx].numeric) {
    col.codes.push_back(v < t ? 0 : 1);
  }
  out.schema.push_back(std::move(group));
  out.columns.push_back(std::move(col));
  return out;
}

}  // namespace fru
