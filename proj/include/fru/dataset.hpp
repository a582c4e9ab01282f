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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fru {

enum class FeatureKind { Numeric, Nominal };

struct FeatureSpec {
  std::string name;
  FeatureKind kind = FeatureKind::Numeric;
  bool is_protected = false;
  std::vector<std::string> categories;  // Nominal: code -> label
  double observed_min = 0.0;            // Numeric, pre-normalization
  double observed_max = 0.0;
  bool constant = false;                // Numeric column with zero range

  bool operator==(const FeatureSpec&) const = default;
};

// One feature column. Exactly one of the two vectors is populated,
// matching the feature's kind. Numeric cells are min-max scaled to [0,1]
// after loading; a missing cell is NaN (Numeric) or -1 (Nominal) and can
// only appear when loading with allow_missing.
struct Column {
  std::vector<double> numeric;
  std::vector<std::int32_t> codes;

  bool operator==(const Column&) const = default;
};

// Immutable after construction; safe to share across concurrent readers.
struct DataTable {
  std::vector<FeatureSpec> schema;
  std::vector<Column> columns;
  std::vector<std::int32_t> labels;      // class codes 0..K-1
  std::vector<std::string> class_names;  // code -> original label text

  std::size_t n_instances() const { return labels.size(); }
  std::size_t n_features() const { return schema.size(); }
  std::size_t n_classes() const { return class_names.size(); }

  std::optional<std::size_t> feature_index(std::string_view name) const;

  // Maps a normalized numeric cell back to original units.
  double denormalize(std::size_t feature, double value) const;

  bool operator==(const DataTable&) const = default;
};

class FeatureMask {
 public:
  FeatureMask() = default;
  explicit FeatureMask(std::size_t n_features) : bits_(n_features, 0) {}
  static FeatureMask excluding(std::size_t n_features,
                               std::initializer_list<std::size_t> indices);

  void exclude(std::size_t index);
  bool excludes(std::size_t index) const {
    return index < bits_.size() && bits_[index] != 0;
  }
  std::size_t size() const { return bits_.size(); }
  std::size_t excluded_count() const;
  std::vector<std::size_t> excluded_indices() const;
  FeatureMask unioned(const FeatureMask& other) const;

  bool operator==(const FeatureMask&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Read-only view of a table with masked columns hidden. Creating a view
// copies no column data.
class TableView {
 public:
  explicit TableView(const DataTable& table);
  TableView(const DataTable& table, FeatureMask mask);

  const DataTable& table() const { return *table_; }
  const FeatureMask& mask() const { return mask_; }
  std::size_t n_instances() const { return table_->n_instances(); }
  std::size_t n_active() const { return active_.size(); }
  // Index of the a-th active feature in the underlying table.
  std::size_t active_feature(std::size_t a) const { return active_[a]; }

  TableView masked(const FeatureMask& more) const;

 private:
  const DataTable* table_;
  FeatureMask mask_;
  std::vector<std::uint32_t> active_;
};

struct ColumnHint {
  std::string name;
  std::optional<FeatureKind> kind;
  bool is_protected = false;
};

struct SchemaHint {
  std::vector<ColumnHint> columns;
  std::optional<std::string> label_column;  // default: last column
  std::vector<std::string> class_labels;    // if non-empty, others rejected
};

// Parses the JSON schema descriptor:
//   {"label": "outcome",
//    "classes": ["good", "bad"],
//    "columns": [{"name": "age", "kind": "numeric", "protected": true}, ...]}
SchemaHint parse_schema_hint(std::istream& in);

struct LoadOptions {
  enum class Format { Csv, German };
  Format format = Format::Csv;
  bool allow_missing = false;
  // When false, numeric columns keep their original units. Only the
  // normalized form satisfies the table invariants; this switch exists so
  // pipeline-order tests can compose the steps explicitly.
  bool normalize = true;
  std::optional<SchemaHint> schema;
};

using Warnings = std::vector<std::string>;

DataTable load_table(std::istream& in, const LoadOptions& options = {},
                     Warnings* warnings = nullptr);
DataTable load_table_file(const std::string& path,
                          const LoadOptions& options = {},
                          Warnings* warnings = nullptr);

// Min-max scales every non-constant numeric column to [0,1]; constant
// columns map to 0.0 and are flagged.
void normalize_numeric_columns(DataTable& table, Warnings* warnings = nullptr);

// Replaces the combined status/sex attribute of the UCI German Credit
// encoding (codes A91-A95) by a binary gender feature (A92, A95 -> female)
// and marks gender and age as protected.
DataTable german_credit_adapter(const DataTable& raw);

// Appends a nominal "age_group" column with categories {young, old};
// young means age strictly below threshold_years (original units). The age
// column itself is untouched. The group column serves the baseline group
// metrics only and is never part of distance computations.
DataTable binarize_age(const DataTable& table, double threshold_years,
                       Warnings* warnings = nullptr);

// Validates the mask against the table (indices in range, at least one
// feature left active) and returns the view.
TableView apply_mask(const DataTable& table, const FeatureMask& mask);

}  // namespace fru
