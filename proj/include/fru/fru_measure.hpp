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
#include <span>
#include <vector>

#include "fru/dataset.hpp"
#include "fru/fuzzy_ops.hpp"
#include "fru/granulation.hpp"

namespace fru {

// Result of evaluating the uncertainty ratio for one decision class.
// defined is false when the baseline boundary has zero fuzzy cardinality
// while the suppressed boundary grew: the ratio diverges and is reported
// flagged rather than as infinity.
struct ClassFru {
  double value = 0.0;
  bool defined = true;
};

// Uncertainty ratio for one class from raw boundary-membership arrays:
//   sqrt(sum_x max(0, suppressed(x) - baseline(x))^2) / sqrt(sum_x baseline(x)^2)
// Only growth of the boundary counts; shrinkage is clipped to zero.
ClassFru fru_from_boundaries(std::span<const double> baseline,
                             std::span<const double> suppressed);

struct FruResult {
  std::size_t feature = 0;
  std::vector<double> per_class;          // Omega_k, one per class
  std::vector<std::uint8_t> class_defined;
  double aggregate = 0.0;
  bool diverging = false;                 // some class ratio was undefined
  // Filled by the Level-1/Level-2 drivers.
  double relative_to_reference = 0.0;
  double relative_to_sum = 0.0;
};

enum class FruAggregate { Mean, Max };

// Per-feature uncertainty: recomputes the regions with the feature masked
// and evaluates the ratio per class against the baseline boundary (which
// must come from compute_regions on the unmasked table with this config).
FruResult fru_for_feature(const DataTable& table, const FuzzyConfig& config,
                          std::size_t feature, const RegionMembership& baseline,
                          FruAggregate aggregate = FruAggregate::Mean,
                          int threads = 1);

struct Level1Report {
  std::vector<FruResult> results;  // one per feature, by index
  std::size_t reference_feature = 0;
  bool reference_defined = false;  // false when every FRU value is zero
  std::uint64_t baseline_fingerprint = 0;
};

// Suppresses one feature at a time and reports absolute plus relative FRU
// values. The reference feature is the argmax of the aggregate FRU.
Level1Report level1(const DataTable& table, const FuzzyConfig& config,
                    FruAggregate aggregate = FruAggregate::Mean,
                    int threads = 1);

enum class Level2Baseline {
  FullSet,            // boundary of the complete feature set
  SingleSuppression,  // boundary with only the protected feature masked
};

struct Level2Report {
  std::size_t protected_feature = 0;
  std::vector<FruResult> results;  // one per unprotected feature
  std::uint64_t baseline_fingerprint = 0;
};

// Suppresses {feature, protected} pairs. The denominator stays the
// baseline's boundary cardinality, so Level-1 and Level-2 values are
// directly comparable under the FullSet baseline.
Level2Report level2(const DataTable& table, const FuzzyConfig& config,
                    std::size_t protected_feature,
                    Level2Baseline baseline = Level2Baseline::FullSet,
                    FruAggregate aggregate = FruAggregate::Mean,
                    int threads = 1);

struct SweepSpec {
  std::vector<ImplicatorKind> implicators;
  std::vector<TNormKind> tnorms;
  std::vector<DistanceKind> distances;
  std::vector<double> lambdas;
  DistanceScaling scaling = DistanceScaling::Raw;

  void validate() const;  // non-empty axes, lambdas > 0
  std::size_t cell_count() const;
};

struct SweepCell {
  FuzzyConfig config;
  Level1Report report;
};

struct SweepGrid {
  SweepSpec spec;
  std::vector<SweepCell> cells;  // full Cartesian product, fixed order

  const Level1Report* find(const FuzzyConfig& config) const;
};

// Level-1 analysis for every cell of the grid. Distance matrices are
// computed once per (mask, distance kind) and shared across every lambda
// and operator combination.
SweepGrid sweep(const DataTable& table, const SweepSpec& spec,
                FruAggregate aggregate = FruAggregate::Mean, int threads = 1);

}  // namespace fru
