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

#include "fru/fru_measure.hpp"

#include <algorithm>
#include <cmath>

#include "fru/errors.hpp"

namespace fru {

namespace {

// Omega for one class, given the two boundary columns.
ClassFru class_fru(const RegionMembership& baseline,
                   const RegionMembership& suppressed, std::size_t k) {
  double num = 0.0;
  double den = 0.0;
  const std::size_t n = baseline.n;
  const std::size_t K = baseline.n_classes;
  for (std::size_t x = 0; x < n; ++x) {
    const double b = baseline.bnd[x * K + k];
    const double delta = suppressed.bnd[x * K + k] - b;
    if (delta > 0.0) num += delta * delta;
    den += b * b;
  }
  ClassFru out;
  if (den == 0.0) {
    if (num == 0.0) return out;  // 0/0: no boundary, no growth
    out.defined = false;
    return out;
  }
  out.value = std::sqrt(num) / std::sqrt(den);
  return out;
}

double aggregate_value(const std::vector<double>& per_class,
                       FruAggregate aggregate) {
  if (per_class.empty()) return 0.0;
  if (aggregate == FruAggregate::Max) {
    return *std::max_element(per_class.begin(), per_class.end());
  }
  double sum = 0.0;
  for (double v : per_class) sum += v;
  return sum / static_cast<double>(per_class.size());
}

FruResult assemble_result(const RegionMembership& baseline,
                          const RegionMembership& suppressed,
                          std::size_t feature, FruAggregate aggregate) {
  FruResult out;
  out.feature = feature;
  out.per_class.resize(baseline.n_classes);
  out.class_defined.resize(baseline.n_classes, 1);
  for (std::size_t k = 0; k < baseline.n_classes; ++k) {
    ClassFru c = class_fru(baseline, suppressed, k);
    out.per_class[k] = c.value;
    out.class_defined[k] = c.defined ? 1 : 0;
    if (!c.defined) out.diverging = true;
  }
  out.aggregate = aggregate_value(out.per_class, aggregate);
  return out;
}

void finalize_relatives(Level1Report& report) {
  double max_agg = 0.0;
  double sum_agg = 0.0;
  std::size_t ref = 0;
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    const double a = report.results[i].aggregate;
    sum_agg += a;
    if (a > max_agg) {
      max_agg = a;
      ref = i;
    }
  }
  report.reference_feature = report.results.empty()
                                 ? 0
                                 : report.results[ref].feature;
  report.reference_defined = max_agg > 0.0;
  for (FruResult& r : report.results) {
    r.relative_to_reference =
        report.reference_defined ? r.aggregate / max_agg : 0.0;
    r.relative_to_sum = sum_agg > 0.0 ? r.aggregate / sum_agg : 0.0;
  }
}

}  // namespace

ClassFru fru_from_boundaries(std::span<const double> baseline,
                             std::span<const double> suppressed) {
  if (baseline.size() != suppressed.size()) {
    throw ValidationError("fru_from_boundaries: array size mismatch");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t x = 0; x < baseline.size(); ++x) {
    const double delta = suppressed[x] - baseline[x];
    if (delta > 0.0) num += delta * delta;
    den += baseline[x] * baseline[x];
  }
  ClassFru out;
  if (den == 0.0) {
    if (num == 0.0) return out;
    out.defined = false;
    return out;
  }
  out.value = std::sqrt(num) / std::sqrt(den);
  return out;
}

FruResult fru_for_feature(const DataTable& table, const FuzzyConfig& config,
                          std::size_t feature, const RegionMembership& baseline,
                          FruAggregate aggregate, int threads) {
  config.validate();
  if (feature >= table.n_features()) {
    throw ValidationError("fru_for_feature: feature index out of range");
  }
  const std::uint64_t expected = config_fingerprint(
      config, FeatureMask(table.n_features()), table.n_instances(),
      table.n_classes());
  if (baseline.config_fingerprint != expected) {
    throw ConfigError(
        "fru_for_feature: baseline regions were not computed on the full "
        "feature set with this configuration");
  }
  TableView view(table, FeatureMask::excluding(table.n_features(), {feature}));
  RegionMembership suppressed = compute_regions(view, config, threads);
  return assemble_result(baseline, suppressed, feature, aggregate);
}

Level1Report level1(const DataTable& table, const FuzzyConfig& config,
                    FruAggregate aggregate, int threads) {
  config.validate();
  if (table.n_features() < 2) {
    throw ValidationError("level1 requires at least 2 features");
  }
  TableView full(table);
  RegionMembership baseline = compute_regions(full, config, threads);
  Level1Report report;
  report.baseline_fingerprint = baseline.config_fingerprint;
  report.results.reserve(table.n_features());
  for (std::size_t f = 0; f < table.n_features(); ++f) {
    report.results.push_back(
        fru_for_feature(table, config, f, baseline, aggregate, threads));
  }
  finalize_relatives(report);
  return report;
}

Level2Report level2(const DataTable& table, const FuzzyConfig& config,
                    std::size_t protected_feature, Level2Baseline baseline_kind,
                    FruAggregate aggregate, int threads) {
  config.validate();
  if (protected_feature >= table.n_features()) {
    throw ValidationError("level2: protected feature index out of range");
  }
  if (table.n_features() < 3) {
    throw ValidationError("level2 requires at least 3 features");
  }

  RegionMembership baseline;
  if (baseline_kind == Level2Baseline::FullSet) {
    baseline = compute_regions(TableView(table), config, threads);
  } else {
    TableView single(table, FeatureMask::excluding(table.n_features(),
                                                   {protected_feature}));
    baseline = compute_regions(single, config, threads);
  }

  Level2Report report;
  report.protected_feature = protected_feature;
  report.baseline_fingerprint = baseline.config_fingerprint;
  for (std::size_t f = 0; f < table.n_features(); ++f) {
    if (f == protected_feature || table.schema[f].is_protected) continue;
    FeatureMask mask =
        FeatureMask::excluding(table.n_features(), {f, protected_feature});
    TableView view(table, mask);
    RegionMembership suppressed = compute_regions(view, config, threads);
    report.results.push_back(
        assemble_result(baseline, suppressed, f, aggregate));
  }

  // Relative values within the Level-2 result set.
  double max_agg = 0.0;
  double sum_agg = 0.0;
  for (const FruResult& r : report.results) {
    max_agg = std::max(max_agg, r.aggregate);
    sum_agg += r.aggregate;
  }
  for (FruResult& r : report.results) {
    r.relative_to_reference = max_agg > 0.0 ? r.aggregate / max_agg : 0.0;
    r.relative_to_sum = sum_agg > 0.0 ? r.aggregate / sum_agg : 0.0;
  }
  return report;
}

void SweepSpec::validate() const {
  if (implicators.empty() || tnorms.empty() || distances.empty() ||
      lambdas.empty()) {
    throw ConfigError("sweep grid has an empty axis");
  }
  for (double l : lambdas) {
    if (!(std::isfinite(l) && l > 0.0)) {
      throw ConfigError("sweep lambda values must be finite and > 0");
    }
  }
}

std::size_t SweepSpec::cell_count() const {
  return implicators.size() * tnorms.size() * distances.size() *
         lambdas.size();
}

const Level1Report* SweepGrid::find(const FuzzyConfig& config) const {
  for (const SweepCell& cell : cells) {
    if (cell.config == config) return &cell.report;
  }
  return nullptr;
}

SweepGrid sweep(const DataTable& table, const SweepSpec& spec,
                FruAggregate aggregate, int threads) {
  spec.validate();
  if (table.n_features() < 2) {
    throw ValidationError("sweep requires at least 2 features");
  }
  const std::size_t m = table.n_features();
  const std::size_t n_cells = spec.cell_count();

  SweepGrid grid;
  grid.spec = spec;
  grid.cells.resize(n_cells);
  // Canonical cell order: implicator, then t-norm, then distance, then
  // lambda (innermost).
  const std::size_t L = spec.lambdas.size();
  const std::size_t D = spec.distances.size();
  const std::size_t T = spec.tnorms.size();
  auto cell_index = [&](std::size_t ii, std::size_t ti, std::size_t di,
                        std::size_t li) {
    return ((ii * T + ti) * D + di) * L + li;
  };
  for (std::size_t ii = 0; ii < spec.implicators.size(); ++ii) {
    for (std::size_t ti = 0; ti < T; ++ti) {
      for (std::size_t di = 0; di < D; ++di) {
        for (std::size_t li = 0; li < L; ++li) {
          FuzzyConfig c;
          c.implicator = spec.implicators[ii];
          c.tnorm = spec.tnorms[ti];
          c.distance = spec.distances[di];
          c.scaling = spec.scaling;
          c.lambda = spec.lambdas[li];
          grid.cells[cell_index(ii, ti, di, li)].config = c;
          grid.cells[cell_index(ii, ti, di, li)].report.results.resize(m);
        }
      }
    }
  }

  // Baseline boundaries per cell, then one pass per feature mask with the
  // distance matrix shared across every lambda/operator combination.
  std::vector<RegionMembership> baselines(n_cells);
  for (std::size_t di = 0; di < D; ++di) {
    for (std::size_t mask_step = 0; mask_step <= m; ++mask_step) {
      const bool is_baseline = mask_step == 0;
      FeatureMask mask(m);
      if (!is_baseline) mask.exclude(mask_step - 1);
      TableView view(table, mask);
      DistanceMatrix distances(view, spec.distances[di], spec.scaling,
                               threads);
      for (std::size_t li = 0; li < L; ++li) {
        for (std::size_t ii = 0; ii < spec.implicators.size(); ++ii) {
          for (std::size_t ti = 0; ti < T; ++ti) {
            const std::size_t ci = cell_index(ii, ti, di, li);
            RegionMembership regions = compute_regions(
                view, grid.cells[ci].config, distances, threads);
            if (is_baseline) {
              grid.cells[ci].report.baseline_fingerprint =
                  regions.config_fingerprint;
              baselines[ci] = std::move(regions);
            } else {
              grid.cells[ci].report.results[mask_step - 1] = assemble_result(
                  baselines[ci], regions, mask_step - 1, aggregate);
            }
          }
        }
      }
    }
  }
  for (SweepCell& cell : grid.cells) finalize_relatives(cell.report);
  return grid;
}

}  // namespace fru
