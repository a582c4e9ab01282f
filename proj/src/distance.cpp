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

#include "fru/distance.hpp"

#include <cmath>

#include "fru/errors.hpp"
#include "fru/parallel.hpp"

namespace fru {

double attribute_distance(const DataTable& table, std::size_t feature,
                          std::size_t i, std::size_t j) {
  const FeatureSpec& spec = table.schema[feature];
  if (spec.kind == FeatureKind::Numeric) {
    const double a = table.columns[feature].numeric[i];
    const double b = table.columns[feature].numeric[j];
    if (std::isnan(a) || std::isnan(b)) return 1.0;
    return std::abs(a - b);
  }
  const std::int32_t a = table.columns[feature].codes[i];
  const std::int32_t b = table.columns[feature].codes[j];
  if (a < 0 || b < 0) return 1.0;
  return a == b ? 0.0 : 1.0;
}

double hetero_distance(DistanceKind kind, const TableView& view, std::size_t i,
                       std::size_t j, DistanceScaling scaling) {
  const std::size_t m = view.n_active();
  if (m == 0) throw ValidationError("hetero_distance: no active features");
  if (i >= view.n_instances() || j >= view.n_instances()) {
    throw ValidationError("hetero_distance: instance index out of range");
  }
  const DataTable& table = view.table();
  double acc = 0.0;
  if (kind == DistanceKind::Hmom) {
    for (std::size_t a = 0; a < m; ++a) {
      acc += attribute_distance(table, view.active_feature(a), i, j);
    }
    if (scaling == DistanceScaling::FeatureCount) {
      acc /= static_cast<double>(m);
    }
    return acc;
  }
  for (std::size_t a = 0; a < m; ++a) {
    const double d = attribute_distance(table, view.active_feature(a), i, j);
    acc += d * d;
  }
  double out = std::sqrt(acc);
  if (scaling == DistanceScaling::FeatureCount) {
    out /= std::sqrt(static_cast<double>(m));
  }
  return out;
}

DistanceMatrix::DistanceMatrix(const TableView& view, DistanceKind kind,
                               DistanceScaling scaling, int threads)
    : n_(view.n_instances()), d_(n_ * n_, 0.0) {
  detail::parallel_for(n_, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        d_[i * n_ + j] = hetero_distance(kind, view, i, j, scaling);
      }
    }
  });
  // Mirror the lower triangle; the diagonal stays exactly zero.
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      d_[i * n_ + j] = d_[j * n_ + i];
    }
  }
}

}  // namespace fru
