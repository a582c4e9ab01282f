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

#include <cstddef>
#include <vector>

#include "fru/dataset.hpp"
#include "fru/fuzzy_ops.hpp"

namespace fru {

// Per-attribute distance delta_a: overlap (0/1) for nominal features,
// |x_a - y_a| for numeric ones (already range-normalized). A pair with a
// missing value on either side contributes 1.
double attribute_distance(const DataTable& table, std::size_t feature,
                          std::size_t i, std::size_t j);

// Heterogeneous distance over the view's active features.
// HMOM aggregates per-attribute distances additively, HEOM quadratically;
// under FeatureCount scaling both are bounded by 1. Symmetric, d(i,i) = 0.
double hetero_distance(DistanceKind kind, const TableView& view, std::size_t i,
                       std::size_t j, DistanceScaling scaling);

// Dense symmetric pairwise matrix. Rows fill in parallel; entries are
// bit-identical to hetero_distance regardless of the thread count.
class DistanceMatrix {
 public:
  DistanceMatrix(const TableView& view, DistanceKind kind,
                 DistanceScaling scaling, int threads = 1);

  double operator()(std::size_t i, std::size_t j) const {
    return d_[i * n_ + j];
  }
  std::size_t size() const { return n_; }
  const double* row(std::size_t i) const { return d_.data() + i * n_; }

 private:
  std::size_t n_;
  std::vector<double> d_;
};

}  // namespace fru
