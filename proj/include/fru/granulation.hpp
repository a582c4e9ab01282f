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
#include <vector>

#include "fru/dataset.hpp"
#include "fru/distance.hpp"
#include "fru/fuzzy_ops.hpp"

namespace fru {

// Per-instance, per-class membership to the positive, boundary and negative
// fuzzy-rough regions. pos = lower approximation, neg = 1 - upper,
// bnd = upper - lower, so pos + bnd + neg = 1 for every (instance, class).
struct RegionMembership {
  std::size_t n = 0;
  std::size_t n_classes = 0;
  std::vector<double> pos, bnd, neg;  // index [x * n_classes + k]
  std::uint64_t config_fingerprint = 0;

  double pos_at(std::size_t x, std::size_t k) const {
    return pos[x * n_classes + k];
  }
  double bnd_at(std::size_t x, std::size_t k) const {
    return bnd[x * n_classes + k];
  }
  double neg_at(std::size_t x, std::size_t k) const {
    return neg[x * n_classes + k];
  }
};

// Stable hash of everything that determines a region computation: the
// fuzzy configuration, the feature mask, and the table dimensions.
std::uint64_t config_fingerprint(const FuzzyConfig& config,
                                 const FeatureMask& mask, std::size_t n,
                                 std::size_t n_classes);

// Membership to the lower approximation of class k:
//   min{ mu_k(x), inf_y I(mu_k(x) * phi(x,y), mu_k(y)) }
// The infimum ranges over every y in the universe, including y = x.
std::vector<double> lower_approximation(const TableView& view,
                                        const FuzzyConfig& config,
                                        std::int32_t k,
                                        const DistanceMatrix& distances);
std::vector<double> lower_approximation(const TableView& view,
                                        const FuzzyConfig& config,
                                        std::int32_t k);

// Membership to the upper approximation of class k:
//   max{ mu_k(x), sup_y T(mu_k(y) * phi(y,x), mu_k(y)) }
// A class with no members yields 0 everywhere (empty supremum).
std::vector<double> upper_approximation(const TableView& view,
                                        const FuzzyConfig& config,
                                        std::int32_t k,
                                        const DistanceMatrix& distances);
std::vector<double> upper_approximation(const TableView& view,
                                        const FuzzyConfig& config,
                                        std::int32_t k);

// Regions for every class at once. The pairwise distance matrix is computed
// once and shared across classes. Instances are processed independently, so
// the result is bit-identical for any thread count.
RegionMembership compute_regions(const TableView& view,
                                 const FuzzyConfig& config, int threads = 1);
RegionMembership compute_regions(const TableView& view,
                                 const FuzzyConfig& config,
                                 const DistanceMatrix& distances,
                                 int threads = 1);

}  // namespace fru
