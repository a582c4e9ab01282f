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

#include "fru/granulation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "fru/errors.hpp"
#include "fru/parallel.hpp"

namespace fru {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

template <typename T>
std::uint64_t fnv1a_value(std::uint64_t h, T v) {
  return fnv1a(h, &v, sizeof(v));
}

void check_class(const TableView& view, std::int32_t k) {
  if (k < 0 || static_cast<std::size_t>(k) >= view.table().n_classes()) {
    throw ValidationError("class index " + std::to_string(k) +
                          " out of range");
  }
}

}  // namespace

std::uint64_t config_fingerprint(const FuzzyConfig& config,
                                 const FeatureMask& mask, std::size_t n,
                                 std::size_t n_classes) {
  std::uint64_t h = 1469598103934665603ull;
  h = fnv1a_value(h, static_cast<std::uint8_t>(config.implicator));
  h = fnv1a_value(h, static_cast<std::uint8_t>(config.tnorm));
  h = fnv1a_value(h, static_cast<std::uint8_t>(config.distance));
  h = fnv1a_value(h, static_cast<std::uint8_t>(config.scaling));
  h = fnv1a_value(h, std::bit_cast<std::uint64_t>(config.lambda));
  h = fnv1a_value(h, static_cast<std::uint64_t>(n));
  h = fnv1a_value(h, static_cast<std::uint64_t>(n_classes));
  // Hash the excluded index list, not the raw bit vector, so an absent mask
  // and an all-zero mask fingerprint identically.
  for (std::size_t idx : mask.excluded_indices()) {
    h = fnv1a_value(h, static_cast<std::uint64_t>(idx));
  }
  return h;
}

std::vector<double> lower_approximation(const TableView& view,
                                        const FuzzyConfig& config,
                                        std::int32_t k,
                                        const DistanceMatrix& distances) {
  config.validate();
  check_class(view, k);
  const std::size_t n = view.n_instances();
  const std::vector<std::int32_t>& labels = view.table().labels;
  std::vector<double> lower(n);
  for (std::size_t x = 0; x < n; ++x) {
    const double* drow = distances.row(x);
    const bool x_in = labels[x] == k;
    double inf = 1.0;
    for (std::size_t y = 0; y < n; ++y) {
      const double phi = std::exp(-config.lambda * drow[y]);
      const double a = x_in ? phi : 0.0;   // mu_k(x) * phi(x,y)
      const double b = labels[y] == k ? 1.0 : 0.0;
      inf = std::min(inf, implicate(config.implicator, a, b));
    }
    lower[x] = std::min(x_in ? 1.0 : 0.0, inf);
  }
  return lower;
}

std::vector<double> lower_approximation(const TableView& view,
                                        const FuzzyConfig& config,
                                        std::int32_t k) {
  DistanceMatrix distances(view, config.distance, config.scaling);
  return lower_approximation(view, config, k, distances);
}

std::vector<double> upper_approximation(const TableView& view,
                                        const FuzzyConfig& config,
                                        std::int32_t k,
                                        const DistanceMatrix& distances) {
  config.validate();
  check_class(view, k);
  const std::size_t n = view.n_instances();
  const std::vector<std::int32_t>& labels = view.table().labels;
  std::vector<double> upper(n);
  for (std::size_t x = 0; x < n; ++x) {
    const double* drow = distances.row(x);
    double sup = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
      const double phi = std::exp(-config.lambda * drow[y]);
      const bool y_in = labels[y] == k;
      const double a = y_in ? phi : 0.0;   // mu_k(y) * phi(y,x)
      sup = std::max(sup, tnorm(config.tnorm, a, y_in ? 1.0 : 0.0));
    }
    upper[x] = std::max(labels[x] == k ? 1.0 : 0.0, sup);
  }
  return upper;
}

std::vector<double> upper_approximation(const TableView& view,
                                        const FuzzyConfig& config,
                                        std::int32_t k) {
  DistanceMatrix distances(view, config.distance, config.scaling);
  return upper_approximation(view, config, k, distances);
}

RegionMembership compute_regions(const TableView& view,
                                 const FuzzyConfig& config,
                                 const DistanceMatrix& distances,
                                 int threads) {
  config.validate();
  const std::size_t n = view.n_instances();
  const std::size_t n_classes = view.table().n_classes();
  if (n_classes == 0) throw ValidationError("table declares no classes");
  const std::vector<std::int32_t>& labels = view.table().labels;

  RegionMembership out;
  out.n = n;
  out.n_classes = n_classes;
  out.pos.assign(n * n_classes, 0.0);
  out.bnd.assign(n * n_classes, 0.0);
  out.neg.assign(n * n_classes, 0.0);
  out.config_fingerprint = config_fingerprint(config, view.mask(), n, n_classes);

  detail::parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<double> inf(n_classes);
    std::vector<double> sup(n_classes);
    for (std::size_t x = begin; x < end; ++x) {
      std::fill(inf.begin(), inf.end(), 1.0);
      std::fill(sup.begin(), sup.end(), 0.0);
      const double* drow = distances.row(x);
      const std::int32_t lx = labels[x];
      for (std::size_t y = 0; y < n; ++y) {
        const double phi = std::exp(-config.lambda * drow[y]);
        const std::int32_t ly = labels[y];
        for (std::size_t k = 0; k < n_classes; ++k) {
          const std::int32_t ki = static_cast<std::int32_t>(k);
          const double mu_y = ly == ki ? 1.0 : 0.0;
          inf[k] = std::min(
              inf[k], implicate(config.implicator, lx == ki ? phi : 0.0, mu_y));
          sup[k] = std::max(
              sup[k], tnorm(config.tnorm, ly == ki ? phi : 0.0, mu_y));
        }
      }
      for (std::size_t k = 0; k < n_classes; ++k) {
        const double mu_x = lx == static_cast<std::int32_t>(k) ? 1.0 : 0.0;
        const double lower = std::min(mu_x, inf[k]);
        const double upper = std::max(mu_x, sup[k]);
        out.pos[x * n_classes + k] = lower;
        out.bnd[x * n_classes + k] = upper - lower;
        out.neg[x * n_classes + k] = 1.0 - upper;
      }
    }
  });
  return out;
}

RegionMembership compute_regions(const TableView& view,
                                 const FuzzyConfig& config, int threads) {
  DistanceMatrix distances(view, config.distance, config.scaling, threads);
  return compute_regions(view, config, distances, threads);
}

}  // namespace fru
