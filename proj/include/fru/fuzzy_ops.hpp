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

#include <string>
#include <string_view>

namespace fru {

enum class ImplicatorKind {
  Standard,
  KleeneDienes,
  Lukasiewicz,
  Zadeh,
  Goedel,
  Larsen,
  Mamdani,
  Reichenbach,
  Yager,
  Goguen,
};

enum class TNormKind {
  Minimum,
  Product,
  Lukasiewicz,
  Drastic,
};

enum class DistanceKind {
  Hmom,  // heterogeneous Manhattan-overlap
  Heom,  // heterogeneous Euclidean-overlap
};

// How the per-attribute distances are aggregated.
//   Raw:          HMOM = sum(delta_a),      HEOM = sqrt(sum(delta_a^2))
//   FeatureCount: HMOM = sum(delta_a)/m,    HEOM = sqrt(sum(delta_a^2))/sqrt(m)
// Raw keeps absolute similarity levels comparable with published audits of
// this measure; FeatureCount bounds every distance by 1 regardless of how
// many features are active.
enum class DistanceScaling {
  Raw,
  FeatureCount,
};

struct FuzzyConfig {
  ImplicatorKind implicator = ImplicatorKind::Lukasiewicz;
  TNormKind tnorm = TNormKind::Minimum;
  DistanceKind distance = DistanceKind::Hmom;
  DistanceScaling scaling = DistanceScaling::Raw;
  double lambda = 0.5;

  // Throws ConfigError unless lambda is finite and > 0.
  void validate() const;

  bool operator==(const FuzzyConfig&) const = default;
};

// Fuzzy implication I(a, b), total on [0,1]^2. Throws DomainError when an
// argument lies outside the unit interval.
double implicate(ImplicatorKind kind, double a, double b);

// Fuzzy conjunction T(a, b) on [0,1]^2 with T(a, 1) = a and T(a, 0) = 0.
double tnorm(TNormKind kind, double a, double b);

// Exponential similarity e^{-lambda * d}. Accepts any finite d >= 0 so both
// distance scalings are usable; value lies in (0, 1] and equals 1 iff d = 0.
double similarity(const FuzzyConfig& config, double d);

// CLI-facing identifiers ("lukasiewicz", "kleene-dienes", "hmom", ...).
std::string_view to_string(ImplicatorKind kind);
std::string_view to_string(TNormKind kind);
std::string_view to_string(DistanceKind kind);
std::string_view to_string(DistanceScaling scaling);
ImplicatorKind parse_implicator(std::string_view name);
TNormKind parse_tnorm(std::string_view name);
DistanceKind parse_distance(std::string_view name);
DistanceScaling parse_scaling(std::string_view name);

inline constexpr ImplicatorKind kAllImplicators[] = {
    ImplicatorKind::Standard,   ImplicatorKind::KleeneDienes,
    ImplicatorKind::Lukasiewicz, ImplicatorKind::Zadeh,
    ImplicatorKind::Goedel,     ImplicatorKind::Larsen,
    ImplicatorKind::Mamdani,    ImplicatorKind::Reichenbach,
    ImplicatorKind::Yager,      ImplicatorKind::Goguen,
};
inline constexpr TNormKind kAllTNorms[] = {
    TNormKind::Minimum,
    TNormKind::Product,
    TNormKind::Lukasiewicz,
    TNormKind::Drastic,
};
inline constexpr DistanceKind kAllDistances[] = {
    DistanceKind::Hmom,
    DistanceKind::Heom,
};

}  // namespace fru
