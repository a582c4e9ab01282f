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

#include "fru/fuzzy_ops.hpp"

#include <algorithm>
#include <cmath>

#include "fru/errors.hpp"

namespace fru {

namespace {

void check_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0,1], got " +
                      std::to_string(v));
  }
}

}  // namespace

void FuzzyConfig::validate() const {
  if (!(std::isfinite(lambda) && lambda > 0.0)) {
    throw ConfigError("smoothing parameter lambda must be finite and > 0");
  }
}

double implicate(ImplicatorKind kind, double a, double b) {
  check_unit(a, "implicator argument a");
  check_unit(b, "implicator argument b");
  switch (kind) {
    case ImplicatorKind::Standard:
      return a <= b ? 1.0 : 0.0;
    case ImplicatorKind::KleeneDienes:
      return std::max(1.0 - a, b);
    case ImplicatorKind::Lukasiewicz:
      return std::min((1.0 - a) + b, 1.0);
    case ImplicatorKind::Zadeh:
      return std::max(1.0 - a, std::min(a, b));
    case ImplicatorKind::Goedel:
      return a <= b ? 1.0 : b;
    case ImplicatorKind::Larsen:
      return a * b;
    case ImplicatorKind::Mamdani:
      return std::min(a, b);
    case ImplicatorKind::Reichenbach:
      // Written as 1 - a(1-b) rather than 1 - a + ab so that the value at
      // b = 0 is bit-identical to Kleene-Dienes/Lukasiewicz and exactly 1
      // at b = 1; crisp-label region computations rely on this.
      return 1.0 - a * (1.0 - b);
    case ImplicatorKind::Yager:
      if (a == 0.0 && b == 0.0) return 1.0;
      return std::pow(b, a);
    case ImplicatorKind::Goguen:
      return a <= b ? 1.0 : b / a;
  }
  throw DomainError("unknown implicator kind");
}

double tnorm(TNormKind kind, double a, double b) {
  check_unit(a, "t-norm argument a");
  check_unit(b, "t-norm argument b");
  switch (kind) {
    case TNormKind::Minimum:
      return std::min(a, b);
    case TNormKind::Product:
      return a * b;
    case TNormKind::Lukasiewicz:
      // a + (b - 1) keeps T(a, 1) == a exact; (a + b) - 1 would not.
      return std::max(0.0, a + (b - 1.0));
    case TNormKind::Drastic:
      if (b == 1.0) return a;
      if (a == 1.0) return b;
      return 0.0;
  }
  throw DomainError("unknown t-norm kind");
}

double similarity(const FuzzyConfig& config, double d) {
  config.validate();
  if (!(std::isfinite(d) && d >= 0.0)) {
    throw DomainError("distance must be finite and >= 0, got " +
                      std::to_string(d));
  }
  return std::exp(-config.lambda * d);
}

std::string_view to_string(ImplicatorKind kind) {
  switch (kind) {
    case ImplicatorKind::Standard: return "standard";
    case ImplicatorKind::KleeneDienes: return "kleene-dienes";
    case ImplicatorKind::Lukasiewicz: return "lukasiewicz";
    case ImplicatorKind::Zadeh: return "zadeh";
    case ImplicatorKind::Goedel: return "goedel";
    case ImplicatorKind::Larsen: return "larsen";
    case ImplicatorKind::Mamdani: return "mamdani";
    case ImplicatorKind::Reichenbach: return "reichenbach";
    case ImplicatorKind::Yager: return "yager";
    case ImplicatorKind::Goguen: return "goguen";
  }
  return "?";
}

std::string_view to_string(TNormKind kind) {
  switch (kind) {
    case TNormKind::Minimum: return "minimum";
    case TNormKind::Product: return "product";
    case TNormKind::Lukasiewicz: return "lukasiewicz";
    case TNormKind::Drastic: return "drastic";
  }
  return "?";
}

std::string_view to_string(DistanceKind kind) {
  return kind == DistanceKind::Hmom ? "hmom" : "heom";
}

std::string_view to_string(DistanceScaling scaling) {
  return scaling == DistanceScaling::Raw ? "raw" : "feature-count";
}

ImplicatorKind parse_implicator(std::string_view name) {
  for (ImplicatorKind k : kAllImplicators) {
    if (to_string(k) == name) return k;
  }
  if (name == "godel") return ImplicatorKind::Goedel;
  throw ConfigError("unknown implicator: " + std::string(name));
}

TNormKind parse_tnorm(std::string_view name) {
  for (TNormKind k : kAllTNorms) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown t-norm: " + std::string(name));
}

DistanceKind parse_distance(std::string_view name) {
  if (name == "hmom") return DistanceKind::Hmom;
  if (name == "heom") return DistanceKind::Heom;
  throw ConfigError("unknown distance: " + std::string(name));
}

DistanceScaling parse_scaling(std::string_view name) {
  if (name == "raw") return DistanceScaling::Raw;
  if (name == "feature-count") return DistanceScaling::FeatureCount;
  throw ConfigError("unknown distance scaling: " + std::string(name));
}

}  // namespace fru
