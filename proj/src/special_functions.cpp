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

#include "fru/special_functions.hpp"

#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "fru/errors.hpp"

namespace fru::stats {

double student_t_cdf(double x, double nu) {
  if (!(nu > 0.0)) throw DomainError("student_t_cdf: nu must be > 0");
  if (std::isnan(x)) throw DomainError("student_t_cdf: x is NaN");
  if (std::isinf(x)) return x > 0.0 ? 1.0 : 0.0;
  return boost::math::cdf(boost::math::students_t(nu), x);
}

double chi_squared_cdf(double x, double k) {
  if (!(k > 0.0)) throw DomainError("chi_squared_cdf: k must be > 0");
  if (!(x >= 0.0)) throw DomainError("chi_squared_cdf: x must be >= 0");
  if (std::isinf(x)) return 1.0;
  return boost::math::cdf(boost::math::chi_squared(k), x);
}

double f_cdf(double x, double d1, double d2) {
  if (!(d1 > 0.0 && d2 > 0.0)) {
    throw DomainError("f_cdf: degrees of freedom must be > 0");
  }
  if (!(x >= 0.0)) throw DomainError("f_cdf: x must be >= 0");
  if (std::isinf(x)) return 1.0;
  return boost::math::cdf(boost::math::fisher_f(d1, d2), x);
}

double f_critical_95(double d1, double d2) {
  if (!(d1 > 0.0 && d2 > 0.0)) {
    throw DomainError("f_critical_95: degrees of freedom must be > 0");
  }
  return boost::math::quantile(boost::math::fisher_f(d1, d2), 0.95);
}

}  // namespace fru::stats
