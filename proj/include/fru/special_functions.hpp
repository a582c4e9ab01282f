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

namespace fru::stats {

// Distribution CDFs used by the significance tests, evaluated through the
// regularized incomplete beta/gamma functions. Accuracy target is 1e-10
// relative on the probe grid the tests pin down.

// Student-t CDF with nu > 0 degrees of freedom. x = +/-inf maps to 1/0.
double student_t_cdf(double x, double nu);

// Chi-squared CDF with k > 0 degrees of freedom, x >= 0.
double chi_squared_cdf(double x, double k);

// F distribution CDF with (d1, d2) degrees of freedom, x >= 0.
double f_cdf(double x, double d1, double d2);

// Upper 5% critical value of the F distribution.
double f_critical_95(double d1, double d2);

}  // namespace fru::stats
