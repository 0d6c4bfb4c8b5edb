// Copyright 2026 The tfgkp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Error function and complement in double precision.
//
// erf uses the everywhere-positive series
//     erf(x) = 2/sqrt(pi) * exp(-x^2) * sum_n (2x^2)^n x / (1*3*...*(2n+1))
// for |x| < 3, which has no cancellation. erfc uses the Laplace continued
// fraction (modified Lentz) for x >= 2 so that tail values keep full relative
// precision. Absolute error is below 1e-15 on the real line.

#include <cmath>
#include <limits>
#include <numbers>

namespace tfgkp::special {

namespace detail {

inline double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 200; ++n) {
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if (term < sum * 1e-17) {
            break;
        }
    }
    return 2.0 * std::numbers::inv_sqrtpi * std::exp(-x2) * sum;
}

// erfc(x) for x >= 2:
//   erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
inline double erfc_continued_fraction(double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int n = 1; n < 500; ++n) {
        const double a = 0.5 * n;
        d = x + a * d;
        if (std::abs(d) < tiny) d = tiny;
        c = x + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            break;
        }
    }
    return std::exp(-x * x) * std::numbers::inv_sqrtpi / f;
}

}  // namespace detail

inline double erfc(double x);

inline double erf(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) return -erf(-x);
    if (x < 3.0) return detail::erf_series(x);
    return 1.0 - erfc(x);
}

inline double erfc(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) return 2.0 - erfc(-x);
    if (x < 2.0) return 1.0 - detail::erf_series(x);
    if (x > 27.3) return 0.0;  // below the smallest subnormal
    return detail::erfc_continued_fraction(x);
}

}  // namespace tfgkp::special
