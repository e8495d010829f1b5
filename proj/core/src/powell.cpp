// Copyright 2026 The qmelt Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmelt/powell.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qmelt/error.hpp"

namespace qmelt {

namespace {

constexpr double kGold = 1.618033988749895;
constexpr double kGoldenSection = 0.3819660112501051;
constexpr double kGrowLimit = 100.0;
constexpr double kTiny = 1e-20;
constexpr double kZeroEps = 1e-12;
constexpr std::size_t kBrentMaxIterations = 200;

struct Bracket {
    double a, b, c;
    double fa, fb, fc;
};

// Expands [0, 1] until f(b) <= min(f(a), f(c)).
Bracket bracket_minimum(const std::function<double(double)> &g, double g0) {
    Bracket br{0.0, 1.0, 0.0, g0, g(1.0), 0.0};
    if (br.fb > br.fa) {
        std::swap(br.a, br.b);
        std::swap(br.fa, br.fb);
    }
    br.c = br.b + kGold * (br.b - br.a);
    br.fc = g(br.c);
    while (br.fb > br.fc) {
        const double r = (br.b - br.a) * (br.fb - br.fc);
        const double q = (br.b - br.c) * (br.fb - br.fa);
        const double denom = 2.0 * std::copysign(std::max(std::abs(q - r), kTiny), q - r);
        double u = br.b - ((br.b - br.c) * q - (br.b - br.a) * r) / denom;
        const double ulim = br.b + kGrowLimit * (br.c - br.b);
        double fu = 0.0;
        if ((br.b - u) * (u - br.c) > 0.0) {
            fu = g(u);
            if (fu < br.fc) {
                return {br.b, u, br.c, br.fb, fu, br.fc};
            }
            if (fu > br.fb) {
                return {br.a, br.b, u, br.fa, br.fb, fu};
            }
            u = br.c + kGold * (br.c - br.b);
            fu = g(u);
        } else if ((br.c - u) * (u - ulim) > 0.0) {
            fu = g(u);
            if (fu < br.fc) {
                const double next = u + kGold * (u - br.c);
                br.b = br.c;
                br.c = u;
                u = next;
                br.fb = br.fc;
                br.fc = fu;
                fu = g(u);
            }
        } else if ((u - ulim) * (ulim - br.c) >= 0.0) {
            u = ulim;
            fu = g(u);
        } else {
            u = br.c + kGold * (br.c - br.b);
            fu = g(u);
        }
        br.a = br.b;
        br.b = br.c;
        br.c = u;
        br.fa = br.fb;
        br.fb = br.fc;
        br.fc = fu;
    }
    return br;
}

// Brent's method on a bracket; returns the best point seen.
LineMinimum brent(const std::function<double(double)> &g, const Bracket &br,
                  double tolerance) {
    double a = std::min(br.a, br.c);
    double b = std::max(br.a, br.c);
    double x = br.b;
    double w = x;
    double v = x;
    double fx = br.fb;
    double fw = fx;
    double fv = fx;
    double d = 0.0;
    double e = 0.0;
    for (std::size_t iter = 0; iter < kBrentMaxIterations; ++iter) {
        const double xm = 0.5 * (a + b);
        const double tol1 = tolerance * std::abs(x) + kZeroEps;
        const double tol2 = 2.0 * tol1;
        if (std::abs(x - xm) <= tol2 - 0.5 * (b - a)) {
            break;
        }
        bool golden = true;
        if (std::abs(e) > tol1) {
            // parabolic fit through x, w, v
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) {
                p = -p;
            }
            q = std::abs(q);
            const double etemp = e;
            e = d;
            if (std::abs(p) < std::abs(0.5 * q * etemp) && p > q * (a - x) &&
                p < q * (b - x)) {
                d = p / q;
                const double u = x + d;
                if (u - a < tol2 || b - u < tol2) {
                    d = std::copysign(tol1, xm - x);
                }
                golden = false;
            }
        }
        if (golden) {
            e = (x >= xm) ? a - x : b - x;
            d = kGoldenSection * e;
        }
        const double u = std::abs(d) >= tol1 ? x + d : x + std::copysign(tol1, d);
        const double fu = g(u);
        if (fu <= fx) {
            if (u >= x) {
                a = x;
            } else {
                b = x;
            }
            v = w;
            w = x;
            x = u;
            fv = fw;
            fw = fx;
            fx = fu;
        } else {
            if (u < x) {
                a = u;
            } else {
                b = u;
            }
            if (fu <= fw || w == x) {
                v = w;
                w = u;
                fv = fw;
                fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u;
                fv = fu;
            }
        }
    }
    return {x, fx};
}

} // namespace

void OptimizerSettings::validate() const {
    if (!(relative_tolerance > 0.0) || !(line_search_tolerance > 0.0)) {
        throw InvalidArgument("optimizer tolerances must be positive");
    }
}

LineMinimum line_minimize(const std::function<double(double)> &g, double g0,
                          double tolerance) {
    const Bracket br = bracket_minimum(g, g0);
    LineMinimum best = brent(g, br, tolerance);
    if (!(best.value <= g0)) {
        return {0.0, g0};
    }
    return best;
}

PowellResult powell_minimize(const Objective &f, std::span<const double> x0,
                             const OptimizerSettings &settings) {
    settings.validate();
    const std::size_t n = x0.size();
    PowellResult result;
    result.x.assign(x0.begin(), x0.end());

    auto evaluate = [&](std::span<const double> x) {
        const double value = f(x);
        ++result.evaluations;
        if (!std::isfinite(value)) {
            throw NumericalError("objective returned " + std::to_string(value) +
                                 " at evaluation " + std::to_string(result.evaluations) +
                                 " (sweep " + std::to_string(result.iterations) + ")");
        }
        return value;
    };

    double fret = evaluate(result.x);
    result.value = fret;
    result.trace.push_back(fret);
    if (n == 0) {
        result.converged = true;
        return result;
    }

    std::vector<std::vector<double>> directions(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        directions[i][i] = 1.0;
    }

    std::vector<double> trial(n);
    // Minimizes along `dir` from result.x; moves x and rescales dir by the step.
    auto minimize_along = [&](std::vector<double> &dir, double f_start) {
        auto along = [&](double alpha) {
            for (std::size_t j = 0; j < n; ++j) {
                trial[j] = result.x[j] + alpha * dir[j];
            }
            return evaluate(trial);
        };
        const LineMinimum lm = line_minimize(along, f_start, settings.line_search_tolerance);
        if (lm.step != 0.0) {
            for (std::size_t j = 0; j < n; ++j) {
                dir[j] *= lm.step;
                result.x[j] += dir[j];
            }
        }
        return lm.value;
    };

    std::vector<double> anchor = result.x;
    std::vector<double> extrapolated(n);
    std::vector<double> new_direction(n);
    while (result.iterations < settings.max_iterations) {
        const double f_sweep_start = fret;
        std::size_t biggest = 0;
        double biggest_drop = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double before = fret;
            fret = minimize_along(directions[i], fret);
            if (before - fret > biggest_drop) {
                biggest_drop = before - fret;
                biggest = i;
            }
        }
        ++result.iterations;

        if (2.0 * std::abs(f_sweep_start - fret) <=
            settings.relative_tolerance * (std::abs(f_sweep_start) + std::abs(fret)) + 1e-12) {
            result.converged = true;
            result.trace.push_back(fret);
            break;
        }

        for (std::size_t j = 0; j < n; ++j) {
            extrapolated[j] = 2.0 * result.x[j] - anchor[j];
            new_direction[j] = result.x[j] - anchor[j];
        }
        anchor = result.x;
        const double f_extrapolated = evaluate(extrapolated);
        if (f_extrapolated < f_sweep_start) {
            const double t =
                2.0 * (f_sweep_start - 2.0 * fret + f_extrapolated) *
                    std::pow(f_sweep_start - fret - biggest_drop, 2) -
                biggest_drop * std::pow(f_sweep_start - f_extrapolated, 2);
            if (t < 0.0) {
                fret = minimize_along(new_direction, fret);
                directions[biggest] = std::move(directions[n - 1]);
                directions[n - 1] = new_direction;
            }
        }
        result.trace.push_back(fret);
    }
    result.value = fret;
    return result;
}

} // namespace qmelt
