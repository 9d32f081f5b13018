// SPDX-License-Identifier: Apache-2.0
//
// xlirs: near-field SNR analysis for extremely large intelligent reflecting surfaces
// Copyright (C) 2026 The xlirs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "xlirs/quadrature.hpp"
#include "xlirs/errors.hpp"
#include "xlirs/summation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

namespace xlirs
{

void QuadSpec::validate() const
{
    if (!(relative_tolerance > 0.0 && relative_tolerance <= 1e-3))
        throw ValidationError("quadrature tolerance must lie in (0, 1e-3]");
    if (max_refinement_levels < 1)
        throw ValidationError("quadrature needs at least one refinement level");
    if (base_points_per_panel < 2)
        throw ValidationError("quadrature panels need at least two points");
}

GaussRule gauss_legendre(int points)
{
    if (points < 1)
        throw ValidationError("Gauss-Legendre rule needs at least one point");
    const int n = points;
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i)
    {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter)
        {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j)
            {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // Recompute the derivative at the converged node for the weight.
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j)
        {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1)
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

namespace
{

constexpr std::size_t kMaxPanels = 1u << 20;
constexpr double kRoundoff = 64.0 * std::numeric_limits<double>::epsilon();
constexpr double kNoiseFloor = 50.0 * std::numeric_limits<double>::epsilon();

// Integral of f and of |f| over one region.
struct ValAbs
{
    double value = 0.0;
    double abs = 0.0;
};

struct Span1
{
    double a, b;
    int depth;
};

struct Rect
{
    double y0, y1, z0, z1;
    int depth;
};

template <class Region>
struct Node
{
    Region region;
    std::vector<Region> kids;
    std::vector<ValAbs> kid_vals;
    ValAbs fine;
    double err;
    std::uint64_t seq;
};

// Global adaptive driver: always refines the panel with the largest error estimate.
// `eval(region)` applies the base rule, `split(region)` returns the children.
template <class Region, class Eval, class Split, class Key>
QuadResult refine(const Region &root, Eval eval, Split split, Key order_key, const QuadSpec &spec,
                  const char *what)
{
    spec.validate();
    std::vector<Node<Region>> nodes;
    std::uint64_t seq = 0;

    auto make = [&](const Region &r, ValAbs coarse) {
        Node<Region> n{r, split(r), {}, {}, 0.0, seq++};
        for (const auto &k : n.kids)
        {
            const ValAbs v = eval(k);
            n.kid_vals.push_back(v);
            n.fine.value += v.value;
            n.fine.abs += v.abs;
        }
        // Rule difference, floored at the rounding noise of the panel sum.
        n.err = std::max(std::abs(coarse.value - n.fine.value), kNoiseFloor * n.fine.abs);
        return n;
    };

    // Max-heap on error; among equal errors the older panel goes first.
    auto worse = [&](std::size_t i, std::size_t j) {
        if (nodes[i].err != nodes[j].err)
            return nodes[i].err < nodes[j].err;
        return nodes[i].seq > nodes[j].seq;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> heap(worse);
    std::vector<std::size_t> live; // indices that are leaves (in heap or frozen)
    std::vector<bool> is_leaf;

    nodes.push_back(make(root, eval(root)));
    heap.push(0);
    is_leaf.push_back(true);

    double total_err = nodes[0].err;
    double total_abs = nodes[0].fine.abs;
    std::size_t since_resync = 0;

    auto resync = [&] {
        total_err = 0.0;
        total_abs = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (is_leaf[i])
            {
                total_err += nodes[i].err;
                total_abs += nodes[i].fine.abs;
            }
    };

    auto tolerance = [&] { return std::max(spec.relative_tolerance, kRoundoff) * total_abs; };

    bool converged = false;
    bool stuck = false;
    for (;;)
    {
        if (total_err <= tolerance())
        {
            resync();
            if (total_err <= tolerance())
            {
                converged = true;
                break;
            }
        }
        if (heap.empty())
        {
            stuck = true;
            break;
        }
        const std::size_t worst = heap.top();
        heap.pop();
        if (nodes[worst].region.depth + 1 > spec.max_refinement_levels)
        {
            // Frozen: stays a leaf, keeps contributing its error.
            continue;
        }
        if (nodes.size() + nodes[worst].kids.size() > kMaxPanels)
        {
            stuck = true;
            break;
        }
        is_leaf[worst] = false;
        total_err -= nodes[worst].err;
        total_abs -= nodes[worst].fine.abs;
        const auto kids = nodes[worst].kids;
        const auto kid_vals = nodes[worst].kid_vals;
        for (std::size_t k = 0; k < kids.size(); ++k)
        {
            nodes.push_back(make(kids[k], kid_vals[k]));
            is_leaf.push_back(true);
            total_err += nodes.back().err;
            total_abs += nodes.back().fine.abs;
            heap.push(nodes.size() - 1);
        }
        if (++since_resync == 512)
        {
            since_resync = 0;
            resync();
        }
    }

    std::vector<std::size_t> leaves;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (is_leaf[i])
            leaves.push_back(i);
    std::sort(leaves.begin(), leaves.end(),
              [&](std::size_t i, std::size_t j) { return order_key(nodes[i].region) < order_key(nodes[j].region); });

    CompensatedSum value, err;
    for (auto i : leaves)
    {
        value.add(nodes[i].fine.value);
        err.add(nodes[i].err);
    }
    QuadResult result{value.value(), err.value(), static_cast<int>(leaves.size())};
    if (!converged || stuck)
        throw ConvergenceError(std::string(what) + ": no convergence to relative tolerance " +
                                   std::to_string(spec.relative_tolerance) + " (estimate " +
                                   std::to_string(result.value) + ", error bound " +
                                   std::to_string(result.error_estimate) + ")",
                               result.value, result.error_estimate);
    return result;
}

ValAbs rule_1d(const std::function<ValAbs(double)> &f, const GaussRule &rule, double a, double b)
{
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    ValAbs acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    {
        const ValAbs v = f(mid + half * rule.nodes[i]);
        acc.value += rule.weights[i] * v.value;
        acc.abs += rule.weights[i] * v.abs;
    }
    acc.value *= half;
    acc.abs *= half;
    return acc;
}

QuadResult adaptive_1d(const std::function<ValAbs(double)> &f, double a, double b, const QuadSpec &spec,
                       const char *what)
{
    spec.validate();
    if (!(std::isfinite(a) && std::isfinite(b)) || a > b)
        throw ValidationError(std::string(what) + ": need finite a <= b");
    if (a == b)
        return {};
    const GaussRule rule = gauss_legendre(spec.base_points_per_panel);
    return refine(
        Span1{a, b, 0}, [&](const Span1 &s) { return rule_1d(f, rule, s.a, s.b); },
        [](const Span1 &s) {
            const double m = 0.5 * (s.a + s.b);
            return std::vector<Span1>{{s.a, m, s.depth + 1}, {m, s.b, s.depth + 1}};
        },
        [](const Span1 &s) { return s.a; }, spec, what);
}

} // namespace

QuadResult integrate_1d(const std::function<double(double)> &f, double a, double b, const QuadSpec &spec)
{
    return adaptive_1d(
        [&](double x) {
            const double v = f(x);
            return ValAbs{v, std::abs(v)};
        },
        a, b, spec, "integrate_1d");
}

QuadResult integrate_rect_2d(const std::function<double(double, double)> &f, Interval y, Interval z,
                             const QuadSpec &spec)
{
    spec.validate();
    if (!(std::isfinite(y.lo) && std::isfinite(y.hi) && std::isfinite(z.lo) && std::isfinite(z.hi)) ||
        y.lo > y.hi || z.lo > z.hi)
        throw ValidationError("integrate_rect_2d: need finite, ordered ranges");
    if (y.lo == y.hi || z.lo == z.hi)
        return {};
    const GaussRule rule = gauss_legendre(spec.base_points_per_panel);
    auto eval = [&](const Rect &r) {
        const double hy = 0.5 * (r.y1 - r.y0), my = 0.5 * (r.y0 + r.y1);
        const double hz = 0.5 * (r.z1 - r.z0), mz = 0.5 * (r.z0 + r.z1);
        ValAbs acc;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j)
        {
            const double zz = mz + hz * rule.nodes[j];
            double row = 0.0, row_abs = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            {
                const double v = f(my + hy * rule.nodes[i], zz);
                row += rule.weights[i] * v;
                row_abs += rule.weights[i] * std::abs(v);
            }
            acc.value += rule.weights[j] * row;
            acc.abs += rule.weights[j] * row_abs;
        }
        return ValAbs{acc.value * hy * hz, acc.abs * hy * hz};
    };
    auto split = [](const Rect &r) {
        const double ym = 0.5 * (r.y0 + r.y1), zm = 0.5 * (r.z0 + r.z1);
        const int d = r.depth + 1;
        return std::vector<Rect>{{r.y0, ym, r.z0, zm, d}, {ym, r.y1, r.z0, zm, d},
                                 {r.y0, ym, zm, r.z1, d}, {ym, r.y1, zm, r.z1, d}};
    };
    auto key = [](const Rect &r) { return std::pair{r.z0, r.y0}; };
    return refine(Rect{y.lo, y.hi, z.lo, z.hi, 0}, eval, split, key, spec, "integrate_rect_2d");
}

QuadResult integrate_disk_polar(const std::function<double(double, double)> &f, double radius, const QuadSpec &spec)
{
    spec.validate();
    if (!std::isfinite(radius) || radius < 0.0)
        throw ValidationError("integrate_disk_polar: radius must be finite and >= 0");
    if (radius == 0.0)
        return {};

    constexpr int kMinAngular = 16;
    constexpr int kMaxAngular = 1 << 16;
    const double two_pi = 2.0 * std::numbers::pi;
    double worst_angular = 0.0; // largest accepted |T_2n - T_n| / T_abs
    bool angular_failed = false;

    // Periodic trapezoid in zeta. Doubling reuses the previous points.
    auto angular = [&](double r) {
        int n = kMinAngular;
        double sum = 0.0, sum_abs = 0.0;
        for (int k = 0; k < n; ++k)
        {
            const double v = f(r, two_pi * k / n);
            sum += v;
            sum_abs += std::abs(v);
        }
        double t = two_pi * sum / n;
        for (;;)
        {
            for (int k = 0; k < n; ++k)
            {
                const double v = f(r, two_pi * (2 * k + 1) / (2.0 * n));
                sum += v;
                sum_abs += std::abs(v);
            }
            n *= 2;
            const double t2 = two_pi * sum / n, t2_abs = two_pi * sum_abs / n;
            const double diff = std::abs(t2 - t);
            if (diff <= 0.01 * spec.relative_tolerance * t2_abs || diff <= kRoundoff * t2_abs)
            {
                if (t2_abs > 0.0)
                    worst_angular = std::max(worst_angular, diff / t2_abs);
                return ValAbs{r * t2, r * t2_abs};
            }
            if (n >= kMaxAngular)
            {
                angular_failed = true;
                return ValAbs{r * t2, r * t2_abs};
            }
            t = t2;
        }
    };

    QuadResult result = adaptive_1d(angular, 0.0, radius, spec, "integrate_disk_polar");
    result.error_estimate += worst_angular * std::abs(result.value);
    if (angular_failed)
        throw ConvergenceError("integrate_disk_polar: angular trapezoid did not converge", result.value,
                               result.error_estimate);
    return result;
}

} // namespace xlirs
