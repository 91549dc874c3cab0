#pragma once

// Reference implementations kept deliberately naive: 1-based indexing taken
// straight from the model definition, long double accumulation, no reuse of
// library code. Used as ground truth by the unit and acceptance tests.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

struct P3 {
    long double x = 0, y = 0, z = 0;
};

inline long double dist(const P3& a, const P3& b)
{
    const long double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// angles: theta_1..theta_{L-2} then beta_1..beta_{L-3}, radians.
inline std::vector<P3> positions(std::size_t L, const std::vector<double>& angles)
{
    auto theta = [&](std::size_t k) { return static_cast<long double>(angles[k - 1]); };
    auto beta = [&](std::size_t k) { return static_cast<long double>(angles[(L - 2) + k - 1]); };
    std::vector<P3> p(L + 1);
    p[1] = {0, 0, 0};
    p[2] = {0, 1, 0};
    if (L >= 3) {
        p[3] = {std::cos(theta(1)), 1 + std::sin(theta(1)), 0};
    }
    for (std::size_t i = 4; i <= L; ++i) {
        p[i].x = p[i - 1].x + std::cos(theta(i - 2)) * std::cos(beta(i - 3));
        p[i].y = p[i - 1].y + std::sin(theta(i - 2)) * std::cos(beta(i - 3));
        p[i].z = p[i - 1].z + std::sin(beta(i - 3));
    }
    return p;
}

inline long double coefficient(char a, char b)
{
    if (a == 'A' && b == 'A') {
        return 1.0L;
    }
    if (a == 'B' && b == 'B') {
        return 0.5L;
    }
    return -0.5L;
}

struct Energy {
    long double e_bb = 0, e_lj = 0, e_o = 0, e_hc = 0;
};

inline Energy energy(const std::string& s, const std::vector<double>& angles)
{
    const std::size_t L = s.size();
    const auto p = positions(L, angles);
    Energy e;
    for (std::size_t i = 1; i <= L - 2; ++i) {
        e.e_bb += (1 - std::cos(static_cast<long double>(angles[i - 1]))) / 4;
    }
    for (std::size_t i = 1; i <= L - 2; ++i) {
        for (std::size_t j = i + 2; j <= L; ++j) {
            const long double d = dist(p[i], p[j]);
            e.e_lj += 4 * (std::pow(d, -12.0L) - coefficient(s[i - 1], s[j - 1]) * std::pow(d, -6.0L));
        }
    }
    e.e_o = e.e_bb + e.e_lj;
    P3 c;
    std::size_t n_a = 0;
    for (std::size_t i = 1; i <= L; ++i) {
        if (s[i - 1] == 'A') {
            c.x += p[i].x;
            c.y += p[i].y;
            c.z += p[i].z;
            ++n_a;
        }
    }
    if (n_a > 0) {
        c.x /= n_a;
        c.y /= n_a;
        c.z /= n_a;
        for (std::size_t i = 1; i <= L; ++i) {
            if (s[i - 1] == 'A') {
                e.e_hc += dist(p[i], c);
            }
        }
    }
    return e;
}

// Two-sided exact p of the rank-sum statistic by listing every way of
// choosing which pooled observations carry the first label. Mid-ranks for
// ties; p = P(|W - E W| >= |w - E W|).
inline double exact_mann_whitney_p(const std::vector<double>& a, const std::vector<double>& b)
{
    std::vector<double> pooled(a);
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::size_t n = pooled.size();
    std::vector<long double> rank(n);
    for (std::size_t i = 0; i < n; ++i) {
        long double less = 0, equal = 0;
        for (std::size_t j = 0; j < n; ++j) {
            less += pooled[j] < pooled[i];
            equal += pooled[j] == pooled[i];
        }
        rank[i] = less + (equal + 1) / 2;
    }
    const std::size_t n1 = a.size();
    long double observed = 0;
    for (std::size_t i = 0; i < n1; ++i) {
        observed += rank[i];
    }
    const long double mean = static_cast<long double>(n1) * (n + 1) / 2;
    const long double dev = std::fabs(observed - mean);
    std::size_t hits = 0, total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != n1) {
            continue;
        }
        long double w = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                w += rank[i];
            }
        }
        ++total;
        if (std::fabs(w - mean) >= dev - 1e-9L) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(total);
}

} // namespace oracle
