#pragma once

// Test-only helpers: random task generators and brute-force oracles that
// deliberately avoid the library's own code paths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "pgap/core.hpp"

namespace pgap::fixtures {

using Points = std::vector<std::vector<double>>;

// Linearly separable task: points uniform in a box, labelled by a random
// hyperplane, with a margin band around it left empty.
struct SeparableSpec {
    std::size_t dim = 2;
    std::size_t per_class = 10;
    double box = 10.0;
    double margin = 1.0;
};

inline LabeledDataset random_separable(std::mt19937_64& rng, const SeparableSpec& spec)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> coord(-spec.box, spec.box);
    std::vector<double> u(spec.dim);
    double norm = 0.0;
    for (auto& x : u) {
        x = normal(rng);
        norm += x * x;
    }
    norm = std::sqrt(norm);
    for (auto& x : u) x /= norm;
    const double offset = std::uniform_real_distribution<double>(-spec.box / 4, spec.box / 4)(rng);

    std::vector<FeatureVector> pos, neg;
    while (pos.size() < spec.per_class || neg.size() < spec.per_class) {
        std::vector<double> p(spec.dim);
        for (auto& x : p) x = coord(rng);
        const double s = std::inner_product(u.begin(), u.end(), p.begin(), 0.0) - offset;
        if (s >= spec.margin / 2 && pos.size() < spec.per_class)
            pos.emplace_back(p);
        else if (s <= -spec.margin / 2 && neg.size() < spec.per_class)
            neg.emplace_back(p);
    }
    return LabeledDataset(std::move(pos), std::move(neg));
}

inline LabeledDataset random_any(std::mt19937_64& rng, std::size_t dim, std::size_t npos, std::size_t nneg)
{
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    auto make = [&](std::size_t n) {
        std::vector<FeatureVector> out;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> p(dim);
            for (auto& x : p) x = coord(rng);
            out.emplace_back(p);
        }
        return out;
    };
    auto pos = make(npos);
    auto neg = make(nneg);
    return LabeledDataset(std::move(pos), std::move(neg));
}

inline SynapticMemory random_memory(std::mt19937_64& rng, std::size_t dim)
{
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    SynapticMemory m;
    m.weights.resize(dim);
    for (auto& w : m.weights) w = u(rng);
    m.threshold = u(rng);
    return m;
}

// ---- oracles ------------------------------------------------------------

inline double oracle_dot(const std::vector<double>& a, const std::vector<double>& b)
{
    long double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long double>(a[i]) * b[i];
    return static_cast<double>(s);
}

inline double oracle_sq_dist(const std::vector<double>& a, const std::vector<double>& b)
{
    long double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const long double d = static_cast<long double>(a[i]) - b[i];
        s += d * d;
    }
    return static_cast<double>(s);
}

// All cross-class distances, enumerated in C- major order (the library
// scans C+ major).
inline std::vector<double> oracle_cross_distances(const LabeledDataset& d)
{
    std::vector<double> out;
    for (const auto& y : d.negatives())
        for (const auto& x : d.positives()) out.push_back(std::sqrt(oracle_sq_dist(x.raw(), y.raw())));
    return out;
}

inline std::vector<double> oracle_within_distances(const std::vector<FeatureVector>& cls)
{
    std::vector<double> out;
    for (std::size_t j = cls.size(); j-- > 0;)
        for (std::size_t i = 0; i < j; ++i) out.push_back(std::sqrt(oracle_sq_dist(cls[i].raw(), cls[j].raw())));
    if (out.empty()) out.push_back(0.0);
    return out;
}

// Is there any threshold separating the two activation sets under the
// strict-fire rule? Sweeps every critical value (each activation, and
// midpoints) rather than reasoning about min/max.
inline bool oracle_some_threshold_separates(const std::vector<double>& pos_act,
                                            const std::vector<double>& neg_act)
{
    std::vector<double> candidates;
    for (double a : pos_act) candidates.push_back(a);
    for (double a : neg_act) candidates.push_back(a);
    const std::size_t base = candidates.size();
    for (std::size_t i = 0; i < base; ++i)
        for (std::size_t j = 0; j < base; ++j) candidates.push_back((candidates[i] + candidates[j]) / 2);
    candidates.push_back(-std::numeric_limits<double>::max());
    candidates.push_back(std::numeric_limits<double>::max());
    for (double t : candidates) {
        bool ok = true;
        for (double a : pos_act) ok = ok && (a - t > 0);
        for (double a : neg_act) ok = ok && !(a - t > 0);
        if (ok) return true;
    }
    return false;
}

// Stable sort of indices; the first two entries are the selection.
inline std::pair<std::size_t, std::size_t> oracle_first_two(const std::vector<double>& v, bool ascending)
{
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return ascending ? v[a] < v[b] : v[a] > v[b];
    });
    return {idx[0], idx.size() > 1 ? idx[1] : idx[0]};
}

inline bool rel_close(double a, double b, double rel)
{
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) <= rel * scale;
}

} // namespace pgap::fixtures
