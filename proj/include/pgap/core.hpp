#pragma once

// Single-neuron perceptron: instant input-output behavior and the
// trained-memory predicate.
//
//   activation   a(X)     = W . X
//   bipolar fire f(X)     = +1 if W . X - theta > 0, else -1   (sign(0) := -1)
//   binary fire  f01(X)   = logical(f(X) + 1)
//
// A memory is trained on (C+, C-) when every positive fires +1 and every
// negative fires -1.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pgap/errors.hpp"

namespace pgap {

class FeatureVector {
public:
    FeatureVector() = default;

    explicit FeatureVector(std::vector<double> components)
        : components_(std::move(components))
    {
        if (components_.empty())
            throw ValidationError("feature vector must have at least one component");
        for (std::size_t i = 0; i < components_.size(); ++i) {
            if (!std::isfinite(components_[i]))
                throw ValidationError("feature vector component " + std::to_string(i) +
                                      " is not finite");
        }
    }

    FeatureVector(std::initializer_list<double> components)
        : FeatureVector(std::vector<double>(components)) {}

    std::size_t size() const noexcept { return components_.size(); }
    double operator[](std::size_t i) const noexcept { return components_[i]; }
    std::span<const double> values() const noexcept { return components_; }
    const std::vector<double>& raw() const noexcept { return components_; }

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
    friend auto operator<=>(const FeatureVector&, const FeatureVector&) = default;

private:
    std::vector<double> components_;
};

// Weights W plus threshold theta. Kept as a plain aggregate because the
// trainer mutates it in place every epoch.
struct SynapticMemory {
    std::vector<double> weights;
    double threshold = 0.0;

    std::size_t dimension() const noexcept { return weights.size(); }

    bool is_finite() const noexcept
    {
        return std::isfinite(threshold) &&
               std::all_of(weights.begin(), weights.end(),
                           [](double w) { return std::isfinite(w); });
    }

    friend bool operator==(const SynapticMemory&, const SynapticMemory&) = default;
};

enum class Bipolar : int { negative = -1, positive = 1 };

constexpr int to_int(Bipolar b) noexcept { return static_cast<int>(b); }

enum class ClassSide { positive, negative };

inline void check_dimensions(std::size_t example_dim, std::size_t memory_dim)
{
    if (example_dim != memory_dim)
        throw ValidationError("dimension mismatch: example has " + std::to_string(example_dim) +
                              " components, memory has " + std::to_string(memory_dim));
}

inline double dot(std::span<const double> a, std::span<const double> b)
{
    check_dimensions(a.size(), b.size());
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

inline double euclidean_norm(std::span<const double> v)
{
    double sum = 0.0;
    for (double x : v) sum += x * x;
    return std::sqrt(sum);
}

// W . X; the threshold plays no part.
inline double activation(const FeatureVector& x, const SynapticMemory& w)
{
    check_dimensions(x.size(), w.dimension());
    return std::inner_product(w.weights.begin(), w.weights.end(), x.values().begin(), 0.0);
}

inline Bipolar fire_bipolar(const FeatureVector& x, const SynapticMemory& w)
{
    return activation(x, w) - w.threshold > 0.0 ? Bipolar::positive : Bipolar::negative;
}

inline int fire_binary(const FeatureVector& x, const SynapticMemory& w)
{
    // logical(-1 + 1) = logical(0) = 0, logical(+1 + 1) = logical(2) = 1
    return (to_int(fire_bipolar(x, w)) + 1) != 0 ? 1 : 0;
}

// Positive class C+ and negative class C-. Duplicates inside a class are
// allowed; a vector present in both classes is rejected.
class LabeledDataset {
public:
    LabeledDataset(std::vector<FeatureVector> positives, std::vector<FeatureVector> negatives)
        : positives_(std::move(positives)), negatives_(std::move(negatives))
    {
        if (positives_.empty()) throw ValidationError("positive class is empty");
        if (negatives_.empty()) throw ValidationError("negative class is empty");

        const std::size_t dim = positives_.front().size();
        if (dim == 0) throw ValidationError("examples must have at least one component");
        auto check = [dim](const std::vector<FeatureVector>& cls, const char* name) {
            for (std::size_t i = 0; i < cls.size(); ++i) {
                if (cls[i].size() != dim)
                    throw ValidationError(std::string(name) + " example " + std::to_string(i) +
                                          " has dimension " + std::to_string(cls[i].size()) +
                                          ", expected " + std::to_string(dim));
            }
        };
        check(positives_, "positive");
        check(negatives_, "negative");

        const std::set<FeatureVector> pos_set(positives_.begin(), positives_.end());
        for (std::size_t i = 0; i < negatives_.size(); ++i) {
            if (pos_set.contains(negatives_[i]))
                throw ValidationError("negative example " + std::to_string(i) +
                                      " also appears in the positive class");
        }
    }

    std::size_t dimension() const noexcept { return positives_.front().size(); }
    const std::vector<FeatureVector>& positives() const noexcept { return positives_; }
    const std::vector<FeatureVector>& negatives() const noexcept { return negatives_; }

    const std::vector<FeatureVector>& side(ClassSide s) const noexcept
    {
        return s == ClassSide::positive ? positives_ : negatives_;
    }

private:
    std::vector<FeatureVector> positives_;
    std::vector<FeatureVector> negatives_;
};

inline std::vector<double> activations(const std::vector<FeatureVector>& cls,
                                       const SynapticMemory& w)
{
    std::vector<double> out;
    out.reserve(cls.size());
    for (const auto& x : cls) out.push_back(activation(x, w));
    return out;
}

inline bool is_trained(const SynapticMemory& w, const LabeledDataset& d)
{
    check_dimensions(d.dimension(), w.dimension());
    for (const auto& x : d.positives())
        if (fire_bipolar(x, w) != Bipolar::positive) return false;
    for (const auto& x : d.negatives())
        if (fire_bipolar(x, w) != Bipolar::negative) return false;
    return true;
}

} // namespace pgap
