#pragma once

// Fuzzy scheduled training rule.
//
// Every epoch n the selection procedure picks the two positives with the
// smallest activations and the two negatives with the largest. Then, if
// some positive does not fire:
//
//     W <- W + (X1+min + X2+min) * R(n),   t <- t - sqrt(|W|)
//
// and if some negative fires:
//
//     W <- W - (X1-max + X2-max) * R(n),   t <- t + sqrt(|W|)
//
// with R(n) = n log2(n) / 2^n. Both firing conditions are evaluated on the
// memory the epoch starts with; the branches are applied positive first,
// and each reads the memory left by the previous one.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pgap/core.hpp"
#include "pgap/errors.hpp"
#include "pgap/format.hpp"
#include "pgap/random.hpp"

namespace pgap {

inline double rate(std::int64_t n)
{
    if (n < 1) throw ValidationError("rate schedule is defined for n >= 1, got " + std::to_string(n));
    const double x = static_cast<double>(n);
    return std::ldexp(x * std::log2(x), -static_cast<int>(std::min<std::int64_t>(n, 4096)));
}

struct TrainingConfig {
    std::int64_t max_epochs = 1000;
    std::uint64_t seed = 42;
    double init_low = -1.0;
    double init_high = 1.0;
    double initial_threshold = 0.0;
    std::int64_t start_index = 2;

    void validate() const
    {
        if (max_epochs < 1) throw ValidationError("max_epochs must be >= 1");
        if (!(init_low < init_high)) throw ValidationError("init_low must be < init_high");
        if (!std::isfinite(init_low) || !std::isfinite(init_high))
            throw ValidationError("initialization bounds must be finite");
        if (!std::isfinite(initial_threshold))
            throw ValidationError("initial_threshold must be finite");
        if (start_index < 1) throw ValidationError("start_index must be >= 1");
    }
};

inline SynapticMemory init_memory(std::size_t dim, const TrainingConfig& config)
{
    config.validate();
    if (dim < 1) throw ValidationError("memory dimension must be >= 1");
    Engine rng(config.seed);
    SynapticMemory m;
    m.weights.resize(dim);
    for (auto& w : m.weights) w = uniform_real(rng, config.init_low, config.init_high);
    m.threshold = config.initial_threshold;
    return m;
}

struct ExtremalSelection {
    std::size_t pos_min1 = 0;
    std::size_t pos_min2 = 0;
    std::size_t neg_max1 = 0;
    std::size_t neg_max2 = 0;

    friend bool operator==(const ExtremalSelection&, const ExtremalSelection&) = default;
};

namespace detail {

// Indices of the two best elements under `before`, earliest index winning
// ties. A single-element range yields index 0 twice.
template <class Before>
std::pair<std::size_t, std::size_t> first_two(const std::vector<double>& values, Before before)
{
    if (values.empty()) throw ValidationError("cannot select from an empty class");
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (before(values[i], values[best])) best = i;
    if (values.size() == 1) return {0, 0};
    std::size_t second = best == 0 ? 1 : 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i == best) continue;
        if (before(values[i], values[second])) second = i;
    }
    return {best, second};
}

inline std::pair<std::size_t, std::size_t> two_smallest(const std::vector<double>& v)
{
    return first_two(v, [](double a, double b) { return a < b; });
}

inline std::pair<std::size_t, std::size_t> two_largest(const std::vector<double>& v)
{
    return first_two(v, [](double a, double b) { return a > b; });
}

} // namespace detail

inline ExtremalSelection select_extremes(const LabeledDataset& d, const SynapticMemory& w)
{
    check_dimensions(d.dimension(), w.dimension());
    const auto [p1, p2] = detail::two_smallest(activations(d.positives(), w));
    const auto [n1, n2] = detail::two_largest(activations(d.negatives(), w));
    return {p1, p2, n1, n2};
}

struct BranchFiring {
    bool positive = false; // some positive example fails to fire
    bool negative = false; // some negative example fires
};

inline BranchFiring branch_conditions(const LabeledDataset& d, const SynapticMemory& w)
{
    check_dimensions(d.dimension(), w.dimension());
    BranchFiring f;
    f.positive = std::any_of(d.positives().begin(), d.positives().end(), [&](const auto& x) {
        return fire_bipolar(x, w) == Bipolar::negative;
    });
    f.negative = std::any_of(d.negatives().begin(), d.negatives().end(), [&](const auto& x) {
        return fire_bipolar(x, w) == Bipolar::positive;
    });
    return f;
}

// Applies the requested branches unconditionally. update_step() decides
// which branches fire; this is the arithmetic underneath it.
inline SynapticMemory apply_update(SynapticMemory w, const ExtremalSelection& sel,
                                   const LabeledDataset& d, std::int64_t n, BranchFiring fire)
{
    check_dimensions(d.dimension(), w.dimension());
    const double r = rate(n);
    const auto& pos = d.positives();
    const auto& neg = d.negatives();
    if (sel.pos_min1 >= pos.size() || sel.pos_min2 >= pos.size() ||
        sel.neg_max1 >= neg.size() || sel.neg_max2 >= neg.size())
        throw ValidationError("extremal selection index out of range");

    if (fire.positive) {
        const double shift = std::sqrt(euclidean_norm(w.weights));
        const auto& a = pos[sel.pos_min1];
        const auto& b = pos[sel.pos_min2];
        for (std::size_t i = 0; i < w.weights.size(); ++i) w.weights[i] += (a[i] + b[i]) * r;
        w.threshold -= shift;
    }
    if (fire.negative) {
        const double shift = std::sqrt(euclidean_norm(w.weights));
        const auto& a = neg[sel.neg_max1];
        const auto& b = neg[sel.neg_max2];
        for (std::size_t i = 0; i < w.weights.size(); ++i) w.weights[i] -= (a[i] + b[i]) * r;
        w.threshold += shift;
    }
    return w;
}

inline SynapticMemory update_step(const SynapticMemory& w, const ExtremalSelection& sel,
                                  const LabeledDataset& d, std::int64_t n)
{
    return apply_update(w, sel, d, n, branch_conditions(d, w));
}

struct EpochSnapshot {
    std::int64_t epoch = 0;
    std::vector<double> weights;
    double threshold = 0.0;
    double min_pos_activation = 0.0;
    double max_neg_activation = 0.0;
    bool applied_positive_update = false;
    bool applied_negative_update = false;

    friend bool operator==(const EpochSnapshot&, const EpochSnapshot&) = default;
};

enum class TrainingStatus { converged, epoch_limit_reached };

struct TrainingTrace {
    std::vector<EpochSnapshot> snapshots;
    TrainingStatus status = TrainingStatus::epoch_limit_reached;
    std::int64_t converged_epoch = 0; // meaningful only when status == converged

    bool converged() const noexcept { return status == TrainingStatus::converged; }

    friend bool operator==(const TrainingTrace&, const TrainingTrace&) = default;
};

struct TrainingResult {
    SynapticMemory memory;
    TrainingTrace trace;
};

inline TrainingResult train(const LabeledDataset& d, const TrainingConfig& config)
{
    config.validate();
    TrainingResult result;
    SynapticMemory& w = result.memory;
    w = init_memory(d.dimension(), config);
    auto& trace = result.trace;
    trace.snapshots.reserve(static_cast<std::size_t>(std::min<std::int64_t>(config.max_epochs, 4096)));

    for (std::int64_t k = 0; k < config.max_epochs; ++k) {
        const std::int64_t n = config.start_index + k;
        const auto pos_act = activations(d.positives(), w);
        const auto neg_act = activations(d.negatives(), w);

        EpochSnapshot snap;
        snap.epoch = n;
        snap.weights = w.weights;
        snap.threshold = w.threshold;
        snap.min_pos_activation = *std::min_element(pos_act.begin(), pos_act.end());
        snap.max_neg_activation = *std::max_element(neg_act.begin(), neg_act.end());

        const BranchFiring fire{snap.min_pos_activation - w.threshold <= 0.0,
                                snap.max_neg_activation - w.threshold > 0.0};
        snap.applied_positive_update = fire.positive;
        snap.applied_negative_update = fire.negative;
        trace.snapshots.push_back(snap);

        if (!fire.positive && !fire.negative) {
            trace.status = TrainingStatus::converged;
            trace.converged_epoch = n;
            return result;
        }

        const auto [p1, p2] = detail::two_smallest(pos_act);
        const auto [n1, n2] = detail::two_largest(neg_act);
        w = apply_update(std::move(w), {p1, p2, n1, n2}, d, n, fire);
        if (!w.is_finite())
            throw DivergenceError("memory became non-finite at epoch " + std::to_string(n));
    }
    trace.status = TrainingStatus::epoch_limit_reached;
    return result;
}

inline void write_trace_csv(std::ostream& out, const TrainingTrace& trace, std::size_t dim)
{
    out << "epoch,theta,min_pos_act,max_neg_act,pos_update,neg_update";
    for (std::size_t i = 0; i < dim; ++i) out << ",w_" << i;
    out << '\n';
    for (const auto& s : trace.snapshots) {
        out << s.epoch << ',' << format_double(s.threshold) << ','
            << format_double(s.min_pos_activation) << ',' << format_double(s.max_neg_activation)
            << ',' << (s.applied_positive_update ? 1 : 0) << ','
            << (s.applied_negative_update ? 1 : 0);
        for (double v : s.weights) out << ',' << format_double(v);
        out << '\n';
    }
}

} // namespace pgap
