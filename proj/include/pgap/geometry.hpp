#pragma once

// Perceived versus actual geometry of a two-class task.
//
// Perceived quantities come from projecting the examples on the memory's
// weight direction: the activation gap D = min W.X+ - max W.X-, the slab
// width d* = D / |W| and the within-class projection spreads. Actual
// quantities come from exhaustive Euclidean scans: the set distance
// d = min |X - Y| over X in C+, Y in C-, and the class diameters.

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include "pgap/core.hpp"
#include "pgap/errors.hpp"

namespace pgap {

enum class Verdict { objective, fuzzy_undervaluated, fuzzy_overvaluated };

inline std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::objective: return "Objective";
    case Verdict::fuzzy_undervaluated: return "FuzzyUndervaluated";
    case Verdict::fuzzy_overvaluated: return "FuzzyOvervaluated";
    }
    return "?";
}

inline double euclidean_distance(const FeatureVector& a, const FeatureVector& b)
{
    check_dimensions(a.size(), b.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

// A distance together with the pair of indices realizing it. For the
// cross-class distance `first` indexes C+ and `second` indexes C-; for a
// diameter both index the same class.
struct WitnessedDistance {
    double distance = 0.0;
    std::size_t first = 0;
    std::size_t second = 0;
};

struct Separation {
    double activation_gap = 0.0; // D
    double perceived = 0.0;      // d* = D / |W|
};

namespace detail {

inline double nonzero_norm(const SynapticMemory& w)
{
    const double norm = euclidean_norm(w.weights);
    if (!(norm > 0.0)) throw ValidationError("weight vector is zero: direction undefined");
    return norm;
}

struct Extremes {
    double min = 0.0;
    double max = 0.0;
    std::size_t argmin = 0;
    std::size_t argmax = 0;
};

inline Extremes activation_extremes(const std::vector<FeatureVector>& cls, const SynapticMemory& w)
{
    if (cls.empty()) throw ValidationError("class is empty");
    Extremes e;
    e.min = e.max = activation(cls[0], w);
    for (std::size_t i = 1; i < cls.size(); ++i) {
        const double a = activation(cls[i], w);
        if (a < e.min) { e.min = a; e.argmin = i; }
        if (a > e.max) { e.max = a; e.argmax = i; }
    }
    return e;
}

} // namespace detail

inline Separation perceived_separation(const LabeledDataset& d, const SynapticMemory& w)
{
    check_dimensions(d.dimension(), w.dimension());
    const double norm = detail::nonzero_norm(w);
    const auto pos = detail::activation_extremes(d.positives(), w);
    const auto neg = detail::activation_extremes(d.negatives(), w);
    const double gap = pos.min - neg.max;
    return {gap, gap / norm};
}

inline WitnessedDistance actual_distance(const LabeledDataset& d)
{
    const auto& pos = d.positives();
    const auto& neg = d.negatives();
    WitnessedDistance best{euclidean_distance(pos[0], neg[0]), 0, 0};
    for (std::size_t i = 0; i < pos.size(); ++i) {
        for (std::size_t j = 0; j < neg.size(); ++j) {
            const double dist = euclidean_distance(pos[i], neg[j]);
            if (dist < best.distance) best = {dist, i, j};
        }
    }
    return best;
}

// Within-class projection spread along W, in feature-space length units.
inline double perceived_diameter(ClassSide side, const LabeledDataset& d, const SynapticMemory& w)
{
    check_dimensions(d.dimension(), w.dimension());
    const double norm = detail::nonzero_norm(w);
    const auto e = detail::activation_extremes(d.side(side), w);
    return (e.max - e.min) / norm;
}

// Cross-class variant, transcribed literally:
//   C+ : |W.X+max - W.X-min| / |W|
//   C- : |W.X-max - W.X+min| / |W|
// Unlike perceived_diameter() this is not bounded by the actual diameter.
inline double perceived_diameter_cross_class(ClassSide side, const LabeledDataset& d,
                                             const SynapticMemory& w)
{
    check_dimensions(d.dimension(), w.dimension());
    const double norm = detail::nonzero_norm(w);
    const auto pos = detail::activation_extremes(d.positives(), w);
    const auto neg = detail::activation_extremes(d.negatives(), w);
    const double span = side == ClassSide::positive ? pos.max - neg.min : neg.max - pos.min;
    return std::abs(span) / norm;
}

// Farthest pair within a class; a singleton has diameter 0 with witness (0, 0).
inline WitnessedDistance actual_diameter(ClassSide side, const LabeledDataset& d)
{
    const auto& cls = d.side(side);
    WitnessedDistance best{0.0, 0, 0};
    for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
            const double dist = euclidean_distance(cls[i], cls[j]);
            if (dist > best.distance) best = {dist, i, j};
        }
    }
    return best;
}

inline constexpr double default_ratio_tolerance = 1e-9;

inline Verdict classify_ratio(double d_star, double d_actual, double tol = default_ratio_tolerance)
{
    if (!(d_actual > 0.0)) throw ValidationError("actual distance must be positive");
    if (!(tol >= 0.0) || !std::isfinite(tol)) throw ValidationError("tolerance must be finite and >= 0");
    const double ratio = d_star / d_actual;
    if (std::abs(ratio - 1.0) <= tol) return Verdict::objective;
    return ratio < 1.0 ? Verdict::fuzzy_undervaluated : Verdict::fuzzy_overvaluated;
}

struct GeometryReport {
    bool trained = false;
    double activation_gap = 0.0; // D
    double d_star = 0.0;
    double d_actual = 0.0;
    double ratio = 0.0;
    Verdict verdict = Verdict::objective;
    double perceived_diam_pos = 0.0;
    double perceived_diam_neg = 0.0;
    double cross_class_diam_pos = 0.0;
    double cross_class_diam_neg = 0.0;
    double actual_diam_pos = 0.0;
    double actual_diam_neg = 0.0;

    // witnesses, indices into the corresponding class
    std::size_t pos_min_activation = 0;
    std::size_t pos_max_activation = 0;
    std::size_t neg_min_activation = 0;
    std::size_t neg_max_activation = 0;
    std::size_t closest_pos = 0;
    std::size_t closest_neg = 0;
    std::size_t farthest_pos_a = 0;
    std::size_t farthest_pos_b = 0;
    std::size_t farthest_neg_a = 0;
    std::size_t farthest_neg_b = 0;

    friend bool operator==(const GeometryReport&, const GeometryReport&) = default;
};

inline GeometryReport geometry_report(const LabeledDataset& d, const SynapticMemory& w,
                                      double tol = default_ratio_tolerance)
{
    check_dimensions(d.dimension(), w.dimension());
    GeometryReport r;
    r.trained = is_trained(w, d);

    const auto sep = perceived_separation(d, w);
    r.activation_gap = sep.activation_gap;
    r.d_star = sep.perceived;

    const auto dist = actual_distance(d);
    r.d_actual = dist.distance;
    r.closest_pos = dist.first;
    r.closest_neg = dist.second;
    r.ratio = r.d_star / r.d_actual;
    r.verdict = classify_ratio(r.d_star, r.d_actual, tol);

    r.perceived_diam_pos = perceived_diameter(ClassSide::positive, d, w);
    r.perceived_diam_neg = perceived_diameter(ClassSide::negative, d, w);
    r.cross_class_diam_pos = perceived_diameter_cross_class(ClassSide::positive, d, w);
    r.cross_class_diam_neg = perceived_diameter_cross_class(ClassSide::negative, d, w);

    const auto dpos = actual_diameter(ClassSide::positive, d);
    const auto dneg = actual_diameter(ClassSide::negative, d);
    r.actual_diam_pos = dpos.distance;
    r.farthest_pos_a = dpos.first;
    r.farthest_pos_b = dpos.second;
    r.actual_diam_neg = dneg.distance;
    r.farthest_neg_a = dneg.first;
    r.farthest_neg_b = dneg.second;

    const auto pe = detail::activation_extremes(d.positives(), w);
    const auto ne = detail::activation_extremes(d.negatives(), w);
    r.pos_min_activation = pe.argmin;
    r.pos_max_activation = pe.argmax;
    r.neg_min_activation = ne.argmin;
    r.neg_max_activation = ne.argmax;
    return r;
}

} // namespace pgap
