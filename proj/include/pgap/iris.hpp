#pragma once

// Binary iris codes compared by Hamming similarity, with synthetic
// genuine/imposter score partitions and their separation measures.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pgap/errors.hpp"
#include "pgap/format.hpp"
#include "pgap/random.hpp"

namespace pgap {

class IrisCode {
public:
    IrisCode() = default;

    explicit IrisCode(std::size_t length) : length_(length), words_((length + 63) / 64, 0)
    {
        if (length == 0) throw ValidationError("iris code length must be >= 1");
    }

    // From a string of '0'/'1' characters, bit 0 first.
    static IrisCode from_string(std::string_view bits)
    {
        IrisCode code(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] != '0' && bits[i] != '1')
                throw ValidationError("iris code text must contain only '0' and '1'");
            code.set(i, bits[i] == '1');
        }
        return code;
    }

    static IrisCode random(std::size_t length, Engine& rng)
    {
        IrisCode code(length);
        for (auto& w : code.words_) w = rng();
        code.mask_tail();
        return code;
    }

    std::size_t size() const noexcept { return length_; }

    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

    void set(std::size_t i, bool value)
    {
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (value)
            words_[i / 64] |= bit;
        else
            words_[i / 64] &= ~bit;
    }

    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    IrisCode complement() const
    {
        IrisCode out = *this;
        for (auto& w : out.words_) w = ~w;
        out.mask_tail();
        return out;
    }

    std::size_t count_agreements(const IrisCode& other) const
    {
        if (other.length_ != length_)
            throw ValidationError("iris code length mismatch: " + std::to_string(length_) + " vs " +
                                  std::to_string(other.length_));
        std::size_t disagree = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            disagree += static_cast<std::size_t>(std::popcount(words_[k] ^ other.words_[k]));
        return length_ - disagree;
    }

    friend bool operator==(const IrisCode&, const IrisCode&) = default;

private:
    // unused high bits of the last word stay zero so equality and popcount see only real bits
    void mask_tail()
    {
        const std::size_t used = length_ % 64;
        if (used != 0) words_.back() &= (std::uint64_t{1} << used) - 1;
    }

    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

inline double hamming_similarity(const IrisCode& a, const IrisCode& b)
{
    return static_cast<double>(a.count_agreements(b)) / static_cast<double>(a.size());
}

inline double hamming_distance(const IrisCode& a, const IrisCode& b)
{
    return 1.0 - hamming_similarity(a, b);
}

struct ScorePartition {
    std::vector<double> genuine_scores;
    std::vector<double> imposter_scores;

    friend bool operator==(const ScorePartition&, const ScorePartition&) = default;
};

struct IrisSynthesisParams {
    std::size_t code_length = 2048;
    std::size_t genuine_pairs = 1000;
    std::size_t imposter_pairs = 1000;
    double genuine_flip_rate = 0.1;
    std::uint64_t seed = 42;

    void validate() const
    {
        if (code_length < 1) throw ValidationError("code length must be >= 1");
        if (!(genuine_flip_rate >= 0.0 && genuine_flip_rate < 0.5))
            throw ValidationError("genuine flip rate must lie in [0, 0.5)");
    }
};

// Genuine pairs: a random code against a copy with each bit flipped
// independently at the flip rate. Imposter pairs: two independent codes.
inline ScorePartition synthesize_scores(const IrisSynthesisParams& p)
{
    p.validate();
    Engine rng(p.seed);
    ScorePartition out;
    out.genuine_scores.reserve(p.genuine_pairs);
    out.imposter_scores.reserve(p.imposter_pairs);
    for (std::size_t k = 0; k < p.genuine_pairs; ++k) {
        const auto enrolled = IrisCode::random(p.code_length, rng);
        auto probe = enrolled;
        for (std::size_t i = 0; i < p.code_length; ++i)
            if (bernoulli(rng, p.genuine_flip_rate)) probe.flip(i);
        out.genuine_scores.push_back(hamming_similarity(enrolled, probe));
    }
    for (std::size_t k = 0; k < p.imposter_pairs; ++k) {
        const auto a = IrisCode::random(p.code_length, rng);
        const auto b = IrisCode::random(p.code_length, rng);
        out.imposter_scores.push_back(hamming_similarity(a, b));
    }
    return out;
}

// min(genuine) - max(imposter); positive means the classes are separated.
inline double safety_band(const ScorePartition& p)
{
    if (p.genuine_scores.empty()) throw ValidationError("no genuine scores");
    if (p.imposter_scores.empty()) throw ValidationError("no imposter scores");
    return *std::min_element(p.genuine_scores.begin(), p.genuine_scores.end()) -
           *std::max_element(p.imposter_scores.begin(), p.imposter_scores.end());
}

struct CrispnessReport {
    double fraction_interior = 0.0; // share of scores strictly inside (0, 1)
    std::vector<std::size_t> histogram;
};

inline constexpr std::size_t default_histogram_bins = 20;

// Equal-width bins over [0, 1]; the last bin includes 1.
inline CrispnessReport crispness_report(const ScorePartition& p,
                                        std::size_t bins = default_histogram_bins)
{
    if (bins == 0) throw ValidationError("histogram needs at least one bin");
    const std::size_t total = p.genuine_scores.size() + p.imposter_scores.size();
    if (total == 0) throw ValidationError("no scores to summarize");

    CrispnessReport r;
    r.histogram.assign(bins, 0);
    std::size_t interior = 0;
    auto add = [&](double s) {
        if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("score outside [0, 1]: " + format_double(s));
        if (s > 0.0 && s < 1.0) ++interior;
        auto bin = static_cast<std::size_t>(s * static_cast<double>(bins));
        r.histogram[std::min(bin, bins - 1)]++;
    };
    for (double s : p.genuine_scores) add(s);
    for (double s : p.imposter_scores) add(s);
    r.fraction_interior = static_cast<double>(interior) / static_cast<double>(total);
    return r;
}

inline void write_scores_csv(std::ostream& out, const ScorePartition& p)
{
    out << "kind,score\n";
    for (double s : p.genuine_scores) out << "genuine," << format_double(s) << '\n';
    for (double s : p.imposter_scores) out << "imposter," << format_double(s) << '\n';
}

} // namespace pgap
