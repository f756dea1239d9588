#pragma once

// Synthetic character rasters (16x16, 8-bit) and one-vs-rest tasks.
//
// Dataset CSV: one example per line, `label,p0,...,p255`, label a single
// character, pixels integers 0..255 in row-major order, no header.

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pgap/core.hpp"
#include "pgap/errors.hpp"
#include "pgap/format.hpp"
#include "pgap/glyphs.hpp"
#include "pgap/random.hpp"

namespace pgap {

using Raster = std::array<std::uint8_t, raster_pixels>;

struct RasterExample {
    char label = '?';
    Raster pixels{};

    std::uint8_t at(std::size_t row, std::size_t col) const { return pixels[row * raster_side + col]; }

    friend bool operator==(const RasterExample&, const RasterExample&) = default;
};

struct GenerationParams {
    std::string charset{default_charset};
    int instances_per_class = 34;
    std::uint64_t seed = 42;
    int noise_amplitude = 24;
    int max_shift = 1;
    int ink_level = 255;
    int background_level = 0;

    void validate() const
    {
        if (charset.empty()) throw ValidationError("charset is empty");
        if (instances_per_class < 1) throw ValidationError("instances_per_class must be >= 1");
        auto level = [](int v, const char* name) {
            if (v < 0 || v > 255)
                throw ValidationError(std::string(name) + " must be within [0, 255]");
        };
        level(noise_amplitude, "noise_amplitude");
        level(ink_level, "ink_level");
        level(background_level, "background_level");
        if (ink_level == background_level)
            throw ValidationError("ink_level must differ from background_level");
        if (max_shift < 0 || max_shift > 3) throw ValidationError("max_shift must be within [0, 3]");
        for (std::size_t i = 0; i < charset.size(); ++i)
            for (std::size_t j = i + 1; j < charset.size(); ++j)
                if (charset[i] == charset[j])
                    throw ValidationError(std::string("charset repeats '") + charset[i] + "'");
    }
};

inline Raster render(const GlyphMask& mask, int ink, int background, int dx, int dy)
{
    Raster out;
    out.fill(static_cast<std::uint8_t>(background));
    const int side = static_cast<int>(raster_side);
    for (int r = 0; r < side; ++r) {
        for (int c = 0; c < side; ++c) {
            if (!mask[static_cast<std::size_t>(r * side + c)]) continue;
            const int rr = r + dy;
            const int cc = c + dx;
            if (rr < 0 || rr >= side || cc < 0 || cc >= side) continue; // clipped
            out[static_cast<std::size_t>(rr * side + cc)] = static_cast<std::uint8_t>(ink);
        }
    }
    return out;
}

// Class-major order: all instances of charset[0], then charset[1], ...
inline std::vector<RasterExample> generate(const GenerationParams& params)
{
    params.validate();
    std::vector<GlyphMask> masks;
    for (char ch : params.charset) {
        auto mask = glyph_template(ch);
        if (!mask) throw ValidationError(std::string("no glyph template for character '") + ch + "'");
        masks.push_back(*mask);
    }

    Engine rng(params.seed);
    std::vector<RasterExample> out;
    out.reserve(params.charset.size() * static_cast<std::size_t>(params.instances_per_class));
    for (std::size_t k = 0; k < params.charset.size(); ++k) {
        for (int i = 0; i < params.instances_per_class; ++i) {
            const auto dx = static_cast<int>(uniform_int(rng, -params.max_shift, params.max_shift));
            const auto dy = static_cast<int>(uniform_int(rng, -params.max_shift, params.max_shift));
            RasterExample ex;
            ex.label = params.charset[k];
            ex.pixels = render(masks[k], params.ink_level, params.background_level, dx, dy);
            for (auto& p : ex.pixels) {
                const auto noise = uniform_int(rng, -params.noise_amplitude, params.noise_amplitude);
                p = static_cast<std::uint8_t>(std::clamp<std::int64_t>(p + noise, 0, 255));
            }
            out.push_back(ex);
        }
    }
    return out;
}

inline FeatureVector flatten(const RasterExample& r)
{
    return FeatureVector(std::vector<double>(r.pixels.begin(), r.pixels.end()));
}

inline LabeledDataset make_binary_task(const std::vector<RasterExample>& examples, char target)
{
    std::vector<FeatureVector> pos;
    std::vector<FeatureVector> neg;
    for (const auto& ex : examples) (ex.label == target ? pos : neg).push_back(flatten(ex));
    if (pos.empty())
        throw ValidationError(std::string("target character '") + target + "' not present in dataset");
    if (neg.empty())
        throw ValidationError(std::string("no examples other than '") + target + "' in dataset");
    return LabeledDataset(std::move(pos), std::move(neg));
}

inline void save_csv(std::ostream& out, const std::vector<RasterExample>& examples)
{
    for (const auto& ex : examples) {
        out << ex.label;
        for (auto p : ex.pixels) out << ',' << static_cast<int>(p);
        out << '\n';
    }
}

inline std::vector<RasterExample> load_csv(std::istream& in)
{
    std::vector<RasterExample> out;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&line_no](const std::string& what) {
        throw ValidationError("dataset line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string_view> fields;
        std::string_view rest(line);
        for (;;) {
            const auto comma = rest.find(',');
            fields.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (fields.size() != raster_pixels + 1)
            fail("expected " + std::to_string(raster_pixels + 1) + " fields, found " +
                 std::to_string(fields.size()));
        if (fields[0].size() != 1) fail("label must be a single character");

        RasterExample ex;
        ex.label = fields[0][0];
        for (std::size_t i = 0; i < raster_pixels; ++i) {
            int v = 0;
            try {
                v = parse_integer<int>(fields[i + 1]);
            } catch (const ValidationError&) {
                fail("pixel " + std::to_string(i) + " is not an integer");
            }
            if (v < 0 || v > 255) fail("pixel " + std::to_string(i) + " value " + std::to_string(v) +
                                       " outside [0, 255]");
            ex.pixels[i] = static_cast<std::uint8_t>(v);
        }
        out.push_back(ex);
    }
    return out;
}

} // namespace pgap
