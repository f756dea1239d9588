#pragma once

// Embedded uppercase glyph templates. Each letter is a 5x7 dot pattern,
// scaled 2x into a 10x14 box placed at rows 1..14, columns 3..12 of the
// 16x16 frame.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pgap {

inline constexpr std::size_t raster_side = 16;
inline constexpr std::size_t raster_pixels = raster_side * raster_side;

using GlyphMask = std::array<std::uint8_t, raster_pixels>; // row-major, ink = 1

namespace detail {

struct GlyphPattern {
    char letter;
    std::array<std::string_view, 7> rows;
};

// clang-format off
inline constexpr std::array<GlyphPattern, 26> glyph_patterns{{
    {'A', {".###.", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"}},
    {'B', {"####.", "#...#", "#...#", "####.", "#...#", "#...#", "####."}},
    {'C', {".###.", "#...#", "#....", "#....", "#....", "#...#", ".###."}},
    {'D', {"####.", "#...#", "#...#", "#...#", "#...#", "#...#", "####."}},
    {'E', {"#####", "#....", "#....", "####.", "#....", "#....", "#####"}},
    {'F', {"#####", "#....", "#....", "####.", "#....", "#....", "#...."}},
    {'G', {".###.", "#...#", "#....", "#.###", "#...#", "#...#", ".####"}},
    {'H', {"#...#", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"}},
    {'I', {".###.", "..#..", "..#..", "..#..", "..#..", "..#..", ".###."}},
    {'J', {"..###", "...#.", "...#.", "...#.", "...#.", "#..#.", ".##.."}},
    {'K', {"#...#", "#..#.", "#.#..", "##...", "#.#..", "#..#.", "#...#"}},
    {'L', {"#....", "#....", "#....", "#....", "#....", "#....", "#####"}},
    {'M', {"#...#", "##.##", "#.#.#", "#.#.#", "#...#", "#...#", "#...#"}},
    {'N', {"#...#", "#...#", "##..#", "#.#.#", "#..##", "#...#", "#...#"}},
    {'O', {".###.", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."}},
    {'P', {"####.", "#...#", "#...#", "####.", "#....", "#....", "#...."}},
    {'Q', {".###.", "#...#", "#...#", "#...#", "#.#.#", "#..#.", ".##.#"}},
    {'R', {"####.", "#...#", "#...#", "####.", "#.#..", "#..#.", "#...#"}},
    {'S', {".####", "#....", "#....", ".###.", "....#", "....#", "####."}},
    {'T', {"#####", "..#..", "..#..", "..#..", "..#..", "..#..", "..#.."}},
    {'U', {"#...#", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."}},
    {'V', {"#...#", "#...#", "#...#", "#...#", "#...#", ".#.#.", "..#.."}},
    {'W', {"#...#", "#...#", "#...#", "#.#.#", "#.#.#", "#.#.#", ".#.#."}},
    {'X', {"#...#", "#...#", ".#.#.", "..#..", ".#.#.", "#...#", "#...#"}},
    {'Y', {"#...#", "#...#", ".#.#.", "..#..", "..#..", "..#..", "..#.."}},
    {'Z', {"#####", "....#", "...#.", "..#..", ".#...", "#....", "#####"}},
}};
// clang-format on

inline constexpr std::size_t glyph_top = 1;
inline constexpr std::size_t glyph_left = 3;

} // namespace detail

inline constexpr std::string_view default_charset = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";

inline std::optional<GlyphMask> glyph_template(char letter)
{
    for (const auto& g : detail::glyph_patterns) {
        if (g.letter != letter) continue;
        GlyphMask mask{};
        for (std::size_t r = 0; r < 7; ++r) {
            for (std::size_t c = 0; c < 5; ++c) {
                if (g.rows[r][c] != '#') continue;
                for (std::size_t dr = 0; dr < 2; ++dr)
                    for (std::size_t dc = 0; dc < 2; ++dc)
                        mask[(detail::glyph_top + 2 * r + dr) * raster_side +
                             detail::glyph_left + 2 * c + dc] = 1;
            }
        }
        return mask;
    }
    return std::nullopt;
}

} // namespace pgap
