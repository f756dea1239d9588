#pragma once

// File plumbing: atomic writes, the memory file, JSON reports.
//
// Memory file, plain text:
//   line 1: dimension n
//   line 2: n weights separated by spaces (shortest round-trip decimals)
//   line 3: threshold

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>

#include <json.hpp>

#include "pgap/core.hpp"
#include "pgap/dataset.hpp"
#include "pgap/errors.hpp"
#include "pgap/format.hpp"
#include "pgap/geometry.hpp"
#include "pgap/training.hpp"

namespace pgap {

using Json = nlohmann::ordered_json;

// Writes through a sibling temporary file and renames it into place, so a
// failed write never leaves a partial file at `path`.
inline void atomic_write(const std::filesystem::path& path,
                         const std::function<void(std::ostream&)>& writer)
{
    namespace fs = std::filesystem;
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
        try {
            writer(out);
            out.flush();
        } catch (...) {
            out.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw;
        }
        if (!out) {
            out.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw IoError("cannot move '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
    }
}

inline std::ifstream open_input(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return in;
}

inline void write_memory(std::ostream& out, const SynapticMemory& m)
{
    out << m.dimension() << '\n';
    for (std::size_t i = 0; i < m.weights.size(); ++i) {
        if (i) out << ' ';
        out << format_double(m.weights[i]);
    }
    out << '\n' << format_double(m.threshold) << '\n';
}

inline SynapticMemory read_memory(std::istream& in)
{
    auto next_line = [&in](const char* what) {
        std::string line;
        if (!std::getline(in, line)) throw ValidationError(std::string("memory file: missing ") + what);
        return line;
    };
    SynapticMemory m;
    const auto dim_text = next_line("dimension line");
    std::size_t dim = 0;
    try {
        dim = parse_integer<std::size_t>(dim_text);
    } catch (const ValidationError&) {
        throw ValidationError("memory file line 1: invalid dimension '" + dim_text + "'");
    }
    if (dim == 0) throw ValidationError("memory file line 1: dimension must be >= 1");

    std::istringstream weights(next_line("weights line"));
    std::string token;
    while (weights >> token) {
        try {
            m.weights.push_back(parse_double(token));
        } catch (const ValidationError&) {
            throw ValidationError("memory file line 2: invalid weight '" + token + "'");
        }
    }
    if (m.weights.size() != dim)
        throw ValidationError("memory file line 2: expected " + std::to_string(dim) + " weights, found " +
                              std::to_string(m.weights.size()));
    const auto theta_text = next_line("threshold line");
    try {
        m.threshold = parse_double(theta_text);
    } catch (const ValidationError&) {
        throw ValidationError("memory file line 3: invalid threshold '" + theta_text + "'");
    }
    if (!m.is_finite()) throw ValidationError("memory file: non-finite value");
    return m;
}

// FNV-1a over the dataset's CSV text; lets a report pin the exact input.
inline std::string dataset_digest(const std::vector<RasterExample>& examples)
{
    std::ostringstream csv;
    save_csv(csv, examples);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : csv.str()) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream hex;
    hex << std::hex;
    hex.width(16);
    hex.fill('0');
    hex << h;
    return hex.str();
}

inline Json to_json(const GeometryReport& r)
{
    Json j;
    j["trained"] = r.trained;
    j["activation_gap"] = r.activation_gap;
    j["d_star"] = r.d_star;
    j["d_actual"] = r.d_actual;
    j["ratio"] = r.ratio;
    j["verdict"] = std::string(to_string(r.verdict));
    j["perceived_diam_pos"] = r.perceived_diam_pos;
    j["perceived_diam_neg"] = r.perceived_diam_neg;
    j["cross_class_diam_pos"] = r.cross_class_diam_pos;
    j["cross_class_diam_neg"] = r.cross_class_diam_neg;
    j["actual_diam_pos"] = r.actual_diam_pos;
    j["actual_diam_neg"] = r.actual_diam_neg;
    j["witnesses"] = {
        {"pos_min_activation", r.pos_min_activation},
        {"pos_max_activation", r.pos_max_activation},
        {"neg_min_activation", r.neg_min_activation},
        {"neg_max_activation", r.neg_max_activation},
        {"closest_pair", {r.closest_pos, r.closest_neg}},
        {"farthest_pos_pair", {r.farthest_pos_a, r.farthest_pos_b}},
        {"farthest_neg_pair", {r.farthest_neg_a, r.farthest_neg_b}},
    };
    return j;
}

inline Json to_json(const TrainingConfig& c)
{
    return {{"seed", c.seed},
            {"max_epochs", c.max_epochs},
            {"start_index", c.start_index},
            {"init_low", c.init_low},
            {"init_high", c.init_high},
            {"initial_threshold", c.initial_threshold}};
}

inline Json to_json(const TrainingTrace& t)
{
    Json j;
    j["outcome"] = t.converged() ? "Converged" : "EpochLimitReached";
    if (t.converged())
        j["converged_epoch"] = t.converged_epoch;
    else
        j["converged_epoch"] = nullptr;
    j["epochs_examined"] = t.snapshots.size();
    return j;
}

// Reference figures the qualitative comparison is made against: a trained
// character memory that perceived a separation of about 216 where the true
// set distance was about 730, with perceived/actual diameters 758/2019 (C+)
// and 380/3060 (C-).
inline Json reference_comparison(const GeometryReport& r)
{
    Json ref = {{"d_star", 216.0},
                {"d_actual", 730.0},
                {"perceived_diam_pos", 758.0},
                {"perceived_diam_neg", 380.0},
                {"actual_diam_pos", 2019.0},
                {"actual_diam_neg", 3060.0},
                {"verdict", std::string(to_string(Verdict::fuzzy_undervaluated))}};
    Json j;
    j["reference"] = ref;
    j["observed_verdict"] = std::string(to_string(r.verdict));
    j["matches_reference_verdict"] = r.trained && r.verdict == Verdict::fuzzy_undervaluated;
    return j;
}

inline std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

} // namespace pgap
