#include "infolab/io.hpp"

#include <fstream>
#include <sstream>

#include "infolab/errors.hpp"

namespace infolab {

namespace {

Alphabet alphabet_from_json(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        fail(ErrorCode::bad_input, std::string("missing or non-array '") + key + "'");
    std::vector<std::string> labels;
    for (const auto& l : j[key]) {
        if (!l.is_string()) fail(ErrorCode::bad_input, std::string(key) + " entries must be strings");
        labels.push_back(l.get<std::string>());
    }
    return Alphabet(std::move(labels));
}

std::vector<double> flat_matrix_from_json(const json& rows, std::size_t nrows, std::size_t ncols,
                                          const char* key) {
    if (!rows.is_array() || rows.size() != nrows)
        fail(ErrorCode::bad_input, std::string("'") + key + "' must have one row per label");
    std::vector<double> flat;
    flat.reserve(nrows * ncols);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != ncols)
            fail(ErrorCode::bad_input, std::string("row length mismatch in '") + key + "'");
        for (const auto& v : row) flat.push_back(v.get<double>());
    }
    return flat;
}

} // namespace

Distribution distribution_from_json(const json& j) {
    Alphabet alphabet = alphabet_from_json(j, "alphabet");
    if (!j.contains("probs") || !j["probs"].is_array())
        fail(ErrorCode::bad_input, "missing or non-array 'probs'");
    std::vector<double> probs = j["probs"].get<std::vector<double>>();
    return Distribution(alphabet, std::move(probs), NormalizePolicy::strict);
}

JointDistribution joint_from_json(const json& j) {
    Alphabet x = alphabet_from_json(j, "x_alphabet");
    Alphabet y = alphabet_from_json(j, "y_alphabet");
    if (!j.contains("probs"))
        fail(ErrorCode::bad_input, "missing 'probs'");
    return JointDistribution(x, y, flat_matrix_from_json(j["probs"], x.size(), y.size(), "probs"));
}

Channel channel_from_json(const json& j) {
    Alphabet in = alphabet_from_json(j, "x_alphabet");
    Alphabet out = alphabet_from_json(j, "y_alphabet");
    if (!j.contains("rows"))
        fail(ErrorCode::bad_input, "missing 'rows'");
    return Channel(in, out, flat_matrix_from_json(j["rows"], in.size(), out.size(), "rows"));
}

TripleJoint triple_from_json(const json& j) {
    Alphabet x = alphabet_from_json(j, "x_alphabet");
    Alphabet y = alphabet_from_json(j, "y_alphabet");
    Alphabet z = alphabet_from_json(j, "z_alphabet");
    if (!j.contains("probs") || !j["probs"].is_array() || j["probs"].size() != x.size())
        fail(ErrorCode::bad_input, "'probs' must have one block per x label");
    std::vector<double> flat;
    flat.reserve(x.size() * y.size() * z.size());
    for (const auto& block : j["probs"]) {
        auto rows = flat_matrix_from_json(block, y.size(), z.size(), "probs");
        flat.insert(flat.end(), rows.begin(), rows.end());
    }
    return TripleJoint(x, y, z, std::move(flat));
}

json to_json(const Distribution& d) {
    json j;
    j["alphabet"] = d.alphabet().labels();
    j["probs"] = std::vector<double>(d.probs().begin(), d.probs().end());
    return j;
}

json to_json(const JointDistribution& jd) {
    json j;
    j["x_alphabet"] = jd.x_alphabet().labels();
    j["y_alphabet"] = jd.y_alphabet().labels();
    json rows = json::array();
    for (std::size_t x = 0; x < jd.rows(); ++x) {
        json row = json::array();
        for (std::size_t y = 0; y < jd.cols(); ++y) row.push_back(jd.at(x, y));
        rows.push_back(std::move(row));
    }
    j["probs"] = std::move(rows);
    return j;
}

json to_json(const Channel& ch) {
    json j;
    j["x_alphabet"] = ch.in_alphabet().labels();
    j["y_alphabet"] = ch.out_alphabet().labels();
    json rows = json::array();
    for (std::size_t i = 0; i < ch.in_alphabet().size(); ++i) {
        json row = json::array();
        for (std::size_t o = 0; o < ch.out_alphabet().size(); ++o) row.push_back(ch.at(i, o));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

json to_json(const TripleJoint& t) {
    json j;
    j["x_alphabet"] = t.x_alphabet().labels();
    j["y_alphabet"] = t.y_alphabet().labels();
    j["z_alphabet"] = t.z_alphabet().labels();
    json blocks = json::array();
    for (std::size_t x = 0; x < t.dim_x(); ++x) {
        json rows = json::array();
        for (std::size_t y = 0; y < t.dim_y(); ++y) {
            json row = json::array();
            for (std::size_t z = 0; z < t.dim_z(); ++z) row.push_back(t.at(x, y, z));
            rows.push_back(std::move(row));
        }
        blocks.push_back(std::move(rows));
    }
    j["probs"] = std::move(blocks);
    return j;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::bad_input, "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports line/column in the message already.
        fail(ErrorCode::bad_input, path.string() + ": " + e.what());
    }
}

Distribution read_distribution(const std::filesystem::path& path) {
    return distribution_from_json(read_json_file(path));
}

JointDistribution read_joint(const std::filesystem::path& path) {
    return joint_from_json(read_json_file(path));
}

Channel read_channel(const std::filesystem::path& path) {
    return channel_from_json(read_json_file(path));
}

TripleJoint read_triple(const std::filesystem::path& path) {
    return triple_from_json(read_json_file(path));
}

std::vector<std::string> read_samples(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::bad_input, "cannot open " + path.string());
    std::vector<std::string> samples;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.find(',') != std::string::npos)
            fail(ErrorCode::bad_input, path.string() + ":" + std::to_string(lineno) +
                                           ": expected one label per line");
        samples.push_back(line);
    }
    return samples;
}

std::vector<std::pair<std::string, std::string>> read_paired_samples(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::bad_input, "cannot open " + path.string());
    std::vector<std::pair<std::string, std::string>> samples;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            fail(ErrorCode::bad_input, path.string() + ":" + std::to_string(lineno) +
                                           ": expected two comma-separated labels");
        samples.emplace_back(line.substr(0, comma), line.substr(comma + 1));
    }
    return samples;
}

} // namespace infolab
