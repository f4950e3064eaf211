#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "infolab/channel.hpp"
#include "infolab/distribution.hpp"
#include "infolab/joint.hpp"
#include "infolab/triple.hpp"

namespace infolab {

using json = nlohmann::ordered_json;

// File schemas:
//   distribution: {"alphabet": [...], "probs": [...]}
//   joint:        {"x_alphabet": [...], "y_alphabet": [...], "probs": [[...], ...]}  row-major p(x,y)
//   channel:      {"x_alphabet": [in...], "y_alphabet": [out...], "rows": [[...], ...]}
//   triple:       {"x_alphabet", "y_alphabet", "z_alphabet", "probs": [[[...]]]}
//   samples CSV:  one label per line, or two comma-separated labels per line; no header

Distribution distribution_from_json(const json& j);
JointDistribution joint_from_json(const json& j);
Channel channel_from_json(const json& j);
TripleJoint triple_from_json(const json& j);

json to_json(const Distribution& d);
json to_json(const JointDistribution& j);
json to_json(const Channel& ch);
json to_json(const TripleJoint& t);

Distribution read_distribution(const std::filesystem::path& path);
JointDistribution read_joint(const std::filesystem::path& path);
Channel read_channel(const std::filesystem::path& path);
TripleJoint read_triple(const std::filesystem::path& path);
json read_json_file(const std::filesystem::path& path);

std::vector<std::string> read_samples(const std::filesystem::path& path);
std::vector<std::pair<std::string, std::string>> read_paired_samples(
    const std::filesystem::path& path);

} // namespace infolab
