#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lsync/flow.hpp"
#include "lsync/ktheory.hpp"
#include "lsync/lgs.hpp"
#include "lsync/subshift.hpp"
#include "lsync/sync.hpp"

namespace lsync::io {

using Json = nlohmann::ordered_json;

Json spec_to_json(const SubshiftSpec& spec);
/// Throws validation on malformed input.
SubshiftSpec spec_from_json(const Json& j);

Json lgs_to_json(const LambdaGraphSystem& lgs);
LambdaGraphSystem lgs_from_json(const Json& j);

Json group_to_json(const FgAbelianGroup& g);
Json tower_to_json(const GroupTower& t);
Json descriptor_to_json(const GroupDescriptor& d);
Json report_to_json(const LgsReport& r);
Json lambda_rows_to_json(const std::vector<LambdaSyncRow>& rows, const Alphabet& alphabet);
Json invariance_to_json(const InvarianceReport& r);
Json transfer_to_json(const SyncTransferReport& r, const Alphabet& inner, const Alphabet& expanded);

/// One digraph for the level pair (l - 1, l): solid labeled edges for E,
/// dashed edges for ι. level = 0 is rejected.
std::string lgs_to_dot(const LambdaGraphSystem& lgs, std::size_t level);
/// All level pairs, one digraph each.
std::string lgs_to_dot(const LambdaGraphSystem& lgs);

/// Reads and parses a JSON file; throws io errors.
Json read_json(const std::filesystem::path& path);
/// Writes `text` to the path, creating or truncating it.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string dump(const Json& j);

/// "golden-mean", "full:N", "dyck:N", "markov-dyck:<file>", "sofic:<file>",
/// or a path to a spec file.
SubshiftSpec resolve_spec(const std::string& name_or_path);

}  // namespace lsync::io
