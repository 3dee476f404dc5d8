#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ekr/verify.hpp"

namespace ekr {

inline constexpr const char* kToolVersion = "0.1.0";

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ull);
std::string hex64(std::uint64_t h);

/// Sorted keys, two-space indent. nlohmann objects are already key-ordered,
/// so this is just dump() with the formatting pinned.
std::string canonical_dump(const json& j);

struct RunRecord {
  std::string command;
  json params = json::object();
  json payload = json::object();
  std::string version = kToolVersion;
  std::string timestamp;
  /// fnv1a over command, params and input file contents; timestamp excluded.
  std::string input_hash;
  /// "hit", "miss" or "off".
  std::string cache = "off";
};

json to_json(const RunRecord& r);
RunRecord record_from_json(const json& j);
std::string input_hash(const std::string& command, const json& params, const std::map<std::string, std::string>& inputs);
std::string utc_timestamp();

/// $EKR_CACHE_DIR, else $XDG_CACHE_HOME/ekr, else ~/.cache/ekr.
std::filesystem::path default_cache_dir();

/// Flat directory of <command>-<hash>.json files.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::optional<RunRecord> load(const std::string& command, const std::string& hash) const;
  void store(const RunRecord& r) const;
  std::filesystem::path path_for(const std::string& command, const std::string& hash) const;

 private:
  std::filesystem::path dir_;
};

/// Family flags: --family plus n, p, m, abelian, y as strings.
struct GroupArgs {
  std::optional<std::string> family;
  std::map<std::string, std::string> params;
};

struct ClaimOptions {
  GroupArgs group;
  std::size_t workers = 1;
  /// Directory with transitive_deg<n>.jsonl files, used by table1.
  std::filesystem::path catalog_dir;
};

/// The claim ids the CLI accepts, in a fixed order.
const std::vector<std::string>& claim_ids();

/// Parameters the claim will actually use, defaults filled in. Throws on an
/// unknown claim id.
json claim_params(const std::string& claim, const ClaimOptions& opts);

/// Verdict JSON; scans add a "cases" array (one object per removal case).
json run_claim(const std::string& claim, const ClaimOptions& opts);

json describe_group(const GroupArgs& args);
json profile_group(const GroupArgs& args);
/// Exact alpha of Cay(G, Der(G) minus the labels of the listed derangements).
json alpha_report(const GroupArgs& args, const std::vector<std::string>& removed_cycles);
/// Reads one derangement per line in cycle notation; blank lines and lines
/// starting with '#' are skipped.
std::vector<std::string> read_label_file(const std::string& text);
json robustness_report(const GroupArgs& args, std::size_t workers, std::size_t budget);
json catalog_report(const std::string& path, std::size_t degree, std::size_t workers);

GroupPtr build_group(const GroupArgs& args, const std::string& default_family,
                     const std::map<std::string, std::string>& defaults);

/// 0 pass, 1 fail, 3 hypothesis not met, 4 budget or guard.
int exit_code(const json& verdict);

/// CSV from a "cases" array.
std::string cases_csv(const json& cases);

/// Human table: one "key  value" row per leaf of params/predicted/computed, then
/// notes and the verdict line. Witness data is left to --json.
std::string table_text(const json& payload);

}  // namespace ekr
