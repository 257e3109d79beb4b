#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexent {

enum class DatasetName { bless, khn, root09, evalution };

DatasetName dataset_name_from_string(std::string_view s);
std::string_view to_string(DatasetName n);

/// One labeled word pair. domain is empty for datasets without domains.
struct RelationInstance {
  std::string x;
  std::string y;
  std::string relation;
  std::string domain;

  bool operator==(const RelationInstance&) const = default;
};

struct DatasetMeta {
  std::optional<DatasetName> name;           // unknown for plain normalized files
  std::vector<std::string> relation_set;     // sorted
  std::size_t instance_count = 0;
  std::optional<std::size_t> domain_count;
  // EVALution only: size before the two rarest relations were removed, and
  // which relations those were.
  std::size_t pre_discard_count = 0;
  std::vector<std::string> discarded_relations;
};

struct Dataset {
  DatasetMeta meta;
  std::vector<RelationInstance> instances;

  std::vector<std::string> domains() const;  // sorted unique, empty if none
  std::uint64_t content_hash() const;
};

/// Parses a published distribution file into the normalized instance table.
///
/// Accepted upstream formats (tab-separated, UTF-8):
///   bless      concept TAB class TAB relation TAB relatum
///              (random-n / random-j / random-v fold into "random";
///               class is the topical domain)
///   khn        x TAB y TAB relation TAB domain
///              (relations hypo, mero, sibl, false)
///   root09     x TAB y TAB relation           (hyper, coord, random)
///   evalution  x TAB y TAB relation
///              (the two rarest relations are dropped; there is no usable
///               single-domain annotation, so domains are not produced)
Dataset ingest(DatasetName name, const std::filesystem::path& path);

/// Normalized interchange format: 4 columns `x TAB y TAB relation TAB domain`
/// (empty domain column allowed), LF line endings, no header.
Dataset load_normalized(const std::filesystem::path& path);
void save_normalized(const Dataset& dataset, const std::filesystem::path& path);

/// Rebuilds meta (relation set, counts) from an instance list; used by the
/// loaders and by tests constructing datasets by hand.
Dataset make_dataset(std::vector<RelationInstance> instances,
                     std::optional<DatasetName> name = std::nullopt);

}  // namespace lexent
