#include "lexent/datasets.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lexent/error.hpp"
#include "lexent/util.hpp"

namespace lexent {

DatasetName dataset_name_from_string(std::string_view s) {
  std::string t = to_lower_ascii(s);
  if (t == "bless") return DatasetName::bless;
  if (t == "khn" || t == "k&h+n" || t == "kh+n") return DatasetName::khn;
  if (t == "root09") return DatasetName::root09;
  if (t == "evalution") return DatasetName::evalution;
  throw ConfigError("unknown dataset name: '" + std::string(s) + "'");
}

std::string_view to_string(DatasetName n) {
  switch (n) {
    case DatasetName::bless:
      return "bless";
    case DatasetName::khn:
      return "khn";
    case DatasetName::root09:
      return "root09";
    case DatasetName::evalution:
      return "evalution";
  }
  return "unknown";
}

std::vector<std::string> Dataset::domains() const {
  std::set<std::string> uniq;
  for (const auto& inst : instances) {
    if (!inst.domain.empty()) uniq.insert(inst.domain);
  }
  return {uniq.begin(), uniq.end()};
}

std::uint64_t Dataset::content_hash() const {
  Hasher64 h;
  for (const auto& inst : instances) {
    h.update(inst.x).update("\t").update(inst.y).update("\t");
    h.update(inst.relation).update("\t").update(inst.domain).update("\n");
  }
  return h.digest();
}

Dataset make_dataset(std::vector<RelationInstance> instances,
                     std::optional<DatasetName> name) {
  std::set<std::string> relations;
  std::set<std::string> domains;
  for (const auto& inst : instances) {
    if (inst.x.empty() || inst.y.empty() || inst.relation.empty()) {
      throw IngestError("instance with empty token or relation");
    }
    relations.insert(inst.relation);
    if (!inst.domain.empty()) domains.insert(inst.domain);
  }
  Dataset ds;
  ds.meta.name = name;
  ds.meta.relation_set.assign(relations.begin(), relations.end());
  ds.meta.instance_count = instances.size();
  ds.meta.pre_discard_count = instances.size();
  if (!domains.empty()) ds.meta.domain_count = domains.size();
  ds.instances = std::move(instances);
  return ds;
}

namespace {

struct Row {
  std::size_t line_no;
  std::vector<std::string> fields;
};

std::vector<Row> read_tsv(const std::filesystem::path& path,
                          std::size_t expected_cols) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open dataset file: " + path.string());
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_view(line, '\t');
    if (fields.size() != expected_cols) {
      throw IngestError("row " + std::to_string(line_no) + ": expected " +
                        std::to_string(expected_cols) + " columns, got " +
                        std::to_string(fields.size()));
    }
    Row row;
    row.line_no = line_no;
    for (auto f : fields) row.fields.emplace_back(f);
    rows.push_back(std::move(row));
  }
  if (in.bad()) throw IoError("read failed: " + path.string());
  return rows;
}

void require_nonempty(const Row& row, std::size_t col, const char* what) {
  if (row.fields[col].empty()) {
    throw IngestError("row " + std::to_string(row.line_no) + ": empty " + what);
  }
}

Dataset ingest_bless(const std::filesystem::path& path) {
  // BLESS release: concept TAB class TAB relation TAB relatum. The three
  // random-* relations collapse into one "random" label.
  static const std::set<std::string, std::less<>> known = {
      "attri", "coord",    "event",    "hyper",
      "mero",  "random-n", "random-j", "random-v"};
  std::vector<RelationInstance> instances;
  for (const Row& row : read_tsv(path, 4)) {
    require_nonempty(row, 0, "concept");
    require_nonempty(row, 1, "class");
    require_nonempty(row, 3, "relatum");
    std::string relation = to_lower_ascii(row.fields[2]);
    if (!known.contains(relation)) {
      throw IngestError("row " + std::to_string(row.line_no) +
                        ": unknown relation label '" + row.fields[2] + "'");
    }
    if (relation.starts_with("random-")) relation = "random";
    instances.push_back(
        {row.fields[0], row.fields[3], std::move(relation), row.fields[1]});
  }
  return make_dataset(std::move(instances), DatasetName::bless);
}

Dataset ingest_khn(const std::filesystem::path& path) {
  static const std::set<std::string, std::less<>> known = {"hypo", "mero",
                                                           "sibl", "false"};
  std::vector<RelationInstance> instances;
  for (const Row& row : read_tsv(path, 4)) {
    require_nonempty(row, 0, "x");
    require_nonempty(row, 1, "y");
    require_nonempty(row, 3, "domain");
    std::string relation = to_lower_ascii(row.fields[2]);
    if (!known.contains(relation)) {
      throw IngestError("row " + std::to_string(row.line_no) +
                        ": unknown relation label '" + row.fields[2] + "'");
    }
    instances.push_back(
        {row.fields[0], row.fields[1], std::move(relation), row.fields[3]});
  }
  return make_dataset(std::move(instances), DatasetName::khn);
}

Dataset ingest_root09(const std::filesystem::path& path) {
  static const std::set<std::string, std::less<>> known = {"hyper", "coord",
                                                           "random"};
  std::vector<RelationInstance> instances;
  for (const Row& row : read_tsv(path, 3)) {
    require_nonempty(row, 0, "x");
    require_nonempty(row, 1, "y");
    std::string relation = to_lower_ascii(row.fields[2]);
    if (!known.contains(relation)) {
      throw IngestError("row " + std::to_string(row.line_no) +
                        ": unknown relation label '" + row.fields[2] + "'");
    }
    instances.push_back({row.fields[0], row.fields[1], std::move(relation), ""});
  }
  return make_dataset(std::move(instances), DatasetName::root09);
}

Dataset ingest_evalution(const std::filesystem::path& path) {
  // The release carries nine relations; the two with the fewest instances
  // are dropped. Multi-domain annotations are unusable for single-label
  // domains, so none are produced.
  static const std::map<std::string, std::string, std::less<>> canonical = {
      {"isa", "IsA"},           {"partof", "PartOf"},
      {"madeof", "MadeOf"},     {"hasa", "HasA"},
      {"hasproperty", "HasProperty"}, {"synonym", "synonym"},
      {"antonym", "antonym"},   {"entails", "Entails"},
      {"memberof", "MemberOf"}};
  std::vector<RelationInstance> instances;
  std::map<std::string, std::size_t> freq;
  for (const Row& row : read_tsv(path, 3)) {
    require_nonempty(row, 0, "x");
    require_nonempty(row, 1, "y");
    auto it = canonical.find(to_lower_ascii(row.fields[2]));
    if (it == canonical.end()) {
      throw IngestError("row " + std::to_string(row.line_no) +
                        ": unknown relation label '" + row.fields[2] + "'");
    }
    instances.push_back({row.fields[0], row.fields[1], it->second, ""});
    ++freq[it->second];
  }
  std::size_t pre_discard = instances.size();

  std::vector<std::string> discarded;
  if (freq.size() > 2) {
    // two smallest frequencies; ties broken by label order
    std::vector<std::pair<std::size_t, std::string>> by_freq;
    for (const auto& [rel, count] : freq) by_freq.emplace_back(count, rel);
    std::sort(by_freq.begin(), by_freq.end());
    discarded = {by_freq[0].second, by_freq[1].second};
    std::erase_if(instances, [&](const RelationInstance& inst) {
      return inst.relation == discarded[0] || inst.relation == discarded[1];
    });
    std::sort(discarded.begin(), discarded.end());
  }

  Dataset ds = make_dataset(std::move(instances), DatasetName::evalution);
  ds.meta.pre_discard_count = pre_discard;
  ds.meta.discarded_relations = std::move(discarded);
  return ds;
}

}  // namespace

Dataset ingest(DatasetName name, const std::filesystem::path& path) {
  switch (name) {
    case DatasetName::bless:
      return ingest_bless(path);
    case DatasetName::khn:
      return ingest_khn(path);
    case DatasetName::root09:
      return ingest_root09(path);
    case DatasetName::evalution:
      return ingest_evalution(path);
  }
  throw ConfigError("unknown dataset");
}

Dataset load_normalized(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open dataset file: " + path.string());
  std::vector<RelationInstance> instances;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_view(line, '\t');
    if (fields.size() != 4) {
      throw ParseError("row " + std::to_string(line_no) + ": expected 4 columns, got " +
                       std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty() || fields[2].empty()) {
      throw ParseError("row " + std::to_string(line_no) +
                       ": empty token or relation");
    }
    instances.push_back({std::string(fields[0]), std::string(fields[1]),
                         std::string(fields[2]), std::string(fields[3])});
  }
  if (in.bad()) throw IoError("read failed: " + path.string());
  if (instances.empty()) {
    Dataset ds;
    return ds;  // empty file -> empty dataset, zero counts
  }
  return make_dataset(std::move(instances));
}

void save_normalized(const Dataset& dataset, const std::filesystem::path& path) {
  std::ostringstream out;
  for (const auto& inst : dataset.instances) {
    out << inst.x << '\t' << inst.y << '\t' << inst.relation << '\t'
        << inst.domain << '\n';
  }
  write_file_atomic(path, out.str());
}

}  // namespace lexent
