#include "lexent/splits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "lexent/error.hpp"
#include "lexent/util.hpp"

namespace lexent {

using nlohmann::json;

Protocol protocol_from_string(std::string_view s) {
  std::string t = to_lower_ascii(s);
  if (t == "rand" || t == "random") return Protocol::rand;
  if (t == "lex" || t == "lexical") return Protocol::lex;
  if (t == "ood" || t == "out_of_domain") return Protocol::ood;
  throw ConfigError("unknown protocol: '" + std::string(s) + "'");
}

std::string_view to_string(Protocol p) {
  switch (p) {
    case Protocol::rand:
      return "rand";
    case Protocol::lex:
      return "lex";
    case Protocol::ood:
      return "ood";
  }
  return "unknown";
}

void SplitSpec::validate() const {
  for (double r : ratios) {
    if (r < 0.0) throw ConfigError("split ratios must be nonnegative");
  }
  double total = ratios[0] + ratios[1] + ratios[2];
  if (std::abs(total - 1.0) > 1e-9) {
    throw ConfigError("split ratios must sum to 1, got " +
                      std::to_string(total));
  }
}

Fold split_random(const Dataset& dataset, const SplitSpec& spec) {
  spec.validate();
  const std::size_t n = dataset.instances.size();
  if (n < 3) throw SplitError("dataset too small to split: " + std::to_string(n));

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  Rng rng(spec.seed);
  rng.shuffle(order);

  // floors for test and validation; the remainder goes to train so train
  // never starves
  std::size_t n_test = static_cast<std::size_t>(
      std::floor(spec.ratios[2] * static_cast<double>(n)));
  std::size_t n_val = static_cast<std::size_t>(
      std::floor(spec.ratios[1] * static_cast<double>(n)));

  Fold fold;
  fold.test.assign(order.begin(), order.begin() + n_test);
  fold.validation.assign(order.begin() + n_test,
                         order.begin() + n_test + n_val);
  fold.train.assign(order.begin() + n_test + n_val, order.end());
  if (fold.train.empty() || fold.validation.empty() || fold.test.empty()) {
    throw SplitError("a split part is empty; dataset too small for ratios");
  }
  return fold;
}

Fold split_lexical(const Dataset& dataset, const SplitSpec& spec) {
  spec.validate();
  const auto& instances = dataset.instances;
  if (instances.size() < 3) {
    throw SplitError("dataset too small to split: " +
                     std::to_string(instances.size()));
  }

  // pair-frequency per token: how many instance slots the token fills
  std::map<std::string_view, double> freq;
  for (const auto& inst : instances) {
    freq[inst.x] += 1.0;
    freq[inst.y] += 1.0;
  }
  std::vector<std::string_view> tokens;
  tokens.reserve(freq.size());
  for (const auto& [tok, f] : freq) tokens.push_back(tok);

  Rng rng(spec.seed);
  rng.shuffle(tokens);

  // Greedy one-pass bucket assignment: each token goes to the bucket whose
  // share of the total pair-frequency mass is furthest below its target
  // ratio. Ties prefer train, then validation, then test.
  double total_mass = 0.0;
  for (const auto& [tok, f] : freq) total_mass += f;
  const std::array<double, 3> target = {spec.ratios[0] * total_mass,
                                        spec.ratios[1] * total_mass,
                                        spec.ratios[2] * total_mass};
  std::array<double, 3> assigned = {0.0, 0.0, 0.0};
  std::map<std::string_view, int> bucket_of;
  for (std::string_view tok : tokens) {
    int best = 0;
    double best_deficit = target[0] - assigned[0];
    for (int b = 1; b < 3; ++b) {
      double deficit = target[static_cast<std::size_t>(b)] -
                       assigned[static_cast<std::size_t>(b)];
      if (deficit > best_deficit) {
        best = b;
        best_deficit = deficit;
      }
    }
    bucket_of[tok] = best;
    assigned[static_cast<std::size_t>(best)] += freq[tok];
  }

  Fold fold;
  for (std::uint32_t i = 0; i < instances.size(); ++i) {
    int bx = bucket_of[instances[i].x];
    int by = bucket_of[instances[i].y];
    if (bx != by) {
      fold.discarded.push_back(i);
    } else if (bx == 0) {
      fold.train.push_back(i);
    } else if (bx == 1) {
      fold.validation.push_back(i);
    } else {
      fold.test.push_back(i);
    }
  }
  if (fold.train.empty() || fold.validation.empty() || fold.test.empty()) {
    throw SplitError(
        "lexical split produced an empty part; try a different seed");
  }
  return fold;
}

std::vector<Fold> split_out_of_domain(const Dataset& dataset,
                                      const SplitSpec& spec) {
  spec.validate();
  std::vector<std::string> domains = dataset.domains();
  if (domains.size() < 3) {
    throw SplitError("out-of-domain split needs at least 3 domains, have " +
                     std::to_string(domains.size()));
  }
  for (const auto& inst : dataset.instances) {
    if (inst.domain.empty()) {
      throw SplitError("out-of-domain split requires a domain on every instance");
    }
  }

  std::vector<Fold> folds;
  folds.reserve(domains.size());
  for (std::size_t d = 0; d < domains.size(); ++d) {
    const std::string& held_out = domains[d];
    std::vector<std::string> remaining;
    for (std::size_t j = 0; j < domains.size(); ++j) {
      if (j != d) remaining.push_back(domains[j]);
    }
    std::uint64_t state = spec.seed ^ (0x9e3779b97f4a7c15ULL * (d + 1));
    std::uint64_t pick = splitmix64(state) % remaining.size();
    const std::string& val_domain = remaining[pick];

    Fold fold;
    fold.held_out_domain = held_out;
    fold.validation_domain = val_domain;
    for (std::uint32_t i = 0; i < dataset.instances.size(); ++i) {
      const std::string& dom = dataset.instances[i].domain;
      if (dom == held_out) {
        fold.test.push_back(i);
      } else if (dom == val_domain) {
        fold.validation.push_back(i);
      } else {
        fold.train.push_back(i);
      }
    }
    folds.push_back(std::move(fold));
  }
  return folds;
}

std::vector<Fold> make_folds(const Dataset& dataset, const SplitSpec& spec) {
  switch (spec.protocol) {
    case Protocol::rand:
      return {split_random(dataset, spec)};
    case Protocol::lex:
      return {split_lexical(dataset, spec)};
    case Protocol::ood:
      return split_out_of_domain(dataset, spec);
  }
  throw ConfigError("unknown protocol");
}

namespace {

json fold_to_json(const Fold& fold) {
  json j;
  j["train"] = fold.train;
  j["validation"] = fold.validation;
  j["test"] = fold.test;
  if (fold.held_out_domain) j["held_out_domain"] = *fold.held_out_domain;
  if (fold.validation_domain) j["validation_domain"] = *fold.validation_domain;
  if (!fold.discarded.empty()) j["discarded"] = fold.discarded;
  return j;
}

Fold fold_from_json(const json& j) {
  Fold fold;
  fold.train = j.at("train").get<std::vector<std::uint32_t>>();
  fold.validation = j.at("validation").get<std::vector<std::uint32_t>>();
  fold.test = j.at("test").get<std::vector<std::uint32_t>>();
  if (j.contains("held_out_domain")) {
    fold.held_out_domain = j["held_out_domain"].get<std::string>();
  }
  if (j.contains("validation_domain")) {
    fold.validation_domain = j["validation_domain"].get<std::string>();
  }
  if (j.contains("discarded")) {
    fold.discarded = j["discarded"].get<std::vector<std::uint32_t>>();
  }
  return fold;
}

}  // namespace

void save_folds(const SplitSpec& spec, const std::vector<Fold>& folds,
                const std::filesystem::path& path) {
  json j;
  j["protocol"] = std::string(to_string(spec.protocol));
  j["seed"] = spec.seed;
  j["ratios"] = spec.ratios;
  j["folds"] = json::array();
  for (const Fold& fold : folds) j["folds"].push_back(fold_to_json(fold));
  write_file_atomic(path, j.dump(2) + "\n");
}

std::pair<SplitSpec, std::vector<Fold>> load_folds(
    const std::filesystem::path& path) {
  json j = json::parse(read_text_file(path));
  SplitSpec spec;
  spec.protocol = protocol_from_string(j.at("protocol").get<std::string>());
  spec.seed = j.at("seed").get<std::uint64_t>();
  spec.ratios = j.at("ratios").get<std::array<double, 3>>();
  std::vector<Fold> folds;
  for (const json& jf : j.at("folds")) folds.push_back(fold_from_json(jf));
  return {spec, folds};
}

std::uint64_t fold_hash(const Fold& fold) {
  Hasher64 h;
  auto update_vec = [&h](const std::vector<std::uint32_t>& v) {
    h.update_u64(v.size());
    for (std::uint32_t i : v) h.update_u64(i);
  };
  update_vec(fold.train);
  update_vec(fold.validation);
  update_vec(fold.test);
  update_vec(fold.discarded);
  h.update(fold.held_out_domain.value_or(""));
  h.update(fold.validation_domain.value_or(""));
  return h.digest();
}

}  // namespace lexent
