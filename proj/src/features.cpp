#include "lexent/features.hpp"

#include <cmath>

#include "lexent/error.hpp"
#include "lexent/parallel.hpp"
#include "lexent/simd.hpp"
#include "lexent/util.hpp"

namespace lexent {

std::string_view to_string(BasePart p) {
  switch (p) {
    case BasePart::only_x:
      return "only_x";
    case BasePart::only_y:
      return "only_y";
    case BasePart::diff:
      return "diff";
    case BasePart::sum:
      return "sum";
    case BasePart::concat:
      return "concat";
    case BasePart::mult:
      return "mult";
    case BasePart::sqdiff:
      return "sqdiff";
  }
  return "unknown";
}

std::size_t Composer::output_dim(std::size_t d) const {
  std::size_t total = 0;
  for (BasePart p : parts) total += (p == BasePart::concat) ? 2 * d : d;
  return total;
}

std::string Composer::name() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += '+';
    out += to_string(parts[i]);
  }
  return out;
}

Composer Composer::parse(std::string_view name) {
  Composer composer;
  for (std::string_view part : split_view(name, '+')) {
    std::string t = to_lower_ascii(trim_view(part));
    if (t == "only_x" || t == "onlyx" || t == "x") {
      composer.parts.push_back(BasePart::only_x);
    } else if (t == "only_y" || t == "onlyy" || t == "y") {
      composer.parts.push_back(BasePart::only_y);
    } else if (t == "diff") {
      composer.parts.push_back(BasePart::diff);
    } else if (t == "sum") {
      composer.parts.push_back(BasePart::sum);
    } else if (t == "concat") {
      composer.parts.push_back(BasePart::concat);
    } else if (t == "mult") {
      composer.parts.push_back(BasePart::mult);
    } else if (t == "sqdiff") {
      composer.parts.push_back(BasePart::sqdiff);
    } else {
      throw ConfigError("unknown composer part: '" + std::string(part) + "'");
    }
  }
  if (composer.parts.empty()) {
    throw ConfigError("empty composer name");
  }
  return composer;
}

namespace {

void l2_normalize(std::span<double> v) {
  double n = simd::norm(std::span<const double>(v));
  if (n > 0.0) simd::scale(v, 1.0 / n);
}

}  // namespace

void compose(std::span<const float> vx, std::span<const float> vy,
             const Composer& composer, std::span<double> out) {
  if (vx.size() != vy.size()) {
    throw DimensionError("pair vectors differ in length: " +
                         std::to_string(vx.size()) + " vs " +
                         std::to_string(vy.size()));
  }
  const std::size_t d = vx.size();
  if (out.size() != composer.output_dim(d)) {
    throw DimensionError("output span has length " +
                         std::to_string(out.size()) + ", expected " +
                         std::to_string(composer.output_dim(d)));
  }

  std::vector<double> x(d);
  std::vector<double> y(d);
  simd::widen(vx, x);
  simd::widen(vy, y);
  if (composer.normalize_inputs) {
    l2_normalize(x);
    l2_normalize(y);
  }
  std::span<const double> cx(x);
  std::span<const double> cy(y);

  std::size_t offset = 0;
  for (BasePart p : composer.parts) {
    switch (p) {
      case BasePart::only_x:
        std::copy(cx.begin(), cx.end(), out.begin() + offset);
        offset += d;
        break;
      case BasePart::only_y:
        std::copy(cy.begin(), cy.end(), out.begin() + offset);
        offset += d;
        break;
      case BasePart::diff:
        simd::subtract(cy, cx, out.subspan(offset, d));
        offset += d;
        break;
      case BasePart::sum:
        simd::add(cx, cy, out.subspan(offset, d));
        offset += d;
        break;
      case BasePart::concat:
        std::copy(cx.begin(), cx.end(), out.begin() + offset);
        std::copy(cy.begin(), cy.end(), out.begin() + offset + d);
        offset += 2 * d;
        break;
      case BasePart::mult:
        simd::multiply(cx, cy, out.subspan(offset, d));
        offset += d;
        break;
      case BasePart::sqdiff:
        simd::squared_difference(cy, cx, out.subspan(offset, d));
        offset += d;
        break;
    }
  }
}

std::vector<double> compose(std::span<const float> vx,
                            std::span<const float> vy,
                            const Composer& composer) {
  std::vector<double> out(composer.output_dim(vx.size()));
  compose(vx, vy, composer, out);
  return out;
}

RowMatrix compose_matrix(const Dataset& dataset,
                         std::span<const std::uint32_t> indices,
                         const EmbeddingTable& table,
                         const LookupPolicy& policy, const Composer& composer,
                         std::size_t workers) {
  RowMatrix m(indices.size(), composer.output_dim(table.dim()));
  parallel_for(indices.size(), workers, [&](std::size_t row) {
    const RelationInstance& inst = dataset.instances[indices[row]];
    std::vector<float> vx = table.lookup(inst.x, policy);
    std::vector<float> vy = table.lookup(inst.y, policy);
    compose(vx, vy, composer, m.row(row));
  });
  return m;
}

}  // namespace lexent
