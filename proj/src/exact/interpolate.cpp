#include "jacobi/exact/interpolate.hpp"

#include <set>

#include "jacobi/error.hpp"

namespace jacobi::exact {

std::vector<Rat> interpolation_nodes(std::size_t count) {
  std::vector<Rat> nodes;
  nodes.reserve(count);
  for (long k = 0; nodes.size() < count; ++k) {
    nodes.emplace_back(k);
    if (k > 0 && nodes.size() < count) nodes.emplace_back(-k);
  }
  return nodes;
}

UPoly interpolate(const std::vector<Sample>& samples, int degree_bound, const std::string& variable) {
  if (degree_bound < 0) throw Error(ErrorCode::InsufficientSamples, "negative degree bound");
  const auto need = static_cast<std::size_t>(degree_bound) + 1;
  if (samples.size() < need)
    throw Error(ErrorCode::InsufficientSamples,
                std::to_string(samples.size()) + " samples for degree bound " + std::to_string(degree_bound));
  std::set<Rat> seen;
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (!seen.insert(samples[i].first).second)
      throw Error(ErrorCode::DuplicateAbscissa, "abscissa " + to_string(samples[i].first) + " repeated",
                  static_cast<long>(i));

  std::vector<Rat> dd(need);
  for (std::size_t i = 0; i < need; ++i) dd[i] = samples[i].second;
  for (std::size_t j = 1; j < need; ++j)
    for (std::size_t i = need - 1; i >= j; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (samples[i].first - samples[i - j].first);

  // Expand the Newton form from the innermost coefficient outward.
  std::vector<Rat> c{dd[need - 1]};
  for (std::size_t k = need - 1; k-- > 0;) {
    const Rat& node = samples[k].first;
    std::vector<Rat> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * node;
    }
    next[0] += dd[k];
    c = std::move(next);
  }
  UPoly p(std::move(c), variable);

  for (std::size_t i = need; i < samples.size(); ++i)
    if (p.evaluate(samples[i].first) != samples[i].second)
      throw Error(ErrorCode::InsufficientDegreeBound,
                  "check sample at " + to_string(samples[i].first) + " disagrees with degree bound " +
                      std::to_string(degree_bound),
                  static_cast<long>(i));
  return p;
}

}  // namespace jacobi::exact
