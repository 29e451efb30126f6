#include "jacobi/properness/probe.hpp"

#include <algorithm>
#include <random>

#include "jacobi/exact/resultant.hpp"

namespace jacobi::properness {

LeadingCoeffProbe::LeadingCoeffProbe(PlanarMap map, std::uint64_t seed, int generic_trials)
    : map_(std::move(map)), seed_(seed), trials_(generic_trials) {}

int LeadingCoeffProbe::degree_bound(Direction d) const {
  const auto& keep = d == Direction::X ? map_.x : map_.y;
  const auto& elim = d == Direction::X ? map_.y : map_.x;
  return exact::eliminant_degree_bound(map_.P, map_.Q, elim, keep) + exact::EliminantOptions{}.pad;
}

exact::UPoly LeadingCoeffProbe::eliminant(const Target& t, Direction d) const {
  const auto& keep = d == Direction::X ? map_.x : map_.y;
  const auto& elim = d == Direction::X ? map_.y : map_.x;
  exact::EliminantOptions opts;
  opts.degree_bound = degree_bound(d);
  return exact::eliminant(map_.P - MPoly(t.a), map_.Q - MPoly(t.b), elim, keep, opts);
}

int LeadingCoeffProbe::generic_degree(Direction d) {
  int& g = generic_[d == Direction::X ? 0 : 1];
  if (g >= 0) return g;
  std::mt19937_64 rng(seed_ + (d == Direction::X ? 0 : 1));
  std::uniform_int_distribution<long> num(-997, 997), den(1, 97);
  for (int k = 0; k < trials_; ++k) {
    const Target t{exact::make_rat(num(rng), den(rng)), exact::make_rat(num(rng), den(rng))};
    g = std::max(g, eliminant(t, d).degree());
  }
  return g;
}

ProbeResult LeadingCoeffProbe::probe(const Target& target, Direction direction) {
  ProbeResult r;
  r.direction = direction;
  r.generic_degree = generic_degree(direction);
  r.degree_bound = degree_bound(direction);
  const auto e = eliminant(target, direction);
  r.degree = e.degree();
  r.coefficient = e.coeff(r.generic_degree);
  return r;
}

ProbeResult leading_coeff_probe(const PlanarMap& map, const Target& target, Direction direction) {
  LeadingCoeffProbe p(map);
  return p.probe(target, direction);
}

}  // namespace jacobi::properness
