// Copyright 2026 The LipTest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "liptest/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "liptest/repair.hpp"

namespace liptest {

namespace {

constexpr double kTol = 1e-9;

}  // namespace

bool is_lipschitz_exhaustive(const DenseFunction& f, double c) {
  if (c < 0.0) throw std::invalid_argument("is_lipschitz_exhaustive: c must be >= 0");
  const std::uint64_t n = std::uint64_t{1} << f.dim;
  for (std::uint64_t v = 0; v < n; ++v) {
    for (int i = 0; i < f.dim; ++i) {
      const std::uint64_t mask = std::uint64_t{1} << i;
      if (v & mask) continue;
      if (extended_gap(f.values[v], f.values[v | mask]) > c + kTol) return false;
    }
  }
  return true;
}

double image_diameter_exact(const DenseFunction& f) {
  const auto [mn, mx] = std::minmax_element(f.values.begin(), f.values.end());
  if (*mx == kNegInf) return 0.0;  // constant -inf table
  if (*mn == kNegInf) return kPosInf;
  return *mx - *mn;
}

double violated_edge_mass(const DenseFunction& f, const ProductDistribution& dist) {
  if (dist.dim() != f.dim) {
    throw std::invalid_argument("violated_edge_mass: dimension mismatch");
  }
  double total = 0.0;
  for (const Edge& e : all_edges(f.dim)) {
    const auto [a, b] = e.endpoints();
    if (extended_gap(f.value(a), f.value(b)) > 1.0 + kTol) {
      total += dist.edge_mass(e);
    }
  }
  return total;
}

double violated_mass_lower_bound(double epsilon, int d, double delta,
                                 double image_diameter) {
  if (!(image_diameter > 0.0)) {
    throw std::invalid_argument(
        "violated_mass_lower_bound: image diameter must be positive");
  }
  return delta * (epsilon - static_cast<double>(d) * d * delta) /
         (d * image_diameter);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> violated_pairs(
    const DenseFunction& f, double c) {
  if (f.dim > kMaxDistanceDim) {
    throw std::invalid_argument("violated_pairs: dimension exceeds the distance cap");
  }
  const std::uint32_t n = std::uint32_t{1} << f.dim;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      const int dist = std::popcount(u ^ v);
      if (extended_gap(f.values[u], f.values[v]) > c * dist + kTol) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

DenseFunction mcshane_extend(const std::vector<std::pair<Vertex, double>>& partial,
                             int d) {
  if (partial.empty()) {
    throw std::invalid_argument("mcshane_extend: partial assignment is empty");
  }
  for (const auto& [x, v] : partial) {
    if (x.dim() != d) {
      throw std::invalid_argument("mcshane_extend: vertex dimension mismatch");
    }
    if (std::isnan(v) || v == kPosInf) {
      throw std::invalid_argument("mcshane_extend: values must be finite or -inf");
    }
  }
  for (std::size_t a = 0; a < partial.size(); ++a) {
    for (std::size_t b = a + 1; b < partial.size(); ++b) {
      const int dist = hamming_distance(partial[a].first, partial[b].first);
      if (extended_gap(partial[a].second, partial[b].second) > dist + kTol) {
        throw std::invalid_argument(
            "mcshane_extend: partial assignment is not 1-Lipschitz");
      }
    }
  }
  const std::uint64_t n = std::uint64_t{1} << d;
  std::vector<double> values(n, kPosInf);
  for (std::uint64_t x = 0; x < n; ++x) {
    double best = kPosInf;
    for (const auto& [y, v] : partial) {
      const double candidate =
          v + static_cast<double>(std::popcount(x ^ y.bits()));
      best = std::min(best, candidate);
    }
    values[x] = best;
  }
  return DenseFunction(d, std::move(values), 0.0);
}

namespace {

// Shared machinery for the two distance searches.

struct DistanceProblem {
  const DenseFunction* f = nullptr;
  const ProductDistribution* dist = nullptr;
  double c = 1.0;
  std::uint32_t n = 0;
  std::vector<double> mass;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

DistanceProblem make_problem(const DenseFunction& f, const ProductDistribution& dist,
                             double c) {
  if (f.dim > kMaxDistanceDim) {
    throw std::invalid_argument(
        "exact distance: dimension exceeds the distance cap (" +
        std::to_string(kMaxDistanceDim) + ")");
  }
  if (dist.dim() != f.dim) {
    throw std::invalid_argument("exact distance: dimension mismatch");
  }
  if (c < 0.0) throw std::invalid_argument("exact distance: c must be >= 0");
  DistanceProblem p;
  p.f = &f;
  p.dist = &dist;
  p.c = c;
  p.n = std::uint32_t{1} << f.dim;
  p.mass = dist.enumerate_vertex_masses();
  p.pairs = violated_pairs(f, c);
  return p;
}

// c-Lipschitz completion that agrees with f outside the cover. The kept set
// has no violated pair, so the McShane-style envelope interpolates it.
DenseFunction build_completion(const DistanceProblem& p,
                               const std::vector<char>& in_cover) {
  const DenseFunction& f = *p.f;
  bool kept_all_neg_inf = true;
  bool kept_any = false;
  for (std::uint32_t v = 0; v < p.n; ++v) {
    if (in_cover[v]) continue;
    kept_any = true;
    if (f.values[v] != kNegInf) kept_all_neg_inf = false;
  }
  const bool grid = f.delta > 0.0 && std::abs(p.c - std::round(p.c)) < 1e-12;
  if (kept_any && kept_all_neg_inf) {
    // Only -inf survives; the constant -inf table is the unique completion.
    return DenseFunction(f.dim, std::vector<double>(p.n, kNegInf),
                         grid ? f.delta : 0.0);
  }
  std::vector<double> values(p.n, 0.0);
  for (std::uint32_t x = 0; x < p.n; ++x) {
    double best = kPosInf;
    for (std::uint32_t y = 0; y < p.n; ++y) {
      if (in_cover[y] || f.values[y] == kNegInf) continue;
      const double candidate =
          f.values[y] + p.c * static_cast<double>(std::popcount(x ^ y));
      best = std::min(best, candidate);
    }
    values[x] = best;
  }
  return DenseFunction(f.dim, std::move(values), grid ? f.delta : 0.0);
}

DistanceCertificate finish_certificate(const DistanceProblem& p,
                                       const std::vector<char>& in_cover) {
  DistanceCertificate cert;
  for (std::uint32_t v = 0; v < p.n; ++v) {
    if (in_cover[v]) {
      cert.witness_set.emplace_back(v, p.f->dim);
      cert.distance += p.mass[v];
    }
  }
  cert.completion = build_completion(p, in_cover);
  if (!is_lipschitz_exhaustive(cert.completion, p.c)) {
    throw std::logic_error("exact distance: completion failed the exhaustive check");
  }
  for (std::uint32_t v = 0; v < p.n; ++v) {
    if (!in_cover[v] && extended_gap(cert.completion.values[v], p.f->values[v]) > kTol) {
      throw std::logic_error("exact distance: completion disagrees off the cover");
    }
  }
  return cert;
}

class CoverSearch {
 public:
  explicit CoverSearch(const DistanceProblem& p) : p_(p) {
    // Vertices ranked by the total mass of their violated-pair incidences;
    // pairs sorted so those touching top-ranked vertices are branched first.
    std::vector<double> incidence(p_.n, 0.0);
    for (const auto& [u, v] : p_.pairs) {
      incidence[u] += p_.mass[u] + p_.mass[v];
      incidence[v] += p_.mass[u] + p_.mass[v];
    }
    std::vector<std::uint32_t> order(p_.n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       return incidence[a] > incidence[b];
                     });
    rank_.assign(p_.n, 0);
    for (std::uint32_t k = 0; k < p_.n; ++k) rank_[order[k]] = k;

    sorted_pairs_ = p_.pairs;
    std::stable_sort(sorted_pairs_.begin(), sorted_pairs_.end(),
                     [&](const auto& a, const auto& b) {
                       return std::min(rank_[a.first], rank_[a.second]) <
                              std::min(rank_[b.first], rank_[b.second]);
                     });
  }

  void seed_upper_bound(const std::vector<char>& cover) {
    if (!covers_all(cover)) return;
    double m = 0.0;
    for (std::uint32_t v = 0; v < p_.n; ++v) {
      if (cover[v]) m += p_.mass[v];
    }
    if (m < best_mass_ - 1e-15) {
      best_mass_ = m;
      best_cover_ = cover;
    }
  }

  std::vector<char> run() {
    std::vector<char> chosen(p_.n, 0);
    dfs(chosen, 0.0);
    return best_cover_;
  }

 private:
  bool covers_all(const std::vector<char>& cover) const {
    for (const auto& [u, v] : p_.pairs) {
      if (!cover[u] && !cover[v]) return false;
    }
    return true;
  }

  // Mass of a greedy set of vertex-disjoint uncovered pairs: every cover must
  // pay at least the lighter endpoint of each.
  double lower_bound(const std::vector<char>& chosen) const {
    double lb = 0.0;
    std::vector<char> used(p_.n, 0);
    for (const auto& [u, v] : sorted_pairs_) {
      if (chosen[u] || chosen[v] || used[u] || used[v]) continue;
      lb += std::min(p_.mass[u], p_.mass[v]);
      used[u] = used[v] = 1;
    }
    return lb;
  }

  void dfs(std::vector<char>& chosen, double mass) {
    const auto* branch = static_cast<const std::pair<std::uint32_t, std::uint32_t>*>(nullptr);
    for (const auto& pr : sorted_pairs_) {
      if (!chosen[pr.first] && !chosen[pr.second]) {
        branch = &pr;
        break;
      }
    }
    if (branch == nullptr) {
      if (mass < best_mass_ - 1e-15) {
        best_mass_ = mass;
        best_cover_ = chosen;
      }
      return;
    }
    if (mass + lower_bound(chosen) >= best_mass_ - 1e-15) return;

    std::uint32_t first = branch->first;
    std::uint32_t second = branch->second;
    if (rank_[second] < rank_[first]) std::swap(first, second);
    for (std::uint32_t pick : {first, second}) {
      chosen[pick] = 1;
      dfs(chosen, mass + p_.mass[pick]);
      chosen[pick] = 0;
    }
  }

  const DistanceProblem& p_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> sorted_pairs_;
  double best_mass_ = kPosInf;
  std::vector<char> best_cover_;
};

}  // namespace

DistanceCertificate exact_distance_to_lipschitz(const DenseFunction& f,
                                                const ProductDistribution& dist,
                                                double c) {
  DistanceProblem p = make_problem(f, dist, c);
  if (p.pairs.empty()) {
    DistanceCertificate cert;
    cert.completion = f;
    return cert;
  }

  CoverSearch search(p);

  // Everything incident to a violated pair is always a valid cover.
  std::vector<char> incident(p.n, 0);
  for (const auto& [u, v] : p.pairs) incident[u] = incident[v] = 1;
  search.seed_upper_bound(incident);

  // For grid tables at c = 1 the repair chain yields a Lipschitz table; the
  // vertices it touched form a (usually much lighter) cover.
  if (p.c == 1.0 && f.delta > 0.0 &&
      std::all_of(f.values.begin(), f.values.end(),
                  [](double v) { return std::isfinite(v); })) {
    const DenseFunction repaired = full_repair(f, dist);
    std::vector<char> touched(p.n, 0);
    for (std::uint32_t v = 0; v < p.n; ++v) {
      if (std::abs(repaired.values[v] - f.values[v]) > f.delta / 2.0) {
        touched[v] = 1;
      }
    }
    search.seed_upper_bound(touched);
  }

  const std::vector<char> cover = search.run();
  return finish_certificate(p, cover);
}

DistanceCertificate exact_distance_by_enumeration(const DenseFunction& f,
                                                  const ProductDistribution& dist,
                                                  double c) {
  if (f.dim > 4) {
    throw std::invalid_argument(
        "exact_distance_by_enumeration: supported only for d <= 4");
  }
  DistanceProblem p = make_problem(f, dist, c);
  if (p.pairs.empty()) {
    DistanceCertificate cert;
    cert.completion = f;
    return cert;
  }

  std::vector<std::uint32_t> pair_masks;
  pair_masks.reserve(p.pairs.size());
  for (const auto& [u, v] : p.pairs) {
    pair_masks.push_back((std::uint32_t{1} << u) | (std::uint32_t{1} << v));
  }

  double best_mass = kPosInf;
  std::uint32_t best_subset = 0;
  const std::uint32_t subsets = std::uint32_t{1} << p.n;
  for (std::uint32_t w = 0; w < subsets; ++w) {
    bool valid = true;
    for (std::uint32_t pm : pair_masks) {
      if ((w & pm) == 0) {
        valid = false;
        break;
      }
    }
    if (!valid) continue;
    double m = 0.0;
    for (std::uint32_t v = 0; v < p.n; ++v) {
      if (w & (std::uint32_t{1} << v)) m += p.mass[v];
    }
    if (m < best_mass - 1e-15) {
      best_mass = m;
      best_subset = w;
    }
  }

  std::vector<char> cover(p.n, 0);
  for (std::uint32_t v = 0; v < p.n; ++v) {
    if (best_subset & (std::uint32_t{1} << v)) cover[v] = 1;
  }
  return finish_certificate(p, cover);
}

DenseFunction random_lipschitz_function(int d, SeededRng& rng, double snap_delta,
                                        int anchors) {
  if (d < 1 || d > kMaxExhaustiveDim) {
    throw std::invalid_argument("random_lipschitz_function: dimension out of range");
  }
  const std::uint64_t n = std::uint64_t{1} << d;
  const std::uint64_t max_anchors = std::min<std::uint64_t>(n, 8);
  std::uint64_t k = anchors > 0 ? static_cast<std::uint64_t>(anchors)
                                : 1 + rng.uniform_below(max_anchors);
  k = std::min(k, n);

  std::vector<std::pair<Vertex, double>> partial;
  std::set<std::uint64_t> seen;
  while (partial.size() < k) {
    const std::uint64_t b = rng.uniform_below(n);
    if (!seen.insert(b).second) continue;
    const Vertex x(b, d);
    if (partial.empty()) {
      partial.emplace_back(x, 2.0 * rng.uniform01() - 1.0);
      continue;
    }
    double lower = -kPosInf;
    double upper = kPosInf;
    for (const auto& [y, v] : partial) {
      const double dist = hamming_distance(x, y);
      lower = std::max(lower, v - dist);
      upper = std::min(upper, v + dist);
    }
    partial.emplace_back(x, lower + rng.uniform01() * (upper - lower));
  }

  DenseFunction g = mcshane_extend(partial, d);
  if (snap_delta > 0.0) {
    for (double& v : g.values) v = round_to_grid(v, snap_delta);
    return DenseFunction(d, std::move(g.values), snap_delta);
  }
  return g;
}

}  // namespace liptest
