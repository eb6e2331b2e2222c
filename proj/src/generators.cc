// Copyright 2026 The snc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "snc/generators.h"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "snc/errors.h"

namespace snc {
namespace {

constexpr std::array<InstanceClass, 5> kClasses = {
    InstanceClass::kTournament,
    InstanceClass::kTournamentMinusMatching,
    InstanceClass::kTournamentMinusStar,
    InstanceClass::kTournamentMinusMatchingPlusStar,
    InstanceClass::kDegeneratePartition,
};

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Arc RandomOrientation(VertexId u, VertexId v, Rng& rng) {
  return rng.coin() ? Arc{u, v} : Arc{v, u};
}

std::vector<Arc> TournamentArcs(std::size_t n, Rng& rng) {
  std::vector<Arc> arcs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) arcs.push_back(RandomOrientation(u, v, rng));
  return arcs;
}

// Drops every arc between the pairs in `remove`.
OrientedGraph WithoutPairs(std::size_t n, std::vector<Arc> arcs,
                           const std::vector<MissingEdge>& remove) {
  std::erase_if(arcs, [&](const Arc& a) {
    const MissingEdge e = MissingEdge::Of(a.from, a.to);
    return std::find(remove.begin(), remove.end(), e) != remove.end();
  });
  return OrientedGraph(n, arcs);
}

// A matching of random size on `pool`.
std::vector<MissingEdge> RandomMatching(std::vector<VertexId> pool, Rng& rng) {
  for (std::size_t i = pool.size(); i > 1; --i)
    std::swap(pool[i - 1], pool[rng.below(i)]);
  const std::size_t k = rng.between(0, pool.size() / 2);
  std::vector<MissingEdge> m;
  for (std::size_t i = 0; i < k; ++i)
    m.push_back(MissingEdge::Of(pool[2 * i], pool[2 * i + 1]));
  return m;
}

// Star at a random center with between 2 and n - 1 leaves.
std::vector<MissingEdge> RandomStar(std::size_t n, Rng& rng, VertexId* center) {
  *center = static_cast<VertexId>(rng.below(n));
  std::vector<VertexId> others;
  for (VertexId v = 0; v < n; ++v)
    if (v != *center) others.push_back(v);
  for (std::size_t i = others.size(); i > 1; --i)
    std::swap(others[i - 1], others[rng.below(i)]);
  const std::size_t k = rng.between(2, n - 1);
  std::vector<MissingEdge> star;
  for (std::size_t i = 0; i < k; ++i)
    star.push_back(MissingEdge::Of(*center, others[i]));
  return star;
}

std::vector<Arc> Relabel(std::span<const Arc> arcs,
                         std::span<const VertexId> perm) {
  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (const Arc& a : arcs) out.push_back({perm[a.from], perm[a.to]});
  return out;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("empty range");
  // Rejection sampling from the largest multiple of bound.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::vector<VertexId> Rng::permutation(std::size_t n) {
  std::vector<VertexId> p(n);
  for (VertexId v = 0; v < n; ++v) p[v] = v;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
  return p;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return SplitMix(SplitMix(master) ^ index);
}

std::string_view class_name(InstanceClass c) {
  switch (c) {
    case InstanceClass::kTournament: return "tournament";
    case InstanceClass::kTournamentMinusMatching: return "tournament-minus-matching";
    case InstanceClass::kTournamentMinusStar: return "tournament-minus-star";
    case InstanceClass::kTournamentMinusMatchingPlusStar:
      return "tournament-minus-matching-plus-star";
    case InstanceClass::kDegeneratePartition: return "degenerate-partition";
  }
  return "unknown";
}

InstanceClass parse_class(std::string_view name) {
  for (InstanceClass c : kClasses)
    if (class_name(c) == name) return c;
  throw InputError("unknown instance class '" + std::string(name) + "'");
}

std::span<const InstanceClass> all_classes() { return kClasses; }

OrientedGraph figure2_instance() {
  const std::vector<Arc> arcs = {{1, 0}, {3, 0}, {4, 0}, {0, 5}, {1, 2},
                                 {4, 1}, {5, 1}, {3, 2}, {4, 2}, {2, 5},
                                 {4, 3}, {5, 3}, {5, 4}};
  return OrientedGraph(6, arcs);
}

LabelTable figure2_labels() { return LabelTable({"a", "b", "c", "d", "x", "z"}); }

OrientedGraph random_tournament(std::size_t n, Rng& rng) {
  return OrientedGraph(n, TournamentArcs(n, rng));
}

GeneratedInstance generate(InstanceClass cls, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("instance size must be positive");
  Rng rng(seed);
  switch (cls) {
    case InstanceClass::kTournament:
      return {cls, random_tournament(n, rng), std::nullopt};
    case InstanceClass::kTournamentMinusMatching: {
      std::vector<Arc> arcs = TournamentArcs(n, rng);
      return {cls, WithoutPairs(n, std::move(arcs), RandomMatching(rng.permutation(n), rng)),
              std::nullopt};
    }
    case InstanceClass::kTournamentMinusStar:
    case InstanceClass::kTournamentMinusMatchingPlusStar: {
      if (n < 3) throw InputError("star classes need at least 3 vertices");
      std::vector<Arc> arcs = TournamentArcs(n, rng);
      VertexId center = 0;
      std::vector<MissingEdge> remove = RandomStar(n, rng, &center);
      if (cls == InstanceClass::kTournamentMinusMatchingPlusStar) {
        std::vector<VertexId> pool;
        for (VertexId v = 0; v < n; ++v)
          if (v != center) pool.push_back(v);
        for (const MissingEdge& e : RandomMatching(std::move(pool), rng))
          remove.push_back(e);
      }
      return {cls, WithoutPairs(n, std::move(arcs), remove), std::nullopt};
    }
    case InstanceClass::kDegeneratePartition: {
      const std::size_t n_b = rng.between(0, n / 2);
      return generate_degenerate(n - n_b, n_b, rng.next());
    }
  }
  throw InputError("unknown instance class");
}

OrientedGraph random_two_degenerate(std::size_t n, Rng& rng, bool maximal) {
  std::vector<Arc> arcs;
  for (VertexId v = 1; v < n; ++v) {
    const std::size_t cap = std::min<std::size_t>(v, 2);
    const std::size_t k = maximal ? cap : rng.between(0, cap);
    VertexId first = static_cast<VertexId>(rng.below(v));
    arcs.push_back(RandomOrientation(v, first, rng));
    if (k == 0) arcs.pop_back();
    if (k == 2) {
      VertexId second = static_cast<VertexId>(rng.below(v - 1));
      if (second >= first) ++second;
      arcs.push_back(RandomOrientation(v, second, rng));
    }
  }
  return OrientedGraph(n, arcs);
}

GeneratedInstance generate_degenerate(std::size_t n_a, std::size_t n_b,
                                      std::uint64_t seed) {
  const std::size_t n = n_a + n_b;
  if (n == 0) throw InputError("instance size must be positive");
  Rng rng(seed);
  std::vector<Arc> arcs = random_two_degenerate(n_a, rng, false).arcs();
  for (VertexId b = static_cast<VertexId>(n_a); b < n; ++b)
    for (VertexId a = 0; a < n_a; ++a) switch (rng.below(3)) {
        case 1: arcs.push_back({a, b}); break;
        case 2: arcs.push_back({b, a}); break;
        default: break;
      }
  const std::vector<VertexId> perm = rng.permutation(n);
  PartitionSpec part{VertexSet(n), VertexSet(n)};
  for (VertexId v = 0; v < n; ++v) (v < n_a ? part.a_set : part.b_set).insert(perm[v]);
  return {InstanceClass::kDegeneratePartition,
          OrientedGraph(n, Relabel(arcs, perm)), std::move(part)};
}

ModularTournament random_modular_tournament(
    std::span<const std::size_t> block_sizes, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t k = block_sizes.size();
  std::vector<std::size_t> start(k + 1, 0);
  for (std::size_t b = 0; b < k; ++b) {
    if (block_sizes[b] == 0) throw InputError("blocks must be nonempty");
    start[b + 1] = start[b] + block_sizes[b];
  }
  const std::size_t n = start[k];
  const OrientedGraph quotient = random_tournament(k, rng);
  std::vector<Arc> arcs;
  for (std::size_t b = 0; b < k; ++b) {
    for (const Arc& a : random_tournament(block_sizes[b], rng).arcs())
      arcs.push_back({static_cast<VertexId>(start[b] + a.from),
                      static_cast<VertexId>(start[b] + a.to)});
  }
  for (const Arc& q : quotient.arcs())
    for (std::size_t u = start[q.from]; u < start[q.from + 1]; ++u)
      for (std::size_t v = start[q.to]; v < start[q.to + 1]; ++v)
        arcs.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});

  const std::vector<VertexId> perm = rng.permutation(n);
  std::vector<std::vector<VertexId>> blocks(k);
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t v = start[b]; v < start[b + 1]; ++v) blocks[b].push_back(perm[v]);
    std::sort(blocks[b].begin(), blocks[b].end());
  }
  return {OrientedGraph(n, Relabel(arcs, perm)), ModulePartition(std::move(blocks), n)};
}

}  // namespace snc
