#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arrange/errors.hpp"
#include "arrange/types.hpp"

namespace arrange {

// Comparison slack used everywhere two accumulated doubles meet. Vote counts
// stay far below 2^53, so sums of agreement bits are exact and 1e-9 absorbs
// only division-order noise.
inline constexpr double kEps = 1e-9;

// Two votes are in accordance iff they are equal or either one is Free.
inline bool agrees(Vote v1, Vote v2) {
  return v1 == v2 || v1 == Vote::Free || v2 == Vote::Free;
}

// Fraction of the common propositions on which the two vote maps agree.
// Throws EmptyIntersectionError when the key sets are disjoint: the pair is
// incomparable and must not silently score 0.
inline double sim(const VoteMap& a, const VoteMap& b) {
  std::int64_t common = 0;
  std::int64_t agreeing = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      ++common;
      if (agrees(ia->second, ib->second)) ++agreeing;
      ++ia;
      ++ib;
    }
  }
  if (common == 0) throw EmptyIntersectionError("sim: vote maps share no proposition");
  return static_cast<double>(agreeing) / static_cast<double>(common);
}

// Eq. 3: a partisan's discipline towards a party. Weight is |B_a| so the
// value can enter the vote-count-weighted means below.
inline Discipline partisan_discipline(const Partisan& a, const Party& p) {
  return Discipline{sim(a.votes, p.votes), static_cast<std::int64_t>(a.votes.size())};
}

// Eq. 4: vote-count-weighted mean of the members' disciplines towards p.
inline Discipline party_discipline(const Party& p, std::span<const Partisan> members) {
  if (members.empty()) throw NoMembersError("party_discipline: no members for " + p.id);
  double weighted_sum = 0.0;
  std::int64_t total_votes = 0;
  for (const Partisan& a : members) {
    const Discipline d = partisan_discipline(a, p);
    weighted_sum += static_cast<double>(d.weight) * d.value;
    total_votes += d.weight;
  }
  return Discipline{weighted_sum / static_cast<double>(total_votes), total_votes};
}

// Eq. 5: the same weighted mean taken over every covered partisan of a
// configuration, regardless of party.
inline Discipline overall_discipline(const Configuration& c) {
  double weighted_sum = 0.0;
  std::int64_t total_votes = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c.covered(i)) continue;
    weighted_sum += static_cast<double>(c.weight[i]) * c.similarity[i];
    total_votes += c.weight[i];
  }
  if (total_votes == 0) throw NoMembersError("overall_discipline: empty configuration");
  return Discipline{weighted_sum / static_cast<double>(total_votes), total_votes};
}

}  // namespace arrange
