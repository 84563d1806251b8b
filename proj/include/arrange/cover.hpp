#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "arrange/errors.hpp"
#include "arrange/merge.hpp"
#include "arrange/model.hpp"
#include "arrange/types.hpp"

namespace arrange {

// A party that can receive a partisan: it voted on every proposition the
// partisan voted on. own_descendant marks targets whose components include
// the partisan's own party; those carry similarity equal to the partisan's
// original discipline and keep every partisan coverable at any delta.
struct Option {
  std::string party_id;
  double similarity = 0.0;
  bool own_descendant = false;
};

struct EligibilitySet {
  std::string party_id;
  std::vector<std::size_t> members;  // partisan indices, sorted
};

inline bool is_own_descendant(const Party& p, const Partisan& a) {
  return std::binary_search(p.components.begin(), p.components.end(), a.party_id);
}

// True iff every proposition of `a` was voted by `p`.
inline bool votes_covered_by(const Partisan& a, const Party& p) {
  for (const auto& [prop, vote] : a.votes) {
    (void)vote;
    if (!p.votes.count(prop)) return false;
  }
  return true;
}

// One Option per party of `pm` whose vote set covers B_a, in party-id order.
// Own-party descendants are included.
inline std::vector<Option> build_options(const Partisan& a, const MergedPartySet& pm) {
  std::vector<Option> out;
  if (a.votes.empty()) return out;
  for (const Party& p : pm.parties) {
    if (a.votes.size() > p.votes.size()) continue;
    if (!votes_covered_by(a, p)) continue;
    out.push_back(Option{p.id, sim(a.votes, p.votes), is_own_descendant(p, a)});
  }
  return out;
}

// Keeps the options whose similarity is within delta of the partisan's
// original discipline.
inline std::vector<Option> good_options(std::span<const Option> options,
                                        double original_discipline, double delta) {
  std::vector<Option> out;
  const double threshold = original_discipline - delta - kEps;
  for (const Option& o : options)
    if (o.similarity >= threshold) out.push_back(o);
  return out;
}

// Precomputed option matrix for one partisan universe against one party set.
// Options are delta-independent; every per-delta step filters this table.
struct OptionTable {
  struct Entry {
    std::uint32_t party = 0;  // index into party_ids
    double similarity = 0.0;
    bool own_descendant = false;
  };
  std::vector<std::string> party_ids;            // aligned with the party set, sorted
  std::vector<std::vector<Entry>> options;       // per partisan index
  std::vector<double> original_discipline;       // NaN for excluded partisans
  std::vector<std::int64_t> weight;              // |B_a| per partisan
  std::vector<std::string> own_party;            // original party id per partisan
  std::vector<std::size_t> universe;             // indices of covered partisans

  bool covered(std::size_t i) const { return !std::isnan(original_discipline[i]); }
};

// Builds the table. Partisans with empty vote maps are excluded from the
// universe (their discipline is undefined); everyone else must find an
// own-party descendant in `pm`, which fixes the original-discipline column.
inline OptionTable build_option_table(const std::vector<Partisan>& partisans,
                                      const MergedPartySet& pm) {
  OptionTable t;
  t.party_ids.reserve(pm.parties.size());
  for (const Party& p : pm.parties) t.party_ids.push_back(p.id);
  t.options.resize(partisans.size());
  t.original_discipline.assign(partisans.size(), std::numeric_limits<double>::quiet_NaN());
  t.weight.resize(partisans.size());
  t.own_party.resize(partisans.size());

  for (std::size_t i = 0; i < partisans.size(); ++i) {
    const Partisan& a = partisans[i];
    t.weight[i] = static_cast<std::int64_t>(a.votes.size());
    t.own_party[i] = a.party_id;
    if (a.votes.empty()) continue;
    t.universe.push_back(i);
    const std::vector<Option> opts = build_options(a, pm);
    auto& entries = t.options[i];
    entries.reserve(opts.size());
    for (const Option& o : opts) {
      const auto it = std::lower_bound(t.party_ids.begin(), t.party_ids.end(), o.party_id);
      entries.push_back(Entry{static_cast<std::uint32_t>(it - t.party_ids.begin()),
                              o.similarity, o.own_descendant});
      if (o.own_descendant && std::isnan(t.original_discipline[i]))
        t.original_discipline[i] = o.similarity;
    }
  }
  return t;
}

// Wraps original parties so the same machinery runs against P instead of
// P^M (Random-SQ, status-quo option statistics).
inline MergedPartySet as_party_set(const std::vector<Party>& originals) {
  MergedPartySet s;
  s.parties = originals;
  for (Party& p : s.parties)
    if (p.components.empty()) p.components = {p.id};
  std::sort(s.parties.begin(), s.parties.end(),
            [](const Party& a, const Party& b) { return a.id < b.id; });
  for (const Party& p : s.parties) s.provenance.emplace(p.id, p.components);
  return s;
}

// The per-party eligibility sets at tolerance delta. Every covered partisan
// must land in at least one set; a miss means the ingestion guarantee
// (B_a inside the own party's vote set) was violated upstream.
inline std::vector<EligibilitySet> eligibility_sets(const OptionTable& t, double delta) {
  std::vector<EligibilitySet> sets(t.party_ids.size());
  for (std::size_t p = 0; p < t.party_ids.size(); ++p) sets[p].party_id = t.party_ids[p];
  std::vector<char> hit(t.original_discipline.size(), 0);
  for (std::size_t i : t.universe) {
    const double threshold = t.original_discipline[i] - delta - kEps;
    for (const auto& e : t.options[i]) {
      if (e.similarity >= threshold) {
        sets[e.party].members.push_back(i);
        hit[i] = 1;
      }
    }
  }
  for (std::size_t i : t.universe)
    if (!hit[i])
      throw UncoverablePartisanError("partisan #" + std::to_string(i) +
                                     " (party " + t.own_party[i] +
                                     ") has no eligible party; ingestion guarantee violated");
  return sets;
}

inline std::vector<EligibilitySet> eligibility_sets(const std::vector<Partisan>& partisans,
                                                    const MergedPartySet& pm, double delta) {
  return eligibility_sets(build_option_table(partisans, pm), delta);
}

// Greedy set cover: repeatedly take the set covering the most uncovered
// elements. Ties break on larger total set size, then smaller party id, so
// identical inputs always yield identical covers.
inline std::vector<std::string> greedy_cover(const std::vector<std::size_t>& universe,
                                             const std::vector<EligibilitySet>& sets) {
  std::size_t bound = 0;
  for (std::size_t u : universe) bound = std::max(bound, u + 1);
  for (const auto& s : sets)
    for (std::size_t m : s.members) bound = std::max(bound, m + 1);

  std::vector<char> covered(bound, 0);
  std::size_t remaining = universe.size();
  {
    std::vector<char> in_union(bound, 0);
    for (const auto& s : sets)
      for (std::size_t m : s.members) in_union[m] = 1;
    for (std::size_t u : universe)
      if (!in_union[u]) throw InfeasibleError("greedy_cover: sets do not cover the universe");
  }

  std::vector<std::string> chosen;
  std::vector<char> used(sets.size(), 0);
  while (remaining > 0) {
    std::size_t best = sets.size();
    std::size_t best_gain = 0;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      if (used[s]) continue;
      std::size_t gain = 0;
      for (std::size_t m : sets[s].members)
        if (!covered[m]) ++gain;
      if (gain == 0) continue;
      const bool better =
          best == sets.size() || gain > best_gain ||
          (gain == best_gain && (sets[s].members.size() > sets[best].members.size() ||
                                 (sets[s].members.size() == sets[best].members.size() &&
                                  sets[s].party_id < sets[best].party_id)));
      if (better) {
        best = s;
        best_gain = gain;
      }
    }
    if (best == sets.size()) throw InfeasibleError("greedy_cover: no progress possible");
    used[best] = 1;
    chosen.push_back(sets[best].party_id);
    for (std::size_t m : sets[best].members) {
      if (!covered[m]) {
        covered[m] = 1;
        // only universe members count towards completion
      }
    }
    remaining = 0;
    for (std::size_t u : universe)
      if (!covered[u]) ++remaining;
  }
  return chosen;
}

// Final assignment: each covered partisan goes to the selected party among
// his good options with maximum similarity; ties prefer an own-party
// descendant (fewer party switches), then the smaller party id. Excluded
// partisans stay with their original party, with weight 0 and similarity
// NaN, outside the selected set.
inline Configuration assign(const OptionTable& t, const std::vector<std::string>& pstar,
                            double delta) {
  Configuration cfg;
  cfg.delta = delta;
  cfg.party_ids = pstar;
  cfg.selected.resize(pstar.size());
  for (std::size_t i = 0; i < pstar.size(); ++i) cfg.selected[i] = i;

  std::vector<std::int32_t> party_index(t.party_ids.size(), -1);
  for (std::size_t i = 0; i < pstar.size(); ++i) {
    const auto it = std::lower_bound(t.party_ids.begin(), t.party_ids.end(), pstar[i]);
    if (it == t.party_ids.end() || *it != pstar[i])
      throw InfeasibleError("assign: selected party " + pstar[i] + " is not in the option table");
    party_index[static_cast<std::size_t>(it - t.party_ids.begin())] =
        static_cast<std::int32_t>(i);
  }

  const std::size_t n = t.original_discipline.size();
  cfg.assignment.assign(n, -1);
  cfg.similarity.assign(n, std::numeric_limits<double>::quiet_NaN());
  cfg.weight = t.weight;

  auto carried_index = [&cfg](const std::string& party_id) {
    for (std::size_t i = 0; i < cfg.party_ids.size(); ++i)
      if (cfg.party_ids[i] == party_id) return static_cast<std::int32_t>(i);
    cfg.party_ids.push_back(party_id);
    return static_cast<std::int32_t>(cfg.party_ids.size() - 1);
  };

  std::vector<char> in_universe(n, 0);
  for (std::size_t i : t.universe) in_universe[i] = 1;

  for (std::size_t i = 0; i < n; ++i) {
    if (!in_universe[i]) {
      cfg.assignment[i] = carried_index(t.own_party[i]);
      continue;
    }
    const double threshold = t.original_discipline[i] - delta - kEps;
    const OptionTable::Entry* pick = nullptr;
    for (const auto& e : t.options[i]) {
      if (party_index[e.party] < 0 || e.similarity < threshold) continue;
      if (!pick || e.similarity > pick->similarity + kEps) {
        pick = &e;
      } else if (std::abs(e.similarity - pick->similarity) <= kEps) {
        if (e.own_descendant != pick->own_descendant) {
          if (e.own_descendant) pick = &e;
        } else if (t.party_ids[e.party] < t.party_ids[pick->party]) {
          pick = &e;
        }
      }
    }
    if (!pick)
      throw InfeasibleError("assign: partisan #" + std::to_string(i) +
                            " has no good option inside the selected set");
    cfg.assignment[i] = party_index[pick->party];
    cfg.similarity[i] = pick->similarity;
  }
  return cfg;
}

inline Configuration assign(const std::vector<Partisan>& partisans, const MergedPartySet& pm,
                            const std::vector<std::string>& pstar, double delta) {
  return assign(build_option_table(partisans, pm), pstar, delta);
}

}  // namespace arrange
