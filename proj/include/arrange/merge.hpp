#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arrange/errors.hpp"
#include "arrange/types.hpp"

namespace arrange {

// The candidate party set produced by the merge fixpoint: every maximal
// mergeable combination of original parties, deduplicated by component set.
struct MergedPartySet {
  std::vector<Party> parties;  // sorted by id
  std::map<std::string, std::vector<std::string>> provenance;  // id -> components
  bool truncated = false;      // a combination hit the max_k growth guard
  std::vector<std::string> warnings;

  const Party* find(const std::string& id) const {
    auto it = std::lower_bound(parties.begin(), parties.end(), id,
                               [](const Party& p, const std::string& key) { return p.id < key; });
    return (it != parties.end() && it->id == id) ? &*it : nullptr;
  }
};

// C1/C2: mergeable iff the parties voted on no common proposition, or cast
// the same vote on every common one. Equality of votes, not agreement: a
// Free vote only matches another Free vote here.
inline bool can_merge(const Party& p, const Party& q) {
  auto ip = p.votes.begin();
  auto iq = q.votes.begin();
  while (ip != p.votes.end() && iq != q.votes.end()) {
    if (ip->first < iq->first) {
      ++ip;
    } else if (iq->first < ip->first) {
      ++iq;
    } else {
      if (ip->second != iq->second) return false;
      ++ip;
      ++iq;
    }
  }
  return true;
}

inline std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += '_';
    out += ids[i];
  }
  return out;
}

// Union of the two vote maps and component sets. Requires can_merge(p, q);
// the per-proposition consistency check stays as a guard against callers
// handing in conflicting parties.
inline Party merge(const Party& p, const Party& q) {
  Party out;
  out.votes = p.votes;
  for (const auto& [prop, vote] : q.votes) {
    auto [it, inserted] = out.votes.emplace(prop, vote);
    if (!inserted && it->second != vote)
      throw ConflictingVotesError("merge: " + p.id + " and " + q.id +
                                  " disagree on proposition " + prop);
  }
  std::set<std::string> comps(p.components.begin(), p.components.end());
  comps.insert(q.components.begin(), q.components.end());
  out.components.assign(comps.begin(), comps.end());
  out.id = join_ids(out.components);
  out.acronym = out.id;
  return out;
}

// Fixpoint construction of P^M: grow component sets one original party per
// round, dedup by canonical (sorted) component set, and emit a combination
// once no outside original can be merged into it. max_k caps the component
// count as a guard against the O(2^N) worst case; combinations stopped by
// the cap are emitted as-is with a warning.
inline MergedPartySet merge_all(const std::vector<Party>& originals,
                                std::optional<std::size_t> max_k = std::nullopt) {
  MergedPartySet result;
  std::set<std::vector<std::string>> emitted;   // component sets already in P^M
  std::map<std::vector<std::string>, Party> frontier;
  for (const Party& p : originals) {
    Party seed = p;
    if (seed.components.empty()) seed.components = {seed.id};
    frontier.emplace(seed.components, std::move(seed));
  }

  auto emit = [&](const Party& p) {
    if (emitted.insert(p.components).second) result.parties.push_back(p);
  };

  while (!frontier.empty()) {
    std::map<std::vector<std::string>, Party> next;
    for (const auto& [comps, p] : frontier) {
      bool grew = false;
      bool capped = false;
      for (const Party& q : originals) {
        if (std::binary_search(comps.begin(), comps.end(),
                               q.components.empty() ? q.id : q.components.front()))
          continue;  // already a component; merging it again would loop forever
        if (!can_merge(p, q)) continue;
        if (max_k && comps.size() >= *max_k) {
          capped = true;
          break;
        }
        grew = true;
        Party merged = merge(p, q);
        next.emplace(merged.components, std::move(merged));
      }
      if (!grew) {
        emit(p);
        if (capped) result.truncated = true;
      }
    }
    frontier = std::move(next);
  }

  if (result.truncated)
    result.warnings.push_back("merge_all: growth stopped by max_k; emitted combinations may "
                              "not be maximal");

  std::sort(result.parties.begin(), result.parties.end(),
            [](const Party& a, const Party& b) { return a.id < b.id; });
  for (const Party& p : result.parties) result.provenance.emplace(p.id, p.components);
  return result;
}

}  // namespace arrange
