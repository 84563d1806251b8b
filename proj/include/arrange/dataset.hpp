#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arrange/csv.hpp"
#include "arrange/errors.hpp"
#include "arrange/types.hpp"

namespace arrange {

inline constexpr const char* kVotesHeader =
    "proposition_id,date,congressman_id,congressman_name,party,vote";
inline constexpr const char* kLeadersHeader = "proposition_id,party,vote";

// One row of votes.csv: a partisan vote. Never Free.
struct RollCallRecord {
  PropId proposition;
  Date date;
  std::string congressman_id;
  std::string congressman_name;
  std::string party;
  Vote vote = Vote::Yes;

  bool operator==(const RollCallRecord&) const = default;
};

// One row of leaders.csv: the party position on a proposition.
struct LeaderVoteRecord {
  PropId proposition;
  std::string party;
  Vote vote = Vote::Yes;

  bool operator==(const LeaderVoteRecord&) const = default;
};

struct ParsedVotes {
  std::vector<RollCallRecord> records;
  std::vector<LineDiagnostic> diagnostics;
};

struct ParsedLeaders {
  std::vector<LeaderVoteRecord> records;
  std::vector<LineDiagnostic> diagnostics;
};

inline ParsedVotes parse_votes(std::istream& is) {
  ParsedVotes out;
  const auto rows = csv::read(is, kVotesHeader, out.diagnostics);
  for (const auto& row : rows) {
    const auto& f = row.fields;
    RollCallRecord r;
    r.proposition = f[0];
    r.congressman_id = f[2];
    r.congressman_name = f[3];
    r.party = f[4];
    if (r.proposition.empty() || r.congressman_id.empty() || r.party.empty()) {
      out.diagnostics.push_back({row.line, "empty required field"});
      continue;
    }
    if (!parse_date(f[1], r.date)) {
      out.diagnostics.push_back({row.line, "bad date \"" + f[1] + "\""});
      continue;
    }
    if (!parse_vote(f[5], r.vote)) {
      out.diagnostics.push_back({row.line, "bad vote \"" + f[5] + "\""});
      continue;
    }
    if (r.vote == Vote::Free) {
      out.diagnostics.push_back({row.line, "vote F is not a legal partisan vote"});
      continue;
    }
    out.records.push_back(std::move(r));
  }
  return out;
}

inline ParsedLeaders parse_leaders(std::istream& is) {
  ParsedLeaders out;
  const auto rows = csv::read(is, kLeadersHeader, out.diagnostics);
  for (const auto& row : rows) {
    const auto& f = row.fields;
    LeaderVoteRecord r;
    r.proposition = f[0];
    r.party = f[1];
    if (r.proposition.empty() || r.party.empty()) {
      out.diagnostics.push_back({row.line, "empty required field"});
      continue;
    }
    if (!parse_vote(f[2], r.vote)) {
      out.diagnostics.push_back({row.line, "bad vote \"" + f[2] + "\""});
      continue;
    }
    out.records.push_back(std::move(r));
  }
  return out;
}

inline void write_votes_csv(std::span<const RollCallRecord> records, std::ostream& os) {
  os << kVotesHeader << '\n';
  for (const auto& r : records)
    csv::write_row(os, {r.proposition, format_date(r.date), r.congressman_id,
                        r.congressman_name, r.party, std::string(1, to_char(r.vote))});
}

inline void write_leaders_csv(std::span<const LeaderVoteRecord> records, std::ostream& os) {
  os << kLeadersHeader << '\n';
  for (const auto& r : records)
    csv::write_row(os, {r.proposition, r.party, std::string(1, to_char(r.vote))});
}

struct Diagnostics {
  std::vector<LineDiagnostic> vote_issues;
  std::vector<LineDiagnostic> leader_issues;
  std::int64_t dropped_votes_without_leader = 0;
  std::int64_t duplicate_votes = 0;
  std::int64_t duplicate_leader_votes = 0;
  std::vector<std::string> zero_vote_partisans;  // partisan labels
  std::vector<std::string> warnings;
};

// The canonical in-memory model after leader-vote filtering: propositions
// with dates, original parties with their leader vote maps, and partisan
// memberships split on every party switch.
struct Dataset {
  std::map<PropId, Date> propositions;
  std::vector<Party> parties;      // sorted by id
  std::vector<Partisan> partisans;  // grouped by congressman, chronological
  std::vector<std::size_t> partisan_ordinal;  // membership ordinal per congressman
  std::map<std::string, std::string> congressman_names;
  Diagnostics diagnostics;

  const Party* party(const std::string& id) const {
    auto it = std::lower_bound(parties.begin(), parties.end(), id,
                               [](const Party& p, const std::string& key) { return p.id < key; });
    return (it != parties.end() && it->id == id) ? &*it : nullptr;
  }

  std::string partisan_label(std::size_t i) const {
    return partisans[i].congressman_id + "/" + partisans[i].party_id + "/" +
           std::to_string(partisan_ordinal[i]);
  }
};

// Assembles the Dataset: filters partisan votes through the leader votes
// (a vote with no declared leader position is dropped and counted), splits
// congressman histories into memberships at every party change, and
// flags memberships whose votes were all filtered away.
inline Dataset build_dataset(std::vector<RollCallRecord> votes,
                             const std::vector<LeaderVoteRecord>& leaders,
                             Diagnostics diagnostics = {}) {
  Dataset ds;
  ds.diagnostics = std::move(diagnostics);

  // Leader vote maps; conflicting duplicates are fatal, identical ones counted.
  std::map<std::string, VoteMap> leader_votes;  // party -> prop -> vote
  for (const auto& r : leaders) {
    auto [it, inserted] = leader_votes[r.party].emplace(r.proposition, r.vote);
    if (!inserted) {
      if (it->second != r.vote)
        throw ConflictingLeaderVotesError("conflicting leader votes for (" + r.proposition +
                                          ", " + r.party + ")");
      ++ds.diagnostics.duplicate_leader_votes;
    }
  }

  // Stable chronological order per congressman; file order breaks date ties.
  std::stable_sort(votes.begin(), votes.end(), [](const RollCallRecord& a,
                                                  const RollCallRecord& b) {
    if (a.congressman_id != b.congressman_id) return a.congressman_id < b.congressman_id;
    return a.date < b.date;
  });

  std::map<std::string, std::size_t> ordinals;
  for (std::size_t i = 0; i < votes.size();) {
    const std::string& cid = votes[i].congressman_id;
    std::size_t end = i;
    while (end < votes.size() && votes[end].congressman_id == cid) ++end;
    ds.congressman_names.emplace(cid, votes[i].congressman_name);

    std::size_t m = i;
    while (m < end) {
      const std::string& party = votes[m].party;
      std::size_t m_end = m;
      while (m_end < end && votes[m_end].party == party) ++m_end;

      Partisan a;
      a.congressman_id = cid;
      a.party_id = party;
      a.first_vote = votes[m].date;
      a.last_vote = votes[m_end - 1].date;
      const VoteMap* lv = nullptr;
      if (auto it = leader_votes.find(party); it != leader_votes.end()) lv = &it->second;
      for (std::size_t k = m; k < m_end; ++k) {
        const auto& rec = votes[k];
        if (!lv || !lv->count(rec.proposition)) {
          ++ds.diagnostics.dropped_votes_without_leader;
          continue;
        }
        auto [it, inserted] = a.votes.emplace(rec.proposition, rec.vote);
        if (!inserted) {
          if (it->second != rec.vote)
            ds.diagnostics.vote_issues.push_back(
                {0, "conflicting duplicate vote by " + cid + " on " + rec.proposition +
                        " under " + party + "; first kept"});
          ++ds.diagnostics.duplicate_votes;
        }
      }
      ds.partisan_ordinal.push_back(ordinals[cid]++);
      ds.partisans.push_back(std::move(a));
      m = m_end;
    }
    i = end;
  }

  // Proposition dates come from the vote records; first record wins.
  for (const auto& r : votes) {
    auto [it, inserted] = ds.propositions.emplace(r.proposition, r.date);
    if (!inserted && it->second != r.date)
      ds.diagnostics.vote_issues.push_back(
          {0, "proposition " + r.proposition + " appears with multiple dates; first kept"});
  }

  // Original parties: everything seen in either file.
  std::map<std::string, Party> parties;
  for (auto& [party_id, vm] : leader_votes) {
    Party p;
    p.id = party_id;
    p.acronym = party_id;
    p.votes = std::move(vm);
    p.components = {party_id};
    parties.emplace(party_id, std::move(p));
  }
  for (const auto& r : votes) {
    if (!parties.count(r.party)) {
      Party p;
      p.id = r.party;
      p.acronym = r.party;
      p.components = {r.party};
      parties.emplace(r.party, std::move(p));
    }
  }
  ds.parties.reserve(parties.size());
  for (auto& [id, p] : parties) ds.parties.push_back(std::move(p));

  for (std::size_t i = 0; i < ds.partisans.size(); ++i)
    if (ds.partisans[i].votes.empty())
      ds.diagnostics.zero_vote_partisans.push_back(ds.partisan_label(i));

  return ds;
}

inline Dataset build_dataset(std::istream& votes_stream, std::istream& leaders_stream) {
  ParsedVotes pv = parse_votes(votes_stream);
  ParsedLeaders pl = parse_leaders(leaders_stream);
  Diagnostics d;
  d.vote_issues = std::move(pv.diagnostics);
  d.leader_issues = std::move(pl.diagnostics);
  return build_dataset(std::move(pv.records), pl.records, std::move(d));
}

struct ValidationReport {
  std::vector<std::string> violations;
  std::size_t congressmen = 0;
  std::size_t partisans = 0;
  std::size_t parties = 0;
  std::size_t propositions = 0;
  std::int64_t partisan_votes = 0;
  std::int64_t leader_votes = 0;
  std::size_t zero_vote_partisans = 0;

  bool ok() const { return violations.empty(); }
};

// Checks every Dataset invariant and collects the summary counts.
inline ValidationReport validate(const Dataset& ds) {
  ValidationReport rep;
  rep.partisans = ds.partisans.size();
  rep.parties = ds.parties.size();
  rep.propositions = ds.propositions.size();
  rep.congressmen = ds.congressman_names.size();
  rep.zero_vote_partisans = ds.diagnostics.zero_vote_partisans.size();
  for (const Party& p : ds.parties) {
    rep.leader_votes += static_cast<std::int64_t>(p.votes.size());
    if (p.components.size() != 1 || p.components[0] != p.id)
      rep.violations.push_back("party " + p.id + " is not an original singleton party");
  }

  for (std::size_t i = 0; i < ds.partisans.size(); ++i) {
    const Partisan& a = ds.partisans[i];
    rep.partisan_votes += static_cast<std::int64_t>(a.votes.size());
    const Party* own = ds.party(a.party_id);
    if (!own) {
      rep.violations.push_back("partisan " + ds.partisan_label(i) + " references unknown party");
      continue;
    }
    for (const auto& [prop, vote] : a.votes) {
      if (vote == Vote::Free)
        rep.violations.push_back("partisan " + ds.partisan_label(i) + " holds a F vote on " +
                                 prop);
      if (!own->votes.count(prop)) {
        rep.violations.push_back("partisan " + ds.partisan_label(i) + " voted on " + prop +
                                 " without a leader vote (ingestion guarantee broken)");
        break;
      }
    }
    if (a.last_vote < a.first_vote)
      rep.violations.push_back("partisan " + ds.partisan_label(i) + " has a reversed interval");
  }

  // Memberships of one congressman must be chronological and non-overlapping.
  for (std::size_t i = 0; i + 1 < ds.partisans.size(); ++i) {
    const Partisan& a = ds.partisans[i];
    const Partisan& b = ds.partisans[i + 1];
    if (a.congressman_id != b.congressman_id) continue;
    if (b.first_vote < a.first_vote)
      rep.violations.push_back("memberships of " + a.congressman_id +
                               " are not ordered by first vote");
    else if (b.first_vote < a.last_vote)
      rep.violations.push_back("memberships of " + a.congressman_id + " overlap in time");
  }
  return rep;
}

// FNV-1a over a canonical dump; report meta uses it to pin the input.
inline std::string dataset_digest(const Dataset& ds) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  for (const auto& [prop, date] : ds.propositions) {
    mix(prop);
    mix(format_date(date));
  }
  for (const Party& p : ds.parties) {
    mix(p.id);
    for (const auto& [prop, vote] : p.votes) {
      mix(prop);
      mix(std::string(1, to_char(vote)));
    }
  }
  for (std::size_t i = 0; i < ds.partisans.size(); ++i) {
    const Partisan& a = ds.partisans[i];
    mix(ds.partisan_label(i));
    mix(format_date(a.first_vote));
    mix(format_date(a.last_vote));
    for (const auto& [prop, vote] : a.votes) {
      mix(prop);
      mix(std::string(1, to_char(vote)));
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace arrange
