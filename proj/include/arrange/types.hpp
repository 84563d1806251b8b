#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arrange/errors.hpp"

namespace arrange {

// A roll-call vote. Partisans cast Y/N/O; party (leader) votes may also be
// F, which releases the members to vote at will.
enum class Vote : std::uint8_t { Yes, No, Obstruction, Free };

inline char to_char(Vote v) {
  switch (v) {
    case Vote::Yes: return 'Y';
    case Vote::No: return 'N';
    case Vote::Obstruction: return 'O';
    case Vote::Free: return 'F';
  }
  return '?';
}

// Parses "Y"/"N"/"O"/"F". Returns false on anything else.
inline bool parse_vote(const std::string& token, Vote& out) {
  if (token.size() != 1) return false;
  switch (token[0]) {
    case 'Y': out = Vote::Yes; return true;
    case 'N': out = Vote::No; return true;
    case 'O': out = Vote::Obstruction; return true;
    case 'F': out = Vote::Free; return true;
    default: return false;
  }
}

// Calendar date, used for membership intervals and per-year bucketing.
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  auto operator<=>(const Date&) const = default;
  bool valid() const {
    return year > 0 && month >= 1 && month <= 12 && day >= 1 && day <= 31;
  }
};

// Strict ISO-8601 "YYYY-MM-DD". Returns false on malformed input.
inline bool parse_date(const std::string& s, Date& out) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  auto num = [&](std::size_t pos, std::size_t len) {
    int v = 0;
    std::from_chars(s.data() + pos, s.data() + pos + len, v);
    return v;
  };
  out = Date{num(0, 4), num(5, 2), num(8, 2)};
  return out.valid();
}

inline std::string format_date(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

using PropId = std::string;

// Proposition id -> vote. Ordered so that iteration (and therefore every
// accumulation in the library) is deterministic.
using VoteMap = std::map<PropId, Vote>;

// A political party: an original one (components == {id}) or a merged one
// whose vote map is the union of its components' leader votes.
struct Party {
  std::string id;
  std::string acronym;
  VoteMap votes;
  std::vector<std::string> components;  // sorted original-party ids

  bool is_merged() const { return components.size() > 1; }
};

// One (congressman, party) membership with the votes cast under it.
// Partisan vote maps never hold Vote::Free.
struct Partisan {
  std::string congressman_id;
  std::string party_id;  // original party
  VoteMap votes;
  Date first_vote;
  Date last_vote;
};

// A discipline value (Eqs. 3-5) together with the vote count it aggregates.
struct Discipline {
  double value = 0.0;
  std::int64_t weight = 0;
};

// A full partisan-to-party assignment plus the per-partisan similarity it
// realizes. The vectors are parallel to the owning dataset's partisan list.
// Partisans excluded from the cover universe (empty vote maps) carry
// assignment to their original party, weight 0 and similarity NaN.
struct Configuration {
  double delta = 0.0;
  std::vector<std::string> party_ids;     // all parties referenced below
  std::vector<std::size_t> selected;      // indices into party_ids forming P*
  std::vector<std::int32_t> assignment;   // per partisan: index into party_ids
  std::vector<double> similarity;         // per partisan: sim with assigned party
  std::vector<std::int64_t> weight;       // per partisan: |B_a|

  std::size_t size() const { return assignment.size(); }
  bool covered(std::size_t i) const { return !std::isnan(similarity[i]); }
  const std::string& party_of(std::size_t i) const {
    return party_ids[static_cast<std::size_t>(assignment[i])];
  }
};

}  // namespace arrange
