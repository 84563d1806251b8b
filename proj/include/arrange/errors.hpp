#pragma once

#include <stdexcept>
#include <string>

namespace arrange {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// sim() over vote maps whose key sets do not intersect. The pair is
// incomparable; callers must not treat this as similarity 0.
class EmptyIntersectionError : public Error {
 public:
  using Error::Error;
};

// Discipline aggregation over an empty member list / configuration.
class NoMembersError : public Error {
 public:
  using Error::Error;
};

// merge() called on parties that disagree on a common proposition.
class ConflictingVotesError : public Error {
 public:
  using Error::Error;
};

// A partisan belongs to no eligibility set; indicates an ingestion
// violation (B_a not a subset of the own party's votes), never a
// legitimate outcome.
class UncoverablePartisanError : public Error {
 public:
  using Error::Error;
};

// Cover or assignment cannot be completed (union of sets != universe,
// or a partisan has no eligible party inside the selected set).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// quality_signals() over configurations with different partisan universes.
class UniverseMismatchError : public Error {
 public:
  using Error::Error;
};

// gini() over an empty size list or sizes summing to zero.
class EmptyOrZeroError : public Error {
 public:
  using Error::Error;
};

// golosov() over shares that are non-positive or do not sum to one.
class BadSharesError : public Error {
 public:
  using Error::Error;
};

// Vote-matrix export over an empty date window.
class EmptyWindowError : public Error {
 public:
  using Error::Error;
};

// Malformed CSV header or stream-level format problem.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Two leader records for the same (proposition, party) with different votes.
class ConflictingLeaderVotesError : public Error {
 public:
  using Error::Error;
};

// Invalid generator or driver parameters.
class BadParamsError : public Error {
 public:
  using Error::Error;
};

}  // namespace arrange
