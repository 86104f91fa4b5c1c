#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace camcom {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed roster text: bad header, bad population field, duplicate code.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition or consistency requirement does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two or more states compete for the final seat with equal priority.
/// Ties are surfaced, never broken silently.
class TieError : public Error {
 public:
  TieError(const std::string& what, std::vector<std::size_t> states)
      : Error(what), states_(std::move(states)) {}

  /// Roster indices of the tied states, ascending.
  const std::vector<std::size_t>& states() const noexcept { return states_; }

 private:
  std::vector<std::size_t> states_;
};

/// An exponent-range boundary admits no unique seat transfer.
class AmbiguousTransferError : public Error {
 public:
  using IndexPair = std::pair<std::size_t, std::size_t>;

  AmbiguousTransferError(const std::string& what, std::vector<IndexPair> pairs)
      : Error(what), pairs_(std::move(pairs)) {}

  /// The (gaining, losing) index pairs tied at the boundary.
  const std::vector<IndexPair>& pairs() const noexcept { return pairs_; }

 private:
  std::vector<IndexPair> pairs_;
};

/// A named polity with an integer population count.
struct MemberState {
  std::string code;
  std::string name;
  std::int64_t population = 0;

  bool operator==(const MemberState&) const = default;
};

/// States ordered by population, largest first; equal populations are
/// ordered by code so every roster has one canonical layout.
class Roster {
 public:
  explicit Roster(std::vector<MemberState> states);

  const std::vector<MemberState>& states() const noexcept { return states_; }
  const MemberState& operator[](std::size_t i) const { return states_[i]; }
  std::size_t size() const noexcept { return states_.size(); }
  std::int64_t total_population() const noexcept { return total_population_; }

  bool operator==(const Roster&) const = default;

 private:
  std::vector<MemberState> states_;
  std::int64_t total_population_ = 0;
};

/// Integer seats per state, aligned with a roster.
class SeatVector {
 public:
  SeatVector() = default;
  explicit SeatVector(std::vector<int> seats);

  const std::vector<int>& seats() const noexcept { return seats_; }
  int operator[](std::size_t i) const { return seats_[i]; }
  std::size_t size() const noexcept { return seats_.size(); }
  long long total() const noexcept { return total_; }

  bool operator==(const SeatVector&) const = default;

 private:
  std::vector<int> seats_;
  long long total_ = 0;
};

/// Full input of a composite apportionment run.
struct ApportionmentProblem {
  Roster roster;
  int house_size = 751;
  int base_seats = 5;
  int cap = 96;
  double exponent = 1.0;

  /// Throws DomainError unless every state can reach base+1 seats and
  /// the cap leaves room above the base allocation.
  void validate() const;
};

/// Parses `code,name,population` rows. Input order is irrelevant; the
/// result is always sorted largest population first.
Roster load_roster(std::istream& in);
Roster load_roster_file(const std::string& path);

/// The 27 member states with their 1.1.2011 populations.
Roster builtin_eu27();

}  // namespace camcom
