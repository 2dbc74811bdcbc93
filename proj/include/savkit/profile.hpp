#ifndef SAVKIT_PROFILE_HPP
#define SAVKIT_PROFILE_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "savkit/errors.hpp"

namespace savkit {

using CandidateIndex = int;

struct Candidate {
  CandidateIndex index = 0;  // position in the declared roster
  std::string name;
};

/// One agent's approval set, stored as sorted unique roster indices.
class Ballot {
 public:
  explicit Ballot(std::vector<CandidateIndex> approved)
      : approved_(std::move(approved)) {
    if (approved_.empty()) throw ParameterError("empty ballot");
    std::sort(approved_.begin(), approved_.end());
    if (std::adjacent_find(approved_.begin(), approved_.end()) !=
        approved_.end())
      throw ParameterError("duplicate candidate in ballot");
    if (approved_.front() < 0)
      throw IndexError("negative candidate index in ballot");
  }

  const std::vector<CandidateIndex>& approved() const { return approved_; }
  int size() const { return static_cast<int>(approved_.size()); }
  bool approves(CandidateIndex c) const {
    return std::binary_search(approved_.begin(), approved_.end(), c);
  }

 private:
  std::vector<CandidateIndex> approved_;
};

/// Immutable election instance: a candidate roster plus approval ballots.
class Profile {
 public:
  Profile(std::vector<std::string> candidate_names,
          std::vector<std::vector<CandidateIndex>> ballots) {
    if (candidate_names.empty()) throw ParameterError("profile needs at least one candidate");
    if (ballots.empty()) throw ParameterError("profile needs at least one ballot");
    candidates_.reserve(candidate_names.size());
    for (std::size_t i = 0; i < candidate_names.size(); ++i) {
      const std::string& name = candidate_names[i];
      validate_name(name);
      if (!by_name_.emplace(name, static_cast<CandidateIndex>(i)).second)
        throw ParameterError("duplicate candidate name '" + name + "'");
      candidates_.push_back({static_cast<CandidateIndex>(i), name});
    }
    const int m = num_candidates();
    ballots_.reserve(ballots.size());
    for (auto& b : ballots) {
      Ballot ballot(std::move(b));
      if (ballot.approved().back() >= m)
        throw IndexError("ballot approves candidate index " +
                         std::to_string(ballot.approved().back()) +
                         ", roster has " + std::to_string(m));
      ballots_.push_back(std::move(ballot));
    }
  }

  int num_candidates() const { return static_cast<int>(candidates_.size()); }
  int num_ballots() const { return static_cast<int>(ballots_.size()); }

  const std::vector<Candidate>& candidates() const { return candidates_; }
  const std::vector<Ballot>& ballots() const { return ballots_; }

  const Candidate& candidate(CandidateIndex c) const {
    check_index(c);
    return candidates_[static_cast<std::size_t>(c)];
  }

  std::optional<CandidateIndex> find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  void check_index(CandidateIndex c) const {
    if (c < 0 || c >= num_candidates())
      throw IndexError("candidate index " + std::to_string(c) +
                       " out of range 0.." + std::to_string(num_candidates() - 1));
  }

  std::int64_t total_approvals() const {
    std::int64_t total = 0;
    for (const Ballot& b : ballots_) total += b.size();
    return total;
  }

 private:
  static void validate_name(const std::string& name) {
    if (name.empty()) throw ParameterError("empty candidate name");
    if (name.front() == '#')
      throw ParameterError("candidate name '" + name + "' begins with '#'");
    for (char ch : name)
      if (std::isspace(static_cast<unsigned char>(ch)))
        throw ParameterError("candidate name '" + name + "' contains whitespace");
  }

  std::vector<Candidate> candidates_;
  std::vector<Ballot> ballots_;
  std::unordered_map<std::string, CandidateIndex> by_name_;
};

/// A committee: non-empty set of candidate indices, kept sorted ascending.
class Committee {
 public:
  explicit Committee(std::vector<CandidateIndex> members)
      : members_(std::move(members)) {
    if (members_.empty()) throw SizeError("empty committee");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw ParameterError("duplicate committee member");
    if (members_.front() < 0) throw IndexError("negative committee member index");
  }

  const std::vector<CandidateIndex>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(CandidateIndex c) const {
    return std::binary_search(members_.begin(), members_.end(), c);
  }

  friend bool operator==(const Committee&, const Committee&) = default;
  friend auto operator<=>(const Committee&, const Committee&) = default;

 private:
  std::vector<CandidateIndex> members_;
};

}  // namespace savkit

#endif  // SAVKIT_PROFILE_HPP
