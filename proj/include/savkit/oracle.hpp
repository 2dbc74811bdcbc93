#ifndef SAVKIT_ORACLE_HPP
#define SAVKIT_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "savkit/errors.hpp"
#include "savkit/profile.hpp"
#include "savkit/rational.hpp"
#include "savkit/rules.hpp"

namespace savkit {

inline constexpr int kMaxOracleCandidates = 20;

struct OracleReport {
  Rule rule = Rule::AV;
  std::optional<int> k;  // nullopt = any size
  Rational optimal_score;
  std::vector<Committee> optimal_committees;
  std::uint64_t subsets_evaluated = 0;
};

namespace detail {

inline void check_oracle_scale(int m) {
  if (m > kMaxOracleCandidates)
    throw EnumerationLimitError(
        "brute-force enumeration limited to m <= " +
        std::to_string(kMaxOracleCandidates) + " candidates, got m=" +
        std::to_string(m));
}

inline bool next_combination(std::vector<CandidateIndex>& comb, int m) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[static_cast<std::size_t>(i)] < m - k + i) {
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

// Evaluates every size-k subset in lexicographic order against `report`.
inline void sweep_size(const Profile& profile, Rule rule, int k,
                       OracleReport& report) {
  std::vector<CandidateIndex> comb(static_cast<std::size_t>(k));
  std::iota(comb.begin(), comb.end(), 0);
  do {
    Committee committee(comb);
    const Rational score = committee_score(profile, rule, committee);
    ++report.subsets_evaluated;
    if (report.optimal_committees.empty() || report.optimal_score < score) {
      report.optimal_score = score;
      report.optimal_committees.clear();
      report.optimal_committees.push_back(std::move(committee));
    } else if (score == report.optimal_score) {
      report.optimal_committees.push_back(std::move(committee));
    }
  } while (next_combination(comb, profile.num_candidates()));
}

}  // namespace detail

/// Exact maximum over all C(m, k) committees of size k, by definition.
inline OracleReport oracle_fixed_k(const Profile& profile, Rule rule, int k) {
  detail::check_oracle_scale(profile.num_candidates());
  detail::check_committee_size(k, profile.num_candidates());
  OracleReport report;
  report.rule = rule;
  report.k = k;
  detail::sweep_size(profile, rule, k, report);
  return report;
}

/// Exact maximum over all 2^m - 1 non-empty committees. Sizes are swept in
/// increasing order and subsets lexicographically within a size, so the
/// report is deterministic.
inline OracleReport oracle_any_size(const Profile& profile, Rule rule) {
  detail::check_oracle_scale(profile.num_candidates());
  OracleReport report;
  report.rule = rule;
  for (int k = 1; k <= profile.num_candidates(); ++k)
    detail::sweep_size(profile, rule, k, report);
  return report;
}

/// Fault injection for harness self-tests: emulate a winner computation
/// whose AV tally over-counts by one.
enum class Fault { None, AvOvercount };

struct CheckResult {
  bool ok = false;
  std::string discrepancy;  // empty when ok
  OracleReport oracle;
  WinnersResult lexicographic;
  WinnersResult enumerated;
};

namespace detail {

inline std::string committee_names(const Profile& profile, const Committee& w) {
  std::string s = "{";
  for (std::size_t i = 0; i < w.members().size(); ++i) {
    if (i) s += ",";
    s += profile.candidate(w.members()[i]).name;
  }
  return s + "}";
}

}  // namespace detail

/// Certifies the polynomial-time winner algorithms against the brute-force
/// oracle: exact score agreement, lexicographic winner membership in the
/// optimal set, and (non-truncated) enumeration equal to the optimal set of
/// the winning size. `k` of nullopt checks the any-size problem.
inline CheckResult equivalence_check(const Profile& profile, Rule rule,
                                     std::optional<int> k,
                                     Fault fault = Fault::None) {
  CheckResult result;
  result.oracle = k ? oracle_fixed_k(profile, rule, *k)
                    : oracle_any_size(profile, rule);

  // Cap large enough that ties never truncate within the oracle's m <= 20
  // reach: C(20, 10) < 2^20.
  const TiePolicy enumerate = TiePolicy::enumerate_all(std::uint64_t{1} << 20);
  if (k) {
    result.lexicographic = winners_fixed_k(profile, rule, *k, TiePolicy::lexicographic());
    result.enumerated = winners_fixed_k(profile, rule, *k, enumerate);
  } else {
    result.lexicographic = winners_any_size(profile, rule, TiePolicy::lexicographic());
    result.enumerated = winners_any_size(profile, rule, enumerate);
  }

  if (fault == Fault::AvOvercount && rule == Rule::AV) {
    result.lexicographic.score += Rational(1);
    result.enumerated.score += Rational(1);
  }

  std::ostringstream diff;
  const Committee& lex_committee = result.lexicographic.committees.front();
  if (result.lexicographic.score != result.oracle.optimal_score) {
    diff << "algorithm committee " << detail::committee_names(profile, lex_committee)
         << " scores " << result.lexicographic.score.str()
         << " but oracle optimum is " << result.oracle.optimal_score.str() << "; ";
  } else {
    const auto& optimal = result.oracle.optimal_committees;
    if (std::find(optimal.begin(), optimal.end(), lex_committee) == optimal.end())
      diff << "lexicographic committee " << detail::committee_names(profile, lex_committee)
           << " not among the " << optimal.size() << " oracle-optimal committees; ";
  }

  if (result.enumerated.score != result.oracle.optimal_score) {
    diff << "enumerated score " << result.enumerated.score.str()
         << " != oracle optimum " << result.oracle.optimal_score.str() << "; ";
  } else if (result.enumerated.truncated) {
    diff << "enumeration unexpectedly truncated; ";
  } else {
    std::vector<Committee> expected;
    for (const Committee& w : result.oracle.optimal_committees)
      if (w.size() == result.enumerated.k) expected.push_back(w);
    if (result.enumerated.committees != expected)
      diff << "enumerated " << result.enumerated.committees.size()
           << " committees of size " << result.enumerated.k << ", oracle has "
           << expected.size() << " optimal committees of that size; ";
  }

  if (!k) {
    // Winning-size conventions: smallest optimal size for CSAV/MSAV, the
    // full roster for the monotone AV/SAV objectives.
    int expected_k = profile.num_candidates();
    if (rule == Rule::CSAV || rule == Rule::MSAV) {
      expected_k = result.oracle.optimal_committees.front().size();
      for (const Committee& w : result.oracle.optimal_committees)
        expected_k = std::min(expected_k, w.size());
    }
    if (result.enumerated.k != expected_k)
      diff << "any-size winner has k=" << result.enumerated.k << ", expected k="
           << expected_k << "; ";
  }

  result.discrepancy = diff.str();
  result.ok = result.discrepancy.empty();
  return result;
}

}  // namespace savkit

#endif  // SAVKIT_ORACLE_HPP
