#ifndef SAVKIT_RULES_HPP
#define SAVKIT_RULES_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "savkit/errors.hpp"
#include "savkit/profile.hpp"
#include "savkit/rational.hpp"

namespace savkit {

enum class Rule { AV, SAV, CSAV, MSAV };

constexpr std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::AV: return "av";
    case Rule::SAV: return "sav";
    case Rule::CSAV: return "csav";
    case Rule::MSAV: return "msav";
  }
  return "?";
}

inline std::optional<Rule> rule_from_string(std::string_view s) {
  if (s == "av") return Rule::AV;
  if (s == "sav") return Rule::SAV;
  if (s == "csav") return Rule::CSAV;
  if (s == "msav") return Rule::MSAV;
  return std::nullopt;
}

constexpr Rule kAllRules[] = {Rule::AV, Rule::SAV, Rule::CSAV, Rule::MSAV};

/// What to do when candidate scores tie at the committee boundary.
struct TiePolicy {
  enum class Mode {
    Lexicographic,  // break ties toward lower roster index, one committee
    EnumerateAll,   // return every optimal committee, up to `max_committees`
  };

  Mode mode = Mode::Lexicographic;
  std::uint64_t max_committees = 1000;

  static TiePolicy lexicographic() { return {Mode::Lexicographic, 1000}; }
  static TiePolicy enumerate_all(std::uint64_t cap = 1000) {
    if (cap < 1) throw ParameterError("enumeration cap must be >= 1");
    return {Mode::EnumerateAll, cap};
  }
};

struct WinnersResult {
  Rule rule = Rule::AV;
  int k = 0;
  Rational score;
  std::vector<Committee> committees;  // singleton under Lexicographic
  bool truncated = false;             // EnumerateAll hit its cap
};

namespace detail {

inline void check_committee_size(int k, int m) {
  if (k < 1 || k > m)
    throw SizeError("committee size k=" + std::to_string(k) +
                    " out of range 1.." + std::to_string(m));
}

// Per-ballot denominator of a candidate's score contribution: a ballot of
// size s adds 1/d to each approved candidate, where d depends on the rule
// and the target committee size k.
inline std::int64_t score_denominator(Rule rule, int ballot_size, int k) {
  switch (rule) {
    case Rule::AV: return 1;
    case Rule::SAV: return ballot_size;
    case Rule::CSAV: return k;
    case Rule::MSAV: return std::min(ballot_size, k);
  }
  throw std::logic_error("unreachable rule");
}

// Candidate indices ranked by (score descending, roster index ascending).
// The first k entries of this ranking are the lexicographic size-k winners.
inline std::vector<CandidateIndex> selection_order(
    const std::vector<Rational>& scores) {
  std::vector<CandidateIndex> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](CandidateIndex a, CandidateIndex b) {
    if (scores[a] != scores[b]) return scores[b] < scores[a];
    return a < b;
  });
  return order;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace detail

/// Number of ballots approving candidate c.
inline std::int64_t approvals_count(const Profile& profile, CandidateIndex c) {
  profile.check_index(c);
  std::int64_t count = 0;
  for (const Ballot& b : profile.ballots())
    if (b.approves(c)) ++count;
  return count;
}

/// Scores for all candidates with respect to committee size k, in roster
/// order. Ballots are bucketed by size first so the rational additions are
/// proportional to (candidates x distinct ballot sizes), not to the number
/// of approvals.
inline std::vector<Rational> candidate_scores(const Profile& profile, Rule rule,
                                              int k) {
  const int m = profile.num_candidates();
  detail::check_committee_size(k, m);
  std::vector<std::vector<const Ballot*>> by_size(
      static_cast<std::size_t>(m) + 1);
  for (const Ballot& b : profile.ballots())
    by_size[static_cast<std::size_t>(b.size())].push_back(&b);

  std::vector<Rational> scores(static_cast<std::size_t>(m));
  std::vector<std::int64_t> tally(static_cast<std::size_t>(m), 0);
  std::vector<CandidateIndex> touched;
  for (int s = 1; s <= m; ++s) {
    const auto& bucket = by_size[static_cast<std::size_t>(s)];
    if (bucket.empty()) continue;
    for (const Ballot* b : bucket)
      for (CandidateIndex c : b->approved()) {
        if (tally[static_cast<std::size_t>(c)] == 0) touched.push_back(c);
        ++tally[static_cast<std::size_t>(c)];
      }
    const std::int64_t d = detail::score_denominator(rule, s, k);
    for (CandidateIndex c : touched) {
      scores[static_cast<std::size_t>(c)] +=
          Rational(tally[static_cast<std::size_t>(c)], d);
      tally[static_cast<std::size_t>(c)] = 0;
    }
    touched.clear();
  }
  return scores;
}

/// Score of a single candidate with respect to committee size k:
///   AV    approvals(c)                        (independent of k)
///   SAV   sum over approving ballots of 1/|A_i|   (independent of k)
///   CSAV  approvals(c) / k
///   MSAV  sum over approving ballots of 1/min(|A_i|, k)
inline Rational candidate_score(const Profile& profile, Rule rule, int k,
                                CandidateIndex c) {
  detail::check_committee_size(k, profile.num_candidates());
  profile.check_index(c);
  std::map<std::int64_t, std::int64_t> count_by_denominator;
  for (const Ballot& b : profile.ballots())
    if (b.approves(c))
      ++count_by_denominator[detail::score_denominator(rule, b.size(), k)];
  Rational score;
  for (const auto& [d, count] : count_by_denominator) score += Rational(count, d);
  return score;
}

/// Definitional committee objective, evaluated ballot by ballot:
///   AV    sum |W n A_i|
///   SAV   sum |W n A_i| / |A_i|
///   CSAV  sum |W n A_i| / |W|
///   MSAV  sum |W n A_i| / min(|A_i|, |W|)
/// Deliberately computed without the per-candidate decomposition so it can
/// serve as an independent cross-check of the winner algorithms.
inline Rational committee_score(const Profile& profile, Rule rule,
                                const Committee& committee) {
  for (CandidateIndex c : committee.members()) profile.check_index(c);
  const int w = committee.size();
  std::map<std::int64_t, std::int64_t> intersections_by_denominator;
  for (const Ballot& ballot : profile.ballots()) {
    const auto& a = ballot.approved();
    const auto& ws = committee.members();
    std::int64_t inter = 0;
    for (std::size_t i = 0, j = 0; i < a.size() && j < ws.size();) {
      if (a[i] < ws[j]) ++i;
      else if (ws[j] < a[i]) ++j;
      else { ++inter; ++i; ++j; }
    }
    if (inter == 0) continue;
    std::int64_t d = 1;
    switch (rule) {
      case Rule::AV: d = 1; break;
      case Rule::SAV: d = ballot.size(); break;
      case Rule::CSAV: d = w; break;
      case Rule::MSAV: d = std::min(ballot.size(), w); break;
    }
    intersections_by_denominator[d] += inter;
  }
  Rational score;
  for (const auto& [d, inter] : intersections_by_denominator)
    score += Rational(inter, d);
  return score;
}

/// Optimal committees of exactly k members for the given rule. Ranks
/// candidates by their score with respect to size k and takes the top k.
/// Under Lexicographic the single committee breaks boundary ties toward
/// lower roster indices; under EnumerateAll every optimal committee is
/// listed in lexicographic order of sorted member indices, truncated at
/// the policy cap.
inline WinnersResult winners_fixed_k(const Profile& profile, Rule rule, int k,
                                     TiePolicy tie = {}) {
  const int m = profile.num_candidates();
  detail::check_committee_size(k, m);
  if (tie.max_committees < 1) throw ParameterError("enumeration cap must be >= 1");

  const std::vector<Rational> scores = candidate_scores(profile, rule, k);
  const std::vector<CandidateIndex> order = detail::selection_order(scores);
  const Rational threshold = scores[static_cast<std::size_t>(order[k - 1])];

  // Members strictly above the k-th score are in every optimal committee;
  // the remaining seats are filled from candidates tied at the threshold.
  std::vector<CandidateIndex> mandatory;
  std::vector<CandidateIndex> tied;
  for (CandidateIndex c = 0; c < m; ++c) {
    const Rational& s = scores[static_cast<std::size_t>(c)];
    if (threshold < s) mandatory.push_back(c);
    else if (s == threshold) tied.push_back(c);
  }
  const int seats = k - static_cast<int>(mandatory.size());

  WinnersResult result;
  result.rule = rule;
  result.k = k;
  for (CandidateIndex c : mandatory) result.score += scores[static_cast<std::size_t>(c)];
  result.score += Rational(seats) * threshold;

  if (tie.mode == TiePolicy::Mode::Lexicographic) {
    std::vector<CandidateIndex> members = mandatory;
    members.insert(members.end(), tied.begin(), tied.begin() + seats);
    result.committees.emplace_back(std::move(members));
    return result;
  }

  const mpz_class total = detail::binomial(tied.size(), seats);
  result.truncated = total > tie.max_committees;
  const std::uint64_t emit =
      result.truncated ? tie.max_committees : total.get_ui();

  // Choosing tied candidates in lexicographic combination order yields the
  // merged committees in lexicographic order of their sorted member lists.
  std::vector<int> choose(static_cast<std::size_t>(seats));
  std::iota(choose.begin(), choose.end(), 0);
  for (std::uint64_t produced = 0; produced < emit; ++produced) {
    std::vector<CandidateIndex> members;
    members.reserve(static_cast<std::size_t>(k));
    std::size_t next = 0;
    for (int pos : choose) {
      const CandidateIndex c = tied[static_cast<std::size_t>(pos)];
      while (next < mandatory.size() && mandatory[next] < c)
        members.push_back(mandatory[next++]);
      members.push_back(c);
    }
    while (next < mandatory.size()) members.push_back(mandatory[next++]);
    result.committees.emplace_back(std::move(members));

    // advance to the next combination of `seats` positions
    int i = seats - 1;
    const int n = static_cast<int>(tied.size());
    while (i >= 0 && choose[static_cast<std::size_t>(i)] == n - seats + i) --i;
    if (i < 0) break;
    ++choose[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < seats; ++j)
      choose[static_cast<std::size_t>(j)] = choose[static_cast<std::size_t>(j - 1)] + 1;
  }
  return result;
}

/// Diagnostic view of the ranking: (candidate, score) pairs sorted by score
/// descending, roster index ascending among equals. The first k rows are
/// exactly the lexicographic winners_fixed_k committee.
inline std::vector<std::pair<CandidateIndex, Rational>> score_table(
    const Profile& profile, Rule rule, int k) {
  const std::vector<Rational> scores = candidate_scores(profile, rule, k);
  std::vector<std::pair<CandidateIndex, Rational>> table;
  table.reserve(scores.size());
  for (CandidateIndex c : detail::selection_order(scores))
    table.emplace_back(c, scores[static_cast<std::size_t>(c)]);
  return table;
}

namespace detail {

// Best achievable score per committee size, computed from one score vector
// that does not depend on k: sort descending, prefix sums.
inline std::vector<Rational> prefix_best(std::vector<Rational> scores) {
  std::sort(scores.begin(), scores.end(),
            [](const Rational& a, const Rational& b) { return b < a; });
  std::vector<Rational> best(scores.size() + 1);
  for (std::size_t i = 0; i < scores.size(); ++i)
    best[i + 1] = best[i] + scores[i];
  return best;
}

}  // namespace detail

/// Optimal committee over all sizes k = 1..m. Evaluates the best fixed-k
/// score for every k and keeps the global maximum; ties across k go to the
/// smallest k. AV and SAV are monotone, so their unconstrained optimum is
/// the full roster; the loop still runs and this is verified before the
/// full-roster result is returned.
inline WinnersResult winners_any_size(const Profile& profile, Rule rule,
                                      TiePolicy tie = {}) {
  const int m = profile.num_candidates();
  std::vector<Rational> best_per_k(static_cast<std::size_t>(m) + 1);

  switch (rule) {
    case Rule::AV:
    case Rule::SAV: {
      best_per_k = detail::prefix_best(candidate_scores(profile, rule, 1));
      break;
    }
    case Rule::CSAV: {
      // CSAV scores are AV scores divided by k.
      const std::vector<Rational> av_best =
          detail::prefix_best(candidate_scores(profile, Rule::AV, 1));
      for (int k = 1; k <= m; ++k)
        best_per_k[static_cast<std::size_t>(k)] =
            av_best[static_cast<std::size_t>(k)] / Rational(k);
      break;
    }
    case Rule::MSAV: {
      // Scores change with k only while k is below the largest ballot;
      // beyond that min(|A_i|, k) = |A_i| for every ballot.
      int max_ballot = 1;
      for (const Ballot& b : profile.ballots())
        max_ballot = std::max(max_ballot, b.size());
      const int k0 = std::min(max_ballot, m);
      for (int k = 1; k < k0; ++k) {
        std::vector<Rational> scores = candidate_scores(profile, rule, k);
        std::sort(scores.begin(), scores.end(),
                  [](const Rational& a, const Rational& b) { return b < a; });
        Rational sum;
        for (int i = 0; i < k; ++i) sum += scores[static_cast<std::size_t>(i)];
        best_per_k[static_cast<std::size_t>(k)] = sum;
      }
      const std::vector<Rational> tail_best =
          detail::prefix_best(candidate_scores(profile, rule, k0));
      for (int k = k0; k <= m; ++k)
        best_per_k[static_cast<std::size_t>(k)] =
            tail_best[static_cast<std::size_t>(k)];
      break;
    }
  }

  Rational best = best_per_k[1];
  int best_k = 1;
  for (int k = 2; k <= m; ++k) {
    if (best < best_per_k[static_cast<std::size_t>(k)]) {
      best = best_per_k[static_cast<std::size_t>(k)];
      best_k = k;
    }
  }

  if (rule == Rule::AV || rule == Rule::SAV) {
    if (best_per_k[static_cast<std::size_t>(m)] != best)
      throw std::logic_error("monotone objective not maximized by full roster");
    best_k = m;
  }
  return winners_fixed_k(profile, rule, best_k, tie);
}

}  // namespace savkit

#endif  // SAVKIT_RULES_HPP
