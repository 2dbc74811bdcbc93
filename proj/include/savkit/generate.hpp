#ifndef SAVKIT_GENERATE_HPP
#define SAVKIT_GENERATE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "savkit/errors.hpp"
#include "savkit/profile.hpp"

namespace savkit {

/// Impartial-culture parameters: each of `num_voters` agents approves each
/// of `num_candidates` candidates independently with probability
/// `approval_probability`.
struct CultureSpec {
  int num_candidates = 0;
  int num_voters = 0;
  double approval_probability = 0.0;
  std::uint64_t seed = 0;
};

/// Draws a random profile from the impartial culture. Candidate names are
/// "c0".."c{m-1}".
///
/// The generator is pinned for reproducibility: a std::mt19937_64 engine
/// (fully specified by the standard) seeded with `spec.seed`, consumed one
/// 64-bit word per (voter, candidate) pair in candidate order within each
/// voter. A candidate is approved when the top 53 bits of the word, as an
/// integer, are below approval_probability * 2^53; both sides of that
/// comparison are exact IEEE doubles, so the draw is bit-identical across
/// platforms. A voter who draws an empty ballot is redrawn from the ongoing
/// stream until non-empty.
inline Profile random_profile(const CultureSpec& spec) {
  if (spec.num_candidates < 1)
    throw ParameterError("culture needs at least one candidate");
  if (spec.num_voters < 1) throw ParameterError("culture needs at least one voter");
  if (!(spec.approval_probability > 0.0) || spec.approval_probability > 1.0)
    throw ParameterError("approval probability must be in (0, 1]");

  const int m = spec.num_candidates;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) names.push_back("c" + std::to_string(j));

  // 2^53; p * kScale is exact for p in (0, 1].
  constexpr double kScale = 9007199254740992.0;
  const double threshold = spec.approval_probability * kScale;

  std::mt19937_64 engine(spec.seed);
  std::vector<std::vector<CandidateIndex>> ballots;
  ballots.reserve(static_cast<std::size_t>(spec.num_voters));
  std::vector<CandidateIndex> approved;
  for (int i = 0; i < spec.num_voters; ++i) {
    do {
      approved.clear();
      for (CandidateIndex j = 0; j < m; ++j) {
        const std::uint64_t word = engine();
        if (static_cast<double>(word >> 11) < threshold) approved.push_back(j);
      }
    } while (approved.empty());
    ballots.push_back(approved);
  }
  return Profile(std::move(names), std::move(ballots));
}

}  // namespace savkit

#endif  // SAVKIT_GENERATE_HPP
