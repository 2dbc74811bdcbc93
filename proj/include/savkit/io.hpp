#ifndef SAVKIT_IO_HPP
#define SAVKIT_IO_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "savkit/errors.hpp"
#include "savkit/profile.hpp"
#include "savkit/rules.hpp"

namespace savkit {

// Ballot document grammar (see format.md):
//   - a token beginning with '#' starts a comment running to end of line
//   - blank lines are skipped
//   - first significant line:  candidates: <name> <name> ...
//   - every further significant line is one ballot of roster names

namespace detail {

// Splits one raw line into whitespace-separated tokens, dropping comments.
inline std::vector<std::string> significant_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    if (token.front() == '#') break;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

}  // namespace detail

/// Parses a ballot document. Throws ParseError with a 1-based line number
/// on the first offending line.
inline Profile parse_profile(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;

  std::vector<std::string> names;
  std::unordered_map<std::string, CandidateIndex> index_of;
  std::vector<std::vector<CandidateIndex>> ballots;
  bool roster_seen = false;
  int roster_line = 0;

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> tokens = detail::significant_tokens(line);
    if (tokens.empty()) continue;

    if (tokens.front() == "candidates:") {
      if (roster_seen)
        throw ParseError(line_number,
                         "duplicate roster declaration (first one at line " +
                             std::to_string(roster_line) + ")");
      if (tokens.size() == 1)
        throw ParseError(line_number, "roster declaration lists no candidates");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (tokens[i] == "candidates:")
          throw ParseError(line_number, "reserved token in roster", tokens[i]);
        if (!index_of.emplace(tokens[i], static_cast<CandidateIndex>(i - 1)).second)
          throw ParseError(line_number, "duplicate roster token", tokens[i]);
        names.push_back(tokens[i]);
      }
      roster_seen = true;
      roster_line = line_number;
      continue;
    }

    if (!roster_seen)
      throw ParseError(line_number,
                       "expected 'candidates:' roster declaration before ballots");

    std::vector<CandidateIndex> ballot;
    ballot.reserve(tokens.size());
    for (const std::string& token : tokens) {
      auto it = index_of.find(token);
      if (it == index_of.end())
        throw ParseError(line_number, "unknown candidate token", token);
      if (std::find(ballot.begin(), ballot.end(), it->second) != ballot.end())
        throw ParseError(line_number, "duplicate candidate in ballot", token);
      ballot.push_back(it->second);
    }
    ballots.push_back(std::move(ballot));
  }

  if (!roster_seen)
    throw ParseError(line_number == 0 ? 1 : line_number,
                     "document has no roster declaration");
  if (ballots.empty())
    throw ParseError(line_number == 0 ? 1 : line_number, "document has no ballots");
  return Profile(std::move(names), std::move(ballots));
}

/// Canonical document form: one roster line, then one line per ballot with
/// members in roster-index order. parse_profile(serialize_profile(p))
/// reproduces p; on canonical documents the round trip is byte-identical.
inline std::string serialize_profile(const Profile& profile) {
  std::string out = "candidates:";
  for (const Candidate& c : profile.candidates()) {
    out += ' ';
    out += c.name;
  }
  out += '\n';
  for (const Ballot& ballot : profile.ballots()) {
    bool first = true;
    for (CandidateIndex c : ballot.approved()) {
      if (!first) out += ' ';
      out += profile.candidate(c).name;
      first = false;
    }
    out += '\n';
  }
  return out;
}

enum class ResultFormat { Text, Machine };

/// Renders a winner computation. Text is for humans; the machine form is a
/// stable key=value record set (documented in format.md) whose exact
/// rational fields are the contract. The decimal rendering is advisory.
inline std::string serialize_result(const WinnersResult& result,
                                    const Profile& profile, ResultFormat format) {
  std::ostringstream out;
  const auto names = [&](const Committee& w, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < w.members().size(); ++i) {
      if (i) s += sep;
      s += profile.candidate(w.members()[i]).name;
    }
    return s;
  };

  if (format == ResultFormat::Machine) {
    out << "rule=" << to_string(result.rule) << '\n'
        << "k=" << result.k << '\n'
        << "score_num=" << result.score.numerator().get_str() << '\n'
        << "score_den=" << result.score.denominator().get_str() << '\n'
        << "truncated=" << (result.truncated ? "true" : "false") << '\n';
    for (const Committee& w : result.committees)
      out << "committee=" << names(w, ",") << '\n';
    return out.str();
  }

  out << "rule: " << to_string(result.rule) << '\n'
      << "k: " << result.k << '\n'
      << "score: " << result.score.str() << " (approx " << result.score.decimal(6)
      << ")\n";
  for (const Committee& w : result.committees)
    out << "committee: " << names(w, " ") << '\n';
  if (result.truncated) out << "(enumeration truncated at cap)\n";
  return out.str();
}

}  // namespace savkit

#endif  // SAVKIT_IO_HPP
