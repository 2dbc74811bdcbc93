#ifndef SAVKIT_CLI_HPP
#define SAVKIT_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "savkit/errors.hpp"
#include "savkit/generate.hpp"
#include "savkit/io.hpp"
#include "savkit/oracle.hpp"
#include "savkit/profile.hpp"
#include "savkit/rules.hpp"

namespace savkit::cli {

namespace detail {

inline std::string read_document(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw Error("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

inline Rule parse_rule(const std::string& name) {
  auto rule = rule_from_string(name);
  if (!rule) throw Error("unknown rule '" + name + "'");
  return *rule;
}

inline Committee committee_from_names(const Profile& profile,
                                      const std::string& csv) {
  std::vector<CandidateIndex> members;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw Error("empty name in committee list");
    auto c = profile.find(token);
    if (!c) throw Error("unknown candidate '" + token + "'");
    members.push_back(*c);
  }
  return Committee(std::move(members));
}

inline std::string committee_names(const Profile& profile, const Committee& w) {
  std::string s = "{";
  for (std::size_t i = 0; i < w.members().size(); ++i) {
    if (i) s += ",";
    s += profile.candidate(w.members()[i]).name;
  }
  return s + "}";
}

}  // namespace detail

/// CLI entry point. `args` holds the arguments after the program name.
/// Exit status: 0 success, 1 usage or input error, 2 check discrepancy.
inline int run(std::vector<std::string> args, std::istream& in,
               std::ostream& out, std::ostream& err) {
  CLI::App app{"Approval-based multi-winner voting rules: av, sav, csav, msav"};
  app.name("savkit");
  app.require_subcommand(1);

  const std::vector<std::string> rule_names = {"av", "sav", "csav", "msav"};

  // winners
  auto* winners = app.add_subcommand("winners", "Compute the winning committee(s)");
  std::string winners_rule;
  int winners_k = 0;
  bool winners_any = false;
  std::string winners_ties = "lex";
  std::uint64_t winners_cap = 1000;
  std::string winners_format = "text";
  std::string winners_input;
  winners->add_option("--rule", winners_rule, "Voting rule")
      ->required()
      ->check(CLI::IsMember(rule_names));
  auto* winners_size = winners->add_option_group("size", "Committee size");
  winners_size->add_option("--k", winners_k, "Fixed committee size");
  winners_size->add_flag("--any-size", winners_any, "Optimize over all sizes 1..m");
  winners_size->require_option(1);
  winners->add_option("--ties", winners_ties, "Tie handling: lex or all")
      ->check(CLI::IsMember({"lex", "all"}));
  winners->add_option("--max-enumerate", winners_cap,
                      "Committee cap for --ties all (default 1000)");
  winners->add_option("--format", winners_format, "Output format: text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
  winners->add_option("input", winners_input, "Ballot file (default stdin)");

  // score
  auto* score = app.add_subcommand("score", "Per-candidate score table or committee score");
  std::string score_rule;
  int score_k = 0;
  std::string score_committee;
  std::string score_input;
  score->add_option("--rule", score_rule, "Voting rule")
      ->required()
      ->check(CLI::IsMember(rule_names));
  auto* score_what = score->add_option_group("target", "What to score");
  score_what->add_option("--k", score_k, "Score table with respect to size k");
  score_what->add_option("--committee", score_committee,
                         "Comma-separated candidate names to score as a committee");
  score_what->require_option(1);
  score->add_option("input", score_input, "Ballot file (default stdin)");

  // check
  auto* check = app.add_subcommand("check", "Certify winners against the brute-force oracle");
  std::string check_rule;
  int check_k = 0;
  bool check_any = false;
  bool check_corrupt_av = false;
  std::string check_input;
  check->add_option("--rule", check_rule, "Voting rule")
      ->required()
      ->check(CLI::IsMember(rule_names));
  auto* check_size = check->add_option_group("size", "Committee size");
  check_size->add_option("--k", check_k, "Fixed committee size");
  check_size->add_flag("--any-size", check_any, "Check the any-size problem");
  check_size->require_option(1);
  check->add_flag("--corrupt-av", check_corrupt_av)->group("");  // self-test fault injection
  check->add_option("input", check_input, "Ballot file (default stdin)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an impartial-culture ballot file");
  CultureSpec culture;
  gen->add_option("--m", culture.num_candidates, "Number of candidates")->required();
  gen->add_option("--n", culture.num_voters, "Number of voters")->required();
  gen->add_option("--p", culture.approval_probability, "Approval probability in (0,1]")
      ->required();
  gen->add_option("--seed", culture.seed, "Generator seed")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*winners) {
      const Profile profile =
          parse_profile(detail::read_document(winners_input, in));
      const Rule rule = detail::parse_rule(winners_rule);
      const TiePolicy tie = winners_ties == "all"
                                ? TiePolicy::enumerate_all(winners_cap)
                                : TiePolicy::lexicographic();
      const WinnersResult result =
          winners_any ? winners_any_size(profile, rule, tie)
                      : winners_fixed_k(profile, rule, winners_k, tie);
      out << serialize_result(result, profile,
                              winners_format == "machine" ? ResultFormat::Machine
                                                          : ResultFormat::Text);
      return 0;
    }

    if (*score) {
      const Profile profile = parse_profile(detail::read_document(score_input, in));
      const Rule rule = detail::parse_rule(score_rule);
      if (!score_committee.empty()) {
        const Committee committee =
            detail::committee_from_names(profile, score_committee);
        out << committee_score(profile, rule, committee).str() << '\n';
      } else {
        for (const auto& [c, s] : score_table(profile, rule, score_k))
          out << profile.candidate(c).name << ' ' << s.str() << '\n';
      }
      return 0;
    }

    if (*check) {
      const Profile profile = parse_profile(detail::read_document(check_input, in));
      const Rule rule = detail::parse_rule(check_rule);
      const std::optional<int> k =
          check_any ? std::nullopt : std::optional<int>(check_k);
      const Fault fault = check_corrupt_av ? Fault::AvOvercount : Fault::None;
      const CheckResult result = equivalence_check(profile, rule, k, fault);
      const std::string k_label = k ? std::to_string(*k) : std::string("any");
      if (result.ok) {
        out << "check ok: rule=" << to_string(rule) << " k=" << k_label
            << " optimal=" << result.oracle.optimal_score.str()
            << " committees=" << result.oracle.optimal_committees.size()
            << " subsets=" << result.oracle.subsets_evaluated << '\n';
        return 0;
      }
      out << "check FAILED: rule=" << to_string(rule) << " k=" << k_label << '\n'
          << "  " << result.discrepancy << '\n'
          << "  algorithm: committee "
          << detail::committee_names(profile, result.lexicographic.committees.front())
          << " score " << result.lexicographic.score.str() << '\n'
          << "  oracle: optimal " << result.oracle.optimal_score.str() << " over "
          << result.oracle.subsets_evaluated << " subsets, achieved by";
      const std::size_t shown =
          std::min<std::size_t>(result.oracle.optimal_committees.size(), 8);
      for (std::size_t i = 0; i < shown; ++i)
        out << ' '
            << detail::committee_names(profile, result.oracle.optimal_committees[i]);
      if (shown < result.oracle.optimal_committees.size())
        out << " ... (" << result.oracle.optimal_committees.size() << " total)";
      out << '\n';
      return 2;
    }

    if (*gen) {
      out << serialize_profile(random_profile(culture));
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

inline int run(int argc, const char* const argv[], std::istream& in,
               std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args), in, out, err);
}

}  // namespace savkit::cli

#endif  // SAVKIT_CLI_HPP
