#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "savkit/generate.hpp"
#include "savkit/io.hpp"
#include "savkit/oracle.hpp"

using namespace savkit;

namespace {

Profile three_ballots() {
  return parse_profile("candidates: a b c\na\na b\nb c\n");
}

}  // namespace

TEST_CASE("fixed-size oracle finds the exact optimum") {
  const Profile p = three_ballots();

  const OracleReport sav2 = oracle_fixed_k(p, Rule::SAV, 2);
  CHECK(sav2.optimal_score == Rational(5, 2));
  CHECK(sav2.optimal_committees == std::vector<Committee>{Committee({0, 1})});
  CHECK(sav2.subsets_evaluated == 3);
  // cross-check the other pairs by definition
  CHECK(committee_score(p, Rule::SAV, Committee({0, 2})) == Rational(2));
  CHECK(committee_score(p, Rule::SAV, Committee({1, 2})) == Rational(3, 2));

  const OracleReport av1 = oracle_fixed_k(p, Rule::AV, 1);
  CHECK(av1.optimal_score == Rational(2));
  CHECK(av1.optimal_committees ==
        std::vector<Committee>{Committee({0}), Committee({1})});

  const Profile single({"x"}, {{0}});
  for (Rule rule : kAllRules) {
    const OracleReport r = oracle_fixed_k(single, rule, 1);
    CHECK(r.optimal_committees == std::vector<Committee>{Committee({0})});
    CHECK(r.subsets_evaluated == 1);
  }

  CHECK_THROWS_AS(oracle_fixed_k(p, Rule::SAV, 0), SizeError);
}

TEST_CASE("any-size oracle sweeps every non-empty subset") {
  const Profile p = three_ballots();

  const OracleReport csav = oracle_any_size(p, Rule::CSAV);
  CHECK(csav.optimal_score == Rational(2));
  CHECK(csav.optimal_committees ==
        std::vector<Committee>{Committee({0}), Committee({1}), Committee({0, 1})});
  CHECK(csav.subsets_evaluated == 7);

  const OracleReport sav = oracle_any_size(p, Rule::SAV);
  CHECK(sav.optimal_score == Rational(3));
  CHECK(std::find(sav.optimal_committees.begin(), sav.optimal_committees.end(),
                  Committee({0, 1, 2})) != sav.optimal_committees.end());

  const Profile single({"x"}, {{0}});
  for (Rule rule : kAllRules)
    CHECK(oracle_any_size(single, rule).optimal_committees ==
          std::vector<Committee>{Committee({0})});
}

TEST_CASE("oracle refuses infeasible enumerations") {
  std::vector<std::string> names;
  for (int i = 0; i < 21; ++i) names.push_back("c" + std::to_string(i));
  const Profile big(names, {{0, 1, 2}});
  CHECK_THROWS_AS(oracle_fixed_k(big, Rule::AV, 2), EnumerationLimitError);
  CHECK_THROWS_AS(oracle_any_size(big, Rule::AV), EnumerationLimitError);
}

TEST_CASE("equivalence check accepts the shipped algorithms") {
  const Profile p = three_ballots();
  for (Rule rule : kAllRules) {
    for (int k = 1; k <= 3; ++k) {
      const CheckResult r = equivalence_check(p, rule, k);
      INFO(to_string(rule) << " k=" << k << ": " << r.discrepancy);
      CHECK(r.ok);
    }
    const CheckResult any = equivalence_check(p, rule, std::nullopt);
    INFO(to_string(rule) << " any: " << any.discrepancy);
    CHECK(any.ok);
  }
}

TEST_CASE("equivalence check detects an injected AV miscount") {
  const Profile p = three_ballots();
  const CheckResult r = equivalence_check(p, Rule::AV, 1, Fault::AvOvercount);
  CHECK_FALSE(r.ok);
  CHECK(r.discrepancy.find("{a}") != std::string::npos);  // the committee
  CHECK(r.discrepancy.find("3") != std::string::npos);    // corrupted score
  CHECK(r.discrepancy.find("2") != std::string::npos);    // oracle optimum

  // the fault targets AV only
  CHECK(equivalence_check(p, Rule::SAV, 1, Fault::AvOvercount).ok);
}

TEST_CASE("algorithms match the oracle on random profiles") {
  std::mt19937_64 rng(31337);
  for (int round = 0; round < 40; ++round) {
    const CultureSpec spec{static_cast<int>(rng() % 8 + 1),
                           static_cast<int>(rng() % 12 + 1),
                           0.2 + 0.6 * static_cast<double>(rng() % 100) / 99.0,
                           rng()};
    const Profile p = random_profile(spec);
    for (Rule rule : kAllRules) {
      for (int k = 1; k <= p.num_candidates(); ++k) {
        const CheckResult r = equivalence_check(p, rule, k);
        INFO("m=" << spec.num_candidates << " n=" << spec.num_voters
                  << " seed=" << spec.seed << " " << to_string(rule) << " k=" << k
                  << ": " << r.discrepancy);
        REQUIRE(r.ok);
      }
      const CheckResult any = equivalence_check(p, rule, std::nullopt);
      INFO("m=" << spec.num_candidates << " any " << to_string(rule) << ": "
                << any.discrepancy);
      REQUIRE(any.ok);
    }
  }
}

TEST_CASE("oracle evaluates exactly the expected number of subsets") {
  std::mt19937_64 rng(515);
  for (int round = 0; round < 10; ++round) {
    const int m = static_cast<int>(rng() % 9 + 1);
    const Profile p = random_profile({m, static_cast<int>(rng() % 8 + 1), 0.6, rng()});
    std::uint64_t total = 0;
    for (int k = 1; k <= m; ++k) {
      mpz_class expected;
      mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(m),
                   static_cast<unsigned long>(k));
      const OracleReport r = oracle_fixed_k(p, Rule::SAV, k);
      CHECK(mpz_class(static_cast<unsigned long>(r.subsets_evaluated)) == expected);
      total += r.subsets_evaluated;
    }
    CHECK(total == (std::uint64_t{1} << m) - 1);
    CHECK(oracle_any_size(p, Rule::SAV).subsets_evaluated == total);
  }
}

TEST_CASE("oracle optima equal the enumerated winner set for fixed k") {
  std::mt19937_64 rng(8080);
  for (int round = 0; round < 25; ++round) {
    const Profile p = random_profile({static_cast<int>(rng() % 7 + 1),
                                      static_cast<int>(rng() % 10 + 1), 0.5,
                                      rng()});
    for (Rule rule : kAllRules)
      for (int k = 1; k <= p.num_candidates(); ++k) {
        const WinnersResult w =
            winners_fixed_k(p, rule, k, TiePolicy::enumerate_all(1 << 20));
        REQUIRE_FALSE(w.truncated);
        CHECK(w.committees == oracle_fixed_k(p, rule, k).optimal_committees);
      }
  }
}
