#include "doctest.h"
#include "freeact/report.hpp"
#include "freeact/suites.hpp"

using namespace freeact;

TEST_CASE("config validation") {
  Config good;
  CHECK_NOTHROW(good.validate());

  Config bad_eps;
  bad_eps.epsilon = make_rational(1, 4);
  CHECK_THROWS_AS(bad_eps.validate(), PreconditionError);
  bad_eps.epsilon = make_rational(1, 9);
  CHECK_THROWS_AS(bad_eps.validate(), PreconditionError);

  Config bad_prime;
  bad_prime.primes = {3, 4};
  CHECK_THROWS_AS(bad_prime.validate(), PreconditionError);
  bad_prime.primes = {2};
  CHECK_THROWS_AS(bad_prime.validate(), PreconditionError);

  Config bad_k;
  bad_k.k_min = 2;
  CHECK_THROWS_AS(bad_k.validate(), PreconditionError);
}

TEST_CASE("json round trip preserves the report") {
  Report r;
  r.suite = "demo";
  r.checks.push_back({"x.one", "claim one", "certified", "w1", 0});
  r.checks.push_back({"x.two", "claim two", "failed", "residual: z1", 0});
  std::string j = report_to_json(r);
  Report back = report_from_json(j);
  CHECK(back.suite == r.suite);
  REQUIRE(back.checks.size() == 2);
  CHECK(back.checks[0].id == "x.one");
  CHECK(back.checks[1].status == "failed");
  CHECK(back.checks[1].witness == "residual: z1");
  CHECK(report_to_json(back) == j);
  CHECK_FALSE(back.certified());
}

TEST_CASE("an empty suite is vacuously certified") {
  Report r;
  r.suite = "empty";
  CHECK(r.certified());
  CHECK(report_to_json(r).find("\"checks\": []") != std::string::npos);
}

TEST_CASE("identical configs give byte-identical reports") {
  Config cfg;
  cfg.samples.disjointness = 200;
  cfg.samples.invariance = 50;
  cfg.samples.gluing_numeric = 20;
  Report a = run_suite("geometry", cfg);
  Report b = run_suite("geometry", cfg);
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("timings are excluded from the deterministic payload by default") {
  Config cfg;
  cfg.samples.disjointness = 50;
  cfg.samples.invariance = 20;
  cfg.samples.gluing_numeric = 5;
  Report a = run_suite("gluing", cfg);
  CHECK(report_to_json(a).find("time_ns") == std::string::npos);
  a.config.timings = true;
  CHECK(report_to_json(a).find("time_ns") != std::string::npos);
}

TEST_CASE("every check record carries a claim string") {
  Config cfg;
  cfg.samples.disjointness = 50;
  cfg.samples.invariance = 20;
  cfg.samples.gluing_numeric = 5;
  cfg.k_max = 3;
  cfg.primes = {3};
  for (const auto& suite : {"groups", "representations", "fixedpoints", "geometry", "gluing"}) {
    Report r = run_suite(suite, cfg);
    for (const auto& c : r.checks) {
      CAPTURE(c.id);
      CHECK_FALSE(c.claim.empty());
    }
  }
}

TEST_CASE("negative-controls stay out of the all suite") {
  Config cfg;
  cfg.samples.disjointness = 50;
  cfg.samples.invariance = 20;
  cfg.samples.gluing_numeric = 5;
  cfg.k_max = 3;
  cfg.primes = {3};
  Report all = run_suite("all", cfg);
  for (const auto& c : all.checks) CHECK(c.id.rfind("neg.", 0) != 0);
  CHECK(all.certified());
  Report neg = run_suite("negative-controls", cfg);
  CHECK(neg.certified());  // certified = every planted corruption detected
  CHECK(neg.checks.size() >= 12);
}

TEST_CASE("unknown suite is a usage error") {
  Config cfg;
  CHECK_THROWS_AS(run_suite("nonsense", cfg), PreconditionError);
}
