#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include "f2sumset/harness.hpp"
#include "f2sumset/setstats.hpp"

using namespace f2sumset;

TEST_CASE("Rng is a fixed stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  // std::mt19937_64 with the default seed: the standard pins the 10000th draw.
  Rng c(5489);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = c.next();
  CHECK(v == 9981545732273789042ULL);
  Rng d(1);
  for (int i = 0; i < 1000; ++i) {
    CHECK(d.below(7) < 7);
    const double u = d.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK_THROWS(d.below(0));
  CHECK(mix_seed(1, 2) == mix_seed(1, 2));
  CHECK(mix_seed(1, 2) != mix_seed(2, 1));
}

TEST_CASE("generator kinds") {
  for (auto k : {GeneratorKind::subspace, GeneratorKind::coset_union,
                 GeneratorKind::perturbed_subspace, GeneratorKind::random_dense}) {
    CHECK(parse_generator_kind(to_string(k)) == k);
  }
  CHECK_THROWS(parse_generator_kind("nope"));
  CHECK_FALSE(is_planted(GeneratorKind::random_dense));
  CHECK(is_planted(GeneratorKind::coset_union));
}

TEST_CASE("subspace generator is deterministic") {
  GeneratorSpec s;
  s.kind = GeneratorKind::subspace;
  s.n = 8;
  s.dim = 4;
  s.seed = 1;
  const auto g1 = generate(s);
  const auto g2 = generate(s);
  CHECK(g1.a.size() == 16);
  CHECK(g1.a == g2.a);
  CHECK(g1.planted->to_point_set() == g1.a);
  CHECK(sumset(g1.a, g1.a) == g1.a);
}

TEST_CASE("coset_union generator") {
  GeneratorSpec s;
  s.kind = GeneratorKind::coset_union;
  s.n = 10;
  s.dim = 5;
  s.cosets = 2;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    s.seed = seed;
    const auto g = generate(s);
    CHECK(g.a.size() == 64);
    CHECK(g.reps_a.size() == 2);
    CHECK(g.reps_a[0] != g.reps_a[1]);
    CHECK(doubling(g.a, g.a).dbl <= 2.0);
    for (Bits r : g.reps_a) CHECK(g.planted->reduce(r) == r);
  }
  s.cosets = 40;  // only 32 cosets exist
  CHECK_THROWS_AS(generate(s), InfeasibleSpec);
  s.cosets = 0;
  CHECK_THROWS_AS(generate(s), InfeasibleSpec);
}

TEST_CASE("perturbed_subspace generator") {
  GeneratorSpec s;
  s.kind = GeneratorKind::perturbed_subspace;
  s.n = 10;
  s.dim = 6;
  s.spread = 2;
  s.seed = 3;
  const auto g = generate(s);
  CHECK(g.a.size() == 64 + 2 * 8);
  CHECK(g.b->size() == g.a.size());
  CHECK(set_intersection(g.a, g.planted->to_point_set()).size() == 64);
  s.remove = 5;
  CHECK(generate(s).a.size() == 64 - 5 + 16);
  s.remove = 64;
  CHECK_THROWS_AS(generate(s), InfeasibleSpec);
}

TEST_CASE("random_dense cardinality within 4 sigma") {
  GeneratorSpec s;
  s.kind = GeneratorKind::random_dense;
  s.n = 6;
  s.density = 0.5;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    s.seed = seed;
    const auto size = static_cast<double>(generate(s).a.size());
    CHECK(std::abs(size - 32.0) <= 4.0 * std::sqrt(64 * 0.25));
  }
  s.density = 0.0;
  CHECK_THROWS_AS(generate(s), InfeasibleSpec);
}

TEST_CASE("oracles equal optimized paths") {
  const auto r = run_oracle_check(100, 7);
  CHECK(r.ok());
  CHECK(r.operations.size() == 5);
  for (const auto& op : r.operations) CHECK(op.trials == 100);
  CHECK_THROWS_AS(oracle_sumset(PointSet::full(11), PointSet::full(11)), CostGuardExceeded);
}

TEST_CASE("campaign config parsing") {
  const auto c = parse_campaign_config(R"({"k_ladder":[2,4],"kinds":["subspace"],
    "n_min":8,"n_max":9,"trials_per_cell":3,"seed_base":5,"dim":3})");
  CHECK(c.k_ladder == std::vector<double>{2, 4});
  CHECK(c.kinds == std::vector<GeneratorKind>{GeneratorKind::subspace});
  CHECK(c.trials_per_cell == 3);
  CHECK(*c.dim == 3);
  const auto again = parse_campaign_config(campaign_config_to_json(c));
  CHECK(campaign_config_to_json(again) == campaign_config_to_json(c));
  CHECK_THROWS(parse_campaign_config(R"({"k_ladder":[0.5]})"));
  CHECK_THROWS(parse_campaign_config(R"({"n_min":5,"n_max":4})"));
  CHECK_THROWS(parse_campaign_config(R"({"kinds":[]})"));
  CHECK_THROWS(parse_campaign_config("not json"));
}

TEST_CASE("campaign per-K parameter rules guarantee Dbl <= K") {
  CampaignConfig c;
  for (double k : c.k_ladder) {
    for (int n = c.n_min; n <= c.n_max; ++n) {
      for (auto kind : c.kinds) {
        const auto spec = campaign_spec(c, kind, k, n, mix_seed(1, n));
        const auto g = generate(spec);
        CHECK(doubling(g.a, *g.b).dbl <= k);
      }
    }
  }
}

TEST_CASE("degenerate campaign") {
  CampaignConfig c;
  c.k_ladder = {2};
  c.kinds = {GeneratorKind::subspace};
  c.n_min = c.n_max = 8;
  c.trials_per_cell = 1;
  const auto r = run_campaign(c);
  REQUIRE(r.rows.size() == 1);
  const auto& row = r.rows[0];
  CHECK(row.m == 0);
  CHECK(row.status == "VERIFIED");
  CHECK(row.energy_gate_ok);
  CHECK(row.size_bound_ok);
  CHECK(row.product_ok);
  CHECK(row.density_bound_ok);
  CHECK(row.bucket_ok);
  CHECK(row.translate_check == "match");
  REQUIRE(r.cells.size() == 1);
  CHECK(r.cells[0].verified == 1);
}

TEST_CASE("campaign reports are deterministic and well-formed") {
  CampaignConfig c;
  c.k_ladder = {2, 4, 8};
  c.kinds = {GeneratorKind::coset_union, GeneratorKind::perturbed_subspace,
             GeneratorKind::random_dense};
  c.n_min = 8;
  c.n_max = 10;
  c.trials_per_cell = 4;
  const auto r1 = run_campaign(c);
  const auto r2 = run_campaign(c);
  CHECK(campaign_csv(r1) == campaign_csv(r2));
  CHECK(campaign_json(r1) == campaign_json(r2));
  CHECK(r1.rows.size() == 36);

  const std::string csv = campaign_csv(r1);
  const std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header ==
        "seed,kind,k,trial,n,k_measured,size_a,size_b,m,j,h_dim,h_size,size_ratio,geo_mean,"
        "threshold,energy_gate_ok,size_bound_ok,product_ok,density_bound_ok,bucket_ok,"
        "translate_check,used_fallback,planted,status,error");

  const auto j = nlohmann::json::parse(campaign_json(r1));
  CHECK(j["format"] == "f2sumset-campaign/1");
  CHECK(j["rng_algorithm"] == std::string(Rng::kAlgorithm));
  CHECK(j["rows"].size() == 36);
  CHECK(j["cells"].size() == 9);

  // Random dense sets usually exceed small K; those rows become errors.
  bool saw_error = false;
  for (const auto& row : r1.rows) {
    if (row.kind == "random_dense") {
      saw_error = saw_error || row.status == "ERROR";
      CHECK_FALSE(row.planted);
    } else {
      CHECK(row.status == "VERIFIED");
      CHECK(row.planted);
    }
    if (row.status == "ERROR") CHECK_FALSE(row.error.empty());
  }
  CHECK(saw_error);
  CHECK(campaign_timings_csv(r1).find("runtime_ms") != std::string::npos);
}
