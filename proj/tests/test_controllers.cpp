#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <optional>

#include "cto/controllers.hpp"
#include "cto/metrics.hpp"
#include "oracles.hpp"

using cto::Point;

namespace {

const cto::Arena kArena{150, 150};

std::vector<Point> random_points(cto::Rng& rng, std::size_t n, double lo = 0, double hi = 150) {
  std::vector<Point> pts(n);
  for (Point& p : pts) p = {rng.uniform(lo, hi), rng.uniform(lo, hi)};
  return pts;
}

struct Score {
  std::size_t observed;
  double spread;
};

Score oracle_score(const std::vector<Point>& dest, const std::vector<Point>& targets, double sr) {
  return {oracle::observed_targets(dest, targets, sr), oracle::mean_pairwise(dest)};
}

// Selection rule re-derived from the candidate list drawn with a copy of the stream.
std::vector<Point> expected_choice(const std::vector<Point>& current, const std::vector<Point>& targets, double sr,
                                   cto::Rng rng, std::size_t n, bool heuristic) {
  std::vector<std::vector<Point>> cands;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Point> cand;
    for (const Point& d : current) {
      const double dx = rng.uniform(-10, 10);
      const double dy = rng.uniform(-10, 10);
      cand.push_back({std::clamp(d.x + dx, 0.0, 150.0), std::clamp(d.y + dy, 0.0, 150.0)});
    }
    cands.push_back(cand);
  }
  const Score cur = oracle_score(current, targets, sr);
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < n; ++c) {
    const Score s = oracle_score(cands[c], targets, sr);
    if (s.observed > cur.observed && (!best || s.observed > oracle_score(cands[*best], targets, sr).observed)) best = c;
  }
  if (best) return cands[*best];
  if (!heuristic) return current;
  std::optional<std::size_t> spread;
  for (std::size_t c = 0; c < n; ++c) {
    const Score s = oracle_score(cands[c], targets, sr);
    if (s.observed != cur.observed) continue;
    if (s.spread > cur.spread && (!spread || s.spread > oracle_score(cands[*spread], targets, sr).spread)) spread = c;
  }
  return spread ? cands[*spread] : current;
}

bool near_equal(const std::vector<Point>& a, const std::vector<Point>& b, double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (cto::distance(a[i], b[i]) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("controller names round-trip") {
  for (auto k : {cto::ControllerKind::KMeans, cto::ControllerKind::HC, cto::ControllerKind::HCH,
                 cto::ControllerKind::HCHP}) {
    CHECK(cto::parse_controller(cto::to_string(k)) == k);
  }
  CHECK_FALSE(cto::parse_controller("hc+h").has_value());
}

TEST_CASE("evaluate_candidate") {
  const std::vector<Point> dest{{10, 10}, {50, 50}};
  const std::vector<Point> targets{{11, 10}, {50, 52}};
  const auto s = cto::evaluate_candidate(dest, targets, 5);
  CHECK(s.rho_new == 1.0);
  CHECK(s.rho_ob == doctest::Approx(std::hypot(40, 40)));
  CHECK(cto::evaluate_candidate(dest, targets, 5) == s);

  cto::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto d = random_points(rng, 3, 0, 40);
    const auto t = random_points(rng, 4, 0, 40);
    const double sr = rng.uniform(2, 15);
    const auto got = cto::evaluate_candidate(d, t, sr);
    CHECK(got.rho_new == static_cast<double>(oracle::observed_targets(d, t, sr)) / 4.0);
    CHECK(got.rho_ob == doctest::Approx(oracle::mean_pairwise(d)).epsilon(1e-12));
  }
}

TEST_CASE("perturb") {
  cto::Rng rng(42);
  const auto base = random_points(rng, 12);
  const auto out = cto::perturb(base, kArena, rng);
  REQUIRE(out.size() == base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(std::abs(out[i].x - base[i].x) <= 10.0);
    CHECK(std::abs(out[i].y - base[i].y) <= 10.0);
    CHECK(kArena.contains(out[i]));
  }

  for (int i = 0; i < 200; ++i) {
    const auto corner = cto::perturb(std::vector<Point>{{0, 0}}, kArena, rng);
    CHECK(corner[0].x >= 0.0);
    CHECK(corner[0].x <= 10.0);
    CHECK(corner[0].y >= 0.0);
    CHECK(corner[0].y <= 10.0);
  }

  cto::Rng a(5), b(5);
  CHECK(cto::perturb(base, kArena, a) == cto::perturb(base, kArena, b));
}

TEST_CASE("hc_control") {
  SUBCASE("nothing reachable leaves destinations unchanged") {
    const std::vector<Point> obs{{10, 10}, {20, 10}};
    const std::vector<Point> targets{{140, 140}, {130, 145}};
    cto::Rng rng(1);
    const cto::ControlInput in{obs, obs, targets, 5.0, kArena, rng};
    CHECK(cto::hc_control(in) == obs);
  }
  SUBCASE("a reachable target is picked up") {
    const std::vector<Point> obs{{50, 50}};
    const std::vector<Point> targets{{58, 50}};
    cto::Rng rng(2);
    const cto::ControlInput in{obs, obs, targets, 5.0, kArena, rng};
    const auto out = cto::hc_control(in);
    CHECK(cto::distance(out[0], targets[0]) <= 5.0);
  }
  SUBCASE("selection matches the replayed rule") {
    cto::Rng gen(3);
    for (int trial = 0; trial < 100; ++trial) {
      const auto obs = random_points(gen, 4, 40, 80);
      const auto dest = random_points(gen, 4, 40, 80);
      const auto targets = random_points(gen, 8, 30, 90);
      cto::Rng rng(1000 + trial);
      const auto expected = expected_choice(dest, targets, 10.0, rng, 20, false);
      const cto::ControlInput in{obs, dest, targets, 10.0, kArena, rng};
      CHECK(near_equal(cto::hc_control(in, 20), expected, 0.0));
    }
  }
  SUBCASE("deterministic for a fixed stream") {
    cto::Rng gen(4);
    const auto obs = random_points(gen, 12);
    const auto targets = random_points(gen, 24);
    cto::Rng a(9), b(9);
    CHECK(cto::hc_control({obs, obs, targets, 15, kArena, a}) == cto::hc_control({obs, obs, targets, 15, kArena, b}));
  }
  SUBCASE("zero candidates rejected") {
    cto::Rng rng(1);
    const std::vector<Point> obs{{1, 1}};
    CHECK_THROWS_AS(cto::hc_control({obs, obs, obs, 5, kArena, rng}, 0), std::invalid_argument);
  }
}

TEST_CASE("hc_h_control") {
  SUBCASE("ties broken toward the widest spread") {
    const std::vector<Point> dest{{75, 75}, {75, 75}, {75, 75}};
    const std::vector<Point> targets{{1, 149}};
    cto::Rng rng(6);
    const auto expected = expected_choice(dest, targets, 5.0, rng, 100, true);
    const cto::ControlInput in{dest, dest, targets, 5.0, kArena, rng};
    const auto out = cto::hc_h_control(in);
    CHECK(out != dest);
    CHECK(near_equal(out, expected, 0.0));
    CHECK(oracle::mean_pairwise(out) > 0.0);
  }
  SUBCASE("keeps the previous destinations when nothing is wider") {
    const std::vector<Point> dest{{0, 0}, {150, 150}};
    const std::vector<Point> targets{{75, 75}};
    cto::Rng rng(7);
    CHECK(cto::hc_h_control({dest, dest, targets, 5.0, kArena, rng}) == dest);
  }
  SUBCASE("with an improving candidate it agrees with hc_control") {
    const std::vector<Point> dest{{50, 50}, {100, 100}};
    const std::vector<Point> targets{{57, 50}, {100, 107}};
    cto::Rng a(8), b(8);
    const auto plain = cto::hc_control({dest, dest, targets, 5.0, kArena, a});
    REQUIRE(plain != dest);
    CHECK(cto::hc_h_control({dest, dest, targets, 5.0, kArena, b}) == plain);
  }
  SUBCASE("selection matches the replayed rule") {
    cto::Rng gen(9);
    for (int trial = 0; trial < 100; ++trial) {
      const auto dest = random_points(gen, 4, 40, 80);
      const auto targets = random_points(gen, 6, 20, 100);
      cto::Rng rng(2000 + trial);
      const auto expected = expected_choice(dest, targets, 8.0, rng, 30, true);
      const cto::ControlInput in{dest, dest, targets, 8.0, kArena, rng};
      CHECK(near_equal(cto::hc_h_control(in, 30), expected, 0.0));
    }
  }
}

TEST_CASE("hill climbing never regresses") {
  cto::Rng gen(10);
  for (int trial = 0; trial < 200; ++trial) {
    const auto dest = random_points(gen, 12);
    const auto targets = random_points(gen, 24);
    const double sr = gen.uniform(5, 25);
    cto::Rng rng(3000 + trial);
    const auto before = cto::evaluate_candidate(dest, targets, sr);
    const cto::ControlInput in{dest, dest, targets, sr, kArena, rng};

    const auto hc = cto::evaluate_candidate(cto::hc_control(in), targets, sr);
    CHECK(hc.rho_new >= before.rho_new);

    const auto out = cto::hc_h_control(in);
    CHECK(out.size() == 12);
    for (const Point& p : out) CHECK(kArena.contains(p));
    const auto h = cto::evaluate_candidate(out, targets, sr);
    CHECK((h.rho_new > before.rho_new || (h.rho_new == before.rho_new && h.rho_ob >= before.rho_ob)));
  }
}

TEST_CASE("hc_hp_control") {
  cto::Rng graph_rng(50);
  const auto g = cto::generate_random_graph(40, 150, 150, graph_rng);

  SUBCASE("horizon 0 reduces to hc_h") {
    cto::Rng gen(51);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<cto::TargetState> states;
      std::vector<Point> current;
      for (int j = 0; j < 24; ++j) {
        states.push_back(cto::random_target_state(g, 0.5, gen));
        current.push_back(cto::target_point(g, states.back()));
      }
      const auto dest = random_points(gen, 12);
      cto::Rng a(4000 + trial), b(4000 + trial);
      const auto h = cto::hc_h_control({dest, dest, current, 15, kArena, a});
      const auto hp = cto::hc_hp_control({dest, dest, {}, 15, kArena, b}, 100, 0, g, states);
      CHECK(h == hp);
    }
  }

  SUBCASE("targets parked on vertices predict to where they are") {
    cto::Rng gen(52);
    std::vector<cto::TargetState> states;
    std::vector<Point> current;
    for (int j = 0; j < 24; ++j) {
      cto::TargetState s = cto::random_target_state(g, 0.5, gen);
      s.offset = g.edges[s.edge].length;
      states.push_back(s);
      current.push_back(cto::target_point(g, s));
    }
    const auto dest = random_points(gen, 12);
    cto::Rng a(7), b(7);
    CHECK(cto::hc_h_control({dest, dest, current, 15, kArena, a}) ==
          cto::hc_hp_control({dest, dest, {}, 15, kArena, b}, 100, 25, g, states));
  }

  SUBCASE("prediction leads the observers ahead of a moving target") {
    // Long straight road; the target heads away from the observers.
    using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
    const auto road = cto::PlanarGraph::from_edges({{0, 75}, {150, 75}, {75, 140}}, Pairs{{0, 1}, {1, 2}, {2, 0}});
    const cto::TargetState target{0, 1, 25.0, 0.9};
    const Point now = cto::target_point(road, target);
    const Point ahead = cto::predict_target(road, target, 10);
    REQUIRE(ahead.x == doctest::Approx(34.0));

    double gap_h = 0.0, gap_hp = 0.0;
    const int seeds = 200;
    for (int seed = 0; seed < seeds; ++seed) {
      const std::vector<Point> dest{{12, 73}, {10, 78}, {14, 76}};
      const std::vector<Point> current{now};
      cto::Rng a(seed), b(seed);
      const auto h = cto::hc_h_control({dest, dest, current, 10, kArena, a});
      const auto hp = cto::hc_hp_control({dest, dest, {}, 10, kArena, b}, 100, 10, road,
                                         std::vector<cto::TargetState>{target});
      auto closest = [&](const std::vector<Point>& d) {
        double m = 1e9;
        for (const Point& p : d) m = std::min(m, cto::distance(p, ahead));
        return m;
      };
      gap_h += closest(h);
      gap_hp += closest(hp);
    }
    CHECK(gap_hp / seeds < gap_h / seeds);
  }
}

TEST_CASE("kmeans_control") {
  SUBCASE("all targets at one point") {
    // The nearest observer's cluster takes every target; the others stay empty
    // and keep their seed.
    cto::Rng gen(60), rng(0);
    const auto obs = random_points(gen, 12);
    const Point spot{40, 90};
    const std::vector<Point> targets(24, spot);
    std::size_t nearest = 0;
    for (std::size_t i = 1; i < obs.size(); ++i) {
      if (cto::distance(obs[i], spot) < cto::distance(obs[nearest], spot)) nearest = i;
    }
    const auto out = cto::kmeans_control({obs, obs, targets, 15, kArena, rng}, 12);
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == (i == nearest ? spot : obs[i]));

  }
  SUBCASE("two well separated groups") {
    const std::vector<Point> obs{{0, 0}, {100, 100}};
    const std::vector<Point> targets{{8, 10}, {12, 10}, {10, 8}, {10, 12}, {88, 90}, {92, 90}, {90, 88}, {90, 92}};
    cto::Rng rng(0);
    const auto out = cto::kmeans_control({obs, obs, targets, 15, kArena, rng}, 2);
    CHECK(out[0].x == doctest::Approx(10));
    CHECK(out[0].y == doctest::Approx(10));
    CHECK(out[1].x == doctest::Approx(90));
    CHECK(out[1].y == doctest::Approx(90));
  }
  SUBCASE("deterministic and draws nothing from the stream") {
    cto::Rng gen(61);
    const auto obs = random_points(gen, 12);
    const auto targets = random_points(gen, 24);
    cto::Rng a(1), b(1);
    CHECK(cto::kmeans_control({obs, obs, targets, 15, kArena, a}, 12) ==
          cto::kmeans_control({obs, obs, targets, 15, kArena, b}, 12));
    cto::Rng untouched(1);
    CHECK(a.next_u64() == untouched.next_u64());
  }
  SUBCASE("contract violations") {
    cto::Rng rng(0);
    const std::vector<Point> obs{{1, 1}, {2, 2}};
    CHECK_THROWS_AS(cto::kmeans_control({obs, obs, obs, 15, kArena, rng}, 3), std::invalid_argument);
    CHECK_THROWS_AS(cto::kmeans_control({obs, obs, {}, 15, kArena, rng}, 2), std::invalid_argument);
  }
  SUBCASE("clustering quality against restarted Lloyd's") {
    cto::Rng gen(62);
    int no_worse = 0;
    const int trials = 100;
    for (int trial = 0; trial < trials; ++trial) {
      const auto obs = random_points(gen, 12);
      const auto targets = random_points(gen, 24);
      cto::Rng rng(0);
      const auto centroids = cto::kmeans_control({obs, obs, targets, 15, kArena, rng}, 12);
      const double ours = cto::within_cluster_ss(centroids, targets);
      CHECK(ours == doctest::Approx(oracle::wcss(centroids, targets)).epsilon(1e-12));
      // Converged: further Lloyd iterations do not improve it.
      CHECK(oracle::wcss(oracle::lloyd(centroids, targets), targets) == doctest::Approx(ours).epsilon(1e-6));

      // Forgy restarts: 12 distinct targets as seeds.
      std::vector<double> restarts;
      for (int r = 0; r < 10; ++r) {
        std::vector<Point> pool = targets, seeds;
        for (int c = 0; c < 12; ++c) {
          const std::size_t pick = gen.uniform_index(pool.size());
          seeds.push_back(pool[pick]);
          pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        restarts.push_back(oracle::wcss(oracle::lloyd(seeds, targets), targets));
      }
      std::sort(restarts.begin(), restarts.end());
      if (ours <= restarts.back() * (1.0 + 1e-9)) ++no_worse;
    }
    // Seeds in empty regions of the arena stay put, so a single run is not
    // competitive with restarts; this is reported, not asserted.
    MESSAGE("no worse than the worst of 10 restarts in " << no_worse << " of " << trials << " trials");
  }
}
