#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

#include <algorithm>

using namespace flowpoly;

TEST_CASE("triangle with positive edge: 17 dynamic flows") {
  SignedGraph g = fixtures::triangle_plus();
  Netflow a{2, 1, 1};
  CHECK(dyn_kpf(g, a) == 17);
  CHECK(dyn_kpf(g, a, KpfEngine::dp) == 17);
  CHECK(dyn_kpf(g, a, KpfEngine::series) == 17);
}

TEST_CASE("decomposition by left-half flow: 3 + 8 + 6") {
  SignedGraph g = fixtures::triangle_plus();
  Netflow a{2, 1, 1};
  auto parts = dyn_decompose(g, a);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].count == 3);
  CHECK(parts[1].count == 8);
  CHECK(parts[2].count == 6);
  // Left flow l on the positive edge removes l units at its low endpoint and
  // spawns l extra half-weight loops at its high endpoint.
  CHECK(parts[0].netflow == Netflow{2, 1, 1});
  CHECK(parts[1].netflow == Netflow{1, 1, 1});
  CHECK(parts[2].netflow == Netflow{0, 1, 1});
  CHECK(parts[1].left_flows == std::vector<long long>{0, 0, 0, 1});
  // Derived graphs replace the positive edge by half loops at vertex 3.
  int halves = 0;
  for (const SignedEdge& e : parts[2].derived.edges)
    if (e.is_half() && e.lo == 3) ++halves;
  CHECK(halves == 3);  // left flow 2 spawns 2 extras plus the original half
  BigInt total(0);
  for (const auto& p : parts) total += p.count;
  CHECK(total == dyn_kpf(g, a));
}

TEST_CASE("dynamic flow enumeration matches the count") {
  SignedGraph g = fixtures::triangle_plus();
  Netflow a{2, 1, 1};
  auto en = enumerate_dynamic_flows(g, a);
  CHECK_FALSE(en.truncated);
  CHECK(en.flows.size() == 17);
  for (const auto& f : en.flows) {
    REQUIRE(f.edge_flow.size() == 4);
    // Right lists are per edge: empty on negative edges, and one entry per
    // unit of left flow plus the original right half-edge on positive ones.
    REQUIRE(f.right_flows.size() == 4);
    for (int k = 0; k < 3; ++k) CHECK(f.right_flows[k].empty());
    CHECK(static_cast<long long>(f.right_flows[3].size()) ==
          f.edge_flow[3] + 1);
  }
  auto trunc = enumerate_dynamic_flows(g, a, 5);
  CHECK(trunc.truncated);
  CHECK(trunc.flows.size() == 5);
}

TEST_CASE("volume netflow of the seven-edge graph") {
  SignedGraph g = fixtures::vol5_graph();
  CHECK(dyn_kpf(g, Netflow{0, 1, 0, 1}) == 5);
  CHECK(dyn_kpf(g, Netflow{0, 1, 0, 1}, KpfEngine::dp) == 5);
  CHECK(dyn_kpf(g, Netflow{0, 1, 0, 1}, KpfEngine::series) == 5);
}

TEST_CASE("loops are rejected") {
  SignedGraph g = fixtures::mixed3();  // contains a loop at vertex 2
  CHECK_THROWS_AS(dyn_kpf(g, Netflow{1, 3, -2}), Error);
  try {
    dyn_kpf(g, Netflow{1, 3, -2});
  } catch (const Error& e) {
    CHECK(std::string(e.code()) == "unsupported-loop");
  }
}

TEST_CASE("no positive edges: dynamic count equals the ordinary count") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    int nv = std::uniform_int_distribution<int>(2, 5)(rng);
    SignedGraph g = fixtures::random_negative_graph(
        rng, nv, std::uniform_int_distribution<int>(0, 4)(rng));
    Netflow a = fixtures::netflow_of_random_flow(rng, g, 2);
    CHECK(dyn_kpf(g, a) == kpf(g, a));
  }
}

TEST_CASE("engines agree on random signed graphs") {
  std::mt19937 rng(20260823);
  int done = 0;
  while (done < 25) {
    int nv = std::uniform_int_distribution<int>(2, 4)(rng);
    SignedGraph g = fixtures::random_signed_graph(
        rng, nv, std::uniform_int_distribution<int>(0, 3)(rng));
    // Arbitrary small netflows; engines must agree even on infeasible ones.
    Netflow a(nv);
    for (auto& v : a) v = std::uniform_int_distribution<int>(0, 3)(rng);
    BigInt dp = dyn_kpf(g, a, KpfEngine::dp);
    BigInt series = dyn_kpf(g, a, KpfEngine::series);
    CHECK(dp == series);
    CHECK(dp == BigInt(enumerate_dynamic_flows(g, a).flows.size()));
    ++done;
  }
}

TEST_CASE("decomposition parts always sum to the dynamic count") {
  std::mt19937 rng(7);
  for (int t = 0; t < 10; ++t) {
    SignedGraph g = fixtures::random_signed_graph(rng, 3, 2);
    Netflow a(3);
    for (auto& v : a) v = std::uniform_int_distribution<int>(0, 2)(rng);
    auto parts = dyn_decompose(g, a);
    BigInt total(0);
    for (const auto& p : parts) total += p.count;
    CHECK(total == dyn_kpf(g, a));
  }
}
