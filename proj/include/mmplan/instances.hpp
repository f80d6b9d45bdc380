#pragma once

#include "mmplan/network.hpp"

#include <cstdint>

namespace mmplan {

/// Small what-if instance: one POP, DNs "dnA", "dnB", "dnC" and two demand points.
/// dnA is the only site serving dem0 (a cut vertex); dem1 is served by the cheap
/// dnB behind dnA or by the expensive dnC linked straight to the POP.
DesignProblem demo_instance();

struct BenchmarkSpec {
  std::size_t grid_x = 10;  // demand lattice, 30 m spacing
  std::size_t grid_y = 6;
  std::size_t dn = 20;
  std::size_t pop = 8;
  double link_range = 120.0;
  double link_keep = 0.8;  // probability that an in-range pair has LoS
  std::uint64_t seed = 7;
  NetworkConfig network = default_network();

  static NetworkConfig default_network();
};

/// Random candidate layout over the demand lattice: DN/POP candidates on a jittered
/// grid, seeded LoS between nearby pairs; regenerated until every demand point is
/// reachable.
DesignProblem benchmark_instance(const BenchmarkSpec& spec = {});

}  // namespace mmplan
