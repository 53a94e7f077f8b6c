#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddsym/burau.hpp"
#include "oddsym/complexes.hpp"

namespace oddsym {

/// splitmix64; fully specified, so experiments replay bit-for-bit from the
/// seed on any platform.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4db3efa55a9d1ULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

/// Draws random words in the Burau generators. Lengths are geometric with
/// the given integer mean (success threshold 2^64 / mean on the raw 64-bit
/// draw); letters are uniform indices with uniform signs.
struct WordSampler {
  std::size_t strands;
  std::uint64_t mean_length = 8;

  BraidWord sample(SplitMix64& rng) const;
};

/// Samples an element of T_n as a bounded product of Burau generators and
/// transvections along random ker(phi) vectors; these routinely leave Q.
GroupElement random_t_element(std::size_t n, SplitMix64& rng, std::size_t factors = 6);

struct Counterexample {
  std::size_t trial = 0;
  BraidWord word;
  std::vector<IntVec> images;
  OrbitReport report;
};

struct NecessityReport {
  OrbitKind kind = OrbitKind::X;
  std::size_t n = 0;
  std::size_t tuple_size = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t mean_length = 8;
  bool pass = true;
  std::optional<Counterexample> counterexample;
};

/// Applies random Q_n elements (Burau words) to the standard tuple of the
/// orbit lemma and checks the four orbit conditions on every image tuple.
/// Standard tuples: (e_{n-size+1}, ..., e_n) for the X kind,
/// (e_1 - e_2, ..., e_{2size-1} - e_{2size}) for the IX kind.
NecessityReport necessity_experiment(OrbitKind kind, std::size_t n, std::size_t tuple_size,
                                     std::size_t trials, std::uint64_t seed,
                                     std::uint64_t mean_length = 8);

std::vector<IntVec> standard_orbit_tuple(OrbitKind kind, std::size_t n, std::size_t tuple_size);

struct ReachabilityResult {
  std::vector<IntVec> target;
  bool found = false;
  BraidWord witness;  // burau(witness) maps the standard tuple to the target
  std::size_t depth_searched = 0;
  std::size_t states_visited = 0;
};

/// Breadth-first search over generator words from the standard X-tuple.
/// Rejects targets failing the orbit conditions; "not found" never claims
/// non-membership.
ReachabilityResult reachability_search(const std::vector<IntVec>& target, std::size_t n,
                                       std::size_t max_depth,
                                       std::size_t max_states = 5000000);

}  // namespace oddsym
