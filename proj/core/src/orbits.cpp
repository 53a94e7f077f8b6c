#include "oddsym/orbits.hpp"

#include <map>
#include <stdexcept>

namespace oddsym {

BraidWord WordSampler::sample(SplitMix64& rng) const {
  if (strands < 2) throw std::invalid_argument("WordSampler: need at least 2 strands");
  if (mean_length == 0) throw std::invalid_argument("WordSampler: mean length must be positive");
  BraidWord w;
  w.strands = strands;
  std::uint64_t threshold = ~std::uint64_t{0} / mean_length;  // success prob 1/mean
  while (true) {
    std::uint64_t idx = rng.below(strands - 1) + 1;
    bool negative = (rng.next() & 1) != 0;
    w.letters.push_back(negative ? -static_cast<int>(idx) : static_cast<int>(idx));
    if (rng.next() < threshold) break;
  }
  return w;
}

GroupElement random_t_element(std::size_t n, SplitMix64& rng, std::size_t factors) {
  if (n < 2) throw std::invalid_argument("random_t_element: need rank >= 2");
  IntMat acc = IntMat::identity(n);
  for (std::size_t f = 0; f < factors; ++f) {
    if (rng.next() & 1) {
      std::size_t i = rng.below(n - 1) + 1;
      int sign = (rng.next() & 1) ? 1 : -1;
      BraidWord letter{n, {sign * static_cast<int>(i)}};
      acc = acc * burau(letter).element.matrix();
    } else {
      // Transvection along a random small vector in ker(phi).
      IntVec w(n);
      Int sum = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        w[i] = Int(static_cast<long long>(rng.below(5)) - 2);
        sum += w[i];
      }
      w[n - 1] = -sum;
      acc = acc * transvection_matrix(w);
    }
  }
  return GroupElement::certify(std::move(acc));
}

std::vector<IntVec> standard_orbit_tuple(OrbitKind kind, std::size_t n, std::size_t tuple_size) {
  std::vector<IntVec> tuple;
  if (kind == OrbitKind::X) {
    if (tuple_size == 0 || tuple_size >= n)
      throw std::invalid_argument("standard_orbit_tuple: X tuples need 1 <= size < n");
    for (std::size_t k = 0; k < tuple_size; ++k) {
      IntVec e(n);
      e[n - tuple_size + k] = 1;
      tuple.push_back(std::move(e));
    }
  } else {
    if (tuple_size == 0 || 2 * tuple_size >= n)
      throw std::invalid_argument("standard_orbit_tuple: IX tuples need 1 <= size < n/2");
    for (std::size_t k = 0; k < tuple_size; ++k) {
      IntVec x(n);
      x[2 * k] = 1;
      x[2 * k + 1] = -1;
      tuple.push_back(std::move(x));
    }
  }
  return tuple;
}

NecessityReport necessity_experiment(OrbitKind kind, std::size_t n, std::size_t tuple_size,
                                     std::size_t trials, std::uint64_t seed,
                                     std::uint64_t mean_length) {
  NecessityReport report;
  report.kind = kind;
  report.n = n;
  report.tuple_size = tuple_size;
  report.trials = trials;
  report.seed = seed;
  report.mean_length = mean_length;

  std::vector<IntVec> base = standard_orbit_tuple(kind, n, tuple_size);
  {
    // The standard tuple itself must satisfy the conditions.
    OrbitReport r = orbit_conditions(kind, n, base);
    if (!r.all()) throw std::logic_error("necessity_experiment: standard tuple fails conditions");
  }

  SplitMix64 rng(seed);
  WordSampler sampler{n, mean_length};
  for (std::size_t t = 0; t < trials; ++t) {
    BraidWord word = sampler.sample(rng);
    std::vector<IntVec> images;
    images.reserve(base.size());
    for (const IntVec& u : base) images.push_back(apply_word(word, u));
    OrbitReport r = orbit_conditions(kind, n, images);
    if (!r.all()) {
      report.pass = false;
      report.counterexample = Counterexample{t, word, images, r};
      return report;
    }
  }
  return report;
}

ReachabilityResult reachability_search(const std::vector<IntVec>& target, std::size_t n,
                                       std::size_t max_depth, std::size_t max_states) {
  ReachabilityResult result;
  result.target = target;
  if (target.empty()) throw std::invalid_argument("reachability_search: empty target");
  OrbitReport r = orbit_conditions(OrbitKind::X, n, target);
  if (!r.all())
    throw std::invalid_argument(
        "reachability_search: target fails the orbit conditions, so it is not reachable");

  std::vector<IntVec> start = standard_orbit_tuple(OrbitKind::X, n, target.size());

  // Generator matrices: sigma_1..sigma_{n-1} and inverses, in that order.
  std::vector<IntMat> gens;
  std::vector<int> letters;
  for (std::size_t i = 1; i < n; ++i) {
    gens.push_back(burau_generator(n, i, 1).matrix());
    letters.push_back(static_cast<int>(i));
    gens.push_back(burau_generator(n, i, -1).matrix());
    letters.push_back(-static_cast<int>(i));
  }

  // parent state + letter applied, for witness reconstruction
  std::map<std::vector<IntVec>, std::pair<std::vector<IntVec>, int>> visited;
  visited.emplace(start, std::make_pair(std::vector<IntVec>{}, 0));
  std::vector<std::vector<IntVec>> frontier{start};

  auto reconstruct = [&](std::vector<IntVec> state) {
    // Letters applied first end up rightmost: the path applies g_k ... g_1 to
    // the start, and burau evaluates words as M(l_1) ... M(l_k).
    std::vector<int> path;
    while (true) {
      const auto& [parent, letter] = visited.at(state);
      if (parent.empty()) break;
      path.push_back(letter);
      state = parent;
    }
    BraidWord w;
    w.strands = n;
    w.letters = path;
    return w;
  };

  for (std::size_t depth = 0; depth <= max_depth; ++depth) {
    result.depth_searched = depth;
    if (visited.count(target)) {
      result.found = true;
      result.witness = reconstruct(target);
      result.states_visited = visited.size();
      return result;
    }
    if (depth == max_depth) break;
    std::vector<std::vector<IntVec>> next;
    for (const auto& state : frontier) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        std::vector<IntVec> image;
        image.reserve(state.size());
        for (const IntVec& u : state) image.push_back(gens[gi].apply(u));
        if (visited.count(image)) continue;
        if (visited.size() >= max_states)
          throw BudgetExceeded("reachability_search: state budget exhausted");
        visited.emplace(image, std::make_pair(state, letters[gi]));
        next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  result.states_visited = visited.size();
  return result;
}

}  // namespace oddsym
