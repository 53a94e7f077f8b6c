#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "oddsym/lattice.hpp"

namespace oddsym {

/// A word in the Artin generators of the braid group on `strands` strands.
/// Letters are signed indices: +i for sigma_i, -i for its inverse.
struct BraidWord {
  std::size_t strands = 0;
  std::vector<int> letters;

  /// Parses "1,2,-1"; the empty string is the empty word.
  static BraidWord parse(std::size_t strands, const std::string& csv);
  std::string to_csv() const;
  void validate() const;  // throws on out-of-range letters
};

/// sigma_i as the block matrix 1_{i-1} (+) B^{sign} (+) 1_{n-i-1} with
/// B = [[2, 1], [-1, 0]]. Replacing B by its transpose gives an isomorphic
/// representation (conjugate by diag(1, -1, 1, ...)); we fix B as above.
GroupElement burau_generator(std::size_t n, std::size_t i, int sign);

struct BurauImage {
  GroupElement element;
  BraidWord word;
};

/// Product of generator matrices in word order (letters act as left actions,
/// composed like functions). The image is certified; it always lands in Q.
BurauImage burau(const BraidWord& word);

/// Action on ker(phi) = {sum of entries 0} in the basis f_i = e_i - e_{i+1};
/// an (n-1) x (n-1) integer matrix.
IntMat reduced_burau(const BraidWord& word);

/// Image of a vector under the Burau matrix of the word, computed letter by
/// letter (each generator touches two coordinates); equals
/// burau(word).element.matrix().apply(x).
IntVec apply_word(const BraidWord& word, IntVec x);

/// True iff 1_{i-1} (+) braiding(1,1,eq31) (+) 1_{n-i-1} equals
/// burau_generator(n, i, +1).
bool braiding_vs_burau(std::size_t n, std::size_t i);

/// Image of the word under the surjection onto the symmetric group:
/// perm[j] = image of j, with generators composed in the same order as the
/// matrices. Its permutation matrix is the mod-2 reduction of the Burau
/// matrix.
std::vector<std::size_t> underlying_permutation(const BraidWord& word);

IntMat permutation_matrix(const std::vector<std::size_t>& perm);

}  // namespace oddsym
