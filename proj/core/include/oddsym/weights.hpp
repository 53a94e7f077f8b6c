#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddsym/ints.hpp"

namespace oddsym {

/// Torus weight of Sp_2n in epsilon-coordinates.
using Weight = std::vector<std::int64_t>;

/// Weakly decreasing positive parts; the empty partition is allowed.
struct Partition {
  std::vector<std::int64_t> parts;

  static Partition parse(const std::string& csv);  // "2,1"; "" and "0" are empty
  void validate() const;
  std::int64_t size() const;
  std::size_t length() const { return parts.size(); }
  Weight padded(std::size_t n) const;  // as a dominant weight of length n
  std::string to_csv() const;

  friend auto operator<=>(const Partition& a, const Partition& b) = default;
};

/// Element of the hyperoctahedral group on n letters in window notation:
/// window[i] = signed image of epsilon_{i+1}, values in {+-1, ..., +-n}.
struct SignedPerm {
  std::vector<int> window;

  static SignedPerm identity(std::size_t n);
  std::size_t degree() const { return window.size(); }
  void validate() const;
  SignedPerm inverse() const;
  SignedPerm compose(const SignedPerm& other) const;  // this after other
  Weight apply(const Weight& x) const;
  /// Coxeter length for type C_n (simple reflections: adjacent swaps and the
  /// sign flip on the last coordinate) = number of positive roots
  /// {e_i +- e_j (i<j), 2e_i} sent to negative roots.
  std::size_t length() const;

  friend auto operator<=>(const SignedPerm& a, const SignedPerm& b) = default;
};

/// rho = (n, n-1, ..., 1), the smallest regular dominant weight.
Weight rho_weight(std::size_t n);

/// w . lambda = w(lambda + rho) - rho.
Weight dot_action(const SignedPerm& w, const Weight& lambda);

bool is_dominant(const Weight& w);

/// Minimal-length coset representatives for the vector-stabiliser parabolic:
/// exactly 2n elements, one for each value c = w^{-1}(rho)_1 in
/// {n, ..., 1, -1, ..., -n} (the remaining entries of w^{-1}(rho) are the
/// unused values in descending order). Returned in that c-order, which is
/// also ascending length 0, 1, ..., 2n-1.
std::vector<SignedPerm> coset_reps_wp(std::size_t n);

struct KostantRow {
  SignedPerm w;        // the coset representative
  SignedPerm w_inv;
  Weight w_inv_rho;    // w^{-1}(rho)
  std::size_t degree;  // Coxeter length of w
  Weight levi;         // w^{-1}.lambda with the first entry deleted
};

/// One row per element of W^P: homology degree and the dominant Levi weight.
std::vector<KostantRow> kostant_rows(const Partition& lambda, std::size_t n);

/// {} if l(lambda) > 1, else {0, 2n-1}.
std::vector<std::size_t> trivial_summand_degrees(const Partition& lambda, std::size_t n);

using PartitionMultiset = std::map<Partition, Int>;

/// All mu obtained from lambda by removing a horizontal strip (no two boxes
/// in the same column), each with multiplicity 1.
PartitionMultiset pieri_shift(const Partition& lambda);

/// Horizontal-strip removal applied twice (multiset union over the two
/// steps); the rank-2 restriction rule.
PartitionMultiset sp_shift(const Partition& lambda);

/// Type-C Weyl dimension formula; 0 when l(lambda) > n.
Int weyl_dim_sp(const Partition& lambda, std::size_t n);

/// Formal Z-linear combination of torus weights of Sp_2n.
class Character {
 public:
  Character() = default;
  explicit Character(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  const std::map<Weight, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Int dimension() const;  // evaluation at the identity
  Int coefficient(const Weight& w) const;

  void add(const Weight& w, const Int& c);
  Character operator+(const Character& other) const;
  Character operator-(const Character& other) const;
  Character operator*(const Character& other) const;  // tensor product
  Character scaled(const Int& c) const;
  Character pow(std::size_t r) const;

  /// Largest dominant weight in the support under the graded lexicographic
  /// order (grade = coordinate sum), which refines dominance.
  std::optional<Weight> leading_dominant() const;

 private:
  std::size_t n_ = 0;
  std::map<Weight, Int> terms_;
};

/// Irreducible character of Sp_2n with highest weight lambda, computed by
/// Freudenthal's multiplicity recursion and Weyl-orbit symmetrisation.
/// Throws if l(lambda) > n.
Character sp_character(const Partition& lambda, std::size_t n);

/// Character of the defining representation k^{2n}.
Character defining_character(std::size_t n);

/// Character of the full exterior algebra of the defining representation of
/// Sp_2g (dimension 4^g).
Character wedge_character(std::size_t g);

/// Greedy highest-weight decomposition into irreducibles; throws
/// std::invalid_argument if a negative multiplicity shows the input is not a
/// genuine character.
PartitionMultiset decompose(Character ch, std::size_t n);

/// Multiplicity of the trivial representation in V^{(x) 2s} for Sp_2n.
Int invariant_dimension_tensor(std::size_t n, std::size_t s);

/// Multiplicity of V_lambda in (wedge V)^{(x) r} for Sp_2g. The support cap
/// guards the character convolution; exceeding it throws BudgetExceeded.
Int exterior_multiplicity(const Partition& lambda, std::size_t g, std::size_t r,
                          std::size_t max_support = 2000000);

/// Exact rational polynomial, lowest degree first.
struct Polynomial {
  std::vector<Rat> coeffs;
  std::size_t degree() const;
  Rat eval(const Rat& x) const;
};

/// Exact interpolation of minimal degree through all points (distinct
/// abscissae required). With max_degree set, fits the first max_degree+1
/// points and throws std::invalid_argument if the remaining points are
/// inconsistent with that fit.
Polynomial fit_polynomial(const std::vector<std::pair<Rat, Rat>>& points,
                          std::optional<std::size_t> max_degree = std::nullopt);

}  // namespace oddsym
