#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "oddsym/ints.hpp"
#include "oddsym/matrix.hpp"

namespace oddsym {

/// Z^n carrying the standard skew pairing <e_i, e_j> = sign(j - i) and the
/// linear functional phi(e_i) = 1. Both are determined by the rank, so the
/// struct is just a tagged dimension.
struct FormedModule {
  std::size_t rank = 0;
};

/// <u, v> = sum_{i<j} (u_i v_j - u_j v_i).
Int form_pairing(const FormedModule& m, const IntVec& u, const IntVec& v);

/// phi(u) = sum of entries.
Int phi(const FormedModule& m, const IntVec& u);

/// Gram matrix of the pairing on the standard basis.
IntMat form_gram(std::size_t n);

/// v_n = e_1 - e_2 + ... + (-1)^{n-1} e_n. For odd n it spans the radical of
/// the pairing; for even n it represents phi via the pairing. Every element
/// of T_n fixes it.
IntVec distinguished_vector(std::size_t n);

/// Certified membership levels, finest last: T[2] inside Q inside T.
enum class Level { NotInT, T, Q, T2 };
std::string to_string(Level level);

/// Verifies the defining identities on basis vectors (never trusts
/// provenance): pairing and phi preserved, determinant +-1, then the mod-2
/// refinement (identity -> T2, permutation matrix -> Q).
Level classify_element(const IntMat& m);

/// An integer matrix together with its verified membership level.
class GroupElement {
 public:
  /// Classifies and wraps; throws std::invalid_argument unless the matrix
  /// lies in T.
  static GroupElement certify(IntMat m);

  const IntMat& matrix() const { return matrix_; }
  Level level() const { return level_; }
  std::size_t rank() const { return matrix_.rows(); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  GroupElement(IntMat m, Level level) : matrix_(std::move(m)), level_(level) {}
  IntMat matrix_;
  Level level_;
};

/// Block sum. The monoidal structure twists the pairing,
/// <x+x', y+y'> = <x,y> + <x',y'> + phi(x)phi(y') - phi(y)phi(x'),
/// and block sums of T-elements preserve the twisted sum form; the result is
/// re-certified from scratch.
GroupElement monoidal_sum(const GroupElement& a, const GroupElement& b);

enum class BraidingConvention { eq31, eq32 };
BraidingConvention parse_convention(const std::string& s);

/// The crossing Z^n (+) Z^m -> Z^m (+) Z^n as an (n+m) x (n+m) matrix.
/// eq31: (x, y) |-> (y + 2 phi(x) v_m, (-1)^m x); eq32 is its reverse,
/// (x, y) |-> ((-1)^n y, x + (-1)^{n+1} 2 phi(y) v_n). eq31 at n = m = 1 is
/// the Burau block B = [[2, 1], [-1, 0]].
GroupElement braiding(std::size_t n, std::size_t m, BraidingConvention convention);

/// x |-> x + <x, w> w for w in ker(phi). These lie in T and, for |rho(w)| > 2,
/// generally outside Q; the test suites use them to sample honest T-elements.
GroupElement transvection(const IntVec& w);

/// Raw matrix of the transvection, without certification (for bulk sampling;
/// transvection() wraps this and verifies).
IntMat transvection_matrix(const IntVec& w);

/// Elementary divisors (nonnegative, each dividing the next, padded with
/// zeros to min(rows, cols)) and the rank over Q.
struct SmithDecomposition {
  std::vector<Int> divisors;
  std::size_t rank = 0;
};

/// Pivots on a minimal-absolute-value entry (ties: lowest row, then column)
/// with gcd row/column reduction.
SmithDecomposition smith_normal_form(IntMat m);

/// True iff the vectors extend to a basis of Z^n: at most n of them and all
/// elementary divisors of the stacked matrix equal 1. The empty list is a
/// partial basis.
bool is_partial_basis(const std::vector<IntVec>& vectors, const FormedModule& ambient);

/// Gram matrix of the pairing restricted to ker(phi) in the difference basis
/// f_i = e_i - e_{i+1} (tridiagonal; unimodular iff n is odd).
IntMat gram_ker_phi(std::size_t n);

/// Matrix of the action of m on ker(phi) in the difference basis. Throws if
/// m does not preserve ker(phi).
IntMat restrict_to_ker_phi(const IntMat& m);

}  // namespace oddsym
