#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oddsym/complexes.hpp"
#include "oddsym/ints.hpp"
#include "oddsym/matrix.hpp"

namespace oddsym {

/// Column-major sparse integer matrix; each column holds (row, value) pairs
/// sorted by row.
struct SparseMat {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::size_t, Int>>> columns;

  SparseMat() = default;
  SparseMat(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}
  std::size_t nonzeros() const;
  IntMat dense() const;
};

/// Rank over Q by fraction-free column reduction (integer cross-elimination
/// with gcd normalisation); columns are processed by ascending fill, ties by
/// index.
std::size_t rank_over_q(const SparseMat& m);

/// Rank over F_2.
std::size_t rank_over_f2(const SparseMat& m);

/// Boundary matrices of a face-closed complex; boundary[d] maps d-chains to
/// (d-1)-chains for d >= 1. cells[d] counts d-simplices.
struct ChainComplexData {
  std::vector<std::size_t> cells;
  std::vector<SparseMat> boundary;  // boundary[0] is unused (empty)
  long top_dim() const { return static_cast<long>(cells.size()) - 1; }
};

/// Builds the simplicial chain complex, verifies face-closure and that
/// consecutive boundaries compose to zero. For the WQ family the face maps
/// are routed through destab_faces.
ChainComplexData chain_complex(const FiniteComplex& fc);

enum class Coefficients { Q, F2, Z };
std::string to_string(Coefficients c);
Coefficients parse_coefficients(const std::string& s);

struct DegreeHomology {
  long degree = 0;
  std::size_t betti_q = 0;            // rank over Q (also the free rank over Z)
  std::optional<std::size_t> betti_f2;
  std::vector<Int> torsion;           // nontrivial elementary divisors (Z only)
};

struct HomologyReport {
  Coefficients coefficients = Coefficients::Q;
  bool reduced = true;
  std::vector<DegreeHomology> degrees;  // degree 0 .. top_dim
  Int euler_from_cells = 0;
  Int euler_from_betti = 0;             // alternating sum of unreduced field betti numbers
  long connectivity = -2;               // largest c with reduced H_d = 0 for all d <= c
};

HomologyReport homology(const ChainComplexData& cc, Coefficients coefficients,
                        bool reduced = true);

/// Cone over the complex: one apex vertex (the zero vector) joined to every
/// simplex. Only meaningful as input to the homology engine.
FiniteComplex cone(const FiniteComplex& fc);

/// Standard fixtures for oracle tests: the boundary of the k-simplex, and a
/// 6-vertex triangulation of the real projective plane.
FiniteComplex boundary_of_simplex(std::size_t k);
FiniteComplex projective_plane();

}  // namespace oddsym
