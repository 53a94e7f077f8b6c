#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oddsym/lattice.hpp"

namespace oddsym {

/// Families of subcomplexes of Z_n. X and WQ are directed (simplices are
/// ordered tuples); Z, Y, IX are plain simplicial complexes.
enum class Family { Z, Y, IX, X, WQ };
std::string to_string(Family f);
Family parse_family(const std::string& s);

/// Indices (0-based) of the odd entries of u.
std::vector<std::size_t> rho_set(const IntVec& u);

bool vertex_predicate(Family f, std::size_t n, const IntVec& u);

/// All family conditions, verified exactly on the tuple as given. For the
/// directed families the tuple order must realise <u_i, u_j> = 1 for i < j.
/// Tuples too large to span a partial basis together with v_n are rejected
/// (for WQ, size-n tuples are admitted via the basis-with-alternating-sum
/// condition instead).
bool simplex_predicate(Family f, std::size_t n, const std::vector<IntVec>& tuple);

/// Conditions for membership in the relative complex W(sigma): the union
/// with sigma is a Z_n-simplex and every pairing against sigma vanishes.
/// sigma itself must be a Z_n-simplex.
bool relative_conditions(std::size_t n, const std::vector<IntVec>& tuple,
                         const std::vector<IntVec>& sigma);

enum class OrbitKind { X, IX };

/// The four orbit conditions, reported separately.
struct OrbitReport {
  bool partial_basis_with_v = false;  // (1)
  bool pairings = false;              // (2)
  bool rho_condition = false;         // (3)
  bool phi_condition = false;         // (4)
  bool all() const { return partial_basis_with_v && pairings && rho_condition && phi_condition; }
};

/// For OrbitKind::X the tuple must have 1 <= size <= n-1; for OrbitKind::IX,
/// 2*size < n. Out-of-range sizes throw.
OrbitReport orbit_conditions(OrbitKind kind, std::size_t n, const std::vector<IntVec>& tuple);

struct ComplexSpec {
  Family family = Family::X;
  std::size_t n = 0;
  int box = 0;                      // vertex entries range over [-box, box]
  std::vector<IntVec> relative_to;  // optional Z_n-simplex sigma
};

struct BuildLimits {
  std::size_t max_vertices = 200000;
  std::size_t max_simplices = 2000000;
  long max_dim = -1;  // < 0: no cap
  std::optional<std::chrono::milliseconds> time_budget;
};

struct FiniteComplex {
  std::string family;  // family name, or a derived label such as "LLk(X)"
  std::size_t n = 0;   // length of the vertex vectors
  int box = 0;
  std::vector<IntVec> relative_to;
  std::vector<IntVec> vertices;                     // sorted lexicographically
  std::vector<std::vector<std::size_t>> simplices;  // index tuples, all dimensions, face-closed

  long dim() const;
  std::vector<std::vector<std::size_t>> of_dim(std::size_t d) const;
  std::size_t count_of_dim(std::size_t d) const;
  std::vector<IntVec> tuple_vectors(const std::vector<std::size_t>& simplex) const;
  bool has_simplex(const std::vector<std::size_t>& simplex) const;
};

/// Enumerates the truncation of the family complex to the coefficient box.
/// Throws BudgetExceeded (with partial statistics in the message) when a
/// limit is hit.
FiniteComplex build_complex(const ComplexSpec& spec, const BuildLimits& limits = {});

/// The p+1 destabilisation faces of an ordered WQ-simplex. d_0 drops the
/// first entry; d_i first acts by the inverse braiding, replacing the tuple
/// by (w, u_0, ..., u_i omitted, ..., u_p) with
/// w = 2u_0 - 2u_1 + ... +- 2u_{i-1} -+ u_i, then drops the first entry.
/// Every intermediate tuple is checked to be a simplex again.
std::vector<std::vector<IntVec>> destab_faces(std::size_t n, const std::vector<IntVec>& simplex);

/// Left-link: all tau with the concatenation (tau, sigma) a simplex of fc.
/// sigma is given by its vertex vectors and must be a simplex of fc.
FiniteComplex left_link(const FiniteComplex& fc, const std::vector<IntVec>& sigma);

/// Bracket construction: vertex set (vertices of fc) x labels, a tuple of
/// labelled vertices being a simplex iff the underlying tuple is. Labels are
/// encoded by concatenating the label vector onto the vertex vector.
FiniteComplex bracket(const FiniteComplex& fc, const std::vector<IntVec>& labels);

}  // namespace oddsym
