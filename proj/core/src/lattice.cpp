#include "oddsym/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddsym {

Int form_pairing(const FormedModule& m, const IntVec& u, const IntVec& v) {
  if (u.size() != m.rank || v.size() != m.rank)
    throw std::invalid_argument("form_pairing: dimension mismatch");
  Int acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = i + 1; j < v.size(); ++j) acc += u[i] * v[j];
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = i + 1; j < u.size(); ++j) acc -= u[j] * v[i];
  }
  return acc;
}

Int phi(const FormedModule& m, const IntVec& u) {
  if (u.size() != m.rank) throw std::invalid_argument("phi: dimension mismatch");
  Int acc = 0;
  for (const Int& x : u) acc += x;
  return acc;
}

IntMat form_gram(std::size_t n) {
  IntMat g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = i < j ? 1 : (i > j ? -1 : 0);
  return g;
}

IntVec distinguished_vector(std::size_t n) {
  if (n == 0) throw std::invalid_argument("distinguished_vector: rank must be positive");
  IntVec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (i % 2 == 0) ? 1 : -1;
  return v;
}

std::string to_string(Level level) {
  switch (level) {
    case Level::NotInT: return "not_in_T";
    case Level::T: return "T";
    case Level::Q: return "Q";
    case Level::T2: return "T[2]";
  }
  return "?";
}

Level classify_element(const IntMat& m) {
  if (!m.square()) throw std::invalid_argument("classify_element: non-square matrix");
  std::size_t n = m.rows();
  // phi(M e_j) = 1 for every column.
  for (std::size_t j = 0; j < n; ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < n; ++i) s += m(i, j);
    if (s != 1) return Level::NotInT;
  }
  // <M e_i, M e_j> = <e_i, e_j>, i.e. M^t G M = G.
  IntMat g = form_gram(n);
  if (m.transposed() * g * m != g) return Level::NotInT;
  Int det = m.determinant();
  if (det != 1 && det != -1) return Level::NotInT;
  IntMat r = m.mod2();
  if (r.is_identity()) return Level::T2;
  if (r.is_permutation_matrix()) return Level::Q;
  return Level::T;
}

GroupElement GroupElement::certify(IntMat m) {
  Level level = classify_element(m);
  if (level == Level::NotInT)
    throw std::invalid_argument("matrix does not preserve the form and phi");
  return GroupElement(std::move(m), level);
}

GroupElement monoidal_sum(const GroupElement& a, const GroupElement& b) {
  return GroupElement::certify(IntMat::block_diag(a.matrix(), b.matrix()));
}

BraidingConvention parse_convention(const std::string& s) {
  if (s == "eq31") return BraidingConvention::eq31;
  if (s == "eq32") return BraidingConvention::eq32;
  throw std::invalid_argument("unknown braiding convention '" + s + "'");
}

GroupElement braiding(std::size_t n, std::size_t m, BraidingConvention convention) {
  std::size_t total = n + m;
  IntMat mat(total, total);
  if (convention == BraidingConvention::eq31) {
    // Column of e_i (x-part): (2 v_m, (-1)^m e_i).
    int sgn = (m % 2 == 0) ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < m; ++k) mat(k, i) = (k % 2 == 0) ? 2 : -2;
      mat(m + i, i) = sgn;
    }
    // Column of e_{n+j} (y-part): (e_j, 0).
    for (std::size_t j = 0; j < m; ++j) mat(j, n + j) = 1;
  } else {
    // Column of e_i (x-part): (0, e_i).
    for (std::size_t i = 0; i < n; ++i) mat(m + i, i) = 1;
    // Column of e_{n+j} (y-part): ((-1)^n e_j, (-1)^{n+1} 2 v_n).
    int sgn = (n % 2 == 0) ? 1 : -1;
    for (std::size_t j = 0; j < m; ++j) {
      mat(j, n + j) = sgn;
      for (std::size_t k = 0; k < n; ++k) mat(m + k, n + j) = (k % 2 == 0) ? -2 * sgn : 2 * sgn;
    }
  }
  return GroupElement::certify(std::move(mat));
}

IntMat transvection_matrix(const IntVec& w) {
  std::size_t n = w.size();
  FormedModule mod{n};
  if (phi(mod, w) != 0) throw std::invalid_argument("transvection: w must lie in ker(phi)");
  IntMat mat(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    IntVec ej(n);
    ej[j] = 1;
    Int c = form_pairing(mod, ej, w);
    for (std::size_t i = 0; i < n; ++i) mat(i, j) = (i == j ? 1 : 0) + c * w[i];
  }
  return mat;
}

GroupElement transvection(const IntVec& w) { return GroupElement::certify(transvection_matrix(w)); }

namespace {

// Position of an entry of minimal nonzero absolute value in the trailing
// submatrix, ties broken by lowest (row, column). Returns false if the
// submatrix is zero.
bool min_abs_pivot(const IntMat& m, std::size_t k, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = k; i < m.rows(); ++i)
    for (std::size_t j = k; j < m.cols(); ++j) {
      const Int& x = m(i, j);
      if (x == 0) continue;
      Int a = abs_int(x);
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  return found;
}

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

SmithDecomposition smith_normal_form(IntMat m) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::size_t bound = std::min(rows, cols);
  SmithDecomposition out;
  out.divisors.assign(bound, Int(0));

  std::size_t k = 0;
  while (k < bound) {
    std::size_t pr = 0, pc = 0;
    if (!min_abs_pivot(m, k, pr, pc)) break;
    // Each pass re-selects the globally smallest entry as the pivot and
    // replaces the pivot row/column by remainders; the minimum strictly
    // decreases between passes, which both terminates the loop and keeps
    // entry growth in check.
    while (true) {
      min_abs_pivot(m, k, pr, pc);
      swap_rows(m, k, pr);
      swap_cols(m, k, pc);
      bool dirty = false;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (m(i, k) == 0) continue;
        Int q = m(i, k) / m(k, k);
        if (q != 0)
          for (std::size_t j = k; j < cols; ++j) m(i, j) -= q * m(k, j);
        if (m(i, k) != 0) dirty = true;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m(k, j) == 0) continue;
        Int q = m(k, j) / m(k, k);
        if (q != 0)
          for (std::size_t i = k; i < rows; ++i) m(i, j) -= q * m(i, k);
        if (m(k, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Pivot row and column are clear; fold in any row whose entries the
      // pivot does not divide and reduce again.
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i)
        for (std::size_t j = k + 1; j < cols && divides; ++j)
          if (m(i, j) % m(k, k) != 0) {
            for (std::size_t c = k; c < cols; ++c) m(k, c) += m(i, c);
            divides = false;
          }
      if (divides) break;
    }
    if (m(k, k) < 0) m(k, k) = -m(k, k);
    out.divisors[k] = m(k, k);
    ++k;
  }
  out.rank = k;
  return out;
}

bool is_partial_basis(const std::vector<IntVec>& vectors, const FormedModule& ambient) {
  if (vectors.size() > ambient.rank)
    throw std::invalid_argument("is_partial_basis: too many vectors");
  for (const IntVec& v : vectors)
    if (v.size() != ambient.rank) throw std::invalid_argument("is_partial_basis: dimension mismatch");
  if (vectors.empty()) return true;
  SmithDecomposition snf = smith_normal_form(IntMat::from_rows(vectors));
  for (const Int& d : snf.divisors)
    if (d != 1) return false;
  return true;
}

IntMat gram_ker_phi(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gram_ker_phi: rank must be positive");
  IntMat g(n - 1, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (j == i + 1) g(i, j) = 1;
      if (i == j + 1) g(i, j) = -1;
    }
  return g;
}

IntMat restrict_to_ker_phi(const IntMat& m) {
  if (!m.square() || m.rows() == 0)
    throw std::invalid_argument("restrict_to_ker_phi: need a square matrix of positive size");
  std::size_t n = m.rows();
  IntMat out(n - 1, n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    // Image of f_j = e_j - e_{j+1}; its coordinates in the f-basis are the
    // partial sums of its entries.
    IntVec img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = m(i, j) - m(i, j + 1);
    Int partial = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      partial += img[i];
      out(i, j) = partial;
    }
    partial += img[n - 1];
    if (partial != 0)
      throw std::invalid_argument("restrict_to_ker_phi: matrix does not preserve ker(phi)");
  }
  return out;
}

}  // namespace oddsym
