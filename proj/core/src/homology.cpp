#include "oddsym/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oddsym {

std::size_t SparseMat::nonzeros() const {
  std::size_t c = 0;
  for (const auto& col : columns) c += col.size();
  return c;
}

IntMat SparseMat::dense() const {
  IntMat m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, v] : columns[j]) m(i, j) = v;
  return m;
}

namespace {

using Column = std::vector<std::pair<std::size_t, Int>>;

void gcd_normalize(Column& c) {
  Int g = 0;
  for (const auto& [r, v] : c) {
    g = gcd_int(g, v);
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& [r, v] : c) v /= g;
}

// c := a*c - b*o, dropping cancellations.
Column cross_eliminate(const Column& c, const Column& o, const Int& a, const Int& b) {
  Column out;
  out.reserve(c.size() + o.size());
  std::size_t i = 0, j = 0;
  while (i < c.size() || j < o.size()) {
    if (j == o.size() || (i < c.size() && c[i].first < o[j].first)) {
      out.emplace_back(c[i].first, a * c[i].second);
      ++i;
    } else if (i == c.size() || o[j].first < c[i].first) {
      Int v = -b * o[j].second;
      out.emplace_back(o[j].first, std::move(v));
      ++j;
    } else {
      Int v = a * c[i].second - b * o[j].second;
      if (v != 0) out.emplace_back(c[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t rank_over_q(const SparseMat& m) {
  std::vector<Column> cols = m.columns;
  std::vector<std::size_t> order(cols.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cols[a].size() < cols[b].size();
  });

  std::map<std::size_t, std::size_t> owner_of_low;  // pivot row -> column
  std::size_t rank = 0;
  for (std::size_t j : order) {
    Column c = std::move(cols[j]);
    gcd_normalize(c);
    while (!c.empty()) {
      std::size_t low = c.back().first;
      auto it = owner_of_low.find(low);
      if (it == owner_of_low.end()) {
        cols[j] = std::move(c);
        owner_of_low.emplace(low, j);
        ++rank;
        break;
      }
      const Column& o = cols[it->second];
      c = cross_eliminate(c, o, o.back().second, c.back().second);
      gcd_normalize(c);
    }
  }
  return rank;
}

std::size_t rank_over_f2(const SparseMat& m) {
  std::vector<std::vector<std::size_t>> cols(m.cols);
  for (std::size_t j = 0; j < m.cols; ++j)
    for (const auto& [i, v] : m.columns[j])
      if (!is_even(v)) cols[j].push_back(i);

  std::vector<std::size_t> order(cols.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cols[a].size() < cols[b].size();
  });

  std::map<std::size_t, std::size_t> owner_of_low;
  std::size_t rank = 0;
  for (std::size_t j : order) {
    auto c = std::move(cols[j]);
    while (!c.empty()) {
      std::size_t low = c.back();
      auto it = owner_of_low.find(low);
      if (it == owner_of_low.end()) {
        cols[j] = std::move(c);
        owner_of_low.emplace(low, j);
        ++rank;
        break;
      }
      // Symmetric difference with the owner column.
      const auto& o = cols[it->second];
      std::vector<std::size_t> merged;
      std::set_symmetric_difference(c.begin(), c.end(), o.begin(), o.end(),
                                    std::back_inserter(merged));
      c = std::move(merged);
    }
  }
  return rank;
}

ChainComplexData chain_complex(const FiniteComplex& fc) {
  long top = fc.dim();
  ChainComplexData cc;
  if (top < 0) return cc;

  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(top + 1);
  for (const auto& s : fc.simplices) {
    auto& level = index[s.size() - 1];
    std::size_t next = level.size();
    if (!level.emplace(s, next).second)
      throw std::invalid_argument("chain_complex: repeated simplex");
  }
  cc.cells.resize(top + 1);
  for (long d = 0; d <= top; ++d) cc.cells[d] = index[d].size();

  bool via_destab = fc.family == "WQ";
  cc.boundary.resize(top + 1);
  for (long d = 1; d <= top; ++d) {
    SparseMat b(cc.cells[d - 1], cc.cells[d]);
    for (const auto& [s, col] : index[d]) {
      std::vector<std::vector<std::size_t>> faces;
      if (via_destab) {
        for (const auto& face : destab_faces(fc.n, fc.tuple_vectors(s))) {
          std::vector<std::size_t> idx;
          idx.reserve(face.size());
          for (const IntVec& u : face) {
            auto it = std::find(fc.vertices.begin(), fc.vertices.end(), u);
            if (it == fc.vertices.end())
              throw std::invalid_argument("chain_complex: face vertex outside complex");
            idx.push_back(static_cast<std::size_t>(it - fc.vertices.begin()));
          }
          faces.push_back(std::move(idx));
        }
      } else {
        for (std::size_t i = 0; i < s.size(); ++i) {
          std::vector<std::size_t> face;
          face.reserve(s.size() - 1);
          for (std::size_t k = 0; k < s.size(); ++k)
            if (k != i) face.push_back(s[k]);
          faces.push_back(std::move(face));
        }
      }
      std::map<std::size_t, Int> entries;
      for (std::size_t i = 0; i < faces.size(); ++i) {
        auto it = index[d - 1].find(faces[i]);
        if (it == index[d - 1].end())
          throw std::invalid_argument("chain_complex: complex is not closed under faces");
        entries[it->second] += (i % 2 == 0) ? 1 : -1;
      }
      for (auto& [row, v] : entries)
        if (v != 0) b.columns[col].emplace_back(row, std::move(v));
    }
    cc.boundary[d] = std::move(b);
  }

  // boundary(d-1) o boundary(d) = 0.
  for (long d = 2; d <= top; ++d) {
    const SparseMat& hi = cc.boundary[d];
    const SparseMat& lo = cc.boundary[d - 1];
    for (std::size_t j = 0; j < hi.cols; ++j) {
      std::map<std::size_t, Int> acc;
      for (const auto& [mid, v] : hi.columns[j])
        for (const auto& [row, w] : lo.columns[mid]) acc[row] += v * w;
      for (const auto& [row, v] : acc)
        if (v != 0) throw std::logic_error("chain_complex: boundary squared is nonzero");
    }
  }
  return cc;
}

std::string to_string(Coefficients c) {
  switch (c) {
    case Coefficients::Q: return "Q";
    case Coefficients::F2: return "F2";
    case Coefficients::Z: return "Z";
  }
  return "?";
}

Coefficients parse_coefficients(const std::string& s) {
  if (s == "Q") return Coefficients::Q;
  if (s == "F2") return Coefficients::F2;
  if (s == "Z") return Coefficients::Z;
  throw std::invalid_argument("unknown coefficients '" + s + "'");
}

HomologyReport homology(const ChainComplexData& cc, Coefficients coefficients, bool reduced) {
  HomologyReport report;
  report.coefficients = coefficients;
  report.reduced = reduced;
  long top = cc.top_dim();
  if (top < 0) {
    report.connectivity = -2;  // the empty complex has nontrivial reduced H_{-1}
    return report;
  }

  std::vector<std::size_t> rank_q(top + 2, 0), rank_f2(top + 2, 0);
  for (long d = 1; d <= top; ++d) {
    rank_q[d] = rank_over_q(cc.boundary[d]);
    if (coefficients == Coefficients::F2) rank_f2[d] = rank_over_f2(cc.boundary[d]);
  }

  bool use_f2 = coefficients == Coefficients::F2;
  for (long d = 0; d <= top; ++d) {
    DegreeHomology h;
    h.degree = d;
    h.betti_q = cc.cells[d] - rank_q[d] - rank_q[d + 1];
    if (use_f2) h.betti_f2 = cc.cells[d] - rank_f2[d] - rank_f2[d + 1];
    if (coefficients == Coefficients::Z && d < top) {
      for (const Int& div : smith_normal_form(cc.boundary[d + 1].dense()).divisors)
        if (div > 1) h.torsion.push_back(div);
    }
    report.degrees.push_back(std::move(h));
  }

  report.euler_from_cells = 0;
  report.euler_from_betti = 0;
  for (long d = 0; d <= top; ++d) {
    Int sign = (d % 2 == 0) ? 1 : -1;
    report.euler_from_cells += sign * Int(cc.cells[d]);
    std::size_t b = use_f2 ? *report.degrees[d].betti_f2 : report.degrees[d].betti_q;
    report.euler_from_betti += sign * Int(b);
  }

  // Reduced betti in degree 0 drops one copy of the coefficient field.
  auto reduced_trivial = [&](long d) {
    const DegreeHomology& h = report.degrees[d];
    std::size_t b = use_f2 ? *h.betti_f2 : h.betti_q;
    if (d == 0 && cc.cells[0] > 0) b -= 1;
    bool torsion_free = coefficients != Coefficients::Z || h.torsion.empty();
    return b == 0 && torsion_free;
  };
  report.connectivity = -1;
  for (long d = 0; d <= top; ++d) {
    if (!reduced_trivial(d)) break;
    report.connectivity = d;
  }

  if (reduced && cc.cells[0] > 0) {
    report.degrees[0].betti_q -= 1;
    if (report.degrees[0].betti_f2) *report.degrees[0].betti_f2 -= 1;
  }
  return report;
}

FiniteComplex cone(const FiniteComplex& fc) {
  FiniteComplex out;
  out.family = "cone(" + fc.family + ")";
  out.n = fc.n;
  out.box = fc.box;
  out.vertices = fc.vertices;
  out.vertices.emplace_back(IntVec(fc.n));  // apex: the zero vector, never a family vertex
  std::size_t apex = out.vertices.size() - 1;
  out.simplices = fc.simplices;
  out.simplices.push_back({apex});
  for (const auto& s : fc.simplices) {
    auto coned = s;
    coned.push_back(apex);
    out.simplices.push_back(std::move(coned));
  }
  std::sort(out.simplices.begin(), out.simplices.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

FiniteComplex boundary_of_simplex(std::size_t k) {
  if (k == 0) throw std::invalid_argument("boundary_of_simplex: need k >= 1");
  FiniteComplex out;
  out.family = "fixture";
  out.n = k + 1;
  out.box = 1;
  for (std::size_t i = 0; i <= k; ++i) {
    IntVec e(k + 1);
    e[i] = 1;
    out.vertices.push_back(std::move(e));
  }
  // All nonempty proper subsets of {0..k}.
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << (k + 1)); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i <= k; ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(i);
    out.simplices.push_back(std::move(s));
  }
  std::sort(out.simplices.begin(), out.simplices.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

FiniteComplex projective_plane() {
  FiniteComplex out;
  out.family = "fixture";
  out.n = 6;
  out.box = 1;
  for (std::size_t i = 0; i < 6; ++i) {
    IntVec e(6);
    e[i] = 1;
    out.vertices.push_back(std::move(e));
  }
  std::vector<std::vector<std::size_t>> faces = {
      {0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
      {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}};
  for (std::size_t i = 0; i < 6; ++i) out.simplices.push_back({i});
  std::vector<std::vector<std::size_t>> edges;
  for (const auto& f : faces)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) edges.push_back({f[i], f[j]});
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto& e : edges) out.simplices.push_back(std::move(e));
  for (auto& f : faces) out.simplices.push_back(std::move(f));
  return out;
}

}  // namespace oddsym
