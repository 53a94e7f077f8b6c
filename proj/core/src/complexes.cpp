#include "oddsym/complexes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oddsym {

std::string to_string(Family f) {
  switch (f) {
    case Family::Z: return "Z";
    case Family::Y: return "Y";
    case Family::IX: return "IX";
    case Family::X: return "X";
    case Family::WQ: return "WQ";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "Z") return Family::Z;
  if (s == "Y") return Family::Y;
  if (s == "IX") return Family::IX;
  if (s == "X") return Family::X;
  if (s == "WQ") return Family::WQ;
  throw std::invalid_argument("unknown family '" + s + "'");
}

std::vector<std::size_t> rho_set(const IntVec& u) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!is_even(u[i])) out.push_back(i);
  return out;
}

namespace {

bool rho_disjoint(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_even(a[i]) && !is_even(b[i])) return false;
  return true;
}

bool ordered_family(Family f) { return f == Family::X || f == Family::WQ; }

// Vertex-level phi / rho conditions (everything except the partial-basis
// requirement).
bool vertex_shape_ok(Family f, std::size_t n, const IntVec& u) {
  FormedModule m{n};
  switch (f) {
    case Family::Z:
      return true;
    case Family::Y:
    case Family::IX:
      return phi(m, u) == 0 && rho_set(u).size() == 2;
    case Family::X:
    case Family::WQ:
      return phi(m, u) == 1 && rho_set(u).size() == 1;
  }
  return false;
}

bool partial_basis_with_v(std::size_t n, const std::vector<IntVec>& tuple,
                          const std::vector<IntVec>& extra) {
  if (tuple.size() + extra.size() + 1 > n) return false;
  std::vector<IntVec> stack = tuple;
  stack.insert(stack.end(), extra.begin(), extra.end());
  stack.push_back(distinguished_vector(n));
  return is_partial_basis(stack, FormedModule{n});
}

// Size-n WQ-tuples are full Q-bases: a basis whose alternating sum is v_n
// (the partial-basis-with-v_n test is vacuously false there).
bool wq_top_condition(std::size_t n, const std::vector<IntVec>& tuple) {
  Int det = IntMat::from_rows(tuple).determinant();
  if (det != 1 && det != -1) return false;
  IntVec alt(n);
  for (std::size_t k = 0; k < tuple.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) alt[i] += (k % 2 == 0 ? tuple[k][i] : -tuple[k][i]);
  return alt == distinguished_vector(n);
}

}  // namespace

bool vertex_predicate(Family f, std::size_t n, const IntVec& u) {
  if (u.size() != n) throw std::invalid_argument("vertex_predicate: dimension mismatch");
  if (!vertex_shape_ok(f, n, u)) return false;
  if (f == Family::WQ && n == 1) return u == distinguished_vector(1);
  return partial_basis_with_v(n, {u}, {});
}

bool simplex_predicate(Family f, std::size_t n, const std::vector<IntVec>& tuple) {
  for (const IntVec& u : tuple)
    if (u.size() != n) throw std::invalid_argument("simplex_predicate: dimension mismatch");
  if (tuple.empty()) return true;
  FormedModule m{n};
  for (const IntVec& u : tuple)
    if (!vertex_shape_ok(f, n, u)) return false;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (!rho_disjoint(tuple[i], tuple[j])) return false;
      if (ordered_family(f)) {
        if (form_pairing(m, tuple[i], tuple[j]) != 1) return false;
      } else if (f == Family::IX) {
        if (form_pairing(m, tuple[i], tuple[j]) != 0) return false;
      }
    }
  if (f == Family::WQ && tuple.size() == n) return wq_top_condition(n, tuple);
  return partial_basis_with_v(n, tuple, {});
}

bool relative_conditions(std::size_t n, const std::vector<IntVec>& tuple,
                         const std::vector<IntVec>& sigma) {
  FormedModule m{n};
  for (const IntVec& x : tuple)
    for (const IntVec& u : sigma) {
      if (form_pairing(m, x, u) != 0) return false;
      if (!rho_disjoint(x, u)) return false;
    }
  return partial_basis_with_v(n, tuple, sigma);
}

OrbitReport orbit_conditions(OrbitKind kind, std::size_t n, const std::vector<IntVec>& tuple) {
  std::size_t size = tuple.size();
  if (size == 0) throw std::invalid_argument("orbit_conditions: empty tuple");
  if (kind == OrbitKind::X && size >= n)
    throw std::invalid_argument("orbit_conditions: X-orbit tuples need size < n");
  if (kind == OrbitKind::IX && 2 * size >= n)
    throw std::invalid_argument("orbit_conditions: IX-orbit tuples need size < n/2");
  for (const IntVec& u : tuple)
    if (u.size() != n) throw std::invalid_argument("orbit_conditions: dimension mismatch");

  FormedModule m{n};
  OrbitReport report;

  report.partial_basis_with_v = partial_basis_with_v(n, tuple, {});

  Int expected = kind == OrbitKind::X ? 1 : 0;
  report.pairings = true;
  for (std::size_t i = 0; i < size && report.pairings; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (form_pairing(m, tuple[i], tuple[j]) != expected) {
        report.pairings = false;
        break;
      }

  std::size_t rho_size = kind == OrbitKind::X ? 1 : 2;
  report.rho_condition = true;
  std::vector<bool> seen(n, false);
  for (const IntVec& u : tuple) {
    auto r = rho_set(u);
    if (r.size() != rho_size) {
      report.rho_condition = false;
      break;
    }
    bool collision = false;
    for (std::size_t idx : r) {
      if (seen[idx]) collision = true;
      seen[idx] = true;
    }
    if (collision) {
      report.rho_condition = false;
      break;
    }
  }

  Int want_phi = kind == OrbitKind::X ? 1 : 0;
  report.phi_condition = true;
  for (const IntVec& u : tuple)
    if (phi(m, u) != want_phi) {
      report.phi_condition = false;
      break;
    }
  return report;
}

long FiniteComplex::dim() const {
  long d = -1;
  for (const auto& s : simplices) d = std::max(d, static_cast<long>(s.size()) - 1);
  return d;
}

std::vector<std::vector<std::size_t>> FiniteComplex::of_dim(std::size_t d) const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : simplices)
    if (s.size() == d + 1) out.push_back(s);
  return out;
}

std::size_t FiniteComplex::count_of_dim(std::size_t d) const {
  std::size_t c = 0;
  for (const auto& s : simplices)
    if (s.size() == d + 1) ++c;
  return c;
}

std::vector<IntVec> FiniteComplex::tuple_vectors(const std::vector<std::size_t>& simplex) const {
  std::vector<IntVec> out;
  out.reserve(simplex.size());
  for (std::size_t i : simplex) out.push_back(vertices.at(i));
  return out;
}

bool FiniteComplex::has_simplex(const std::vector<std::size_t>& simplex) const {
  return std::find(simplices.begin(), simplices.end(), simplex) != simplices.end();
}

namespace {

class DeadlineChecker {
 public:
  explicit DeadlineChecker(const BuildLimits& limits) {
    if (limits.time_budget)
      deadline_ = std::chrono::steady_clock::now() + *limits.time_budget;
  }
  void poll(const char* stage) {
    if (!deadline_) return;
    if (++ticks_ % 1024 != 0) return;
    if (std::chrono::steady_clock::now() > *deadline_)
      throw BudgetExceeded(std::string("time budget exhausted during ") + stage);
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::size_t ticks_ = 0;
};

// All vectors with entries in [-box, box], in lexicographic order.
std::vector<IntVec> box_vectors(std::size_t n, int box) {
  std::vector<IntVec> out;
  IntVec cur(n, Int(-box));
  while (true) {
    out.push_back(cur);
    std::size_t i = n;
    bool carried = false;
    while (i > 0) {
      --i;
      if (cur[i] < box) {
        cur[i] += 1;
        for (std::size_t j = i + 1; j < n; ++j) cur[j] = -box;
        carried = true;
        break;
      }
    }
    if (!carried) break;
  }
  return out;
}

}  // namespace

FiniteComplex build_complex(const ComplexSpec& spec, const BuildLimits& limits) {
  std::size_t n = spec.n;
  if (n == 0) throw std::invalid_argument("build_complex: rank must be positive");
  if (spec.box < 0) throw std::invalid_argument("build_complex: box must be >= 0");
  const auto& sigma = spec.relative_to;
  if (!sigma.empty() && !simplex_predicate(Family::Z, n, sigma))
    throw std::invalid_argument("build_complex: relative_to is not a Z-simplex");

  DeadlineChecker deadline(limits);
  FiniteComplex fc;
  fc.family = to_string(spec.family);
  fc.n = n;
  fc.box = spec.box;
  fc.relative_to = sigma;

  for (IntVec& u : box_vectors(n, spec.box)) {
    deadline.poll("vertex scan");
    if (!vertex_shape_ok(spec.family, n, u)) continue;
    bool ok = sigma.empty() ? vertex_predicate(spec.family, n, u)
                            : relative_conditions(n, {u}, sigma);
    if (!ok) continue;
    fc.vertices.push_back(std::move(u));
    if (fc.vertices.size() > limits.max_vertices)
      throw BudgetExceeded("vertex budget exhausted after " +
                           std::to_string(limits.max_vertices) + " vertices");
  }
  // box_vectors enumerates lexicographically, so fc.vertices is sorted.

  std::size_t v = fc.vertices.size();

  // Precompute G*v per vertex so pair checks are O(n) dot products.
  IntMat gram = form_gram(n);
  std::vector<IntVec> gv(v);
  for (std::size_t i = 0; i < v; ++i) gv[i] = gram.apply(fc.vertices[i]);
  auto pairing = [&](std::size_t i, std::size_t j) {
    Int acc = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (fc.vertices[i][k] != 0) acc += fc.vertices[i][k] * gv[j][k];
    return acc;
  };

  // Directed pairwise compatibility (rho-disjointness plus the family's
  // pairing value).
  std::vector<std::vector<bool>> compat(v, std::vector<bool>(v, false));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) {
      if (i == j) continue;
      deadline.poll("pair scan");
      if (!rho_disjoint(fc.vertices[i], fc.vertices[j])) continue;
      switch (spec.family) {
        case Family::Z:
        case Family::Y:
          compat[i][j] = true;
          break;
        case Family::IX:
          compat[i][j] = pairing(i, j) == 0;
          break;
        case Family::X:
        case Family::WQ:
          compat[i][j] = pairing(i, j) == 1;
          break;
      }
    }

  // Tuples larger than this cannot satisfy the partial-basis conditions.
  std::size_t cap = n >= sigma.size() + 1 ? n - sigma.size() - 1 : 0;
  std::size_t max_size = (spec.family == Family::WQ && sigma.empty()) ? n : cap;
  if (limits.max_dim >= 0)
    max_size = std::min<std::size_t>(max_size, static_cast<std::size_t>(limits.max_dim) + 1);

  auto admissible = [&](const std::vector<std::size_t>& tuple) {
    std::vector<IntVec> vecs;
    vecs.reserve(tuple.size());
    for (std::size_t i : tuple) vecs.push_back(fc.vertices[i]);
    if (spec.family == Family::WQ && sigma.empty() && vecs.size() == n)
      return wq_top_condition(n, vecs);
    return partial_basis_with_v(n, vecs, sigma);
  };

  std::vector<std::vector<std::size_t>> frontier;
  for (std::size_t i = 0; i < v; ++i) frontier.push_back({i});
  fc.simplices = frontier;

  std::size_t size = 1;
  while (!frontier.empty() && size < max_size) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& tuple : frontier) {
      // Ordered families extend at the end by any compatible vertex (each
      // set admits exactly one canonical order, and all of its prefixes are
      // canonical); unordered families extend by ascending index.
      std::size_t start = ordered_family(spec.family) ? 0 : tuple.back() + 1;
      for (std::size_t j = start; j < v; ++j) {
        deadline.poll("extension scan");
        bool ok = true;
        for (std::size_t a : tuple)
          if (a == j || !compat[a][j]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        std::vector<std::size_t> ext = tuple;
        ext.push_back(j);
        if (!admissible(ext)) continue;
        if (fc.simplices.size() + next.size() + 1 > limits.max_simplices)
          throw BudgetExceeded("simplex budget exhausted after " +
                               std::to_string(limits.max_simplices) +
                               " simplices (while extending to size " + std::to_string(size + 1) +
                               ")");
        next.push_back(std::move(ext));
      }
    }
    fc.simplices.insert(fc.simplices.end(), next.begin(), next.end());
    frontier = std::move(next);
    ++size;
  }
  return fc;
}

std::vector<std::vector<IntVec>> destab_faces(std::size_t n, const std::vector<IntVec>& simplex) {
  if (simplex.empty()) throw std::invalid_argument("destab_faces: empty simplex");
  if (!simplex_predicate(Family::WQ, n, simplex))
    throw std::invalid_argument("destab_faces: malformed simplex");
  std::vector<std::vector<IntVec>> faces;
  std::size_t size = simplex.size();
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<IntVec> intermediate;
    if (i == 0) {
      intermediate = simplex;
    } else {
      // w = 2u_0 - 2u_1 + ... +- 2u_{i-1} -+ u_i.
      IntVec w(n);
      for (std::size_t j = 0; j < i; ++j) {
        Int c = (j % 2 == 0) ? 2 : -2;
        for (std::size_t k = 0; k < n; ++k) w[k] += c * simplex[j][k];
      }
      Int c = (i % 2 == 0) ? 1 : -1;
      for (std::size_t k = 0; k < n; ++k) w[k] += c * simplex[i][k];
      intermediate.push_back(std::move(w));
      for (std::size_t j = 0; j < size; ++j)
        if (j != i) intermediate.push_back(simplex[j]);
      if (!simplex_predicate(Family::WQ, n, intermediate))
        throw std::invalid_argument("destab_faces: braided tuple is not a simplex");
    }
    faces.emplace_back(intermediate.begin() + 1, intermediate.end());
  }
  return faces;
}

FiniteComplex left_link(const FiniteComplex& fc, const std::vector<IntVec>& sigma) {
  if (sigma.empty()) throw std::invalid_argument("left_link: empty simplex");
  std::vector<std::size_t> sigma_idx;
  for (const IntVec& u : sigma) {
    auto it = std::find(fc.vertices.begin(), fc.vertices.end(), u);
    if (it == fc.vertices.end()) throw std::invalid_argument("left_link: simplex not in complex");
    sigma_idx.push_back(static_cast<std::size_t>(it - fc.vertices.begin()));
  }
  if (!fc.has_simplex(sigma_idx)) throw std::invalid_argument("left_link: simplex not in complex");

  std::vector<std::vector<std::size_t>> prefixes;
  for (const auto& s : fc.simplices) {
    if (s.size() <= sigma_idx.size()) continue;
    if (!std::equal(sigma_idx.begin(), sigma_idx.end(), s.end() - sigma_idx.size())) continue;
    prefixes.emplace_back(s.begin(), s.end() - sigma_idx.size());
  }

  std::vector<std::size_t> used;
  for (const auto& p : prefixes)
    for (std::size_t i : p) used.push_back(i);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  FiniteComplex out;
  out.family = "LLk(" + fc.family + ")";
  out.n = fc.n;
  out.box = fc.box;
  std::map<std::size_t, std::size_t> remap;
  for (std::size_t k = 0; k < used.size(); ++k) {
    remap[used[k]] = k;
    out.vertices.push_back(fc.vertices[used[k]]);
  }
  for (auto& p : prefixes) {
    std::vector<std::size_t> s;
    s.reserve(p.size());
    for (std::size_t i : p) s.push_back(remap[i]);
    out.simplices.push_back(std::move(s));
  }
  std::sort(out.simplices.begin(), out.simplices.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

FiniteComplex bracket(const FiniteComplex& fc, const std::vector<IntVec>& labels) {
  if (labels.empty()) throw std::invalid_argument("bracket: need at least one label");
  std::size_t label_len = labels.front().size();
  for (const IntVec& s : labels)
    if (s.size() != label_len) throw std::invalid_argument("bracket: ragged labels");
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("bracket: duplicate labels");
  }

  FiniteComplex out;
  out.family = "bracket(" + fc.family + ")";
  out.n = fc.n + label_len;
  out.box = fc.box;

  std::map<IntVec, std::size_t> index;
  for (const IntVec& v : fc.vertices)
    for (const IntVec& s : labels) {
      IntVec w = v;
      w.insert(w.end(), s.begin(), s.end());
      index.emplace(std::move(w), 0);
    }
  for (auto& [w, idx] : index) {
    idx = out.vertices.size();
    out.vertices.push_back(w);
  }

  auto labelled_index = [&](std::size_t vertex, const IntVec& label) {
    IntVec w = fc.vertices[vertex];
    w.insert(w.end(), label.begin(), label.end());
    return index.at(w);
  };

  for (const auto& s : fc.simplices) {
    std::vector<std::size_t> choice(s.size(), 0);
    bool more = true;
    while (more) {
      std::vector<std::size_t> labelled;
      labelled.reserve(s.size());
      for (std::size_t k = 0; k < s.size(); ++k)
        labelled.push_back(labelled_index(s[k], labels[choice[k]]));
      out.simplices.push_back(std::move(labelled));
      // Odometer over label assignments.
      more = false;
      std::size_t k = s.size();
      while (k > 0) {
        --k;
        if (++choice[k] < labels.size()) {
          more = true;
          break;
        }
        choice[k] = 0;
      }
    }
  }
  std::sort(out.simplices.begin(), out.simplices.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace oddsym
