#include "oddsym/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oddsym {

Partition Partition::parse(const std::string& csv) {
  Partition p;
  if (!csv.empty() && csv != "0" && csv != "-") {
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("empty part in partition '" + csv + "'");
      long long v = std::stoll(tok);
      if (v == 0) continue;  // allow trailing zeros in the input
      p.parts.push_back(v);
    }
  }
  p.validate();
  return p;
}

void Partition::validate() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

std::int64_t Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
}

Weight Partition::padded(std::size_t n) const {
  if (length() > n) throw std::invalid_argument("partition longer than the weight length");
  Weight w(n, 0);
  std::copy(parts.begin(), parts.end(), w.begin());
  return w;
}

std::string Partition::to_csv() const {
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

SignedPerm SignedPerm::identity(std::size_t n) {
  SignedPerm w;
  w.window.resize(n);
  for (std::size_t i = 0; i < n; ++i) w.window[i] = static_cast<int>(i) + 1;
  return w;
}

void SignedPerm::validate() const {
  std::size_t n = window.size();
  std::vector<bool> seen(n, false);
  for (int v : window) {
    std::size_t a = static_cast<std::size_t>(std::abs(v));
    if (v == 0 || a > n || seen[a - 1])
      throw std::invalid_argument("invalid signed permutation window");
    seen[a - 1] = true;
  }
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm out;
  out.window.resize(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) {
    std::size_t a = static_cast<std::size_t>(std::abs(window[i]));
    out.window[a - 1] = window[i] > 0 ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1);
  }
  return out;
}

SignedPerm SignedPerm::compose(const SignedPerm& other) const {
  if (window.size() != other.window.size())
    throw std::invalid_argument("signed permutation degree mismatch");
  SignedPerm out;
  out.window.resize(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) {
    int v = other.window[i];
    std::size_t a = static_cast<std::size_t>(std::abs(v));
    out.window[i] = v > 0 ? window[a - 1] : -window[a - 1];
  }
  return out;
}

Weight SignedPerm::apply(const Weight& x) const {
  if (x.size() != window.size()) throw std::invalid_argument("weight length mismatch");
  Weight y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t a = static_cast<std::size_t>(std::abs(window[i]));
    y[a - 1] = window[i] > 0 ? x[i] : -x[i];
  }
  return y;
}

std::size_t SignedPerm::length() const {
  std::size_t n = window.size();
  std::size_t count = 0;
  auto first_nonzero_negative = [](const Weight& v) {
    for (std::int64_t x : v) {
      if (x > 0) return false;
      if (x < 0) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Weight minus(n, 0), plus(n, 0);
      minus[i] = 1;
      minus[j] = -1;
      plus[i] = 1;
      plus[j] = 1;
      if (first_nonzero_negative(apply(minus))) ++count;
      if (first_nonzero_negative(apply(plus))) ++count;
    }
    Weight dbl(n, 0);
    dbl[i] = 2;
    if (first_nonzero_negative(apply(dbl))) ++count;
  }
  return count;
}

Weight rho_weight(std::size_t n) {
  if (n == 0) throw std::invalid_argument("rho_weight: rank must be positive");
  Weight r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::int64_t>(n - i);
  return r;
}

Weight dot_action(const SignedPerm& w, const Weight& lambda) {
  std::size_t n = w.degree();
  if (lambda.size() != n) throw std::invalid_argument("dot_action: length mismatch");
  Weight rho = rho_weight(n);
  Weight shifted(n);
  for (std::size_t i = 0; i < n; ++i) shifted[i] = lambda[i] + rho[i];
  Weight moved = w.apply(shifted);
  for (std::size_t i = 0; i < n; ++i) moved[i] -= rho[i];
  return moved;
}

bool is_dominant(const Weight& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  return w.empty() || w.back() >= 0;
}

std::vector<SignedPerm> coset_reps_wp(std::size_t n) {
  if (n == 0) throw std::invalid_argument("coset_reps_wp: rank must be positive");
  std::vector<SignedPerm> out;
  std::vector<int> cs;
  for (std::size_t k = n; k >= 1; --k) cs.push_back(static_cast<int>(k));
  for (std::size_t k = 1; k <= n; ++k) cs.push_back(-static_cast<int>(k));
  for (int c : cs) {
    // v = w^{-1}(rho): first entry c, remaining values descending.
    std::vector<int> v;
    v.push_back(c);
    for (int k = static_cast<int>(n); k >= 1; --k)
      if (k != std::abs(c)) v.push_back(k);
    // Build u = w^{-1} from u(rho) = v: rho_i = n+1-i is sent to position j.
    SignedPerm u;
    u.window.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t i = n + 1 - static_cast<std::size_t>(std::abs(v[j]));
      u.window[i - 1] = v[j] > 0 ? static_cast<int>(j) + 1 : -(static_cast<int>(j) + 1);
    }
    out.push_back(u.inverse());
  }
  return out;
}

std::vector<KostantRow> kostant_rows(const Partition& lambda, std::size_t n) {
  Weight lam = lambda.padded(n);
  Weight rho = rho_weight(n);
  std::vector<KostantRow> rows;
  for (const SignedPerm& w : coset_reps_wp(n)) {
    KostantRow row;
    row.w = w;
    row.w_inv = w.inverse();
    row.w_inv_rho = row.w_inv.apply(rho);
    row.degree = w.length();
    Weight mu = dot_action(row.w_inv, lam);
    row.levi.assign(mu.begin() + 1, mu.end());
    if (!is_dominant(row.levi))
      throw std::logic_error("kostant_rows: non-dominant Levi weight");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::size_t> trivial_summand_degrees(const Partition& lambda, std::size_t n) {
  if (lambda.length() > 1) return {};
  return {0, 2 * n - 1};
}

PartitionMultiset pieri_shift(const Partition& lambda) {
  PartitionMultiset out;
  std::size_t len = lambda.length();
  if (len == 0) {
    out[Partition{}] = 1;
    return out;
  }
  // mu_i ranges over [lambda_{i+1}, lambda_i]; the result is automatically a
  // partition and every horizontal strip arises exactly once.
  std::vector<std::int64_t> mu(len);
  for (std::size_t i = 0; i < len; ++i) mu[i] = (i + 1 < len) ? lambda.parts[i + 1] : 0;
  while (true) {
    Partition p;
    for (std::int64_t v : mu)
      if (v > 0) p.parts.push_back(v);
    out[p] += 1;
    std::size_t i = len;
    bool carried = false;
    while (i > 0) {
      --i;
      if (mu[i] < lambda.parts[i]) {
        mu[i] += 1;
        for (std::size_t j = i + 1; j < len; ++j)
          mu[j] = (j + 1 < len) ? lambda.parts[j + 1] : 0;
        carried = true;
        break;
      }
    }
    if (!carried) break;
  }
  return out;
}

PartitionMultiset sp_shift(const Partition& lambda) {
  PartitionMultiset out;
  for (const auto& [mu, c] : pieri_shift(lambda))
    for (const auto& [nu, d] : pieri_shift(mu)) out[nu] += c * d;
  return out;
}

Int weyl_dim_sp(const Partition& lambda, std::size_t n) {
  if (lambda.length() > n) return 0;
  Weight lam = lambda.padded(n);
  Weight rho = rho_weight(n);
  Rat dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dim *= Rat(lam[i] + rho[i] - lam[j] - rho[j], rho[i] - rho[j]);
      dim *= Rat(lam[i] + rho[i] + lam[j] + rho[j], rho[i] + rho[j]);
    }
    dim *= Rat(lam[i] + rho[i], rho[i]);
  }
  if (denominator(dim) != 1) throw std::logic_error("weyl_dim_sp: non-integral product");
  return numerator(dim);
}

Int Character::dimension() const {
  Int d = 0;
  for (const auto& [w, c] : terms_) d += c;
  return d;
}

Int Character::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

void Character::add(const Weight& w, const Int& c) {
  if (w.size() != n_) throw std::invalid_argument("character weight length mismatch");
  Int& slot = terms_[w];
  slot += c;
  if (slot == 0) terms_.erase(w);
}

Character Character::operator+(const Character& other) const {
  Character out = *this;
  for (const auto& [w, c] : other.terms_) out.add(w, c);
  return out;
}

Character Character::operator-(const Character& other) const {
  Character out = *this;
  for (const auto& [w, c] : other.terms_) out.add(w, -c);
  return out;
}

Character Character::operator*(const Character& other) const {
  if (n_ != other.n_) throw std::invalid_argument("character rank mismatch");
  Character out(n_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : other.terms_) {
      Weight w(n_);
      for (std::size_t i = 0; i < n_; ++i) w[i] = w1[i] + w2[i];
      out.add(w, c1 * c2);
    }
  return out;
}

Character Character::scaled(const Int& c) const {
  Character out(n_);
  if (c == 0) return out;
  for (const auto& [w, v] : terms_) out.add(w, v * c);
  return out;
}

Character Character::pow(std::size_t r) const {
  Character out(n_);
  out.add(Weight(n_, 0), 1);
  for (std::size_t k = 0; k < r; ++k) out = out * *this;
  return out;
}

std::optional<Weight> Character::leading_dominant() const {
  std::optional<Weight> best;
  auto grade = [](const Weight& w) {
    return std::accumulate(w.begin(), w.end(), std::int64_t{0});
  };
  for (const auto& [w, c] : terms_) {
    if (c == 0 || !is_dominant(w)) continue;
    if (!best || grade(w) > grade(*best) || (grade(w) == grade(*best) && w > *best)) best = w;
  }
  return best;
}

namespace {

std::int64_t dot(const Weight& a, const Weight& b) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Weight dominant_rep(Weight w) {
  for (auto& x : w) x = std::abs(x);
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

std::vector<Weight> positive_roots(std::size_t n) {
  std::vector<Weight> roots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Weight a(n, 0), b(n, 0);
      a[i] = 1;
      a[j] = -1;
      b[i] = 1;
      b[j] = 1;
      roots.push_back(a);
      roots.push_back(b);
    }
    Weight c(n, 0);
    c[i] = 2;
    roots.push_back(c);
  }
  return roots;
}

// All dominant weights mu with lambda - mu a nonnegative integer combination
// of simple roots (prefix sums of lambda - mu nonnegative, total sum even).
std::vector<Weight> dominant_candidates(const Weight& lam) {
  std::size_t n = lam.size();
  std::vector<Weight> out;
  Weight mu(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::int64_t cap) -> void {
    if (pos == n) {
      std::int64_t prefix = 0;
      for (std::size_t i = 0; i < n; ++i) {
        prefix += lam[i] - mu[i];
        if (prefix < 0) return;
      }
      if (prefix % 2 != 0) return;
      out.push_back(mu);
      return;
    }
    for (std::int64_t v = cap; v >= 0; --v) {
      mu[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, lam.empty() ? 0 : lam[0]);
  return out;
}

}  // namespace

Character sp_character(const Partition& lambda, std::size_t n) {
  if (lambda.length() > n)
    throw std::invalid_argument("sp_character: partition longer than the rank");
  Weight lam = lambda.padded(n);
  Weight rho = rho_weight(n);
  std::vector<Weight> roots = positive_roots(n);

  std::vector<Weight> candidates = dominant_candidates(lam);
  // Freudenthal processes weights from the top: order by height of
  // lambda - mu (any order refining it works; height is simplest).
  auto height = [&](const Weight& mu) {
    std::int64_t h = 0, prefix = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      prefix += lam[i] - mu[i];
      h += prefix;
    }
    prefix += lam[n - 1] - mu[n - 1];
    h += prefix / 2;
    return h;
  };
  std::sort(candidates.begin(), candidates.end(), [&](const Weight& a, const Weight& b) {
    auto ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a > b;
  });

  std::map<Weight, Int> mult;
  Weight lam_rho(n);
  for (std::size_t i = 0; i < n; ++i) lam_rho[i] = lam[i] + rho[i];
  std::int64_t top_norm = dot(lam_rho, lam_rho);

  for (const Weight& mu : candidates) {
    if (mu == lam) {
      mult[mu] = 1;
      continue;
    }
    Int numerator = 0;
    std::int64_t bound = lam[0] * static_cast<std::int64_t>(n) + lambda.size() + 1;
    for (const Weight& alpha : roots) {
      for (std::int64_t k = 1; k <= bound; ++k) {
        Weight nu(n);
        bool in_range = true;
        for (std::size_t i = 0; i < n; ++i) {
          nu[i] = mu[i] + k * alpha[i];
          if (std::abs(nu[i]) > lam[0]) in_range = false;
        }
        if (!in_range) break;
        auto it = mult.find(dominant_rep(nu));
        if (it == mult.end() || it->second == 0) continue;
        numerator += it->second * Int(dot(nu, alpha));
      }
    }
    numerator *= 2;
    Weight mu_rho(n);
    for (std::size_t i = 0; i < n; ++i) mu_rho[i] = mu[i] + rho[i];
    Int denominator = Int(top_norm - dot(mu_rho, mu_rho));
    if (denominator <= 0) throw std::logic_error("sp_character: bad Freudenthal denominator");
    if (numerator % denominator != 0)
      throw std::logic_error("sp_character: non-integral Freudenthal step");
    Int m = numerator / denominator;
    if (m != 0) mult[mu] = m;
  }

  Character ch(n);
  for (const auto& [mu, m] : mult) {
    if (m == 0) continue;
    // Weyl orbit: distinct arrangements of the entries, all sign choices on
    // the nonzero ones.
    Weight sorted = mu;
    std::sort(sorted.begin(), sorted.end());
    do {
      std::vector<std::size_t> nonzero;
      for (std::size_t i = 0; i < n; ++i)
        if (sorted[i] != 0) nonzero.push_back(i);
      for (std::size_t mask = 0; mask < (std::size_t{1} << nonzero.size()); ++mask) {
        Weight w = sorted;
        for (std::size_t b = 0; b < nonzero.size(); ++b)
          if (mask & (std::size_t{1} << b)) w[nonzero[b]] = -w[nonzero[b]];
        ch.add(w, m);
      }
    } while (std::next_permutation(sorted.begin(), sorted.end()));
  }
  return ch;
}

Character defining_character(std::size_t n) {
  Character ch(n);
  for (std::size_t i = 0; i < n; ++i) {
    Weight w(n, 0);
    w[i] = 1;
    ch.add(w, 1);
    w[i] = -1;
    ch.add(w, 1);
  }
  return ch;
}

Character wedge_character(std::size_t g) {
  Character ch(g);
  ch.add(Weight(g, 0), 1);
  for (std::size_t i = 0; i < g; ++i) {
    Character factor(g);
    Weight w(g, 0);
    factor.add(w, 2);
    w[i] = 1;
    factor.add(w, 1);
    w[i] = -1;
    factor.add(w, 1);
    ch = ch * factor;
  }
  return ch;
}

PartitionMultiset decompose(Character ch, std::size_t n) {
  if (ch.n() != n) throw std::invalid_argument("decompose: character rank mismatch");
  PartitionMultiset out;
  while (!ch.empty()) {
    auto lead = ch.leading_dominant();
    if (!lead) throw std::invalid_argument("decompose: input is not a character (no dominant leading weight)");
    Int m = ch.coefficient(*lead);
    if (m < 0)
      throw std::invalid_argument("decompose: input is not a character (negative multiplicity)");
    Partition p;
    for (std::int64_t v : *lead)
      if (v > 0) p.parts.push_back(v);
    p.validate();
    ch = ch - sp_character(p, n).scaled(m);
    out[p] += m;
  }
  return out;
}

Int invariant_dimension_tensor(std::size_t n, std::size_t s) {
  if (n == 0 || s == 0) throw std::invalid_argument("invariant_dimension_tensor: need n, s >= 1");
  Character pow = defining_character(n).pow(2 * s);
  auto dec = decompose(std::move(pow), n);
  auto it = dec.find(Partition{});
  return it == dec.end() ? Int(0) : it->second;
}

Int exterior_multiplicity(const Partition& lambda, std::size_t g, std::size_t r,
                          std::size_t max_support) {
  if (lambda.length() > g)
    throw std::invalid_argument("exterior_multiplicity: partition longer than the rank");
  Character wedge = wedge_character(g);
  Character acc(g);
  acc.add(Weight(g, 0), 1);
  for (std::size_t k = 0; k < r; ++k) {
    acc = acc * wedge;
    if (acc.terms().size() > max_support)
      throw BudgetExceeded("exterior_multiplicity: character support exceeds budget");
  }
  auto dec = decompose(std::move(acc), g);
  auto it = dec.find(lambda);
  return it == dec.end() ? Int(0) : it->second;
}

std::size_t Polynomial::degree() const {
  for (std::size_t i = coeffs.size(); i > 0; --i)
    if (coeffs[i - 1] != 0) return i - 1;
  return 0;
}

Rat Polynomial::eval(const Rat& x) const {
  Rat acc = 0;
  for (std::size_t i = coeffs.size(); i > 0; --i) acc = acc * x + coeffs[i - 1];
  return acc;
}

Polynomial fit_polynomial(const std::vector<std::pair<Rat, Rat>>& points,
                          std::optional<std::size_t> max_degree) {
  if (points.size() < 2) throw std::invalid_argument("fit_polynomial: need at least 2 points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("fit_polynomial: duplicate abscissa");

  std::size_t use = points.size();
  if (max_degree && *max_degree + 1 < use) use = *max_degree + 1;

  // Newton divided differences on the first `use` points.
  std::vector<Rat> dd(use);
  for (std::size_t i = 0; i < use; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < use; ++level)
    for (std::size_t i = use - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

  Polynomial poly;
  poly.coeffs.assign(use, Rat(0));
  std::vector<Rat> basis{Rat(1)};  // product of (x - x_i), expanded
  for (std::size_t k = 0; k < use; ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) poly.coeffs[i] += dd[k] * basis[i];
    if (k + 1 < use) {
      basis.push_back(0);
      for (std::size_t i = basis.size() - 1; i > 0; --i)
        basis[i] = basis[i - 1] - points[k].first * basis[i];
      basis[0] = -points[k].first * basis[0];
    }
  }
  poly.coeffs.resize(poly.degree() + 1);

  for (const auto& [x, y] : points)
    if (poly.eval(x) != y)
      throw std::invalid_argument("fit_polynomial: data inconsistent with the degree bound");
  return poly;
}

}  // namespace oddsym
