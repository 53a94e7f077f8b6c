#include "oddsym/burau.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace oddsym {

BraidWord BraidWord::parse(std::size_t strands, const std::string& csv) {
  BraidWord w;
  w.strands = strands;
  if (!csv.empty()) {
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("empty letter in braid word '" + csv + "'");
      w.letters.push_back(std::stoi(tok));
    }
  }
  w.validate();
  return w;
}

std::string BraidWord::to_csv() const {
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(letters[k]);
  }
  return out;
}

void BraidWord::validate() const {
  if (strands == 0) throw std::invalid_argument("braid word needs at least one strand");
  for (int l : letters) {
    std::size_t i = static_cast<std::size_t>(std::abs(l));
    if (l == 0 || i >= strands)
      throw std::invalid_argument("braid letter " + std::to_string(l) + " out of range for " +
                                  std::to_string(strands) + " strands");
  }
}

namespace {

IntMat generator_matrix(std::size_t n, std::size_t i, int sign) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("generator sign must be +-1");
  IntMat m = IntMat::identity(n);
  std::size_t a = i - 1;
  if (sign == 1) {
    m(a, a) = 2;
    m(a, a + 1) = 1;
    m(a + 1, a) = -1;
    m(a + 1, a + 1) = 0;
  } else {
    m(a, a) = 0;
    m(a, a + 1) = -1;
    m(a + 1, a) = 1;
    m(a + 1, a + 1) = 2;
  }
  return m;
}

}  // namespace

GroupElement burau_generator(std::size_t n, std::size_t i, int sign) {
  return GroupElement::certify(generator_matrix(n, i, sign));
}

BurauImage burau(const BraidWord& word) {
  word.validate();
  IntMat acc = IntMat::identity(word.strands);
  for (int l : word.letters) {
    std::size_t i = static_cast<std::size_t>(std::abs(l));
    acc = acc * generator_matrix(word.strands, i, l > 0 ? 1 : -1);
  }
  // A single certification of the product; the generators themselves are
  // re-verified by burau_generator and its tests.
  return BurauImage{GroupElement::certify(std::move(acc)), word};
}

IntMat reduced_burau(const BraidWord& word) { return restrict_to_ker_phi(burau(word).element.matrix()); }

IntVec apply_word(const BraidWord& word, IntVec x) {
  word.validate();
  if (x.size() != word.strands) throw std::invalid_argument("apply_word: dimension mismatch");
  // Letters act like the matrix product: the last letter is applied first.
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    std::size_t a = static_cast<std::size_t>(std::abs(*it)) - 1;
    Int xa = x[a], xb = x[a + 1];
    if (*it > 0) {
      x[a] = 2 * xa + xb;
      x[a + 1] = -xa;
    } else {
      x[a] = -xb;
      x[a + 1] = xa + 2 * xb;
    }
  }
  return x;
}

bool braiding_vs_burau(std::size_t n, std::size_t i) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  GroupElement block = braiding(1, 1, BraidingConvention::eq31);
  GroupElement candidate = monoidal_sum(
      monoidal_sum(GroupElement::certify(IntMat::identity(i - 1)), block),
      GroupElement::certify(IntMat::identity(n - i - 1)));
  return candidate.matrix() == burau_generator(n, i, 1).matrix();
}

std::vector<std::size_t> underlying_permutation(const BraidWord& word) {
  word.validate();
  std::size_t n = word.strands;
  // t_{l_1} o t_{l_2} o ... o t_{l_k} as functions; matches the matrix
  // product order since P[pi] P[tau] = P[pi o tau].
  std::vector<std::size_t> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = j;
  for (int l : word.letters) {
    std::size_t i = static_cast<std::size_t>(std::abs(l)) - 1;
    std::vector<std::size_t> next(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t t = j == i ? i + 1 : (j == i + 1 ? i : j);
      next[j] = out[t];
    }
    out = next;
  }
  return out;
}

IntMat permutation_matrix(const std::vector<std::size_t>& perm) {
  std::size_t n = perm.size();
  IntMat m(n, n);
  for (std::size_t j = 0; j < n; ++j) m(perm[j], j) = 1;
  return m;
}

}  // namespace oddsym
