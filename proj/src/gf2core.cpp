#include "f2sumset/gf2core.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace f2sumset {

namespace {

std::size_t word_count(int n) { return (space_size(n) + 63) / 64; }

std::size_t popcount_words(std::span<const std::uint64_t> words) {
  std::size_t c = 0;
  for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void require_same_dimension(int a, int b) {
  if (a != b) {
    throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

int read_max_dimension() {
  const char* env = std::getenv("F2SUMSET_NMAX");
  if (env == nullptr || *env == '\0') return kDefaultMaxDimension;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0') return kDefaultMaxDimension;
  return static_cast<int>(std::clamp<long>(v, 1, kHardMaxDimension));
}

}  // namespace

int max_dimension() {
  static const int value = read_max_dimension();
  return value;
}

void check_dimension(int n) {
  if (n < 1 || n > max_dimension()) {
    throw DimensionError("dimension " + std::to_string(n) + " outside [1, " +
                         std::to_string(max_dimension()) + "]");
  }
}

GroupElement::GroupElement(Bits bits, int n) : bits_(bits), n_(n) {
  check_dimension(n);
  if (bits >= space_size(n)) {
    throw std::invalid_argument("element " + std::to_string(bits) +
                                " does not fit in dimension " + std::to_string(n));
  }
}

GroupElement xor_add(GroupElement x, GroupElement y) {
  require_same_dimension(x.dimension(), y.dimension());
  return GroupElement(x.bits() ^ y.bits(), x.dimension());
}

int dot(GroupElement x, GroupElement xi) {
  require_same_dimension(x.dimension(), xi.dimension());
  return parity(x.bits() & xi.bits());
}

// ---------------------------------------------------------------------------
// PointSet

PointSet::PointSet(int n) : n_(n), words_(), count_(0) {
  check_dimension(n);
  words_.assign(word_count(n), 0);
}

PointSet::PointSet(int n, std::vector<std::uint64_t> words, std::size_t count)
    : n_(n), words_(std::move(words)), count_(count) {}

PointSet PointSet::from_elements(int n, std::span<const Bits> elements) {
  check_dimension(n);
  std::vector<std::uint64_t> words(word_count(n), 0);
  for (Bits x : elements) {
    if (x >= space_size(n)) {
      throw std::invalid_argument("element " + std::to_string(x) +
                                  " does not fit in dimension " + std::to_string(n));
    }
    words[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  const std::size_t c = popcount_words(words);
  return PointSet(n, std::move(words), c);
}

PointSet PointSet::from_words(int n, std::vector<std::uint64_t> words) {
  check_dimension(n);
  if (words.size() != word_count(n)) {
    throw std::invalid_argument("membership vector has wrong length");
  }
  if (n < 6 && (words[0] >> space_size(n)) != 0) {
    throw std::invalid_argument("membership bits beyond 2^n");
  }
  const std::size_t c = popcount_words(words);
  return PointSet(n, std::move(words), c);
}

PointSet PointSet::full(int n) {
  check_dimension(n);
  std::vector<std::uint64_t> words(word_count(n), ~std::uint64_t{0});
  if (n < 6) words[0] = (std::uint64_t{1} << space_size(n)) - 1;
  return PointSet(n, std::move(words), space_size(n));
}

std::vector<Bits> PointSet::elements() const {
  std::vector<Bits> out;
  out.reserve(count_);
  for_each([&](Bits x) { out.push_back(x); });
  return out;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  require_same_dimension(a.dimension(), b.dimension());
  std::vector<std::uint64_t> w(a.words().begin(), a.words().end());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] |= b.words()[i];
  return PointSet::from_words(a.dimension(), std::move(w));
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  require_same_dimension(a.dimension(), b.dimension());
  std::vector<std::uint64_t> w(a.words().begin(), a.words().end());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] &= b.words()[i];
  return PointSet::from_words(a.dimension(), std::move(w));
}

PointSet translate(const PointSet& a, Bits x) {
  if (x >= space_size(a.dimension())) {
    throw std::invalid_argument("translate: element outside the space");
  }
  std::vector<Bits> out;
  out.reserve(a.size());
  a.for_each([&](Bits y) { out.push_back(y ^ x); });
  return PointSet::from_elements(a.dimension(), out);
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(int n) : n_(n) { check_dimension(n); }

Subspace Subspace::full(int n) {
  std::vector<Bits> unit;
  for (int i = 0; i < n; ++i) unit.push_back(Bits{1} << i);
  return span(unit, n);
}

Bits Subspace::reduce(Bits x) const {
  for (Bits row : basis_) {
    const Bits pivot = std::bit_floor(row);
    if (x & pivot) x ^= row;
  }
  return x;
}

std::vector<Bits> Subspace::elements() const {
  // Gray-code walk over all 2^dim combinations.
  std::vector<Bits> out;
  out.reserve(size());
  Bits cur = 0;
  out.push_back(cur);
  for (std::size_t i = 1; i < size(); ++i) {
    cur ^= basis_[static_cast<std::size_t>(std::countr_zero(i))];
    out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PointSet Subspace::to_point_set() const {
  const auto e = elements();
  return PointSet::from_elements(n_, e);
}

Subspace span(std::span<const Bits> vectors, int n) {
  Subspace s(n);
  // rows[p] holds the basis row whose pivot is bit p, or 0.
  std::array<Bits, 32> rows{};
  for (Bits v : vectors) {
    if (v >= space_size(n)) {
      throw std::invalid_argument("span: vector outside the space");
    }
    for (int b = n - 1; b >= 0 && v; --b) {
      if (((v >> b) & 1u) && rows[static_cast<std::size_t>(b)]) v ^= rows[static_cast<std::size_t>(b)];
    }
    if (v == 0) continue;
    const int p = std::bit_width(v) - 1;
    for (int b = 0; b < n; ++b) {
      Bits& r = rows[static_cast<std::size_t>(b)];
      if (r && ((r >> p) & 1u)) r ^= v;
    }
    rows[static_cast<std::size_t>(p)] = v;
  }
  for (int b = n - 1; b >= 0; --b) {
    if (rows[static_cast<std::size_t>(b)]) s.basis_.push_back(rows[static_cast<std::size_t>(b)]);
  }
  return s;
}

Subspace annihilator(const Subspace& s) {
  const int n = s.ambient_dimension();
  Bits pivot_mask = 0;
  for (Bits row : s.basis()) pivot_mask |= std::bit_floor(row);
  std::vector<Bits> out;
  for (int f = 0; f < n; ++f) {
    const Bits free_bit = Bits{1} << f;
    if (pivot_mask & free_bit) continue;
    Bits v = free_bit;
    for (Bits row : s.basis()) {
      if (row & free_bit) v |= std::bit_floor(row);
    }
    out.push_back(v);
  }
  return span(out, n);
}

std::map<Bits, std::size_t> coset_decompose(const PointSet& a, const Subspace& h) {
  require_same_dimension(a.dimension(), h.ambient_dimension());
  std::map<Bits, std::size_t> out;
  a.for_each([&](Bits x) { ++out[h.reduce(x)]; });
  return out;
}

std::string to_binary(Bits x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((x >> i) & 1u) s[static_cast<std::size_t>(n - 1 - i)] = '1';
  }
  return s;
}

}  // namespace f2sumset
