#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace f2sumset {

// An n-bit vector over F2 packed into the low bits of an integer.
using Bits = std::uint32_t;

inline constexpr int kDefaultMaxDimension = 22;
inline constexpr int kHardMaxDimension = 30;

// N_MAX: kDefaultMaxDimension unless F2SUMSET_NMAX is set (clamped to
// [1, kHardMaxDimension]). Read once per process.
int max_dimension();

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws DimensionError unless 1 <= n <= max_dimension().
void check_dimension(int n);

inline std::size_t space_size(int n) { return std::size_t{1} << n; }

inline int parity(Bits x) { return std::popcount(x) & 1; }

class GroupElement {
 public:
  GroupElement(Bits bits, int n);

  Bits bits() const { return bits_; }
  int dimension() const { return n_; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  Bits bits_;
  int n_;
};

GroupElement xor_add(GroupElement x, GroupElement y);
int dot(GroupElement x, GroupElement xi);

// A subset of F2^n stored as a characteristic bit vector of length 2^n.
// Immutable once built.
class PointSet {
 public:
  explicit PointSet(int n);

  static PointSet from_elements(int n, std::span<const Bits> elements);
  static PointSet from_words(int n, std::vector<std::uint64_t> words);
  static PointSet full(int n);

  int dimension() const { return n_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Bits x) const {
    return x < space_size(n_) && ((words_[x >> 6] >> (x & 63)) & 1u);
  }

  std::span<const std::uint64_t> words() const { return words_; }

  // Members in increasing order.
  std::vector<Bits> elements() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        const int b = std::countr_zero(word);
        f(static_cast<Bits>((w << 6) | static_cast<std::size_t>(b)));
        word &= word - 1;
      }
    }
  }

  template <class Pred>
  PointSet filter(Pred&& keep) const {
    std::vector<std::uint64_t> out(words_.size(), 0);
    for_each([&](Bits x) {
      if (keep(x)) out[x >> 6] |= std::uint64_t{1} << (x & 63);
    });
    return from_words(n_, std::move(out));
  }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  PointSet(int n, std::vector<std::uint64_t> words, std::size_t count);

  int n_;
  std::vector<std::uint64_t> words_;
  std::size_t count_;
};

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
// x + A.
PointSet translate(const PointSet& a, Bits x);

// A linear subspace of F2^n in reduced row-echelon form. Pivots are the most
// significant bit of each row, rows are sorted by decreasing pivot and every
// pivot column has a single 1, so equal subspaces have identical bases.
class Subspace {
 public:
  // The zero subspace of F2^n.
  explicit Subspace(int n);

  static Subspace full(int n);

  int ambient_dimension() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  std::size_t size() const { return std::size_t{1} << basis_.size(); }
  std::span<const Bits> basis() const { return basis_; }

  // Minimal integer of the coset x + H.
  Bits reduce(Bits x) const;
  bool contains(Bits x) const { return reduce(x) == 0; }

  std::vector<Bits> elements() const;
  PointSet to_point_set() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend Subspace span(std::span<const Bits> vectors, int n);

  int n_;
  std::vector<Bits> basis_;
};

Subspace span(std::span<const Bits> vectors, int n);
Subspace annihilator(const Subspace& s);

// Coset representative (minimal integer) -> |A ∩ (x + H)| for every coset
// meeting A.
std::map<Bits, std::size_t> coset_decompose(const PointSet& a, const Subspace& h);

// Binary string of exactly n characters, most significant bit first.
std::string to_binary(Bits x, int n);

}  // namespace f2sumset
