#pragma once

// Compositions, descent sets, boolean words, permutations and packed words.
//
// A composition I = (i_1, ..., i_r) of n is stored together with its descent
// set Des(I) = {i_1, i_1+i_2, ...} as a bitmask: bit (d-1) is set iff d is a
// descent.  The canonical order on compositions of n is the ascending binary
// value of the boolean word u_1 ... u_{n-1} read with u_1 most significant,
// which lists (4), (3,1), (2,2), (2,1,1), (1,3), (1,2,1), (1,1,2), (1,1,1,1).

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncsf {

using DescentMask = std::uint32_t;

/// Largest degree representable by a DescentMask.
inline constexpr int kMaxDegree = 31;

class Composition {
 public:
  /// The empty composition of 0.
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  static Composition from_descents(int n, DescentMask mask);
  static Composition from_descent_set(int n, std::span<const int> descents);
  /// Boolean word of length n-1 over {0,1}.
  static Composition from_word(std::string_view bits);
  /// Accepts "2.1.1", "2,1,1" or, when every part is a single digit, "211".
  static Composition parse(std::string_view text);

  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  DescentMask descent_mask() const { return mask_; }
  std::vector<int> descent_set() const;
  bool has_descent(int d) const {
    return d >= 1 && d < n_ && ((mask_ >> (d - 1)) & 1u) != 0;
  }
  /// "011" for (2,1,1).
  std::string boolean_word() const;
  /// Position in compositions_of(size()).
  std::size_t canonical_index() const;
  /// "2.1.1"; the empty composition renders as "".
  std::string to_string() const;

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Composition& a,
                                          const Composition& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.canonical_index() <=> b.canonical_index();
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
  DescentMask mask_ = 0;
};

/// All compositions of n in canonical order.  Throws InvalidArgument for n < 1.
std::vector<Composition> compositions_of(int n);

/// Boolean-word value -> mask conversion (bit reversal over n-1 bits).
DescentMask mask_from_canonical_index(int n, std::size_t index);
std::size_t canonical_index_from_mask(int n, DescentMask mask);

inline DescentMask full_mask(int n) {
  return n <= 1 ? 0u : ((DescentMask{1} << (n - 1)) - 1u);
}

/// I^~: Des(I^~) = [n-1] \ { n - d : d in Des(I) }.
Composition conjugate(const Composition& c);
/// Parts in reverse order.
Composition mirror(const Composition& c);
/// \bar I^~: Des = [n-1] \ Des(I).
Composition omega_complement(const Composition& c);
/// True iff Des(j) contains Des(k); throws on size mismatch.
bool refines(const Composition& j, const Composition& k);
/// I . J (concatenation).
Composition concat(const Composition& a, const Composition& b);
/// I |> J (last part of I glued to first part of J).
Composition near_concat(const Composition& a, const Composition& b);
/// (n - k, 1^k).
Composition hook(int n, int k);

/// Permutation of [n] in one-line notation (1-based images).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  int sign() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// C(sigma): composition whose descent set is {i : sigma(i) > sigma(i+1)}.
Composition descent_composition(const Permutation& p);

/// Word over positive integers whose support is {1, ..., m}.
class PackedWord {
 public:
  explicit PackedWord(std::vector<int> letters);
  static PackedWord parse(std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  int max_letter() const;
  const std::vector<int>& letters() const { return letters_; }
  std::string to_string() const;

  friend bool operator==(const PackedWord&, const PackedWord&) = default;

 private:
  std::vector<int> letters_;
};

/// Standardization; equal letters are numbered left to right.
Permutation standardize(std::span<const int> word);
/// sigma_w = mirror(std(mirror(w))).
Permutation sigma_of_word(const PackedWord& w);
/// ev(w) = (#1s, #2s, ..., #ms).
Composition evaluation(const PackedWord& w);
/// Lexicographic order.
std::vector<PackedWord> packed_words(int n);

/// d_I for every composition of n, indexed canonically (brute force, n <= 9).
const std::vector<long long>& descent_class_sizes(int n);
long long count_descent_class(const Composition& c);

}  // namespace ncsf
