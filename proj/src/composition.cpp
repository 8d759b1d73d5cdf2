#include "ncsf/composition.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ncsf/errors.hpp"

namespace ncsf {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  int partial = 0;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw InvalidArgument("composition parts must be positive");
    partial += parts_[k];
    if (partial > kMaxDegree) throw InvalidArgument("composition too large");
    if (k + 1 < parts_.size()) mask_ |= DescentMask{1} << (partial - 1);
  }
  n_ = partial;
}

Composition Composition::from_descents(int n, DescentMask mask) {
  if (n < 1 || n > kMaxDegree) throw InvalidArgument("degree out of range");
  if ((mask & ~full_mask(n)) != 0) throw InvalidArgument("descent outside [n-1]");
  std::vector<int> parts;
  int last = 0;
  for (int d = 1; d < n; ++d) {
    if ((mask >> (d - 1)) & 1u) {
      parts.push_back(d - last);
      last = d;
    }
  }
  parts.push_back(n - last);
  return Composition(std::move(parts));
}

Composition Composition::from_descent_set(int n, std::span<const int> descents) {
  DescentMask mask = 0;
  for (int d : descents) {
    if (d < 1 || d >= n) throw InvalidArgument("descent outside [n-1]");
    mask |= DescentMask{1} << (d - 1);
  }
  return from_descents(n, mask);
}

Composition Composition::from_word(std::string_view bits) {
  DescentMask mask = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      mask |= DescentMask{1} << i;
    } else if (bits[i] != '0') {
      throw InvalidArgument("boolean word must be over {0,1}");
    }
  }
  return from_descents(static_cast<int>(bits.size()) + 1, mask);
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  bool separated = text.find_first_of(".,") != std::string_view::npos;
  if (!separated) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw InvalidArgument("bad composition: " + std::string(text));
      parts.push_back(ch - '0');
    }
  } else {
    int value = 0;
    bool have = false;
    for (char ch : text) {
      if (ch == '.' || ch == ',') {
        if (!have) throw InvalidArgument("bad composition: " + std::string(text));
        parts.push_back(value);
        value = 0;
        have = false;
      } else if (ch >= '0' && ch <= '9') {
        value = value * 10 + (ch - '0');
        have = true;
      } else {
        throw InvalidArgument("bad composition: " + std::string(text));
      }
    }
    if (!have) throw InvalidArgument("bad composition: " + std::string(text));
    parts.push_back(value);
  }
  if (parts.empty()) throw InvalidArgument("empty composition");
  return Composition(std::move(parts));
}

std::vector<int> Composition::descent_set() const {
  std::vector<int> out;
  for (int d = 1; d < n_; ++d)
    if (has_descent(d)) out.push_back(d);
  return out;
}

std::string Composition::boolean_word() const {
  std::string out;
  for (int d = 1; d < n_; ++d) out.push_back(has_descent(d) ? '1' : '0');
  return out;
}

std::size_t Composition::canonical_index() const {
  return canonical_index_from_mask(n_, mask_);
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out.push_back('.');
    out += std::to_string(parts_[k]);
  }
  return out;
}

std::size_t canonical_index_from_mask(int n, DescentMask mask) {
  std::size_t index = 0;
  for (int d = 1; d < n; ++d) {
    index <<= 1;
    if ((mask >> (d - 1)) & 1u) index |= 1u;
  }
  return index;
}

DescentMask mask_from_canonical_index(int n, std::size_t index) {
  DescentMask mask = 0;
  for (int d = n - 1; d >= 1; --d) {
    if (index & 1u) mask |= DescentMask{1} << (d - 1);
    index >>= 1;
  }
  return mask;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 1) throw InvalidArgument("compositions_of: degree must be positive");
  if (n > 24) throw ResourceLimit("compositions_of: degree too large");
  std::size_t count = std::size_t{1} << (n - 1);
  std::vector<Composition> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    out.push_back(Composition::from_descents(n, mask_from_canonical_index(n, k)));
  return out;
}

Composition conjugate(const Composition& c) {
  int n = c.size();
  if (n == 0) return c;
  DescentMask mirrored = 0;
  for (int d : c.descent_set()) mirrored |= DescentMask{1} << (n - d - 1);
  return Composition::from_descents(n, full_mask(n) & ~mirrored);
}

Composition mirror(const Composition& c) {
  std::vector<int> parts(c.parts().rbegin(), c.parts().rend());
  return Composition(std::move(parts));
}

Composition omega_complement(const Composition& c) {
  if (c.size() == 0) return c;
  return Composition::from_descents(c.size(), full_mask(c.size()) & ~c.descent_mask());
}

bool refines(const Composition& j, const Composition& k) {
  if (j.size() != k.size()) throw InvalidArgument("refines: size mismatch");
  return (j.descent_mask() & k.descent_mask()) == k.descent_mask();
}

Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(parts));
}

Composition near_concat(const Composition& a, const Composition& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<int> parts = a.parts();
  parts.back() += b.parts().front();
  parts.insert(parts.end(), b.parts().begin() + 1, b.parts().end());
  return Composition(std::move(parts));
}

Composition hook(int n, int k) {
  if (n < 1 || k < 0 || k >= n) throw InvalidArgument("hook: need 0 <= k < n");
  std::vector<int> parts{n - k};
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return Composition(std::move(parts));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
      throw InvalidArgument("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

int Permutation::sign() const {
  int inversions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inversions;
  return (inversions % 2) ? -1 : 1;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  bool wide = images_.size() > 9;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (wide && i) os << ',';
    os << images_[i];
  }
  return os.str();
}

Composition descent_composition(const Permutation& p) {
  int n = p.size();
  if (n == 0) return Composition();
  DescentMask mask = 0;
  for (int i = 1; i < n; ++i)
    if (p(i) > p(i + 1)) mask |= DescentMask{1} << (i - 1);
  return Composition::from_descents(n, mask);
}

PackedWord::PackedWord(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw InvalidArgument("packed word must be nonempty");
  int m = max_letter();
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int v : letters_) {
    if (v < 1) throw InvalidArgument("packed word letters must be positive");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 1; v <= m; ++v)
    if (!seen[static_cast<std::size_t>(v)]) throw InvalidArgument("word is not packed");
}

PackedWord PackedWord::parse(std::string_view text) {
  std::vector<int> letters;
  if (text.find(',') != std::string_view::npos) {
    int value = 0;
    for (char ch : text) {
      if (ch == ',') {
        letters.push_back(value);
        value = 0;
      } else if (ch >= '0' && ch <= '9') {
        value = value * 10 + (ch - '0');
      } else {
        throw InvalidArgument("bad packed word");
      }
    }
    letters.push_back(value);
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw InvalidArgument("bad packed word");
      letters.push_back(ch - '0');
    }
  }
  return PackedWord(std::move(letters));
}

int PackedWord::max_letter() const {
  return *std::max_element(letters_.begin(), letters_.end());
}

std::string PackedWord::to_string() const {
  std::ostringstream os;
  bool wide = max_letter() > 9;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (wide && i) os << ',';
    os << letters_[i];
  }
  return os.str();
}

Permutation standardize(std::span<const int> word) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<int> images(word.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    images[order[rank]] = static_cast<int>(rank) + 1;
  return Permutation(std::move(images));
}

Permutation sigma_of_word(const PackedWord& w) {
  std::vector<int> mirrored(w.letters().rbegin(), w.letters().rend());
  auto images = standardize(mirrored).images();
  std::reverse(images.begin(), images.end());
  return Permutation(std::move(images));
}

Composition evaluation(const PackedWord& w) {
  std::vector<int> counts(static_cast<std::size_t>(w.max_letter()), 0);
  for (int v : w.letters()) ++counts[static_cast<std::size_t>(v - 1)];
  return Composition(std::move(counts));
}

namespace {

void extend_words(int n, std::vector<int>& prefix, std::vector<PackedWord>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    int m = *std::max_element(prefix.begin(), prefix.end());
    std::uint32_t seen = 0;
    for (int v : prefix) seen |= 1u << (v - 1);
    if (seen == (1u << m) - 1u) out.emplace_back(prefix);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    prefix.push_back(v);
    extend_words(n, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PackedWord> packed_words(int n) {
  if (n < 1) throw InvalidArgument("packed_words: degree must be positive");
  if (n > 8) throw ResourceLimit("packed_words: degree too large");
  std::vector<PackedWord> out;
  std::vector<int> prefix;
  extend_words(n, prefix, out);
  return out;
}

const std::vector<long long>& descent_class_sizes(int n) {
  if (n < 1) throw InvalidArgument("descent_class_sizes: degree must be positive");
  if (n > 9) throw ResourceLimit("descent class enumeration limited to n <= 9");
  static std::mutex mutex;
  static std::map<int, std::vector<long long>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<long long> counts(std::size_t{1} << (n - 1), 0);
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    DescentMask mask = 0;
    for (int i = 1; i < n; ++i)
      if (p[static_cast<std::size_t>(i - 1)] > p[static_cast<std::size_t>(i)])
        mask |= DescentMask{1} << (i - 1);
    ++counts[canonical_index_from_mask(n, mask)];
  } while (std::next_permutation(p.begin(), p.end()));
  return cache.emplace(n, std::move(counts)).first->second;
}

long long count_descent_class(const Composition& c) {
  return descent_class_sizes(c.size())[c.canonical_index()];
}

}  // namespace ncsf
