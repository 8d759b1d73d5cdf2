#include <algorithm>
#include <set>

#include "doctest.h"
#include "ncsf/composition.hpp"
#include "ncsf/errors.hpp"

using namespace ncsf;

namespace {

std::vector<std::string> strings(const std::vector<Composition>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.to_string());
  return out;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("canonical order") {
  CHECK(strings(compositions_of(1)) == std::vector<std::string>{"1"});
  CHECK(strings(compositions_of(3)) == std::vector<std::string>{"3", "2.1", "1.2", "1.1.1"});
  CHECK(strings(compositions_of(4)) ==
        std::vector<std::string>{"4", "3.1", "2.2", "2.1.1", "1.3", "1.2.1", "1.1.2", "1.1.1.1"});
  for (int n = 1; n <= 7; ++n) {
    auto cs = compositions_of(n);
    CHECK(cs.size() == std::size_t{1} << (n - 1));
    for (std::size_t i = 0; i < cs.size(); ++i) {
      CHECK(cs[i].canonical_index() == i);
      CHECK(mask_from_canonical_index(n, i) == cs[i].descent_mask());
    }
  }
}

TEST_CASE("parsing") {
  CHECK(Composition::parse("2.1.1") == Composition{2, 1, 1});
  CHECK(Composition::parse("2,1,1") == Composition{2, 1, 1});
  CHECK(Composition::parse("211") == Composition{2, 1, 1});
  CHECK(Composition::parse("10.2") == Composition{10, 2});
  CHECK_THROWS_AS(Composition::parse(""), InvalidArgument);
  CHECK_THROWS_AS(Composition::parse("2.0"), InvalidArgument);
  CHECK_THROWS_AS(Composition::parse("2..1"), InvalidArgument);
  CHECK_THROWS_AS(Composition::parse("a"), InvalidArgument);
  CHECK_THROWS_AS(Composition({2, -1}), InvalidArgument);
}

TEST_CASE("descent sets and boolean words") {
  Composition c{2, 1, 1};
  CHECK(c.descent_set() == std::vector<int>{2, 3});
  CHECK(c.boolean_word() == "011");
  CHECK(Composition{1, 3}.boolean_word() == "100");
  CHECK(Composition{4}.descent_set().empty());
  for (int n = 1; n <= 7; ++n)
    for (const auto& i : compositions_of(n)) {
      CHECK(Composition::from_descent_set(n, i.descent_set()) == i);
      CHECK(Composition::from_descents(n, i.descent_mask()) == i);
      int sum = 0;
      for (int p : i.parts()) sum += p;
      CHECK(sum == n);
      auto d = i.descent_set();
      CHECK(std::is_sorted(d.begin(), d.end()));
    }
  std::vector<int> bad{3};
  CHECK_THROWS_AS(Composition::from_descent_set(3, bad), InvalidArgument);
}

TEST_CASE("conjugate, mirror, omega complement") {
  CHECK(conjugate(Composition{1, 1, 1, 1}) == Composition{4});
  CHECK(conjugate(Composition{4}) == Composition{1, 1, 1, 1});
  CHECK(conjugate(Composition{2, 2}) == Composition{1, 2, 1});
  CHECK(omega_complement(Composition{4}) == Composition{1, 1, 1, 1});
  CHECK(omega_complement(Composition{4, 1, 2, 1}) == Composition{1, 1, 1, 3, 2});
  CHECK(omega_complement(Composition{2, 1, 1}) == Composition{1, 3});
  CHECK(mirror(Composition{2, 1, 3}) == Composition{3, 1, 2});
  for (int n = 1; n <= 6; ++n)
    for (const auto& i : compositions_of(n)) {
      CHECK(conjugate(conjugate(i)) == i);
      CHECK(mirror(mirror(i)) == i);
      CHECK(omega_complement(omega_complement(i)) == i);
      CHECK(omega_complement(i) == conjugate(mirror(i)));
      CHECK((omega_complement(i).descent_mask() ^ i.descent_mask()) == full_mask(n));
    }
}

TEST_CASE("refinement") {
  CHECK(refines(Composition{1, 1, 1, 1}, Composition{4}));
  CHECK(refines(Composition{2, 2}, Composition{4}));
  CHECK_FALSE(refines(Composition{2, 2}, Composition{3, 1}));
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : compositions_of(n))
      for (const auto& b : compositions_of(n)) {
        CHECK(refines(a, b) == ((a.descent_mask() & b.descent_mask()) == b.descent_mask()));
        if (refines(a, b) && refines(b, a)) CHECK(a == b);
      }
}

TEST_CASE("concatenation and hooks") {
  CHECK(concat(Composition{2, 1}, Composition{1, 3}) == Composition{2, 1, 1, 3});
  CHECK(near_concat(Composition{2, 1}, Composition{1, 3}) == Composition{2, 2, 3});
  CHECK(hook(5, 2) == Composition{3, 1, 1});
  CHECK(hook(3, 0) == Composition{3});
}

TEST_CASE("packed words") {
  auto w1 = packed_words(1);
  REQUIRE(w1.size() == 1);
  CHECK(w1[0].to_string() == "1");
  std::set<std::string> w2;
  for (const auto& w : packed_words(2)) w2.insert(w.to_string());
  CHECK(w2 == std::set<std::string>{"11", "12", "21"});
  const std::size_t bell[] = {1, 3, 13, 75, 541};
  for (int n = 1; n <= 5; ++n) CHECK(packed_words(n).size() == bell[n - 1]);
  CHECK_THROWS_AS(PackedWord::parse("13"), InvalidArgument);
  CHECK_THROWS_AS(PackedWord::parse("0"), InvalidArgument);
}

TEST_CASE("sigma_w, descent composition, evaluation") {
  CHECK(sigma_of_word(PackedWord::parse("22135411")).to_string() == "54368721");
  CHECK(sigma_of_word(PackedWord::parse("1")).to_string() == "1");
  CHECK(sigma_of_word(PackedWord::parse("11")).to_string() == "21");
  CHECK(descent_composition(Permutation::identity(4)) == Composition{4});
  CHECK(descent_composition(Permutation({5, 4, 3, 6, 8, 7, 2, 1})) == Composition{1, 1, 3, 1, 1, 1});
  CHECK(descent_composition(Permutation({2, 1})) == Composition{1, 1});
  CHECK(evaluation(PackedWord::parse("11")) == Composition{2});
  CHECK(evaluation(PackedWord::parse("22135411")) == Composition{3, 2, 1, 1, 1});
  CHECK(evaluation(PackedWord::parse("12")) == Composition{1, 1});
}

TEST_CASE("descent classes") {
  CHECK(count_descent_class(Composition{4}) == 1);
  CHECK(count_descent_class(Composition{1, 1, 1}) == 1);
  CHECK(count_descent_class(Composition{2, 1}) == 2);
  for (int n = 1; n <= 7; ++n) {
    long long sum = 0;
    for (long long d : descent_class_sizes(n)) sum += d;
    CHECK(sum == factorial(n));
  }
}
