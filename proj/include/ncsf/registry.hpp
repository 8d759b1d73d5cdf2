#pragma once

// Global registry of indeterminates.
//
// Every variable is identified by a (family, index) key.  Ids are handed out
// in registration order and are only used for internal storage; everything
// user-visible (rendering, term order) goes through the key order: family rank
// first, then index (binary word lexicographically, or integers).

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ncsf {

enum class Family : std::uint8_t {
  y,     // y_u, u a nonempty binary word
  qij,   // q_{i,j}
  tij,   // t_{i,j}
  qseq,  // q_i
  tseq,  // t_i
  x,     // x (index 0) or x_i
  yvar,  // commuting scalar y
  a,
  b,
  useq,  // u_i
  hcom,  // commutative complete function h_k
  q,     // one-parameter q
  t,     // one-parameter t
};

struct VarKey {
  Family family = Family::x;
  std::string word;  // Family::y only
  int i = 0;
  int j = 0;

  friend std::strong_ordering operator<=>(const VarKey&, const VarKey&) = default;
  friend bool operator==(const VarKey&, const VarKey&) = default;
};

/// Handle to a registered indeterminate.
class Var {
 public:
  constexpr Var() = default;
  constexpr explicit Var(std::uint32_t id) : id_(id) {}
  constexpr std::uint32_t id() const { return id_; }
  friend constexpr auto operator<=>(Var, Var) = default;

 private:
  std::uint32_t id_ = 0;
};

/// Registers (or looks up) the variable with the given key.  Thread-safe.
Var intern(const VarKey& key);
/// Key of a registered variable.  The reference stays valid for the process.
const VarKey& key_of(Var v);
/// Canonical name, e.g. "y_{011}", "q_{1,2}", "t_3", "x".
std::string name_of(Var v);
/// Number of registered variables.
std::size_t registry_size();

namespace vars {
Var y(std::string_view word);
Var q(int i, int j);
Var t(int i, int j);
Var qs(int i);
Var ts(int i);
Var x(int i = 0);
Var yv();
Var a();
Var b();
Var u(int i);
Var h(int k);
Var q1();  // one-parameter q
Var t1();  // one-parameter t
}  // namespace vars

}  // namespace ncsf
