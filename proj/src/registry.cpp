#include "ncsf/registry.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "ncsf/errors.hpp"

namespace ncsf {
namespace {

struct Registry {
  std::shared_mutex mutex;
  std::deque<VarKey> keys;
  std::map<VarKey, std::uint32_t> ids;
};

Registry& registry() {
  static Registry r;
  return r;
}

void validate(const VarKey& key) {
  switch (key.family) {
    case Family::y:
      if (key.word.empty() || key.word.find_first_not_of("01") != std::string::npos)
        throw InvalidArgument("y variables are indexed by nonempty binary words");
      break;
    case Family::qij:
    case Family::tij:
      if (key.i < 1 || key.j < 1) throw InvalidArgument("matrix parameter indices must be >= 1");
      break;
    case Family::qseq:
    case Family::tseq:
    case Family::useq:
    case Family::hcom:
      if (key.i < 1) throw InvalidArgument("sequence parameter index must be >= 1");
      break;
    case Family::x:
      if (key.i < 0) throw InvalidArgument("x index must be >= 0");
      break;
    default:
      break;
  }
}

std::string braced(int v) {
  return v < 10 ? std::to_string(v) : "{" + std::to_string(v) + "}";
}

}  // namespace

Var intern(const VarKey& key) {
  auto& r = registry();
  {
    std::shared_lock lock(r.mutex);
    auto it = r.ids.find(key);
    if (it != r.ids.end()) return Var(it->second);
  }
  validate(key);
  std::unique_lock lock(r.mutex);
  auto it = r.ids.find(key);
  if (it != r.ids.end()) return Var(it->second);
  auto id = static_cast<std::uint32_t>(r.keys.size());
  r.keys.push_back(key);
  r.ids.emplace(key, id);
  return Var(id);
}

const VarKey& key_of(Var v) {
  auto& r = registry();
  std::shared_lock lock(r.mutex);
  if (v.id() >= r.keys.size()) throw InvalidArgument("unregistered variable");
  return r.keys[v.id()];
}

std::size_t registry_size() {
  auto& r = registry();
  std::shared_lock lock(r.mutex);
  return r.keys.size();
}

std::string name_of(Var v) {
  const VarKey& k = key_of(v);
  switch (k.family) {
    case Family::y: return "y_{" + k.word + "}";
    case Family::qij: return "q_{" + std::to_string(k.i) + "," + std::to_string(k.j) + "}";
    case Family::tij: return "t_{" + std::to_string(k.i) + "," + std::to_string(k.j) + "}";
    case Family::qseq: return "q_" + braced(k.i);
    case Family::tseq: return "t_" + braced(k.i);
    case Family::x: return k.i == 0 ? "x" : "x_" + braced(k.i);
    case Family::yvar: return "y";
    case Family::a: return "a";
    case Family::b: return "b";
    case Family::useq: return "u_" + braced(k.i);
    case Family::hcom: return "h_" + braced(k.i);
    case Family::q: return "q";
    case Family::t: return "t";
  }
  return "?";
}

namespace vars {
Var y(std::string_view word) { return intern({Family::y, std::string(word), 0, 0}); }
Var q(int i, int j) { return intern({Family::qij, {}, i, j}); }
Var t(int i, int j) { return intern({Family::tij, {}, i, j}); }
Var qs(int i) { return intern({Family::qseq, {}, i, 0}); }
Var ts(int i) { return intern({Family::tseq, {}, i, 0}); }
Var x(int i) { return intern({Family::x, {}, i, 0}); }
Var yv() { return intern({Family::yvar, {}, 0, 0}); }
Var a() { return intern({Family::a, {}, 0, 0}); }
Var b() { return intern({Family::b, {}, 0, 0}); }
Var u(int i) { return intern({Family::useq, {}, i, 0}); }
Var h(int k) { return intern({Family::hcom, {}, k, 0}); }
Var q1() { return intern({Family::q, {}, 0, 0}); }
Var t1() { return intern({Family::t, {}, 0, 0}); }
}  // namespace vars

}  // namespace ncsf
