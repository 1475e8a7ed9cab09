#include "lemma/symbol.hpp"

#include <mutex>
#include <unordered_set>

namespace lemma {

namespace {

struct Interner {
  std::mutex mutex;
  std::unordered_set<std::string> names;
};

Interner& interner() {
  static Interner instance;
  return instance;
}

}  // namespace

Symbol Symbol::intern(std::string_view name) {
  auto& table = interner();
  std::lock_guard lock(table.mutex);
  // unordered_set nodes are stable, so the address outlives rehashing.
  auto [it, inserted] = table.names.emplace(name);
  return Symbol(&*it);
}

namespace sym {
Symbol nil() {
  static const Symbol s = Symbol::intern("[]");
  return s;
}
Symbol cons() {
  static const Symbol s = Symbol::intern(".");
  return s;
}
Symbol slash() {
  static const Symbol s = Symbol::intern("/");
  return s;
}
Symbol backslash() {
  static const Symbol s = Symbol::intern("\\");
  return s;
}
Symbol hash() {
  static const Symbol s = Symbol::intern("#");
  return s;
}
Symbol neck() {
  static const Symbol s = Symbol::intern("::-");
  return s;
}
}  // namespace sym

}  // namespace lemma
