#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace lemma {

class Term;

// Interned functor name. Equality is pointer identity; the backing strings
// live for the lifetime of the process.
class Symbol {
 public:
  static Symbol intern(std::string_view name);

  std::string_view name() const { return *name_; }
  const std::string* address() const { return name_; }

  friend bool operator==(Symbol a, Symbol b) { return a.name_ == b.name_; }

 private:
  friend class Term;
  explicit Symbol(const std::string* name) : name_(name) {}
  const std::string* name_;
};

// Symbols used by the term syntax itself.
namespace sym {
Symbol nil();          // '[]'
Symbol cons();         // '.'
Symbol slash();        // '/'
Symbol backslash();    // '\'
Symbol hash();         // '#'
Symbol neck();         // '::-'
}  // namespace sym

}  // namespace lemma

template <>
struct std::hash<lemma::Symbol> {
  std::size_t operator()(lemma::Symbol s) const noexcept {
    return std::hash<const void*>{}(s.address());
  }
};
