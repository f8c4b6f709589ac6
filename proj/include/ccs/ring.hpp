#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccs/error.hpp"
#include "ccs/field.hpp"

namespace ccs {

// Polynomial ring k[vars] over a concrete field F.  The variable list fixes
// the reference order of exponent vectors.  Rings are immutable and shared.
template <class F>
struct Ring {
  std::vector<std::string> vars;
  F field;

  std::size_t arity() const { return vars.size(); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return i;
    return std::nullopt;
  }

  bool has_var(const std::string& name) const { return index_of(name).has_value(); }

  bool operator==(const Ring& o) const { return vars == o.vars && field == o.field; }
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(std::vector<std::string> vars, F field) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) fail(errc::invalid_input, "empty variable name");
    if (!seen.insert(v).second)
      fail(errc::invalid_input, "duplicate variable name '" + v + "'");
  }
  return std::make_shared<Ring<F>>(Ring<F>{std::move(vars), std::move(field)});
}

inline RingPtr<QQ> make_ring(std::vector<std::string> vars) {
  return make_ring<QQ>(std::move(vars), QQ{});
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

template <class F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (!same_ring(a, b)) fail(errc::ring_mismatch, "operands live in different rings");
}

// Fresh names that cannot collide with existing ring variables: base, then
// base0, base1, ... with underscores prepended until free.
inline std::string fresh_name(const std::vector<std::string>& taken,
                              const std::string& base) {
  auto free = [&](const std::string& n) {
    return std::find(taken.begin(), taken.end(), n) == taken.end();
  };
  std::string b = base;
  while (true) {
    if (free(b)) return b;
    for (int i = 0; i < 32; ++i) {
      std::string c = b + std::to_string(i);
      if (free(c)) return c;
    }
    b = "_" + b;
  }
}

inline std::vector<std::string> fresh_names(const std::vector<std::string>& taken,
                                            const std::string& base, std::size_t count) {
  auto free = [&](const std::string& n) {
    return std::find(taken.begin(), taken.end(), n) == taken.end();
  };
  std::string b = base;
  while (true) {
    bool ok = true;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count && ok; ++i) {
      std::string c = b + std::to_string(i);
      ok = free(c);
      out.push_back(c);
    }
    if (ok) return out;
    b = "_" + b;
  }
}

}  // namespace ccs
