#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace covres {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a caller violates a documented precondition.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when an internal consistency check fails; always a bug, never
// a caller error.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

inline void check(bool cond, const std::string& what) {
  if (!cond) throw internal_error(what);
}

// FNV-1a, used for stable on-disk cache addressing.  Not a general hash.
inline std::uint64_t fnv64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw domain_error("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

}  // namespace covres
