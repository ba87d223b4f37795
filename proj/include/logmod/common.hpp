#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace logmod {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long overloads; long is 64-bit on every supported target
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat to_rat(long long num, long long den = 1) {
  Rat r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

// Weight coordinates in the fundamental-weight basis.
using Weight = std::vector<long long>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant that should have held failed to hold.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline long long imod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

inline long long igcd(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Weight wadd(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Weight wsub(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Weight wneg(const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Weight wscale(long long c, const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool wzero(const Weight& a) {
  for (auto v : a)
    if (v) return false;
  return true;
}

// Deterministic RNG for seeded property tests and section perturbations.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [lo, hi]
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

}  // namespace logmod
