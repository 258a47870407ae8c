/* Deterministic random sampling. Bounded draws avoid std::uniform_int
   distributions so identical seeds reproduce identical streams on any
   platform. Derived streams (per sample index) come from splitmix64, which
   keeps parallel sample evaluation independent of scheduling. */

#pragma once

#include <cstdint>
#include <random>

#include "arcmodel/field.hpp"

namespace arcmodel {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng derive(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(seed ^ splitmix64(stream + 1)));
  }

  std::uint64_t next() { return engine_(); }

  // uniform in [0, bound); bound > 0 (modulo bias is irrelevant here)
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  long long int_in(long long lo, long long hi) {  // inclusive
    return lo + (long long)below((std::uint64_t)(hi - lo + 1));
  }

  bool coin() { return next() & 1; }

  // small exact scalar; over Q a fraction with bounded numerator/denominator,
  // over F_p a uniform residue
  Scalar scalar(const FieldSpec& f, long long mag = 9) {
    if (f.is_rationals()) {
      long long num = int_in(-mag, mag);
      long long den = int_in(1, 3);
      return Scalar::from_rational(f, BigInt(num), BigInt(den));
    }
    return Scalar::from_int(f, (long long)below(f.characteristic()));
  }

  Scalar nonzero_scalar(const FieldSpec& f, long long mag = 9) {
    for (;;) {
      Scalar s = scalar(f, mag);
      if (!s.is_zero()) return s;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace arcmodel
