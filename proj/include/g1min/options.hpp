#pragma once

#include <cstdlib>
#include <string>

namespace g1min {

struct Options {
  long prime_bound = 31;  // exhaustive residue-field searches only run for p <= prime_bound
  int depth = 3;          // maximal number of elementary moves composed by the guided search

  // Defaults with G1MIN_PRIME_BOUND applied when set.
  static Options from_env() {
    Options o;
    if (const char* s = std::getenv("G1MIN_PRIME_BOUND")) {
      try {
        long v = std::stol(s);
        if (v >= 2) o.prime_bound = v;
      } catch (...) {
      }
    }
    return o;
  }
};

}  // namespace g1min
