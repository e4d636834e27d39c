#ifndef NULLCONE_RATIONAL_HPP
#define NULLCONE_RATIONAL_HPP

// Exact rational scalars (GMP) and a deterministic seeded generator.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nullcone {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

inline std::string join(const std::vector<Rational>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i].get_str();
  }
  return os.str();
}

/// Seeded generator with platform-independent integer draws.
///
/// std::mt19937_64 has a fully specified output sequence; the standard
/// distributions do not, so ranges are mapped by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  long nonzero(long lo, long hi) {
    long v = 0;
    while (v == 0) v = uniform(lo, hi);
    return v;
  }

  Rational rational(long lo, long hi, long max_den = 1) {
    return make_rational(uniform(lo, hi), max_den > 1 ? uniform(1, max_den) : 1);
  }

  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nullcone

#endif  // NULLCONE_RATIONAL_HPP
