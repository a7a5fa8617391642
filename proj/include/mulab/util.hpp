#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mulab {

// Malformed input from the user (files, CLI arguments, bad parameters).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured budget (subset size, face count, move count) was exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& s);

// Counter-based splittable PRNG. Streams are keyed by (seed, stream) so the
// k-th draw of stream s is identical no matter how work is scheduled.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);
  std::uint64_t next_u64();
  // uniform in [0, bound), bound > 0
  std::uint64_t next_below(std::uint64_t bound);
  double next_unit();  // [0,1)
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// n choose k as int64; requires 0 <= n <= 62 (fits without overflow).
// Returns 0 for k < 0 or k > n.
std::int64_t binom64(int n, int k);
mpz_class binom_mpz(int n, int k);

// Number of worker threads to use: min(hardware, MULAB_THREADS if set).
int thread_cap();

// Runs fn(begin, end, chunk_index) over [0, n) split into contiguous chunks,
// one per worker. chunk_index is stable so callers can merge deterministically.
void parallel_chunks(std::int64_t n,
                     const std::function<void(std::int64_t, std::int64_t, int)>& fn);

}  // namespace mulab
