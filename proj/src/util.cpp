#include "mulab/util.hpp"

#include <cstdlib>
#include <thread>

namespace mulab {

std::string rational_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_str();
}

Rational parse_rational(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InputError("bad rational literal: '" + s + "'");
  }
}

namespace {
// splitmix64 step
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  std::uint64_t x = z;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  // decorrelate (seed, stream) pairs before use
  state_ = mix(seed ^ 0x6a09e667f3bcc908ULL) + mix(stream ^ 0xbb67ae8584caa73bULL);
}

std::uint64_t Rng::next_u64() {
  std::uint64_t out = mix(state_);
  state_ += 0x9e3779b97f4a7c15ULL;
  return out;
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
  // rejection sampling to stay unbiased
  std::uint64_t limit = ~0ULL - (~0ULL % bound);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

double Rng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::int64_t binom64(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (n > 62) throw ResourceError("binom64: n too large (" + std::to_string(n) + ")");
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // exact at every step: r * (n-k+i) is divisible by i
    r = r / i * (n - k + i) + r % i * (n - k + i) / i;
  }
  return r;
}

mpz_class binom_mpz(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

int thread_cap() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("MULAB_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < hw) hw = cap;
    if (cap >= 1 && cap > hw) hw = cap;  // allow oversubscription for determinism tests
  }
  return hw;
}

void parallel_chunks(std::int64_t n,
                     const std::function<void(std::int64_t, std::int64_t, int)>& fn) {
  if (n <= 0) return;
  int workers = thread_cap();
  if (workers > n) workers = static_cast<int>(n);
  if (workers <= 1) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::int64_t base = n / workers, extra = n % workers, start = 0;
  for (int t = 0; t < workers; ++t) {
    std::int64_t len = base + (t < extra ? 1 : 0);
    pool.emplace_back(fn, start, start + len, t);
    start += len;
  }
  for (auto& th : pool) th.join();
}

}  // namespace mulab
