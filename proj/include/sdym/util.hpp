#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace sdym {

using C64 = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Point of flat R^4 in Cartesian coordinates.
struct R4Point {
  double t = 0, x = 0, y = 0, z = 0;

  // complex coordinates u = t + ix, v = y - iz and their conjugates
  C64 u() const { return {t, x}; }
  C64 ubar() const { return {t, -x}; }
  C64 v() const { return {y, -z}; }
  C64 vbar() const { return {y, z}; }
};

inline R4Point operator+(const R4Point& a, const R4Point& b) {
  return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
}

// Deterministic RNG. Only raw mt19937_64 output is used (no distribution
// objects), so the stream is reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }
  double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + int(gen_() % std::uint64_t(hi - lo + 1));
  }
  C64 complex_in_box(double r) { return {uniform(-r, r), uniform(-r, r)}; }

 private:
  std::mt19937_64 gen_;
};

// Cascade summation. Contour quadratures sum with this so that results do
// not depend on chunking when sweeps run in parallel.
template <class T>
T pairwise_sum(std::vector<T> buf) {
  if (buf.empty()) return T{};
  std::size_t n = buf.size();
  while (n > 1) {
    std::size_t half = n / 2;
    for (std::size_t i = 0; i < half; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
    if (n % 2) {
      buf[half] = buf[n - 1];
      ++half;
    }
    n = half;
  }
  return buf[0];
}

// Block-partitioned parallel loop; item i is fully independent and writes
// only its own slot, so results are identical for every thread count.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t nt = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (std::size_t w = 0; w < nt; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += nt) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace sdym
