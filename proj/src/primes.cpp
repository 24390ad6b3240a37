#include "steiner/primes.hpp"

#include <algorithm>

namespace steiner {

namespace {
constexpr std::uint64_t kFirstWindow = 1 << 10;
constexpr std::uint64_t kMaxWindow = 1 << 20;
}  // namespace

PrimeStream::PrimeStream() { extend(); }

void PrimeStream::extend() {
  const std::uint64_t lo = sieved_to_;
  // Base primes must reach sqrt(hi); primes below lo are all known, so
  // hi <= lo^2 keeps the window self-sufficient.
  std::uint64_t hi = lo == 0 ? kFirstWindow : lo + std::min(lo, kMaxWindow);
  if (lo > 0) hi = std::min(hi, lo * lo);

  std::vector<char> composite(hi - lo, 0);
  for (std::uint64_t v = lo; v < std::min<std::uint64_t>(2, hi); ++v) composite[v - lo] = 1;

  if (lo == 0) {
    for (std::uint64_t p = 2; p * p < hi; ++p)
      if (!composite[p])
        for (std::uint64_t m = p * p; m < hi; m += p) composite[m] = 1;
  } else {
    for (std::uint64_t p : primes_) {
      if (p * p >= hi) break;
      std::uint64_t m = std::max(p * p, (lo + p - 1) / p * p);
      for (; m < hi; m += p) composite[m - lo] = 1;
    }
  }
  for (std::uint64_t v = lo; v < hi; ++v)
    if (!composite[v - lo]) primes_.push_back(v);
  sieved_to_ = hi;
}

std::uint64_t PrimeStream::at(std::size_t k) {
  while (k >= primes_.size()) extend();
  return primes_[k];
}

std::uint64_t PrimeStream::next() { return at(cursor_++); }

std::vector<std::uint64_t> first_primes(std::size_t count) {
  PrimeStream stream;
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next());
  return out;
}

}  // namespace steiner
