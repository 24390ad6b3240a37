#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace steiner {

// Unbounded ascending primes, produced by a segmented sieve that extends
// itself one window at a time as the cursor moves past the sieved range.
class PrimeStream {
 public:
  PrimeStream();

  std::uint64_t next();
  // Prime at zero-based position k of the stream, sieving forward if needed.
  std::uint64_t at(std::size_t k);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::uint64_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::uint64_t*;
    using reference = std::uint64_t;

    iterator() = default;
    explicit iterator(PrimeStream* stream) : stream_(stream), value_(stream->next()) {}
    std::uint64_t operator*() const { return value_; }
    iterator& operator++() {
      value_ = stream_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator&, std::default_sentinel_t) { return false; }

   private:
    PrimeStream* stream_ = nullptr;
    std::uint64_t value_ = 0;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  void extend();

  std::vector<std::uint64_t> primes_;
  std::uint64_t sieved_to_ = 0;  // all primes below this are in primes_
  std::size_t cursor_ = 0;
};

// The first count primes.
std::vector<std::uint64_t> first_primes(std::size_t count);

}  // namespace steiner
