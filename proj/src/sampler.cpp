#include "poslab/sampler.hpp"

#include <random>

#include "poslab/error.hpp"

namespace poslab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform integer in [0, range) from raw 64-bit draws, rejecting the biased tail.
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t range) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t r;
  do {
    r = gen();
  } while (r >= limit);
  return r % range;
}

Integer ceil_div(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer floor_div(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace

Sampler::Sampler(std::uint64_t seed, std::uint64_t count, std::vector<Interval> box, std::uint64_t max_denominator)
    : seed_(seed), count_(count), box_(std::move(box)), max_den_(max_denominator) {
  if (box_.empty()) throw Error(ErrorCode::BadParams, "sampler box must have at least one interval");
  if (max_den_ == 0) throw Error(ErrorCode::BadParams, "sampler denominator bound must be positive");
  for (const Interval& iv : box_) {
    if (iv.lo > iv.hi) throw Error(ErrorCode::BadParams, "sampler interval is empty");
    if (iv.exclude_zero && iv.lo == 0 && iv.hi == 0)
      throw Error(ErrorCode::BadParams, "sampler interval has no nonzero point");
  }
}

Sampler Sampler::signed_box(std::uint64_t seed, std::uint64_t count) {
  return Sampler(seed, count, {Interval{-2, 2, false}});
}

Sampler Sampler::nonnegative_box(std::uint64_t seed, std::uint64_t count) {
  return Sampler(seed, count, {Interval{0, 2, false}});
}

Sampler Sampler::positive_box(std::uint64_t seed, std::uint64_t count) {
  return Sampler(seed, count, {Interval{0, 2, true}});
}

Sampler Sampler::with_seed(std::uint64_t seed) const { return Sampler(seed, count_, box_, max_den_); }
Sampler Sampler::with_count(std::uint64_t count) const { return Sampler(seed_, count, box_, max_den_); }
Sampler Sampler::with_box(std::vector<Interval> box) const { return Sampler(seed_, count_, std::move(box), max_den_); }

std::vector<Rational> Sampler::point(std::uint64_t index, int dim) const {
  std::mt19937_64 gen(splitmix64(seed_ ^ splitmix64(index + 0x632BE59BD9B4E019ULL)));
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(dim));
  for (int v = 0; v < dim; ++v) {
    const Interval& iv = box_[static_cast<std::size_t>(v) % box_.size()];
    while (true) {
      const std::uint64_t q = 1 + bounded(gen, max_den_);
      const Integer lo = ceil_div(iv.lo * q);
      const Integer hi = floor_div(iv.hi * q);
      if (lo > hi) continue;
      const Integer span = hi - lo + 1;
      Integer offset;
      if (span.fits_ulong_p()) {
        offset = static_cast<unsigned long>(bounded(gen, span.get_ui()));
      } else {
        throw Error(ErrorCode::BadParams, "sampler interval too wide");
      }
      Rational x(lo + offset, Integer(static_cast<unsigned long>(q)));
      x.canonicalize();
      if (iv.exclude_zero && x == 0) continue;
      out.push_back(std::move(x));
      break;
    }
  }
  return out;
}

}  // namespace poslab
