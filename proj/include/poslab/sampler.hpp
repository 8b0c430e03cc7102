#pragma once

#include <cstdint>
#include <vector>

#include "poslab/rational.hpp"

namespace poslab {

struct Interval {
  Rational lo = -2;
  Rational hi = 2;
  bool exclude_zero = false;
};

// Seeded source of rational sample points with bounded denominators. Point i is
// a pure function of (seed, i, configuration), so batches can be generated in
// any order and a run is reproducible from its seed alone.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t count, std::vector<Interval> box = {Interval{}},
          std::uint64_t max_denominator = 8);

  static Sampler signed_box(std::uint64_t seed, std::uint64_t count);        // [-2, 2]
  static Sampler nonnegative_box(std::uint64_t seed, std::uint64_t count);   // [0, 2]
  static Sampler positive_box(std::uint64_t seed, std::uint64_t count);      // (0, 2]

  std::uint64_t seed() const { return seed_; }
  std::uint64_t count() const { return count_; }
  std::uint64_t max_denominator() const { return max_den_; }
  const std::vector<Interval>& box() const { return box_; }

  Sampler with_seed(std::uint64_t seed) const;
  Sampler with_count(std::uint64_t count) const;
  Sampler with_box(std::vector<Interval> box) const;

  // Coordinate v uses box()[v % box().size()].
  std::vector<Rational> point(std::uint64_t index, int dim) const;

 private:
  std::uint64_t seed_;
  std::uint64_t count_;
  std::vector<Interval> box_;
  std::uint64_t max_den_;
};

}  // namespace poslab
