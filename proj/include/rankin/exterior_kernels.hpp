#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "rankin/decomposition.hpp"
#include "rankin/weights.hpp"

// Subset-sum kernels behind exterior powers of an explicit weight multiset.
//
// Weights are packed into a single integer: with every partial sum known to
// have entries in [-radius, radius], entry i contributes (x_i + radius) *
// base^i, base = 2*radius + 1. The packing is additive, so the code of a
// subset sum is offset + sum of per-weight deltas.
//
// Each kernel exists twice: a plain serial reference that recomputes every
// subset sum from scratch, and an OpenMP version that walks subsets
// incrementally. Tests hold the two equal; bench/ times them.
namespace rankin::kernels {

using Code = std::int64_t;
/// code -> number of subsets with that packed sum.
using Tally = std::map<Code, Multiplicity>;

class WeightCodec {
 public:
  WeightCodec(std::size_t n, Entry radius);

  std::size_t n() const { return n_; }
  Entry radius() const { return radius_; }
  /// Number of distinct codes, base^n.
  Code extent() const { return extent_; }
  Code offset() const { return offset_; }
  /// Contribution of one summand (no offset).
  Code delta(const GLWeight& w) const;
  Code encode(const GLWeight& w) const { return offset_ + delta(w); }
  GLWeight decode(Code code) const;

 private:
  std::size_t n_;
  Entry radius_;
  Code base_;
  Code extent_;
  Code offset_;
};

/// tally[k] for every k in 0..deltas.size(), over all 2^N subsets.
std::vector<Tally> ladder_serial(std::span<const Code> deltas, const WeightCodec& codec);
std::vector<Tally> ladder_parallel(std::span<const Code> deltas, const WeightCodec& codec);

/// Tally over the k-subsets only.
Tally level_serial(std::span<const Code> deltas, const WeightCodec& codec, std::size_t k);
Tally level_parallel(std::span<const Code> deltas, const WeightCodec& codec, std::size_t k);

/// The n^2-1 weights of the traceless adjoint of GL_n: e_i - e_j for i != j,
/// then n-1 zero weights.
std::vector<GLWeight> adjoint_weights(std::size_t n);

/// Worker count the OpenMP kernels will use (1 without OpenMP).
int max_threads();

}  // namespace rankin::kernels
