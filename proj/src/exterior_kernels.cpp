#include "rankin/exterior_kernels.hpp"

#include <bit>
#include <unordered_map>

#include "rankin/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rankin::kernels {

WeightCodec::WeightCodec(std::size_t n, Entry radius) : n_(n), radius_(radius), base_(2 * radius + 1) {
  extent_ = 1;
  offset_ = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (extent_ > (Code{1} << 62) / base_)
      throw Error(Errc::InfeasibleScale, "weight packing overflows 64 bits");
    offset_ += radius * extent_;
    extent_ *= base_;
  }
}

Code WeightCodec::delta(const GLWeight& w) const {
  Code code = 0;
  Code place = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    code += w[i] * place;
    place *= base_;
  }
  return code;
}

GLWeight WeightCodec::decode(Code code) const {
  std::vector<Entry> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i] = code % base_ - radius_;
    code /= base_;
  }
  return GLWeight(std::move(out));
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<GLWeight> adjoint_weights(std::size_t n) {
  std::vector<GLWeight> out;
  out.reserve(n * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      GLWeight w = GLWeight::zero(n);
      w[i] = 1;
      w[j] = -1;
      out.push_back(std::move(w));
    }
  }
  for (std::size_t k = 1; k < n; ++k) out.push_back(GLWeight::zero(n));
  return out;
}

namespace {

void require_small(std::size_t count) {
  if (count >= 63) throw Error(Errc::InfeasibleScale, "too many summands for a full subset walk");
}

// Per-thread accumulator: dense when the code space is small, hashed otherwise.
class Accumulator {
 public:
  Accumulator(std::size_t levels, Code extent)
      : levels_(levels), extent_(extent), dense_(static_cast<Code>(levels) * extent <= (Code{1} << 23)) {
    if (dense_) counts_.assign(levels * static_cast<std::size_t>(extent), 0);
    else sparse_.resize(levels);
  }

  void bump(std::size_t level, Code code) {
    if (dense_) ++counts_[level * static_cast<std::size_t>(extent_) + static_cast<std::size_t>(code)];
    else ++sparse_[level][code];
  }

  void drain_into(std::vector<Tally>& out) const {
    for (std::size_t k = 0; k < levels_; ++k) {
      if (dense_) {
        const Multiplicity* row = counts_.data() + k * static_cast<std::size_t>(extent_);
        for (Code c = 0; c < extent_; ++c)
          if (row[c]) out[k][c] += row[c];
      } else {
        for (const auto& [c, m] : sparse_[k]) out[k][c] += m;
      }
    }
  }

 private:
  std::size_t levels_;
  Code extent_;
  bool dense_;
  std::vector<Multiplicity> counts_;
  std::vector<std::unordered_map<Code, Multiplicity>> sparse_;
};

}  // namespace

std::vector<Tally> ladder_serial(std::span<const Code> deltas, const WeightCodec& codec) {
  const std::size_t count = deltas.size();
  require_small(count);
  std::vector<Tally> out(count + 1);
  const std::uint64_t subsets = std::uint64_t{1} << count;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Code code = codec.offset();
    for (std::size_t b = 0; b < count; ++b)
      if (mask >> b & 1U) code += deltas[b];
    ++out[static_cast<std::size_t>(std::popcount(mask))][code];
  }
  return out;
}

std::vector<Tally> ladder_parallel(std::span<const Code> deltas, const WeightCodec& codec) {
  const std::size_t count = deltas.size();
  require_small(count);
  // The top `high` bits select a block; each block walks its low bits in
  // Gray-code order, so one delta changes per step.
  const std::size_t high = count < 8 ? count / 2 : 6;
  const std::size_t low = count - high;
  const std::int64_t blocks = std::int64_t{1} << high;
  std::vector<Tally> out(count + 1);

#pragma omp parallel
  {
    Accumulator acc(count + 1, codec.extent());
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t block = 0; block < blocks; ++block) {
      Code code = codec.offset();
      std::size_t level = 0;
      for (std::size_t b = 0; b < high; ++b) {
        if (static_cast<std::uint64_t>(block) >> b & 1U) {
          code += deltas[low + b];
          ++level;
        }
      }
      std::uint64_t gray = 0;
      acc.bump(level, code);
      const std::uint64_t steps = std::uint64_t{1} << low;
      for (std::uint64_t step = 1; step < steps; ++step) {
        const int bit = std::countr_zero(step);
        gray ^= std::uint64_t{1} << bit;
        if (gray >> bit & 1U) {
          code += deltas[static_cast<std::size_t>(bit)];
          ++level;
        } else {
          code -= deltas[static_cast<std::size_t>(bit)];
          --level;
        }
        acc.bump(level, code);
      }
    }
#pragma omp critical(rankin_ladder_merge)
    acc.drain_into(out);
  }
  return out;
}

namespace {

void level_serial_rec(std::span<const Code> deltas, std::size_t start, std::size_t remaining, Code code,
                      Tally& out) {
  if (remaining == 0) {
    ++out[code];
    return;
  }
  for (std::size_t i = start; i + remaining <= deltas.size(); ++i)
    level_serial_rec(deltas, i + 1, remaining - 1, code + deltas[i], out);
}

}  // namespace

Tally level_serial(std::span<const Code> deltas, const WeightCodec& codec, std::size_t k) {
  if (k > deltas.size()) throw Error(Errc::OutOfRange, "subset size exceeds the multiset");
  Tally out;
  level_serial_rec(deltas, 0, k, codec.offset(), out);
  return out;
}

Tally level_parallel(std::span<const Code> deltas, const WeightCodec& codec, std::size_t k) {
  const std::size_t count = deltas.size();
  if (k > count) throw Error(Errc::OutOfRange, "subset size exceeds the multiset");
  if (k == 0) return Tally{{codec.offset(), 1}};
  std::vector<Tally> out(1);
  const auto firsts = static_cast<std::int64_t>(count - k + 1);

#pragma omp parallel
  {
    std::unordered_map<Code, Multiplicity> local;
    std::vector<std::size_t> idx(k);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t first = 0; first < firsts; ++first) {
      // Lexicographic walk over the k-subsets whose smallest element is
      // `first`; the running code is patched only where indices move.
      idx[0] = static_cast<std::size_t>(first);
      Code code = codec.offset() + deltas[idx[0]];
      for (std::size_t t = 1; t < k; ++t) {
        idx[t] = idx[0] + t;
        code += deltas[idx[t]];
      }
      while (true) {
        ++local[code];
        if (k == 1) break;
        std::size_t t = k - 1;
        while (t >= 1 && idx[t] == count - k + t) --t;
        if (t == 0) break;
        for (std::size_t u = t; u < k; ++u) code -= deltas[idx[u]];
        ++idx[t];
        code += deltas[idx[t]];
        for (std::size_t u = t + 1; u < k; ++u) {
          idx[u] = idx[u - 1] + 1;
          code += deltas[idx[u]];
        }
      }
    }
#pragma omp critical(rankin_level_merge)
    for (const auto& [c, m] : local) out[0][c] += m;
  }
  return std::move(out[0]);
}

}  // namespace rankin::kernels
