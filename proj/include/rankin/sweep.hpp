#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rankin/json_io.hpp"
#include "rankin/weights.hpp"

namespace rankin::sweep {

/// Deterministic generator; bounded draws use plain modular reduction so
/// the stream of instances does not depend on the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Entry uniform(Entry lo, Entry hi);

 private:
  std::mt19937_64 engine_;
};

/// Dominant left half with entries in [-bound, bound], w chosen so the
/// right half stays in the same range.
PureWeight random_pure(Rng& rng, std::size_t n, Entry bound = 6);
/// Rejection-samples a pair with half-odd kappa whose central point lies in case b or c.
std::pair<PureWeight, PureWeight> random_compatible(Rng& rng, std::size_t n, Entry bound = 6);

struct Spec {
  std::vector<std::string> lemmas;
  std::size_t n_min = 2;
  std::size_t n_max = 4;
  std::size_t samples = 500;
  std::optional<std::uint64_t> seed;
  bool timings = false;
};

/// Lemma ids that draw random instances and so need a seed.
bool is_randomized(const std::string& lemma);
bool is_sweepable(const std::string& lemma);

struct Report {
  json_io::Json doc;
  std::size_t failures = 0;
  std::size_t skipped = 0;
};

Report run(const Spec& spec);

}  // namespace rankin::sweep
