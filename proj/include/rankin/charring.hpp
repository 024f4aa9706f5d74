#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rankin/decomposition.hpp"
#include "rankin/weights.hpp"

namespace rankin {

using BigInt = boost::multiprecision::cpp_int;

/// Weyl dimension formula: prod_{i<j} (l_i - l_j + j - i) / (j - i).
BigInt weyl_dim(const GLWeight& lambda);
/// Sum of mult * weyl_dim over the terms.
BigInt dimension(const Decomposition& d);

/// Full Littlewood-Richardson decomposition of E_lambda (x) E_mu.
///
/// Both weights are twisted by det powers to become partitions, the
/// LR tableaux of every skew shape nu/lambda' with content mu' are counted
/// row by row, and the twist is undone.
Decomposition tensor(const GLWeight& lambda, const GLWeight& mu);
/// Multiplicity of E_nu in E_lambda (x) E_mu (one LR coefficient).
Multiplicity tensor_multiplicity(const GLWeight& lambda, const GLWeight& mu, const GLWeight& nu);

/// Sym^a for a >= 0 is (a,0,...,0); for a < 0 it is (0,...,0,a).
GLWeight sym_power(std::size_t n, Entry a);
/// E_lambda (x) Sym^a, horizontal strips for a >= 0 and the dual picture for a < 0.
Decomposition pieri(const GLWeight& lambda, Entry a);

/// Closed-form multiplicity (0 or 1) of det^d in E_lambda (x) E_mu (x) Sym^a, a >= 0.
int det_mult_grenie(const GLWeight& lambda, const GLWeight& mu, Entry a, Entry d);

/// Highest constituent lambda + mu.
GLWeight cartan(const GLWeight& lambda, const GLWeight& mu);
/// Dominant representative of the extremal weight lambda + w0 mu.
GLWeight prv(const GLWeight& lambda, const GLWeight& mu);

/// Restriction of the GL_n(C) x GL_n(C) irreducible (left; right) to U(n):
/// E_left (x) E_{-w0 right}.
Decomposition restrict_to_K(const GLWeight& left, const GLWeight& right);

/// dim of U(n)-invariants in the tensor product of the listed irreducibles.
Multiplicity invariant_dim(std::span<const GLWeight> weights);
inline Multiplicity invariant_dim(std::initializer_list<GLWeight> weights) {
  return invariant_dim(std::span<const GLWeight>(weights.begin(), weights.size()));
}

/// Enumeration guard for exterior powers: 2^25 unless RANKIN_LAB_MAX_SUBSETS is set.
std::uint64_t max_subsets();
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Exterior power k of the (n^2-1)-dimensional traceless adjoint E_{(1,0,...,0,-1)}.
Decomposition exterior_p(std::size_t n, std::size_t k);
/// exterior_p(n, k) for every k in 0..n^2-1, computed in one subset walk and memoized.
const std::vector<Decomposition>& exterior_ladder(std::size_t n);

/// Multiplicity of target[0] (x) target[1] (x) target[2] (outer) in the k-th
/// exterior power of three copies of the traceless adjoint, via
/// wedge^k(A+B+C) = sum_{a+b+c=k} wedge^a A (x) wedge^b B (x) wedge^c C.
Multiplicity triple_mult(std::size_t n, std::size_t k, const std::array<GLWeight, 3>& target);
/// All constituents of that exterior power, same identity.
TripleDecomposition triple_decompose(std::size_t n, std::size_t k);

}  // namespace rankin
