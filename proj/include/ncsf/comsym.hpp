#pragma once

// Commutative symmetric functions of degree n <= 6 over Q(q, t), enough to
// check the commutative images of the quasideterminants: bases h, e, p, m, s
// with cached transition matrices, the (1-t)/(1-q) transform, and Macdonald
// P by Gram-Schmidt.

#include <map>
#include <string>
#include <vector>

#include "ncsf/composition.hpp"
#include "ncsf/grassmann.hpp"

namespace ncsf {

using Partition = std::vector<int>;

inline constexpr int kMaxComSymDegree = 6;

/// Reverse lexicographic: (n), (n-1,1), ..., (1^n).
const std::vector<Partition>& partitions_of(int n);
std::string partition_string(const Partition& p);
Partition parse_partition(const std::string& text);
bool dominates(const Partition& a, const Partition& b);
/// Parts of c sorted decreasingly.
Partition sorted_parts(const Composition& c);

enum class SymBasis { h, e, p, m, s };
std::string basis_name(SymBasis b);

struct ComSymElem {
  SymBasis basis = SymBasis::m;
  int n = 0;
  std::map<Partition, RatFunc> coeffs;

  void add(const Partition& p, const RatFunc& c);
  /// "h[3,1]: coeff" lines in reverse lexicographic order.
  std::string to_string() const;
};

ComSymElem basis_element(SymBasis b, const Partition& p);
ComSymElem basis_convert(const ComSymElem& e, SymBasis target);
/// Compares in the m basis.
bool equal(const ComSymElem& a, const ComSymElem& b);
ComSymElem scale(const ComSymElem& e, const RatFunc& c);

/// Coefficient of m_mu in b_lambda (row lambda, column mu, partitions_of order).
const std::vector<std::vector<Rational>>& to_monomial_matrix(SymBasis b, int n);

/// S^J -> h_{j_1} h_{j_2} ...
ComSymElem commutative_image(const SExpansion<MPoly>& e);
ComSymElem commutative_image(const SExpansion<RatFunc>& e);
/// sum_lambda c_lambda h_{lambda_1} h_{lambda_2} ... in the variables h_k.
/// Throws InvalidArgument unless every coefficient is a polynomial.
MPoly as_h_polynomial(const ComSymElem& e);

/// p_lambda -> prod (1 - t^{lambda_i}) / (1 - q^{lambda_i}) p_lambda; result in
/// the p basis.
ComSymElem qt_transform(const ComSymElem& e);

/// z_lambda prod (1 - q^{lambda_i}) / (1 - t^{lambda_i}).
RatFunc qt_norm(const Partition& p);
enum class GramSolve { automatic, primal, dual };
/// Monic in m_lambda, supported on partitions dominated by lambda, orthogonal
/// to every m_mu with mu strictly dominated.  primal solves for the m
/// coefficients directly; dual solves for the p-coordinates of the
/// orthogonality witness, whose system is small when few partitions lie
/// outside the order ideal.  |lambda| <= 5.
ComSymElem macdonald_P(const Partition& lambda, GramSolve how = GramSolve::automatic);

/// prod_{j<=k} (1 - q^j), optionally divided by (1 - q)^k.
MPoly q_factorial(int k, bool divided);

/// transform_q is the transform case with u_i -> q^i instead of 1.
enum class HookMode { macdonald, transform, transform_q };
HookMode parse_hook_mode(const std::string& name);
std::string hook_mode_name(HookMode m);

/// x -> 1, y -> t, q_i -> q^i, a = b = 1, u_i -> t^i (macdonald), 1
/// (transform) or q^i (transform_q).
Substitution hook_specialization(int n, HookMode mode);

/// c_lambda(q, t) = prod over cells (1 - q^{arm} t^{leg + 1}), so that
/// J_lambda = c_lambda P_lambda.
MPoly integral_norm(const Partition& lambda);

struct HookResult {
  int n = 0;
  int k = 0;
  HookMode mode = HookMode::macdonald;
  ComSymElem image;      // m basis
  ComSymElem reference;  // P_{n-k,1^k}, or the transformed Schur function; m basis
  bool proportional = false;
  RatFunc ratio;          // image / reference when proportional
  RatFunc predicted;      // [k]_q! [n-k-1]_q! (1 - q^n), unnormalized factorials
  RatFunc predicted_alt;  // same with [k]_q! = prod (1-q^j)/(1-q)
  bool matches = false;
  bool matches_alt = false;
  bool matches_unit = false;      // ratio 1
  bool matches_integral = false;  // ratio c_lambda(q, t)
};

/// Commutative image of H'_{n-k,1^k} for the factoring family under the
/// hook specialization, against its reference.  n <= 5.
HookResult hook_check(int n, int k, HookMode mode);

}  // namespace ncsf
