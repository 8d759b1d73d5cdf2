#pragma once

// Row-ordered determinants of almost-triangular matrices with Sym-valued
// entries.  For a scalar almost-triangular W and free generators G,
//   H'(W, G) = rdet [ w_ij G_{j-i+1} ]   (G_0 = 1, zero below the subdiagonal)
// and the quasideterminant H(W, G) = H'(W, G) prod_{i>=2} (-1 / w_{i,i-1}).

#include <cstdint>
#include <vector>

#include "ncsf/composition.hpp"
#include "ncsf/grassmann.hpp"
#include "ncsf/matrix.hpp"

namespace ncsf {

/// Which matrix supplies row i of W(I) when i-1 is a descent of I.
enum class DescentRows { u, v };

struct AlmostTriangularSpec {
  int n = 0;
  Matrix<MPoly> u;
  Matrix<MPoly> v;
  DescentRows descent_rows = DescentRows::u;

  /// Throws InvalidArgument unless both matrices are n x n with zeros below
  /// the subdiagonal.
  void validate() const;
};

/// The pair giving (-1)^{l(I)-1} R_I: U has -1 on and above the subdiagonal
/// below row 1, V only on the subdiagonal; row 1 is all ones.
AlmostTriangularSpec ribbon_pair(int n);
/// u_1j = v_1j = x^j - y^j; u_ij = a q_{i-1} x^{j-i+1} - y^{j-i+1};
/// v_ij = x^{j-i+1} - b u_{n+1-i} y^{j-i+1}  (i > 1, j >= i-1).  Rows from V
/// on descents.
AlmostTriangularSpec factoring_family(int n);
/// Integer entries in [-9, 9] at the almost-triangular positions.
AlmostTriangularSpec random_spec(int n, std::uint64_t seed);

bool is_almost_triangular(const Matrix<MPoly>& m);

/// W(I): row i from the descent matrix when i-1 is in Des(I), else the other.
Matrix<MPoly> assemble_W(const AlmostTriangularSpec& spec, const Composition& c);

/// sigma_I = I^# + (0, 1, ..., n-1); throws Error if not a permutation.
Permutation sigma_I(const Composition& c);
/// (k, 0^{k-1}) per part.
std::vector<int> sharp(const Composition& c);

/// Coefficients of the words G^J in H'(W, G): eps(sigma_J) prod_i w_{i sigma_J(i)}.
SExpansion<MPoly> s_expansion(const Matrix<MPoly>& w);
SExpansion<MPoly> s_expansion(const AlmostTriangularSpec& spec, const Composition& c);
/// Same coefficients by summing over all of S_n in row order (n <= 7).
SExpansion<MPoly> brute_force_rdet(const Matrix<MPoly>& w);

/// sum_J W_J R_J with W_J the product of diagonal-block minors cut by J.
Grassmann<MPoly> r_expansion(const Matrix<MPoly>& w);
Grassmann<MPoly> r_expansion(const AlmostTriangularSpec& spec, const Composition& c);

/// prod_{i>=2} (-w_{i,i-1}); H = H' / this.
MPoly subdiagonal_factor(const Matrix<MPoly>& w);

/// H'(W, G) for generators with the given images G_1..G_n (index 0 unused).
Grassmann<Rational> evaluate_words(const SExpansion<Rational>& words,
                                   const std::vector<Grassmann<Rational>>& generators);

/// The biword rule for the factoring family with a = b = 1 and the garbled
/// boundary index read as u_{n-1}; multiplied by the global (x - y).
/// `corrected` uses (u_{n-1} x - y) and (q_{n-1} x - y) for the boundary
/// letters (1 over 0) at position 1 and (0 over 1) at position n-1.
MPoly biword_coefficient(const Composition& i, const Composition& j, bool corrected = false);

/// Splits p into binomials m1 x - m2 y (m1, m2 monomials in a, b, q_i, u_i)
/// by screened trial division; `rest` receives what is left.
std::vector<MPoly> binomial_factors(const MPoly& p, MPoly& rest);

}  // namespace ncsf
