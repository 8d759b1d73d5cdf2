#pragma once

// Bases P_I = K_n(Y_I) and Q_I = L_n(Y^I) built from parameters y_u indexed
// by binary words, and their specializations: the (Q,T) family Ht_I with the
// ribbon-cell alphabet Z(I), and the BZ / HLT sequences.
//
// Every family is described by the image of y_u; the alphabet of I is the
// image of the prefixes of its boolean word, the co-alphabet flips the last
// bit of each prefix.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ncsf/composition.hpp"
#include "ncsf/grassmann.hpp"
#include "ncsf/matrix.hpp"

namespace ncsf {

enum class ParamFamily { generic, qt, bz, hlt };

ParamFamily parse_family(const std::string& name);
std::string family_name(ParamFamily f);

using Alphabet = std::vector<MPoly>;

/// Image of y_u in degree n.
MPoly family_param(ParamFamily f, int n, std::string_view word);

/// Y_I (or its specialization): entry k is the image of y_{u_1..u_k}.
Alphabet alphabet(ParamFamily f, const Composition& c);
/// Y^I: entry k is the image of y_{u_1..u_{k-1} (1-u_k)}.
Alphabet coalphabet(ParamFamily f, const Composition& c);

inline Alphabet y_alphabet(const Composition& c) { return alphabet(ParamFamily::generic, c); }
inline Alphabet y_coalphabet(const Composition& c) { return coalphabet(ParamFamily::generic, c); }

/// Z(I) read off the ribbon diagram: z_{ij} = q_{i,j-1} after a left
/// neighbour, t_{i-1,j} below a cell.
Alphabet z_alphabet(const Composition& c);

/// y_u -> q_{|w|_1+1,|w|_0+1} (u = w0) or t_{|w|_1+1,|w|_0+1} (u = w1), all
/// words of length <= n-1.
Substitution qt_specialization(int n);
/// q_{ij} -> q_{i+j-1}, t_{ij} -> t_{n+1-i-j} for i + j <= n.
Substitution bz_specialization(int n);
/// q_{ij} -> q_j, t_{ij} -> t_i for i + j <= n.
Substitution hlt_specialization(int n);

Grassmann<MPoly> basis_P(ParamFamily f, const Composition& c);
Grassmann<MPoly> basis_Q(ParamFamily f, const Composition& c);

/// Entry (I, J) = coefficient of R_J in P_I, canonical order.  n <= 6.
Matrix<MPoly> kostka_matrix(int n, ParamFamily f);
/// Closed form
///   (-1)^{l(I)-1} prod_{d in Des(bar I~)} y^d(J) prod_p 1/(y^p(J) - y_p(J)).
Matrix<RatFunc> inverse_kostka(int n, ParamFamily f);

/// prod_{i+j<=n} (q_{ij} - t_{ij})^{e(i,j)}, e(i,j) = C(i+j-2, i-1) 2^{n-i-j}.
MPoly det_kostka_formula(int n);
/// prod_k (y^k(I) - y_k(I)) = <Q_I, P_I>.
MPoly pairing_norm(ParamFamily f, const Composition& c);

/// c_{IJ}^K = <L(Y^K), K(Y_I + 1 + Y_J)> / <Q_K, P_K>.
RatFunc product_coefficient(ParamFamily f, const Composition& i, const Composition& j,
                            const Composition& k);
/// Nonzero c_{IJ}^K over all K of size |I| + |J|.  |I| + |J| <= 6.
std::map<Composition, RatFunc> product_in_basis(ParamFamily f, const Composition& i,
                                                const Composition& j);
/// Boolean word of I is a prefix of the boolean word of K.
bool in_product_interval(const Composition& i, const Composition& k);

/// Triangularity specializations: y_w -> 1 for w ending in 1 (lower), or in 0
/// (upper).
enum class Triangular { lower, upper };
Substitution triangular_specialization(int n, Triangular which);
/// S_n = K_n K'_n^{-1} computed by matrix product.
Matrix<RatFunc> triangular_product(int n, Triangular which);
/// s_IJ = prod_k (y_k(I) - y'^k(J)) / (y'_k(J) - y'^k(J)).
RatFunc triangular_entry(Triangular which, const Composition& i, const Composition& j);

}  // namespace ncsf
