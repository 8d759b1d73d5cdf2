#pragma once

// The multiparameter BZ nabla operator, defined by
//   nabla Ht_I = (prod_d z_d(I)) Ht_I
// on the BZ specialization Ht_I, extended linearly.  Everything else here
// (packed-word sums, closed forms) is a claim to be compared against it.

#include <vector>

#include "ncsf/composition.hpp"
#include "ncsf/grassmann.hpp"
#include "ncsf/matrix.hpp"

namespace ncsf {

class NablaContext {
 public:
  /// Builds the BZ Kostka matrix and its inverse and checks K K^{-1} = 1.
  explicit NablaContext(int n);

  int degree() const { return n_; }
  const std::vector<Composition>& compositions() const { return comps_; }
  const Matrix<MPoly>& kostka() const { return k_; }
  const Matrix<RatFunc>& inverse() const { return kinv_; }
  const MPoly& eigenvalue(std::size_t index) const { return eig_[index]; }

 private:
  int n_;
  std::vector<Composition> comps_;
  Matrix<MPoly> k_;
  Matrix<RatFunc> kinv_;
  std::vector<MPoly> eig_;
};

/// prod_d z_d(I) under the BZ specialization.
MPoly nabla_eigenvalue(const Composition& c);

/// nabla R_I through R -> Ht -> scale -> R.  Coefficients are polynomials.
Grassmann<MPoly> nabla_ribbon(const NablaContext& ctx, const Composition& c);
/// nabla of an arbitrary eta-side element.
Grassmann<MPoly> nabla(const NablaContext& ctx, const Grassmann<MPoly>& f);

/// phi(w) = prod_{i in Des(sigma_w^{-1})} x_i with x_i = q_i if the sorted word
/// has a repeated letter at i, i+1 and t_{n-i} otherwise.
MPoly phi_statistic(const PackedWord& w);
/// Descent set of sigma_w^{-1}.
std::vector<int> recoils(const PackedWord& w);

/// sum over packed words w with ev(w) <= I of weight(w) / d_C R_C,
/// C = C(sigma_w^{-1}); weight is phi(w) or 1.  I = (1^n) sums over all words.
Grassmann<MPoly> packed_word_expansion(const Composition& c, bool with_phi);

/// sum_J prod_{j in Des J} (q_j + t_{n-j}) R_J.
Grassmann<MPoly> nabla_lambda_closed_form(int n);

/// Index conventions for the closed forms; all false is the literal reading.
struct NablaVariant {
  bool q_mirror = false;  // q_{n-d} instead of q_d in the prefactor
  bool t_mirror = false;  // t_{n-d} instead of t_d in the prefactor
  bool swapped = false;   // q_i + t_{n-i} instead of t_i + q_{n-i}
};

/// Closed form for nabla R_I:
///   (-1)^{|I|+l(I)} prod_{Des(I~)} q_d prod_{Des(bar I~)} t_d
///   sum_{J >= bar I~} prod_{i in Des I cap Des J} (t_i + q_{n-i}) R_J
Grassmann<MPoly> nabla_ribbon_closed_form(const Composition& c, NablaVariant v = {});

/// theta = prod_{d in Des(bar I~)} t_d (t_{n-d} when mirrored).
MPoly nabla_theta(const Composition& c, bool mirrored = false);

/// W_n = sum_w phi(w).
MPoly w_statistic_polynomial(int n);

/// [R_I, R_J] = (-1)^{|I|+l(I)} delta_{I, bar J~}, extended bilinearly.
MPoly bz_bracket(const Grassmann<MPoly>& f, const Grassmann<MPoly>& g);

}  // namespace ncsf
