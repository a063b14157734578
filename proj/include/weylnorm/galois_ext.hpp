#pragma once

#include <cstddef>
#include <vector>

#include "weylnorm/chevalley.hpp"
#include "weylnorm/group_element.hpp"
#include "weylnorm/report.hpp"
#include "weylnorm/tits.hpp"

namespace weylnorm {

/// sigma[i] = (exp(i pi (e_i+f_i)/2), 1), sigma_bar[i] = (exp(-i pi (e_i+f_i)/2), 1),
/// xi[i] = (exp(i pi h_i), 0).
struct UnitaryLifts {
  std::vector<GroupElement> sigma;
  std::vector<GroupElement> sigma_bar;
  std::vector<GroupElement> xi;

  int rank() const { return static_cast<int>(sigma.size()); }
};

/// Rational Hermitian form H, positive definite and block diagonal on weight
/// spaces, with e_i^T H = H f_i and f_i^T H = H e_i for all i, scaled so the
/// first diagonal entry is 1. The compact form is then {g : sigma(g)^T H g = H};
/// H is the identity when the basis is orthonormal for it. Throws
/// ConsistencyError if no such form exists.
ExactMatrix invariant_hermitian_form(const Representation& rep);

/// Builds sigma_i as exp(-i pi h_i/4) sdot_i exp(i pi h_i/4) gamma and
/// cross-checks the linear part against Lagrange interpolation of
/// exp(i pi (e_i+f_i)/2). Throws ConsistencyError on disagreement.
UnitaryLifts make_unitary_lifts(const Representation& rep, const TitsElements& t);

/// Defining relations of W^U, the consequences sigma/eta conjugation,
/// eta_i^2 = 1, commuting eta's, the a = 0 completion and the length-3
/// identity for a_ij in {-1, -3}, and the rank-two chains by pair class.
VerificationReport verify_wu_presentation(const Representation& rep, const UnitaryLifts& u,
                                          unsigned threads = 1);

/// sigma_i^2 = 1, the gamma-twisted braid identities by pair class and the
/// auxiliary identities used in their derivation.
VerificationReport verify_section6_lemmas(const Representation& rep, const UnitaryLifts& u,
                                          unsigned threads = 1);

/// zeta_i = xi_i, and both are real, diagonal and square to the identity.
VerificationReport verify_m_intersection(const Representation& rep, const TitsElements& t,
                                         const UnitaryLifts& u, unsigned threads = 1);

/// Enumerates the image of W^U generated by sigma_i, sigma_bar_i and checks
/// that it maps onto W with kernel the subgroup generated by the xi_i.
/// Entries are skipped when the estimated order exceeds `cap`.
VerificationReport verify_extension_quotient(const Representation& rep, const UnitaryLifts& u,
                                             std::size_t cap = kDefaultEnumerationCap,
                                             unsigned threads = 1);

}  // namespace weylnorm
