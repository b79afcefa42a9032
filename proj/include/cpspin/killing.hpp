#pragma once

#include <stdexcept>
#include <utility>

#include "cpspin/structures.hpp"

namespace cpspin {

struct DegenerateSpinor : std::domain_error {
  using std::domain_error::domain_error;
};

// nabla_X phi = -1/2 eta(X).phi - 1/2 X.phi + i/2 j(X).phi_bar + i/2 h(X).phi_bar
template <class R> Spinor<R> killing_rhs(const PointConfig<R>& cfg, const TangentVec<R>& X, const Spinor<R>& phi);

// nabla_X phi_bar = -1/2 eta(X).phi_bar + 1/2 X.phi_bar - i/2 j(X).phi - i/2 h(X).phi
template <class R> Spinor<R> nabla_bar_rhs(const PointConfig<R>& cfg, const TangentVec<R>& X, const Spinor<R>& phi);

// The two halves written out:
//   nabla phi^± = -1/2 eta(X).phi^± - 1/2 X.phi^∓ ∓ i/2 j(X).phi^∓ ∓ i/2 h(X).phi^∓
template <class R>
std::pair<Spinor<R>, Spinor<R>> projected_rhs(const PointConfig<R>& cfg, const TangentVec<R>& X, const Spinor<R>& phi);

enum class Order { e1e2, e2e1 };

// k-th group (1..10) of nabla_{e_a} nabla_{e_b} phi; e1e2 means a = 1, b = 2.
template <class R>
Spinor<R> a_term(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, int k, Order order, const Spinor<R>& phi);

// Right-hand side and residual of item (1..8) of the curvature lemma.
template <class R>
Spinor<R> lemma_rhs(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, int item, const Spinor<R>& phi);
template <class R>
Spinor<R> lemma_lhs(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, int item, const Spinor<R>& phi);
template <class R>
Spinor<R> lemma_item(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, int item, const Spinor<R>& phi);

// Item 7 as typeset, with j12 h22 on the last term.
template <class R> Spinor<R> item7_printed_rhs(const PointConfig<R>& cfg, const Spinor<R>& phi);

// The d(eta_c) and commutator identities hold for eta_c = -1/2 eta, not for eta.
template <class R> Spinor<R> eta_c_mul(const PointConfig<R>& cfg, const TangentVec<R>& X, const Spinor<R>& phi);
template <class R> Spinor<R> eta_differential(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, const Spinor<R>& phi);
template <class R> Spinor<R> eta_commutator(const PointConfig<R>& cfg, const Spinor<R>& phi);

// Sign of phi in the contraction sum_i e_i . nabla_{e_i} phi.
inline constexpr int kDiracEpsilon = +1;
inline constexpr int kDiracEpsilonPrinted = -1;

template <class R> Spinor<R> dirac_from_killing(const PointConfig<R>& cfg, const Spinor<R>& phi);
// H.phi + eps phi + i/2 beta.phi_bar + i j12 e1.e2.phi_bar
template <class R> Spinor<R> dirac_closed_form(const PointConfig<R>& cfg, const Spinor<R>& phi, int eps = kDiracEpsilon);

// i e1.e2.phi_bar, which equals i nu1.nu2.phi.
template <class R> Spinor<R> tangent_volume_of_bar(const Spinor<R>& phi);

// <B(X,Y), xi> from phi, with nabla_Y phi replaced by killing_rhs.
// Throws DegenerateSpinor if phi^+ or phi^- vanishes.
template <class R>
R recover_B(const PointConfig<R>& cfg, const Spinor<R>& phi, const TangentVec<R>& X, const TangentVec<R>& Y,
            const NormalVec<R>& xi);
// The typeset recovery formula with its indices read as phi^∓ against xi.phi^±.
template <class R>
R recover_B_printed(const PointConfig<R>& cfg, const Spinor<R>& phi, const TangentVec<R>& X, const TangentVec<R>& Y,
                    const NormalVec<R>& xi);

// X(|phi^+|^2), X(|phi^-|^2) along a solution:
//   2 Re < -1/2 X.phi^∓ ∓ i/2 j(X).phi^∓ ∓ i/2 h(X).phi^∓ , phi^± >
template <class R>
std::pair<R, R> norm_derivative_rhs(const PointConfig<R>& cfg, const TangentVec<R>& X, const Spinor<R>& phi);

}  // namespace cpspin
