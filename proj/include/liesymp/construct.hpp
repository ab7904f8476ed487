#pragma once

#include "liesymp/symplectic.hpp"

namespace liesymp {

// ---- cotangent extensions ---------------------------------------------------

// alpha: 2-cochain Lambda^2(h) -> h*, stored per ordered basis pair
using TwoCochain = std::map<std::pair<int, int>, Vec>; // (i<j) -> h* coords

// Data for an extension of h by its dual: a representation of h on h* and a
// 2-cochain with values in h*.
struct CotangentData {
	LieAlgebra h;
	Module rho;       // action on h* in the dual basis
	TwoCochain alpha; // missing pairs mean zero
};

struct CotangentFlags {
	bool lie = false;     // alpha is a 2-cocycle for rho
	bool bianchi = false; // cyclic pairing sum of alpha vanishes
	bool coborde = false; // pairing compatibility of the action
};

CotangentFlags check_cotangent_conditions(const CotangentData &data);

struct CotangentExtension {
	LieAlgebra g; // on h* (+) h: dual coordinates first
	KForm omega0; // canonical pairing form
	bool is_solution = false;
};

// throws NotACocycle when the lie flag fails
CotangentExtension cotangent_extension(const CotangentData &data);

// canonical pairing 2-form on h* (+) h coordinates
KForm canonical_pairing_form(int half_dim);

// ---- semidirect products and friends ---------------------------------------

// basis: V first (abelian ideal), then h; action[i] = action of the i-th
// h-basis vector on V
LieAlgebra semidirect(const LieAlgebra &h, int v_dim,
                      const std::vector<Mat> &action);

// N extended by one outer generator acting as the derivation D; basis: N
// first, the new generator last
LieAlgebra extension_by_derivation(const LieAlgebra &N, const Mat &D);

LieAlgebra trivial_extension(const LieAlgebra &g); // g (+) R, center line last

// ---- symplectic double extension -------------------------------------------

struct DoubleExtData {
	LieAlgebra B;
	KForm omega_prime; // nondegenerate closed 2-form on B
	Mat delta;         // derivation of B
	Vec z;             // element of B
};

struct DoubleExtension {
	LieAlgebra A; // basis: d, B, e
	KForm omega;  // omega' extended with omega(e,d) = 1
};

// central extension cocycle used: the antisymmetrization
//   c(a,b) = omega'(delta a, b) - omega'(delta b, a)
// (the plain integrand is not alternating for a general derivation);
// Jacobi is validated and failures raise IncompatibleDerivation
DoubleExtension double_extension(const DoubleExtData &data);

struct Reduction {
	LieAlgebra W; // h_perp / h
	KForm omega_reduced;
	std::vector<Vec> section; // lifts of the W basis inside h_perp
};

// pre: h an isotropic ideal; throws NotReducible when h_perp is not an ideal
Reduction symplectic_reduction(const LieAlgebra &g, const KForm &omega,
                               const Subspace &h);

// does 0 -> h_perp -> g -> g/h_perp -> 0 split (complementary subalgebra)?
bool sequence_split_check(const LieAlgebra &g, const KForm &omega,
                          const Subspace &h);

// is the central extension 0 -> h -> h_perp -> h_perp/h -> 0 defined by a
// trivial cocycle class? (h central in h_perp, quotient abelian)
bool central_extension_trivial(const LieAlgebra &g, const KForm &omega,
                               const Subspace &h);

// ---- obstruction families ----------------------------------------------------

LieAlgebra heisenberg(int n); // dim 2n+1
// extension of h_{2n+1} by the derivation diag-block (A, lambda);
// throws NotADerivation unless the block is a derivation
LieAlgebra heisenberg_extension(const Mat &A, const Rational &lambda);
LieAlgebra abelian_semidirect(const std::vector<Rational> &eigs);
LieAlgebra nilpotent_chain(int N);

// ---- lagrangian ideal -> cotangent model ------------------------------------

struct CotangentModel {
	LieAlgebra model; // on h* (+) h
	KForm omega0;
	Mat iso; // g -> model coordinates; pullback of omega0 equals omega
	CotangentData data;
};

// pre: J a lagrangian ideal for omega (throws Error otherwise)
CotangentModel cotangent_model(const LieAlgebra &g, const KForm &omega,
                               const Subspace &J);

} // namespace liesymp
