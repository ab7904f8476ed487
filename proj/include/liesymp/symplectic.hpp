#pragma once

#include "liesymp/cecoh.hpp"

#include <optional>

namespace liesymp {

// Basis of the closed 2-forms together with a generic member
// sum t_i beta_i in fresh polynomial variables t1..tm.
struct ClosedFormSpace {
	int ambient = 0;
	std::vector<KForm> basis; // constant coefficients, echelon order
	KForm generic;            // Poly coefficients in vars
	std::vector<std::string> vars;
};

ClosedFormSpace closed_two_forms(const LieAlgebra &g);

// Pfaffian of a 2-form on an even-dimensional space: the coefficient of the
// volume form in w^(n/2) / (n/2)!. Nonvanishing <=> maximal rank.
Poly pfaffian(const KForm &two_form);

// Pfaffian of sum name_i * beta_i for a named spanning set
Poly pfaffian_of_span(int ambient, const std::vector<KForm> &basis,
                      const std::vector<std::string> &names);

// Pfaffian of the generic closed 2-form, in the t-variables of
// closed_two_forms(g)
Poly pfaffian_on_closed(const LieAlgebra &g);

struct SymplecticWitness {
	KForm form;              // closed, constant coefficients
	Rational pfaffian_value; // nonzero
};

struct SymplecticResult {
	bool symplectic = false;
	Poly pfaffian; // on the relevant form space
	std::optional<SymplecticWitness> witness;
};

// existence of a symplectic structure: the Pfaffian polynomial on the
// closed 2-forms is not identically zero; a rational witness is located by
// scanning small integer coefficient grids
SymplecticResult admits_symplectic(const LieAlgebra &g);

// same decision restricted to the exact 2-forms
SymplecticResult exact_symplectic(const LieAlgebra &g);

// orthogonal complement with respect to a nondegenerate constant 2-form
Subspace omega_orthogonal(const LieAlgebra &g, const KForm &omega,
                          const Subspace &w);

Rational form_value(const KForm &omega, const Vec &x, const Vec &y);

struct IdealReport {
	Subspace ideal;
	bool isotropic = false;
	bool lagrangian = false;
	bool perp_is_ideal = false;
	bool abelian = false;
};

// characteristic-subspace candidates (center, derived and lower-central
// terms, sums/intersections, eigenspace-generated ideals) classified
// against a symplectic form
std::vector<IdealReport> isotropic_ideals(const LieAlgebra &g,
                                          const KForm &omega);

// exhaustive enumeration of the two-dimensional ideals of a 4-dimensional
// algebra (finite in the supported eigenstructure cases; throws Error if
// the invariant-subspace family is not finite)
std::vector<Subspace> two_dim_ideals(const LieAlgebra &g);

// certifies that no two-dimensional ideal is isotropic for any
// nondegenerate member of the closed-form space (dim 4)
bool no_lagrangian_ideal(const LieAlgebra &g);

// (sigma^* w)(x, y, ...) = w(sigma x, sigma y, ...)
KForm pullback(const Mat &sigma, const KForm &omega);

bool is_automorphism(const LieAlgebra &g, const Mat &sigma);
// sigma[x,y]_a = [sigma x, sigma y]_b with sigma invertible
bool is_isomorphism(const LieAlgebra &a, const LieAlgebra &b,
                    const Mat &sigma);

} // namespace liesymp
