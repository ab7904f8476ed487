#pragma once

#include "liesymp/exterior.hpp"
#include "liesymp/liealg.hpp"

namespace liesymp {

// Matrix of the Chevalley-Eilenberg differential Lambda^k -> Lambda^{k+1}
// in the multi_indices bases. Convention: (d a)(x,y) = -a([x,y]) in degree
// one, extended as an antiderivation.
struct ChainMap {
	int degree = 0;
	Mat m; // binomial(n,k+1) x binomial(n,k)
};

ChainMap ce_differential(const LieAlgebra &g, int k);

// d of an arbitrary form with Poly coefficients (coefficients are treated
// as constants)
KForm d(const LieAlgebra &g, const KForm &w);

int betti(const LieAlgebra &g, int k);
std::vector<int> betti_vector(const LieAlgebra &g); // b_0 .. b_n

// closed forms of degree k spanning a complement of the exact ones
// (lexicographically smallest echelon choice)
std::vector<KForm> representatives(const LieAlgebra &g, int k);

Subspace closed_forms(const LieAlgebra &g, int k); // in Lambda^k coords
Subspace exact_forms(const LieAlgebra &g, int k);

bool is_closed(const LieAlgebra &g, const KForm &w);
// when exact, *primitive (if non-null) receives eta with d(eta) = w
bool is_exact(const LieAlgebra &g, const KForm &w, KForm *primitive = nullptr);

// ---- cohomology with coefficients ------------------------------------------

// Finite-dimensional module over h: one action matrix per basis vector.
struct Module {
	int dim = 0;
	std::vector<Mat> action; // action[i] = rho(e_{i+1}), dim x dim
};

// throws NotARepresentation unless rho([x,y]) = [rho(x), rho(y)] on basis
// pairs
void validate_representation(const LieAlgebra &h, const Module &m);

// cochain in Lambda^k(h*) (x) M: multi-index -> module coefficient vector
using Cochain = std::map<MultiIndex, Vec>;

struct CoeffCohomology {
	int dim = 0;
	std::vector<Cochain> reps;
};

// cohomology of h with coefficients in the module (standard CE complex
// with action and bracket terms)
CoeffCohomology cohomology_with_coeffs(const LieAlgebra &h, const Module &m,
                                       int k);

// differential on Lambda^k (x) M as a matrix (basis: multi-index major,
// module coordinate minor)
Mat ce_differential_with_coeffs(const LieAlgebra &h, const Module &m, int k);

} // namespace liesymp
