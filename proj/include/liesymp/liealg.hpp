#pragma once

#include "liesymp/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liesymp {

// Finite-dimensional Lie algebra over Q given by structure constants
// c^k_{ij} for i < j (antisymmetry implicit). The Jacobi identity is checked
// exhaustively at construction.
class LieAlgebra {
public:
	struct Entry {
		int i, j, k; // 1-based, i < j
		Rational c;
	};

	LieAlgebra() = default;
	LieAlgebra(int dim, const std::vector<Entry> &entries,
	           std::vector<std::string> labels = {});

	int dim() const { return n_; }
	const std::vector<std::string> &labels() const { return labels_; }

	// bracket of two coordinate vectors
	Vec bracket(const Vec &x, const Vec &y) const;
	// c^._{ij} as a vector, i < j 1-based
	Vec bracket_basis(int i, int j) const;
	// matrix of ad_x
	Mat ad(const Vec &x) const;
	Mat ad_basis(int i) const;

	std::vector<Entry> entries() const;

	// new algebra with basis f_l = sum_m P(m,l) e_m (P invertible)
	LieAlgebra conjugate(const Mat &P) const;

private:
	int n_ = 0;
	// brackets_[i][j] = coordinates of [e_i, e_j], stored for i < j
	std::vector<std::vector<Vec>> brackets_;
	std::vector<std::string> labels_;
	void check_jacobi() const;
};

LieAlgebra from_structure_constants(int n,
                                    const std::vector<LieAlgebra::Entry> &es);

// ---- catalog of four-dimensional solvable Lie algebras -------------------

enum class Family {
	R4,
	rh3,
	rr3,
	rr3_lam,
	rr3p_gam,
	r2r2,
	r2p,
	n4,
	r4,
	r4_mu,
	r4_ab,
	r4p_gd,
	d4,
	d4_lam,
	d4p_del,
	h4,
};

struct CatalogId {
	Family family;
	std::vector<Rational> params;

	std::string str() const;
	static CatalogId parse(const std::string &s);
	friend bool operator==(const CatalogId &a, const CatalogId &b)
	{
		return a.family == b.family && a.params == b.params;
	}
};

const std::vector<Family> &all_families();
std::string family_name(Family f);
size_t family_param_count(Family f);
// throws InvalidParameter when outside the defining ranges
LieAlgebra catalog(const CatalogId &id);
inline LieAlgebra catalog(Family f, std::vector<Rational> params = {})
{
	return catalog(CatalogId{f, std::move(params)});
}

// ---- structural invariants ------------------------------------------------

Subspace derived_subalgebra(const LieAlgebra &g);
std::vector<Subspace> derived_series(const LieAlgebra &g);
std::vector<Subspace> lower_central_series(const LieAlgebra &g);
Subspace center(const LieAlgebra &g);
bool is_abelian(const LieAlgebra &g);
bool is_nilpotent_algebra(const LieAlgebra &g);
bool is_solvable(const LieAlgebra &g);
bool is_unimodular(const LieAlgebra &g);

// bracket span [A, B]
Subspace bracket_span(const LieAlgebra &g, const Subspace &a,
                      const Subspace &b);
bool is_ideal(const LieAlgebra &g, const Subspace &w);
bool is_subalgebra(const LieAlgebra &g, const Subspace &w);

// solution space of D[x,y] = [Dx,y] + [x,Dy]; basis of n x n matrices
std::vector<Mat> derivations(const LieAlgebra &g);
bool is_derivation(const LieAlgebra &g, const Mat &d);

// largest nilpotent ideal (g must be solvable)
Subspace nilradical(const LieAlgebra &g);

// quotient algebra g/w (w an ideal): returns the algebra on a chosen
// complement basis together with the projection matrix onto the quotient
// coordinates
struct Quotient {
	LieAlgebra algebra;
	std::vector<Vec> section; // lifts of the quotient basis vectors
	Mat projection;           // dim(g/w) x dim(g)
};
Quotient quotient(const LieAlgebra &g, const Subspace &w);

// ---- fingerprint and identification ----------------------------------------

// scale-normalized characteristic polynomial of ad_{e0} restricted to the
// nilradical, e0 a complement generator; only defined when the nilradical
// has codimension 1
struct AdSpectrumKey {
	std::vector<Rational> normalized; // canonical coefficient tuple
	friend bool operator==(const AdSpectrumKey &a, const AdSpectrumKey &b)
	{
		return a.normalized == b.normalized;
	}
};

struct Fingerprint {
	int dim = 0;
	int dim_derived = 0;
	int dim_derived2 = 0;
	int dim_center = 0;
	std::vector<int> dim_lcs; // lower central series dims until stable
	bool unimodular = false;
	std::vector<int> betti; // b_0 .. b_n
	int dim_der = 0;        // derivation algebra dimension
	int nilradical_dim = 0;
	std::optional<AdSpectrumKey> ad_key;

	friend bool operator==(const Fingerprint &a, const Fingerprint &b);
	std::string str() const;
};

Fingerprint fingerprint(const LieAlgebra &g);

struct IdentifyResult {
	enum class Kind { Identified, Unknown, Ambiguous } kind;
	CatalogId id{Family::R4, {}}; // valid when Identified
	std::vector<CatalogId> candidates;
	std::string str() const;
};

// match a 4-dimensional solvable algebra against the catalog by fingerprint
IdentifyResult identify(const LieAlgebra &g);

} // namespace liesymp
