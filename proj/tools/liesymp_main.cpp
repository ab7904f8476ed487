#include "liesymp/reproduce.hpp"

#include "liesymp/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace liesymp;

namespace {

int exit_code_for(const std::exception &e)
{
	if (dynamic_cast<const NotALieAlgebra *>(&e))
		return 3;
	return 2;
}

Json analyze_algebra(const LieAlgebra &g)
{
	Json out;
	out["dim"] = g.dim();
	out["algebra"] = algebra_to_json(g);
	Fingerprint fp = fingerprint(g);
	out["fingerprint"] = fingerprint_to_json(fp);
	out["betti"] = fp.betti;
	if (g.dim() == 4) {
		out["identify"] = identify(g).str();
	}
	if (g.dim() % 2 == 0) {
		auto sym = admits_symplectic(g);
		out["symplectic"] = sym.symplectic;
		out["pfaffian"] = sym.pfaffian.str();
		if (sym.witness) {
			out["witness"] = form_to_json(sym.witness->form);
			out["witness_pfaffian"] = sym.witness->pfaffian_value.str();
		}
		auto ex = exact_symplectic(g);
		out["exact_symplectic"] = ex.symplectic;
		if (ex.witness)
			out["exact_witness"] = form_to_json(ex.witness->form);
	}
	return out;
}

Json ideal_reports_json(const LieAlgebra &g, const KForm &omega)
{
	Json arr = Json::array();
	for (const auto &rep : isotropic_ideals(g, omega)) {
		Json r;
		r["ideal"] = subspace_to_json(rep.ideal);
		r["dim"] = rep.ideal.dim();
		r["isotropic"] = rep.isotropic;
		r["lagrangian"] = rep.lagrangian;
		r["perp_is_ideal"] = rep.perp_is_ideal;
		r["abelian"] = rep.abelian;
		arr.push_back(r);
	}
	return arr;
}

void emit(const Json &j, bool as_json)
{
	if (as_json) {
		std::cout << j.dump(2) << "\n";
		return;
	}
	std::cout << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact computations with finite-dimensional Lie algebras: "
	             "closed 2-forms, symplectic structures, cohomology, "
	             "extensions"};
	app.require_subcommand(1);
	bool as_json = false;
	app.add_flag("--json", as_json, "JSON output");

	// catalog
	auto *cat = app.add_subcommand("catalog", "built-in catalog of "
	                                          "4-dimensional solvable "
	                                          "Lie algebras");
	auto *cat_list = cat->add_subcommand("list", "list family names");
	std::string show_id;
	auto *cat_show = cat->add_subcommand("show", "print the bracket table");
	cat_show->add_option("id", show_id, "catalog id, e.g. d4_lam:3/4")
	    ->required();

	// cohomology
	std::string coh_id;
	auto *coh = app.add_subcommand("cohomology",
	                               "Betti numbers and representatives");
	coh->add_option("id", coh_id)->required();

	// symplectic
	std::string sym_id;
	bool want_witness = false, want_exact = false, want_ideals = false;
	auto *sym = app.add_subcommand("symplectic",
	                               "symplectic existence and witnesses");
	sym->add_option("id", sym_id)->required();
	sym->add_flag("--witness", want_witness);
	sym->add_flag("--exact", want_exact);
	sym->add_flag("--ideals", want_ideals);

	// analyze
	std::string analyze_file;
	auto *ana = app.add_subcommand("analyze", "full analysis of a "
	                                          "structure-constant file");
	ana->add_option("file", analyze_file, "JSON file ('-' for stdin)")
	    ->required();

	// construct
	auto *con = app.add_subcommand("construct", "builders");
	std::string ct_h = "R2", ct_rho, ct_alpha;
	auto *ct = con->add_subcommand("cotangent", "extension of h by h*");
	ct->add_option("--h", ct_h, "R2 or aff");
	ct->add_option("--rho", ct_rho,
	               "JSON [rho_x rows, rho_y rows] for the dual action")
	    ->required();
	ct->add_option("--alpha", ct_alpha, "JSON [c1, c2] cochain values");
	std::string de_B = "R2", de_omega, de_delta, de_z;
	auto *de = con->add_subcommand("double-ext", "symplectic double "
	                                             "extension by R");
	de->add_option("--B", de_B, "R2 or aff");
	de->add_option("--omega", de_omega, "2-form JSON on B")->required();
	de->add_option("--delta", de_delta, "derivation rows")->required();
	de->add_option("--z", de_z, "vector in B")->required();

	// reproduce
	std::string table;
	std::string data_dir = "data";
	int grid = 3;
	auto *rep = app.add_subcommand("reproduce", "recompute a reference "
	                                            "table and diff");
	rep->add_option("table", table,
	                "simplecticas|exact|coho|cotangent-r2|cotangent-aff|"
	                "ideals|double-ext|automorphisms|obstructions|all")
	    ->required();
	rep->add_option("--data", data_dir, "data directory");
	rep->add_option("--grid", grid, "obstruction family size bound");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	try {
		if (*cat_list) {
			Json j = Json::array();
			for (Family f : all_families())
				j.push_back(family_name(f));
			emit(j, as_json);
			return 0;
		}
		if (*cat_show) {
			LieAlgebra g = catalog(CatalogId::parse(show_id));
			Json j;
			j["id"] = show_id;
			j["algebra"] = algebra_to_json(g);
			emit(j, as_json);
			return 0;
		}
		if (*coh) {
			LieAlgebra g = catalog(CatalogId::parse(coh_id));
			Json j;
			j["algebra"] = coh_id;
			j["betti"] = betti_vector(g);
			Json reps = Json::array();
			for (int k = 0; k <= g.dim(); ++k) {
				Json level = Json::array();
				for (const auto &w : representatives(g, k))
					level.push_back(form_to_json(w));
				reps.push_back(level);
			}
			j["representatives"] = reps;
			emit(j, as_json);
			return 0;
		}
		if (*sym) {
			LieAlgebra g = catalog(CatalogId::parse(sym_id));
			Json j;
			j["algebra"] = sym_id;
			auto res = admits_symplectic(g);
			j["symplectic"] = res.symplectic;
			j["pfaffian"] = res.pfaffian.str();
			if (want_witness && res.witness) {
				j["witness"] = form_to_json(res.witness->form);
				j["witness_pfaffian"] = res.witness->pfaffian_value.str();
			}
			if (want_exact) {
				auto ex = exact_symplectic(g);
				j["exact_symplectic"] = ex.symplectic;
				if (ex.witness)
					j["exact_witness"] = form_to_json(ex.witness->form);
			}
			if (want_ideals && res.witness)
				j["ideals"] = ideal_reports_json(g, res.witness->form);
			emit(j, as_json);
			return 0;
		}
		if (*ana) {
			Json input;
			if (analyze_file == "-") {
				std::cin >> input;
			} else {
				std::ifstream in(analyze_file);
				if (!in)
					throw ParseError("cannot open '" + analyze_file + "'");
				in >> input;
			}
			LieAlgebra g = algebra_from_json(input);
			emit(analyze_algebra(g), as_json);
			return 0;
		}
		if (*ct) {
			CotangentData data;
			data.h = ct_h == "aff"
			             ? LieAlgebra(2, {{1, 2, 2, Rational(1)}})
			             : LieAlgebra(2, {});
			Json rho = Json::parse(ct_rho);
			data.rho.dim = 2;
			data.rho.action.push_back(mat_from_json(rho.at(0), {}));
			data.rho.action.push_back(mat_from_json(rho.at(1), {}));
			if (!ct_alpha.empty())
				data.alpha[{1, 2}] =
				    vec_from_json(Json::parse(ct_alpha), {});
			auto flags = check_cotangent_conditions(data);
			Json j;
			j["lie"] = flags.lie;
			j["bianchi"] = flags.bianchi;
			j["coborde"] = flags.coborde;
			if (flags.lie) {
				auto ext = cotangent_extension(data);
				j["algebra"] = algebra_to_json(ext.g);
				j["omega0"] = form_to_json(ext.omega0);
				j["is_solution"] = ext.is_solution;
				j["identify"] = identify(ext.g).str();
			}
			emit(j, as_json);
			return 0;
		}
		if (*de) {
			DoubleExtData data;
			data.B = de_B == "aff"
			             ? LieAlgebra(2, {{1, 2, 2, Rational(1)}})
			             : LieAlgebra(2, {});
			data.omega_prime =
			    form_from_json(2, data.B.dim(), Json::parse(de_omega), {});
			data.delta = mat_from_json(Json::parse(de_delta), {});
			data.z = vec_from_json(Json::parse(de_z), {});
			auto ext = double_extension(data);
			Json j;
			j["algebra"] = algebra_to_json(ext.A);
			j["omega"] = form_to_json(ext.omega);
			if (ext.A.dim() == 4)
				j["identify"] = identify(ext.A).str();
			emit(j, as_json);
			return 0;
		}
		if (*rep) {
			std::vector<std::string> names;
			if (table == "all")
				names = {"simplecticas", "exact",        "coho",
				         "cotangent-r2", "cotangent-aff", "ideals",
				         "double-ext",   "automorphisms", "obstructions"};
			else
				names = {table};
			bool all_ok = true;
			Json out = Json::array();
			for (const auto &name : names) {
				TableResult t = reproduce_table(name, data_dir, grid);
				all_ok = all_ok && t.all_pass();
				if (as_json)
					out.push_back(t.to_json());
				else
					std::cout << t.text();
			}
			if (as_json)
				std::cout << out.dump(2) << "\n";
			return all_ok ? 0 : 1;
		}
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return exit_code_for(e);
	}
	return 2;
}
