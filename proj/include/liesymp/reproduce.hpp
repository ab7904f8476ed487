#pragma once

#include "liesymp/jsonio.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace liesymp {

struct RowResult {
	std::string name;
	bool pass = false;
	std::string detail; // mismatch description when failing
};

struct TableResult {
	std::string table;
	std::vector<RowResult> rows;
	bool all_pass() const
	{
		for (const auto &r : rows)
			if (!r.pass)
				return false;
		return true;
	}
	Json to_json() const;
	std::string text() const; // one PASS/FAIL line per row
};

// the reference tables shipped under data/
TableResult reproduce_simplecticas(const std::filesystem::path &data_dir);
TableResult reproduce_exact(const std::filesystem::path &data_dir);
TableResult reproduce_coho(const std::filesystem::path &data_dir);
TableResult reproduce_cotangent_r2(const std::filesystem::path &data_dir);
TableResult reproduce_cotangent_aff(const std::filesystem::path &data_dir);
TableResult reproduce_ideals(const std::filesystem::path &data_dir);
TableResult reproduce_double_ext(const std::filesystem::path &data_dir);
TableResult reproduce_automorphisms(const std::filesystem::path &data_dir);
TableResult reproduce_obstructions(int n_max);

TableResult reproduce_table(const std::string &name,
                            const std::filesystem::path &data_dir,
                            int grid = 3);

// every catalog entry instantiated on the acceptance parameter grid
std::vector<CatalogId> acceptance_grid();

Json load_json(const std::filesystem::path &file);

} // namespace liesymp
