#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "nct/io.hpp"

namespace {

using namespace nct;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInvariant = 3;

void print_cyclic(const CyclicSeries &s, const std::string &label) {
	std::cout << to_json(s).dump() << "\n";
	std::cout << label << " = " << s.str() << "\n";
}

int run_chi(const std::string &path, int order, bool permissive) {
	LambdaMatrix m = parse_lambda_matrix(read_json_file(path));
	CyclicSeries s =
	    chi(m, order, permissive ? AugmentPolicy::permissive : AugmentPolicy::strict);
	print_cyclic(s, "chi");
	return kExitOk;
}

int run_chi_delta(const std::string &path, int order) {
	SeifertMatrix a = validate_seifert(parse_seifert_payload(read_json_file(path)));
	print_cyclic(chi_delta(a, order), "chi_delta");
	return kExitOk;
}

int run_alexander(const std::string &path) {
	SeifertMatrix a = validate_seifert(parse_seifert_payload(read_json_file(path)));
	std::cout << alexander(a).str() << "\n";
	return kExitOk;
}

int run_compare_pathways(const std::string &path, int order) {
	SeifertMatrix a = validate_seifert(parse_seifert_payload(read_json_file(path)));
	PathwayReport r = compare_pathways(a, order);
	std::cout << "chi(W)    " << to_json(r.chi_W).dump() << "\n";
	std::cout << "chi(I-BL) " << to_json(r.chi_IBL).dump() << "\n";
	std::cout << "chi(I+XZ) " << to_json(r.chi_IXZ).dump() << "\n";
	std::cout << "structural identity: " << (r.structural_identity ? "ok" : "FAILED") << "\n";
	std::cout << "pathways: " << (r.pathways_equal ? "equal" : "MISMATCH") << "\n";
	if (!r.pathways_equal || !r.structural_identity)
		return kExitInvariant;
	return kExitOk;
}

int run_apply_moves(const std::string &matrix_path, const std::string &moves_path) {
	LambdaMatrix m = parse_lambda_matrix(read_json_file(matrix_path));
	MoveSequence seq = parse_moves(read_json_file(moves_path), m.gens());
	std::cout << to_json(apply_moves(m, seq)).dump() << "\n";
	return kExitOk;
}

int run_fuzz_moves(const std::string &path, std::uint64_t seed, int count, int length,
                   int max_word_len, int order) {
	LambdaMatrix start = parse_lambda_matrix(read_json_file(path));
	CyclicSeries expected = chi(start, order);
	int ok = 0;
	for (int trial = 0; trial < count; ++trial) {
		MoveSequence seq = random_move_sequence(start, seed + static_cast<std::uint64_t>(trial),
		                                        length, max_word_len);
		CyclicSeries got = chi(apply_moves(start, seq), order);
		if (cyc_equal(expected, got))
			++ok;
		else
			std::cerr << "trial " << trial << " (seed " << seed + trial << "): chi changed\n";
	}
	std::cout << ok << "/" << count << " invariant\n";
	return ok == count ? kExitOk : kExitInvariant;
}

int run_check(const std::string &path) {
	json j = read_json_file(path);
	if (j.is_object() && j.contains("seifert")) {
		IntMatrix m = parse_seifert_payload(j);
		try {
			validate_seifert(m);
		} catch (const precondition_error &e) {
			std::cout << "seifert basis: invalid (" << e.what() << ")\n";
			return kExitPrecondition;
		}
		std::cout << "seifert basis: valid\n";
		return kExitOk;
	}
	LambdaMatrix m = parse_lambda_matrix(j);
	bool hermitian = m.is_hermitian();
	RatMatrix eps = m.augment();
	bool integral = eps.is_integer();
	bool unimod = integral && unimodular(eps.to_int());
	std::cout << "hermitian: " << (hermitian ? "yes" : "no") << "\n";
	std::cout << "integer augmentation: " << (integral ? "yes" : "no") << "\n";
	std::cout << "unimodular: " << (unimod ? "yes" : "no") << "\n";
	return (hermitian && unimod) ? kExitOk : kExitPrecondition;
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"exact noncommutative Alexander invariant of boundary links"};
	app.require_subcommand(1);

	int order = 8;
	bool permissive = false;
	std::string input, moves_file;
	std::uint64_t seed = 0;
	int count = 100, length = 10, max_word_len = 2;

	auto add_order = [&order](CLI::App *cmd) {
		cmd->add_option("--order", order, "truncation order")->check(CLI::PositiveNumber);
	};

	CLI::App *chi_cmd = app.add_subcommand("chi", "chi of a group-ring matrix");
	add_order(chi_cmd);
	chi_cmd->add_flag("--permissive-augmentation", permissive,
	                  "accept any Q-invertible augmentation (internal identities only)");
	chi_cmd->add_option("input", input, "lambda-matrix JSON file")->required();

	CLI::App *delta_cmd = app.add_subcommand("chi-delta", "chi of a Seifert matrix via I + XZ");
	add_order(delta_cmd);
	delta_cmd->add_option("input", input, "seifert-matrix JSON file")->required();

	CLI::App *alex_cmd = app.add_subcommand("alexander", "Alexander polynomial det(tA - A')");
	alex_cmd->add_option("input", input, "seifert-matrix JSON file")->required();

	CLI::App *cmp_cmd =
	    app.add_subcommand("compare-pathways", "chi(W), chi(I-BL), chi(I+XZ) and block identity");
	add_order(cmp_cmd);
	cmp_cmd->add_option("input", input, "seifert-matrix JSON file")->required();

	CLI::App *apply_cmd = app.add_subcommand("apply-moves", "apply a congruence move sequence");
	apply_cmd->add_option("input", input, "lambda-matrix JSON file")->required();
	apply_cmd->add_option("moves", moves_file, "move-sequence JSON file")->required();

	CLI::App *fuzz_cmd =
	    app.add_subcommand("fuzz-moves", "seeded random move sequences; checks chi invariance");
	add_order(fuzz_cmd);
	fuzz_cmd->add_option("--seed", seed, "base seed");
	fuzz_cmd->add_option("--count", count, "number of sequences")->check(CLI::PositiveNumber);
	fuzz_cmd->add_option("--length", length, "moves per sequence")->check(CLI::NonNegativeNumber);
	fuzz_cmd->add_option("--max-word-len", max_word_len, "word length bound in generated moves")
	    ->check(CLI::NonNegativeNumber);
	fuzz_cmd->add_option("input", input, "lambda-matrix JSON file")->required();

	CLI::App *check_cmd =
	    app.add_subcommand("check", "Hermitian/unimodularity report (or Seifert basis check)");
	check_cmd->add_option("input", input, "lambda-matrix or seifert-matrix JSON file")->required();

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		std::cerr << e.what() << "\n";
		return kExitParse;
	}

	try {
		if (chi_cmd->parsed())
			return run_chi(input, order, permissive);
		if (delta_cmd->parsed())
			return run_chi_delta(input, order);
		if (alex_cmd->parsed())
			return run_alexander(input);
		if (cmp_cmd->parsed())
			return run_compare_pathways(input, order);
		if (apply_cmd->parsed())
			return run_apply_moves(input, moves_file);
		if (fuzz_cmd->parsed())
			return run_fuzz_moves(input, seed, count, length, max_word_len, order);
		if (check_cmd->parsed())
			return run_check(input);
	} catch (const parse_error &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitParse;
	} catch (const precondition_error &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitPrecondition;
	} catch (const std::exception &e) {
		std::cerr << "internal error: " << e.what() << "\n";
		return kExitInvariant;
	}
	return kExitOk;
}
