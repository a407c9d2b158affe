#include "nct/io.hpp"

#include <fstream>
#include <sstream>

namespace nct {

json read_json_file(const std::string &path) {
	std::ifstream in(path);
	if (!in)
		throw parse_error("cannot open file: " + path);
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_json_text(buf.str());
}

json parse_json_text(const std::string &text) {
	try {
		return json::parse(text);
	} catch (const nlohmann::json::exception &e) {
		throw parse_error(std::string("invalid JSON: ") + e.what());
	}
}

namespace {

void require_version(const json &j) {
	if (!j.is_object() || !j.contains("version") || !j["version"].is_number_integer() ||
	    j["version"].get<int>() != 1)
		throw parse_error("expected an object with \"version\": 1");
}

int parse_gens(const json &j) {
	if (!j.contains("g") || !j["g"].is_number_integer() || j["g"].get<int>() < 1)
		throw parse_error("\"g\" must be a positive integer");
	return j["g"].get<int>();
}

std::vector<std::int32_t> parse_letter_list(const json &j, const char *what) {
	if (!j.is_array())
		throw parse_error(std::string(what) + " must be an array of integers");
	std::vector<std::int32_t> raw;
	for (const auto &x : j) {
		if (!x.is_number_integer())
			throw parse_error(std::string(what) + " must contain only integers");
		raw.push_back(x.get<std::int32_t>());
	}
	return raw;
}

GroupRingElement parse_element(const json &j, int gens) {
	if (!j.is_array())
		throw parse_error("group-ring element must be an array of terms");
	std::vector<GroupRingElement::Term> terms;
	for (const auto &t : j) {
		if (!t.is_object() || !t.contains("coeff") || !t.contains("word"))
			throw parse_error("term must be an object with \"coeff\" and \"word\"");
		if (!t["coeff"].is_string())
			throw parse_error("\"coeff\" must be a string");
		Rat c = rat_from_string(t["coeff"].get<std::string>());
		std::vector<std::int32_t> raw = parse_letter_list(t["word"], "\"word\"");
		try {
			terms.emplace_back(reduce_word(raw, gens), std::move(c));
		} catch (const precondition_error &e) {
			throw parse_error(e.what()); // out-of-range letter is a schema violation
		}
	}
	return GroupRingElement::from_terms(gens, std::move(terms));
}

json element_to_json(const GroupRingElement &e) {
	json terms = json::array();
	for (const auto &[w, c] : e.terms()) {
		json word = json::array();
		for (std::int32_t letter : w.letters())
			word.push_back(letter);
		terms.push_back(json{{"coeff", rat_to_string(c)}, {"word", std::move(word)}});
	}
	return terms;
}

std::size_t parse_move_index(const json &j, const char *what) {
	if (!j.is_number_integer() || j.get<long>() < 1)
		throw parse_error(std::string(what) + " must be a positive (1-based) integer");
	return static_cast<std::size_t>(j.get<long>()) - 1;
}

int parse_sign(const json &j, const char *what) {
	if (!j.is_number_integer() || (j.get<int>() != 1 && j.get<int>() != -1))
		throw parse_error(std::string(what) + " must be +1 or -1");
	return j.get<int>();
}

} // namespace

LambdaMatrix parse_lambda_matrix(const json &j) {
	require_version(j);
	int gens = parse_gens(j);
	if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long>() < 0)
		throw parse_error("\"n\" must be a nonnegative integer");
	std::size_t n = j["n"].get<std::size_t>();
	if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != n)
		throw parse_error("\"entries\" must be an n x n array");
	LambdaMatrix m(n, gens);
	for (std::size_t i = 0; i < n; ++i) {
		const json &row = j["entries"][i];
		if (!row.is_array() || row.size() != n)
			throw parse_error("\"entries\" must be an n x n array");
		for (std::size_t jj = 0; jj < n; ++jj)
			m.at(i, jj) = parse_element(row[jj], gens);
	}
	return m;
}

json to_json(const LambdaMatrix &m) {
	json entries = json::array();
	for (std::size_t i = 0; i < m.size(); ++i) {
		json row = json::array();
		for (std::size_t j = 0; j < m.size(); ++j)
			row.push_back(element_to_json(m.at(i, j)));
		entries.push_back(std::move(row));
	}
	return json{{"version", 1},
	            {"g", m.gens()},
	            {"n", m.size()},
	            {"entries", std::move(entries)}};
}

IntMatrix parse_seifert_payload(const json &j) {
	require_version(j);
	if (!j.contains("seifert") || !j["seifert"].is_array())
		throw parse_error("\"seifert\" must be a square array of integers");
	std::size_t n = j["seifert"].size();
	IntMatrix m(n);
	for (std::size_t i = 0; i < n; ++i) {
		const json &row = j["seifert"][i];
		if (!row.is_array() || row.size() != n)
			throw parse_error("\"seifert\" must be a square array of integers");
		for (std::size_t k = 0; k < n; ++k) {
			if (!row[k].is_number_integer())
				throw parse_error("\"seifert\" entries must be integers");
			m.at(i, k) = Int(row[k].get<long>());
		}
	}
	return m;
}

json seifert_to_json(const IntMatrix &m) {
	json rows = json::array();
	for (std::size_t i = 0; i < m.size(); ++i) {
		json row = json::array();
		for (std::size_t j = 0; j < m.size(); ++j) {
			if (!m.at(i, j).fits_slong_p())
				throw parse_error("seifert entry too large for the wire format");
			row.push_back(m.at(i, j).get_si());
		}
		rows.push_back(std::move(row));
	}
	return json{{"version", 1}, {"seifert", std::move(rows)}};
}

MoveSequence parse_moves(const json &j, int gens) {
	require_version(j);
	if (!j.contains("moves") || !j["moves"].is_array())
		throw parse_error("\"moves\" must be an array");
	MoveSequence seq;
	for (const auto &mj : j["moves"]) {
		if (!mj.is_object() || mj.size() != 1)
			throw parse_error("each move must be a single-key object");
		if (mj.contains("stabilize")) {
			seq.push_back(Stabilize{parse_sign(mj["stabilize"], "\"stabilize\"")});
		} else if (mj.contains("destabilize")) {
			seq.push_back(Destabilize{parse_move_index(mj["destabilize"], "\"destabilize\"")});
		} else if (mj.contains("elementary")) {
			const json &e = mj["elementary"];
			if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("lambda"))
				throw parse_error("\"elementary\" must have \"i\", \"j\", \"lambda\"");
			ElementaryCongruence ec{parse_move_index(e["i"], "\"i\""),
			                        parse_move_index(e["j"], "\"j\""),
			                        parse_element(e["lambda"], gens)};
			if (ec.i == ec.j)
				throw parse_error("\"elementary\" requires i != j");
			seq.push_back(std::move(ec));
		} else if (mj.contains("diagonal")) {
			const json &d = mj["diagonal"];
			if (!d.is_object() || !d.contains("i") || !d.contains("sign") || !d.contains("word"))
				throw parse_error("\"diagonal\" must have \"i\", \"sign\", \"word\"");
			std::vector<std::int32_t> raw = parse_letter_list(d["word"], "\"word\"");
			try {
				seq.push_back(DiagonalCongruence{parse_move_index(d["i"], "\"i\""),
				                                 parse_sign(d["sign"], "\"sign\""),
				                                 reduce_word(raw, gens)});
			} catch (const precondition_error &e) {
				throw parse_error(e.what());
			}
		} else {
			throw parse_error("unknown move kind");
		}
	}
	return seq;
}

json to_json(const MoveSequence &seq, int gens) {
	(void)gens;
	json moves = json::array();
	for (const Move &m : seq) {
		if (const auto *s = std::get_if<Stabilize>(&m)) {
			moves.push_back(json{{"stabilize", s->sign}});
		} else if (const auto *d = std::get_if<Destabilize>(&m)) {
			moves.push_back(json{{"destabilize", d->index + 1}});
		} else if (const auto *e = std::get_if<ElementaryCongruence>(&m)) {
			moves.push_back(json{{"elementary", json{{"i", e->i + 1},
			                                         {"j", e->j + 1},
			                                         {"lambda", element_to_json(e->lambda)}}}});
		} else {
			const auto &dc = std::get<DiagonalCongruence>(m);
			json word = json::array();
			for (std::int32_t letter : dc.word.letters())
				word.push_back(letter);
			moves.push_back(json{{"diagonal", json{{"i", dc.i + 1},
			                                       {"sign", dc.sign},
			                                       {"word", std::move(word)}}}});
		}
	}
	return json{{"version", 1}, {"moves", std::move(moves)}};
}

json to_json(const CyclicSeries &s) {
	json terms = json::array();
	for (const auto &[m, c] : s.terms()) {
		json cycle = json::array();
		for (std::int32_t letter : m.letters())
			cycle.push_back(letter);
		terms.push_back(json{{"coeff", rat_to_string(c)}, {"cycle", std::move(cycle)}});
	}
	return json{{"order", s.order()}, {"terms", std::move(terms)}};
}

} // namespace nct
