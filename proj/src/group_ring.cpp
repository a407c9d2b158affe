#include "nct/group_ring.hpp"

#include <algorithm>
#include <sstream>

namespace nct {

Rat rat_from_string(const std::string &s) {
	if (s.empty())
		throw parse_error("empty rational literal");
	mpq_class q;
	if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
		throw parse_error("invalid rational literal: '" + s + "'");
	if (mpz_sgn(q.get_den().get_mpz_t()) == 0)
		throw parse_error("zero denominator in rational literal: '" + s + "'");
	q.canonicalize();
	return q;
}

void require_same_gens(int a, int b, const char *what) {
	if (a != b) {
		std::ostringstream os;
		os << what << ": generator counts differ (" << a << " vs " << b << ")";
		throw precondition_error(os.str());
	}
}

void GroupWord::check_gens(int gens) {
	if (gens < 1)
		throw precondition_error("generator count must be positive");
}

GroupWord::GroupWord(int gens, std::span<const std::int32_t> raw) : gens_(gens) {
	check_gens(gens);
	for (std::int32_t letter : raw) {
		if (letter == 0 || letter > gens || letter < -gens) {
			std::ostringstream os;
			os << "invalid generator index " << letter << " (g=" << gens << ")";
			throw precondition_error(os.str());
		}
		if (!letters_.empty() && letters_.back() == -letter)
			letters_.pop_back();
		else
			letters_.push_back(letter);
	}
}

GroupWord reduce_word(std::span<const std::int32_t> raw, int gens) { return GroupWord(gens, raw); }

GroupWord GroupWord::inverse() const {
	GroupWord r(gens_);
	r.letters_.reserve(letters_.size());
	for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
		r.letters_.push_back(-*it);
	return r;
}

GroupWord operator*(const GroupWord &a, const GroupWord &b) {
	require_same_gens(a.gens_, b.gens_, "word_mul");
	GroupWord r(a.gens_);
	r.letters_ = a.letters_;
	for (std::int32_t letter : b.letters_) {
		if (!r.letters_.empty() && r.letters_.back() == -letter)
			r.letters_.pop_back();
		else
			r.letters_.push_back(letter);
	}
	return r;
}

bool GroupWord::less(const GroupWord &a, const GroupWord &b) {
	if (a.letters_.size() != b.letters_.size())
		return a.letters_.size() < b.letters_.size();
	return std::lexicographical_compare(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
	                                    b.letters_.end());
}

namespace {

// Sort by key, merge equal keys, drop zero coefficients.
void normalize_terms(std::vector<GroupRingElement::Term> &terms) {
	std::sort(terms.begin(), terms.end(),
	          [](const auto &a, const auto &b) { return GroupWord::less(a.first, b.first); });
	std::size_t out = 0;
	for (std::size_t i = 0; i < terms.size();) {
		GroupWord w = terms[i].first;
		Rat c = terms[i].second;
		std::size_t j = i + 1;
		while (j < terms.size() && terms[j].first == w)
			c += terms[j++].second;
		if (c != 0)
			terms[out++] = {std::move(w), std::move(c)};
		i = j;
	}
	terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(out), terms.end());
}

} // namespace

GroupRingElement GroupRingElement::from_terms(int gens, std::vector<Term> terms) {
	GroupRingElement r(gens);
	for (const auto &[w, c] : terms)
		require_same_gens(gens, w.gens(), "group ring term");
	normalize_terms(terms);
	r.terms_ = std::move(terms);
	return r;
}

GroupRingElement GroupRingElement::constant(int gens, Rat c) {
	GroupRingElement r(gens);
	if (c != 0)
		r.terms_.emplace_back(GroupWord(gens), std::move(c));
	return r;
}

GroupRingElement GroupRingElement::generator(int gens, int k) {
	std::int32_t letter = static_cast<std::int32_t>(k);
	return monomial(1, GroupWord(gens, {letter}));
}

GroupRingElement GroupRingElement::monomial(Rat c, GroupWord w) {
	GroupRingElement r(w.gens());
	if (c != 0)
		r.terms_.emplace_back(std::move(w), std::move(c));
	return r;
}

Rat GroupRingElement::constant_term() const {
	for (const auto &[w, c] : terms_)
		if (w.is_identity())
			return c;
	return 0;
}

bool GroupRingElement::is_constant() const {
	return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_identity());
}

bool GroupRingElement::has_integer_coefficients() const {
	return std::all_of(terms_.begin(), terms_.end(),
	                   [](const Term &t) { return is_integer(t.second); });
}

Rat GroupRingElement::augment() const {
	Rat s = 0;
	for (const auto &[w, c] : terms_)
		s += c;
	return s;
}

GroupRingElement GroupRingElement::star() const {
	std::vector<Term> terms;
	terms.reserve(terms_.size());
	for (const auto &[w, c] : terms_)
		terms.emplace_back(w.inverse(), c);
	return from_terms(gens_, std::move(terms));
}

GroupRingElement GroupRingElement::operator-() const {
	GroupRingElement r(gens_);
	r.terms_.reserve(terms_.size());
	for (const auto &[w, c] : terms_)
		r.terms_.emplace_back(w, -c);
	return r;
}

GroupRingElement operator+(const GroupRingElement &a, const GroupRingElement &b) {
	require_same_gens(a.gens_, b.gens_, "group ring add");
	std::vector<GroupRingElement::Term> terms;
	terms.reserve(a.terms_.size() + b.terms_.size());
	// merge of two sorted term lists
	std::size_t i = 0, j = 0;
	while (i < a.terms_.size() && j < b.terms_.size()) {
		if (a.terms_[i].first == b.terms_[j].first) {
			Rat c = a.terms_[i].second + b.terms_[j].second;
			if (c != 0)
				terms.emplace_back(a.terms_[i].first, std::move(c));
			++i, ++j;
		} else if (GroupWord::less(a.terms_[i].first, b.terms_[j].first)) {
			terms.push_back(a.terms_[i++]);
		} else {
			terms.push_back(b.terms_[j++]);
		}
	}
	for (; i < a.terms_.size(); ++i)
		terms.push_back(a.terms_[i]);
	for (; j < b.terms_.size(); ++j)
		terms.push_back(b.terms_[j]);
	GroupRingElement r(a.gens_);
	r.terms_ = std::move(terms);
	return r;
}

GroupRingElement operator-(const GroupRingElement &a, const GroupRingElement &b) { return a + (-b); }

GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b) {
	require_same_gens(a.gens_, b.gens_, "group ring mul");
	std::vector<GroupRingElement::Term> terms;
	terms.reserve(a.terms_.size() * b.terms_.size());
	for (const auto &[wa, ca] : a.terms_)
		for (const auto &[wb, cb] : b.terms_)
			terms.emplace_back(wa * wb, ca * cb);
	return GroupRingElement::from_terms(a.gens_, std::move(terms));
}

GroupRingElement operator*(const Rat &c, const GroupRingElement &a) {
	GroupRingElement r(a.gens_);
	if (c == 0)
		return r;
	r.terms_.reserve(a.terms_.size());
	for (const auto &[w, cw] : a.terms_)
		r.terms_.emplace_back(w, c * cw);
	return r;
}

std::string GroupRingElement::str() const {
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[w, c] : terms_) {
		Rat a = c;
		if (first) {
			if (a < 0) {
				os << "-";
				a = -a;
			}
		} else {
			os << (a < 0 ? " - " : " + ");
			if (a < 0)
				a = -a;
		}
		if (a != 1 || w.is_identity())
			os << rat_to_string(a) << (w.is_identity() ? "" : " ");
		if (!w.is_identity()) {
			bool inner = true;
			for (std::int32_t letter : w.letters()) {
				if (!inner)
					os << ".";
				inner = false;
				os << "t" << (letter > 0 ? letter : -letter);
				if (letter < 0)
					os << "^-1";
			}
		}
		first = false;
	}
	return os.str();
}

} // namespace nct
