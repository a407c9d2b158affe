#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nct/rational.hpp"

namespace nct {

using Letters = boost::container::small_vector<std::int32_t, 16>;

// Reduced word in the free group on generators t_1..t_g. Letter k stands for
// t_k, letter -k for t_k^{-1}; the empty word is the identity. Words are
// reduced on construction and stay reduced, so equality is structural.
class GroupWord {
  public:
	explicit GroupWord(int gens) : gens_(gens) { check_gens(gens); }
	GroupWord(int gens, std::span<const std::int32_t> raw);
	GroupWord(int gens, std::initializer_list<std::int32_t> raw)
	    : GroupWord(gens, std::span<const std::int32_t>(raw.begin(), raw.size())) {}

	int gens() const { return gens_; }
	const Letters &letters() const { return letters_; }
	std::size_t length() const { return letters_.size(); }
	bool is_identity() const { return letters_.empty(); }

	GroupWord inverse() const;
	friend GroupWord operator*(const GroupWord &a, const GroupWord &b);

	friend bool operator==(const GroupWord &a, const GroupWord &b) {
		return a.gens_ == b.gens_ && a.letters_ == b.letters_;
	}

	// Length-then-lexicographic; the canonical key order for ring elements.
	static bool less(const GroupWord &a, const GroupWord &b);

  private:
	static void check_gens(int gens);
	int gens_;
	Letters letters_;
};

// Finite Q-linear combination of reduced words: an element of Q[F] (and of
// Z[F] when all coefficients are integers). Terms are kept sorted in
// GroupWord::less order with no zero coefficients.
class GroupRingElement {
  public:
	using Term = std::pair<GroupWord, Rat>;

	explicit GroupRingElement(int gens) : gens_(gens) {}

	static GroupRingElement zero(int gens) { return GroupRingElement(gens); }
	static GroupRingElement constant(int gens, Rat c);
	static GroupRingElement generator(int gens, int k); // t_k
	static GroupRingElement monomial(Rat c, GroupWord w);
	static GroupRingElement from_terms(int gens, std::vector<Term> terms);

	int gens() const { return gens_; }
	const std::vector<Term> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	// Constant coefficient (of the identity word).
	Rat constant_term() const;
	bool is_constant() const;
	bool has_integer_coefficients() const;

	Rat augment() const; // epsilon: sum of all coefficients
	GroupRingElement star() const;

	GroupRingElement operator-() const;
	friend GroupRingElement operator+(const GroupRingElement &a, const GroupRingElement &b);
	friend GroupRingElement operator-(const GroupRingElement &a, const GroupRingElement &b);
	friend GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b);
	friend GroupRingElement operator*(const Rat &c, const GroupRingElement &a);
	GroupRingElement &operator+=(const GroupRingElement &b) { return *this = *this + b; }

	friend bool operator==(const GroupRingElement &a, const GroupRingElement &b) {
		return a.gens_ == b.gens_ && a.terms_ == b.terms_;
	}

	std::string str() const; // debug / human-readable form

  private:
	int gens_;
	std::vector<Term> terms_;
};

// Free reduction of a raw letter sequence; throws precondition_error on a
// zero letter or one out of range.
GroupWord reduce_word(std::span<const std::int32_t> raw, int gens);

void require_same_gens(int a, int b, const char *what);

} // namespace nct
