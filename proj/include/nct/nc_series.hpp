#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nct/group_ring.hpp"

namespace nct {

// Word in the commuting-free variables h_1..h_g (all exponents positive,
// letters unsigned). Degree = length; the empty monomial has degree 0.
class Monomial {
  public:
	explicit Monomial(int gens) : gens_(gens) {}
	Monomial(int gens, std::span<const std::int32_t> letters);
	Monomial(int gens, std::initializer_list<std::int32_t> letters)
	    : Monomial(gens, std::span<const std::int32_t>(letters.begin(), letters.size())) {}

	int gens() const { return gens_; }
	const Letters &letters() const { return letters_; }
	std::size_t degree() const { return letters_.size(); }

	friend Monomial operator*(const Monomial &a, const Monomial &b); // concatenation

	friend bool operator==(const Monomial &a, const Monomial &b) {
		return a.gens_ == b.gens_ && a.letters_ == b.letters_;
	}

	// Degree-then-lexicographic; fixes serialization order.
	static bool less(const Monomial &a, const Monomial &b);

  private:
	friend class NCSeries;
	int gens_;
	Letters letters_;
};

// Truncated formal power series in noncommuting h_1..h_g with exact rational
// coefficients: the working model of the completed group ring. All terms have
// degree <= order; series interoperate only at equal order and gens.
class NCSeries {
  public:
	using Term = std::pair<Monomial, Rat>;

	NCSeries(int gens, int order);

	static NCSeries zero(int gens, int order) { return NCSeries(gens, order); }
	static NCSeries constant(int gens, int order, Rat c);
	static NCSeries generator(int gens, int order, int k); // h_k
	static NCSeries from_terms(int gens, int order, std::vector<Term> terms);

	int gens() const { return gens_; }
	int order() const { return order_; }
	const std::vector<Term> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	Rat constant_term() const;
	Rat coefficient(const Monomial &m) const;

	NCSeries operator-() const;
	friend NCSeries operator+(const NCSeries &a, const NCSeries &b);
	friend NCSeries operator-(const NCSeries &a, const NCSeries &b);
	friend NCSeries operator*(const NCSeries &a, const NCSeries &b);
	friend NCSeries operator*(const Rat &c, const NCSeries &a);
	NCSeries &operator+=(const NCSeries &b) { return *this = *this + b; }
	NCSeries &operator*=(const NCSeries &b) { return *this = *this * b; }

	friend bool operator==(const NCSeries &a, const NCSeries &b) {
		return a.gens_ == b.gens_ && a.order_ == b.order_ && a.terms_ == b.terms_;
	}

	// Geometric-series inverse; requires a nonzero constant term.
	NCSeries inverse() const;

	// Commutative image: letters of every monomial sorted ascending.
	NCSeries abelianized() const;

	std::string str() const;

  private:
	int gens_;
	int order_;
	std::vector<Term> terms_; // sorted by Monomial::less, no zeros
};

// log(1+u) for series with constant term exactly 1; exp(u) for series with
// constant term exactly 0. Mutually inverse modulo the truncation order.
NCSeries log(const NCSeries &a);
NCSeries exp(const NCSeries &a);

// Magnus embedding Q[F] -> Q<<h_1..h_g>>, t_k -> 1 + h_k, truncated at
// `order`. A ring homomorphism modulo degree order+1.
NCSeries magnus_embed(const GroupRingElement &a, int order);
NCSeries magnus_word(const GroupWord &w, int order);

} // namespace nct
