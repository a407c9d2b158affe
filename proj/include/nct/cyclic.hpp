#pragma once

#include "nct/nc_series.hpp"

namespace nct {

// Lexicographically least rotation (Booth); idempotent and invariant under
// rotation of the input.
Monomial necklace_canonical(const Monomial &m);

// Image of a series in the quotient by cyclic permutation of monomials: the
// target group of the chi invariant. An abelian group only — addition, scalar
// multiplication and equality; no product.
class CyclicSeries {
  public:
	using Term = std::pair<Monomial, Rat>;

	CyclicSeries(int gens, int order);

	static CyclicSeries zero(int gens, int order) { return CyclicSeries(gens, order); }
	static CyclicSeries from_terms(int gens, int order, std::vector<Term> terms);

	int gens() const { return gens_; }
	int order() const { return order_; }
	const std::vector<Term> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	CyclicSeries operator-() const;
	friend CyclicSeries operator+(const CyclicSeries &a, const CyclicSeries &b);
	friend CyclicSeries operator-(const CyclicSeries &a, const CyclicSeries &b);
	friend CyclicSeries operator*(const Rat &c, const CyclicSeries &a);
	CyclicSeries &operator+=(const CyclicSeries &b) { return *this = *this + b; }

	// Lift to a plain series on the canonical representatives (the natural
	// section for g=1, where the quotient is the commutative series ring).
	NCSeries as_series() const;

	std::string str() const;

  private:
	friend bool cyc_equal(const CyclicSeries &a, const CyclicSeries &b);
	int gens_;
	int order_;
	std::vector<Term> terms_; // keys necklace-canonical, sorted, no zeros
};

// Equality in the truncated cyclic quotient; throws on mismatched order/gens.
bool cyc_equal(const CyclicSeries &a, const CyclicSeries &b);

inline bool operator==(const CyclicSeries &a, const CyclicSeries &b) { return cyc_equal(a, b); }

// Additive projection: every monomial replaced by its necklace canonical form.
CyclicSeries cyclic_project(const NCSeries &a);

} // namespace nct
