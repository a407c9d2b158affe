#pragma once

#include <string>
#include <vector>

#include "nct/matrices.hpp"

namespace nct {

// Dense polynomial over Z in one variable t, coefficients indexed by degree.
// Used for the classical Alexander polynomial det(tA - A') and as the
// independent oracle for the abelianized exp(chi) law.
class IntPoly {
  public:
	IntPoly() = default;
	IntPoly(std::initializer_list<long> coeffs);
	static IntPoly constant(Int c);
	static IntPoly variable(); // t

	const std::vector<Int> &coeffs() const { return coeffs_; }
	bool is_zero() const { return coeffs_.empty(); }
	int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
	Int coefficient(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Int(0); }

	IntPoly operator-() const;
	friend IntPoly operator+(const IntPoly &a, const IntPoly &b);
	friend IntPoly operator-(const IntPoly &a, const IntPoly &b);
	friend IntPoly operator*(const IntPoly &a, const IntPoly &b);
	friend bool operator==(const IntPoly &a, const IntPoly &b) = default;

	// Exact quotient; throws invariant_error if the division is not exact
	// (Bareiss pivots always divide exactly).
	static IntPoly divexact(const IntPoly &num, const IntPoly &den);

	Int eval_int(const Int &t) const;
	// Substitution t -> 1 + h truncated at `order`: the abelian comparison
	// target for the chi pipeline.
	NCSeries eval_one_plus_h(int order) const;

	std::string str() const; // "t^2 - t + 1"

  private:
	void trim();
	std::vector<Int> coeffs_;
};

// Determinant of a square polynomial matrix by fraction-free elimination.
IntPoly poly_determinant(std::vector<std::vector<IntPoly>> m);

// Integer Seifert matrix in the alternating band basis: A - A' equals the
// standard symplectic block [[0, I], [-I, 0]].
struct SeifertMatrix {
	IntMatrix entries;
	std::size_t genus;
};

SeifertMatrix validate_seifert(const IntMatrix &a);

// Z = A (A - A')^{-1}, exact.
RatMatrix compute_Z(const SeifertMatrix &a);

// The surgery matrix W = [[L, I], [I, B]] over Z[t, t^{-1}] built from the
// band linking matrix L = A - [[0, I], [0, 0]], with B = [[0, xI], [x̄I, 0]],
// x = t - 1, x̄ = t^{-1} - 1. X = xI is the block used by the chi_Delta route.
struct SurgeryData {
	IntMatrix L;
	LambdaMatrix B;
	LambdaMatrix W;
	LambdaMatrix X;
};

SurgeryData build_W(const SeifertMatrix &a);

// chi(I + XZ): the Seifert-side formula for the invariant.
CyclicSeries chi_delta(const SeifertMatrix &a, int order);

struct PathwayReport {
	CyclicSeries chi_W;
	CyclicSeries chi_IBL;
	CyclicSeries chi_IXZ;
	bool pathways_equal;
	bool structural_identity; // W (eps W)^{-1} == [[I, 0], [B, I - BL]]
};

// Evaluates the invariant along all three routes and checks the exact block
// identity relating them.
PathwayReport compare_pathways(const SeifertMatrix &a, int order);

// det(tA - A'); equals 1 at t = 1.
IntPoly alexander(const SeifertMatrix &a);

} // namespace nct
