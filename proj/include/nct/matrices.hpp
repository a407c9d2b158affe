#pragma once

#include <vector>

#include "nct/cyclic.hpp"
#include "nct/group_ring.hpp"
#include "nct/nc_series.hpp"

namespace nct {

// Square matrix over arbitrary-precision integers.
class IntMatrix {
  public:
	explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n, Int(0)) {}

	std::size_t size() const { return n_; }
	Int &at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
	const Int &at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

	static IntMatrix identity(std::size_t n);
	IntMatrix transpose() const;
	friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
	friend IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
	friend IntMatrix operator-(const IntMatrix &a, const IntMatrix &b);
	friend bool operator==(const IntMatrix &a, const IntMatrix &b) = default;

	// Exact determinant by fraction-free (Bareiss) elimination.
	Int determinant() const;
	// Inverse of a det-(+-1) matrix; integral by Cramer. Throws otherwise.
	IntMatrix inverse_unimodular() const;

  private:
	std::size_t n_;
	std::vector<Int> entries_;
};

bool unimodular(const IntMatrix &m);

// Square matrix over exact rationals.
class RatMatrix {
  public:
	explicit RatMatrix(std::size_t n) : n_(n), entries_(n * n, Rat(0)) {}
	explicit RatMatrix(const IntMatrix &m);

	std::size_t size() const { return n_; }
	Rat &at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
	const Rat &at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

	static RatMatrix identity(std::size_t n);
	friend RatMatrix operator*(const RatMatrix &a, const RatMatrix &b);
	friend bool operator==(const RatMatrix &a, const RatMatrix &b) = default;

	bool is_integer() const;
	IntMatrix to_int() const; // throws precondition_error on non-integer entry

	// Exact Gauss-Jordan inverse; throws precondition_error if singular.
	RatMatrix inverse() const;
	bool invertible() const;

  private:
	std::size_t n_;
	std::vector<Rat> entries_;
};

// Square matrix over the group ring: the ambient type of equivariant linking
// matrices. Hermitian-ness and Z-invertibility are predicates, not invariants.
class LambdaMatrix {
  public:
	LambdaMatrix(std::size_t n, int gens);

	std::size_t size() const { return n_; }
	int gens() const { return gens_; }
	GroupRingElement &at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
	const GroupRingElement &at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

	static LambdaMatrix identity(std::size_t n, int gens);
	static LambdaMatrix from_int(const IntMatrix &m, int gens);
	static LambdaMatrix from_rat(const RatMatrix &m, int gens);

	LambdaMatrix star() const; // transpose followed by entrywise involution
	bool is_hermitian() const;
	bool has_integer_coefficients() const;

	RatMatrix augment() const;   // entrywise epsilon
	IntMatrix augment_int() const; // throws if some augmentation is non-integral

	LambdaMatrix direct_sum(const LambdaMatrix &b) const;
	friend LambdaMatrix operator*(const LambdaMatrix &a, const LambdaMatrix &b);
	friend LambdaMatrix operator+(const LambdaMatrix &a, const LambdaMatrix &b);
	friend LambdaMatrix operator-(const LambdaMatrix &a, const LambdaMatrix &b);
	friend bool operator==(const LambdaMatrix &a, const LambdaMatrix &b) = default;

  private:
	std::size_t n_;
	int gens_;
	std::vector<GroupRingElement> entries_;
};

// Square matrix over truncated noncommutative series.
class SeriesMatrix {
  public:
	SeriesMatrix(std::size_t n, int gens, int order);

	std::size_t size() const { return n_; }
	int gens() const { return gens_; }
	int order() const { return order_; }
	NCSeries &at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
	const NCSeries &at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

	static SeriesMatrix identity(std::size_t n, int gens, int order);
	static SeriesMatrix from_rat(const RatMatrix &m, int gens, int order);

	friend SeriesMatrix operator+(const SeriesMatrix &a, const SeriesMatrix &b);
	friend SeriesMatrix operator-(const SeriesMatrix &a, const SeriesMatrix &b);
	friend SeriesMatrix operator*(const Rat &c, const SeriesMatrix &a);
	friend bool operator==(const SeriesMatrix &a, const SeriesMatrix &b) = default;

	NCSeries trace() const;
	RatMatrix constant_matrix() const; // entrywise constant terms

	// Neumann-series inverse (eps A)^{-1} * sum (I - A (eps A)^{-1})^n;
	// requires the constant-term matrix to be invertible over Q.
	SeriesMatrix inverse() const;

  private:
	std::size_t n_;
	int gens_;
	int order_;
	std::vector<NCSeries> entries_;
};

// Product kernel, parallel over independent result entries (deterministic:
// each entry is a fixed serial accumulation). `mul_serial` is the reference
// implementation the parallel kernel is tested and benchmarked against.
SeriesMatrix mul_parallel(const SeriesMatrix &a, const SeriesMatrix &b);
SeriesMatrix mul_serial(const SeriesMatrix &a, const SeriesMatrix &b);
SeriesMatrix operator*(const SeriesMatrix &a, const SeriesMatrix &b);

// Entrywise Magnus embedding; shares one word-image cache across entries.
SeriesMatrix magnus_embed(const LambdaMatrix &a, int order);

enum class AugmentPolicy {
	strict,    // integer augmentation matrix with determinant +-1
	permissive // any augmentation matrix invertible over Q
};

// log(A (eps A)^{-1}) via the standard series sum (-1)^{n+1} x^n / n; defined
// because A (eps A)^{-1} - I has entries in the augmentation ideal.
SeriesMatrix log_plus(const SeriesMatrix &a);

// chi = cyclic projection of tr log_plus. The strict policy is the domain of
// the invariant (matrices nonsingular over Z); the permissive one exists for
// internal identity checks.
CyclicSeries chi(const SeriesMatrix &a, AugmentPolicy policy = AugmentPolicy::strict);
CyclicSeries chi(const LambdaMatrix &a, int order, AugmentPolicy policy = AugmentPolicy::strict);

} // namespace nct
