#include "nct/matrices.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nct {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char *what) {
	if (a != b) {
		std::ostringstream os;
		os << what << ": sizes differ (" << a << " vs " << b << ")";
		throw precondition_error(os.str());
	}
}

} // namespace

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
	IntMatrix m(n);
	for (std::size_t i = 0; i < n; ++i)
		m.at(i, i) = 1;
	return m;
}

IntMatrix IntMatrix::transpose() const {
	IntMatrix m(n_);
	for (std::size_t i = 0; i < n_; ++i)
		for (std::size_t j = 0; j < n_; ++j)
			m.at(j, i) = at(i, j);
	return m;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
	require_same_size(a.n_, b.n_, "int matrix mul");
	IntMatrix r(a.n_);
	for (std::size_t i = 0; i < a.n_; ++i)
		for (std::size_t k = 0; k < a.n_; ++k) {
			const Int &aik = a.at(i, k);
			if (aik == 0)
				continue;
			for (std::size_t j = 0; j < a.n_; ++j)
				r.at(i, j) += aik * b.at(k, j);
		}
	return r;
}

IntMatrix operator+(const IntMatrix &a, const IntMatrix &b) {
	require_same_size(a.n_, b.n_, "int matrix add");
	IntMatrix r(a.n_);
	for (std::size_t i = 0; i < a.n_ * a.n_; ++i)
		r.entries_[i] = a.entries_[i] + b.entries_[i];
	return r;
}

IntMatrix operator-(const IntMatrix &a, const IntMatrix &b) {
	require_same_size(a.n_, b.n_, "int matrix sub");
	IntMatrix r(a.n_);
	for (std::size_t i = 0; i < a.n_ * a.n_; ++i)
		r.entries_[i] = a.entries_[i] - b.entries_[i];
	return r;
}

Int IntMatrix::determinant() const {
	// Bareiss fraction-free elimination with row pivoting. Empty matrix has
	// determinant 1.
	const std::size_t n = n_;
	if (n == 0)
		return 1;
	std::vector<Int> m = entries_;
	auto e = [&](std::size_t i, std::size_t j) -> Int & { return m[i * n + j]; };
	Int prev = 1;
	int sign = 1;
	for (std::size_t k = 0; k + 1 < n; ++k) {
		if (e(k, k) == 0) {
			std::size_t p = k + 1;
			while (p < n && e(p, k) == 0)
				++p;
			if (p == n)
				return 0;
			for (std::size_t j = 0; j < n; ++j)
				std::swap(e(k, j), e(p, j));
			sign = -sign;
		}
		for (std::size_t i = k + 1; i < n; ++i)
			for (std::size_t j = k + 1; j < n; ++j) {
				Int num = e(i, j) * e(k, k) - e(i, k) * e(k, j);
				mpz_divexact(e(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
			}
		prev = e(k, k);
	}
	return sign * e(n - 1, n - 1);
}

bool unimodular(const IntMatrix &m) {
	Int d = m.determinant();
	return d == 1 || d == -1;
}

IntMatrix IntMatrix::inverse_unimodular() const {
	if (!unimodular(*this))
		throw precondition_error("matrix is not invertible over Z");
	RatMatrix inv = RatMatrix(*this).inverse();
	return inv.to_int();
}

// ---------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(const IntMatrix &m) : n_(m.size()), entries_(n_ * n_, Rat(0)) {
	for (std::size_t i = 0; i < n_; ++i)
		for (std::size_t j = 0; j < n_; ++j)
			at(i, j) = m.at(i, j);
}

RatMatrix RatMatrix::identity(std::size_t n) {
	RatMatrix m(n);
	for (std::size_t i = 0; i < n; ++i)
		m.at(i, i) = 1;
	return m;
}

RatMatrix operator*(const RatMatrix &a, const RatMatrix &b) {
	require_same_size(a.n_, b.n_, "rational matrix mul");
	RatMatrix r(a.n_);
	for (std::size_t i = 0; i < a.n_; ++i)
		for (std::size_t k = 0; k < a.n_; ++k) {
			const Rat &aik = a.at(i, k);
			if (aik == 0)
				continue;
			for (std::size_t j = 0; j < a.n_; ++j)
				r.at(i, j) += aik * b.at(k, j);
		}
	return r;
}

bool RatMatrix::is_integer() const {
	return std::all_of(entries_.begin(), entries_.end(), [](const Rat &q) { return is_integer(q); });
}

IntMatrix RatMatrix::to_int() const {
	if (!is_integer())
		throw precondition_error("matrix has non-integer entries");
	IntMatrix m(n_);
	for (std::size_t i = 0; i < n_; ++i)
		for (std::size_t j = 0; j < n_; ++j)
			m.at(i, j) = at(i, j).get_num();
	return m;
}

RatMatrix RatMatrix::inverse() const {
	const std::size_t n = n_;
	RatMatrix a = *this;
	RatMatrix inv = RatMatrix::identity(n);
	for (std::size_t k = 0; k < n; ++k) {
		std::size_t p = k;
		while (p < n && a.at(p, k) == 0)
			++p;
		if (p == n)
			throw precondition_error("matrix is singular over Q");
		if (p != k)
			for (std::size_t j = 0; j < n; ++j) {
				std::swap(a.at(k, j), a.at(p, j));
				std::swap(inv.at(k, j), inv.at(p, j));
			}
		Rat piv = a.at(k, k);
		for (std::size_t j = 0; j < n; ++j) {
			a.at(k, j) /= piv;
			inv.at(k, j) /= piv;
		}
		for (std::size_t i = 0; i < n; ++i) {
			if (i == k || a.at(i, k) == 0)
				continue;
			Rat f = a.at(i, k);
			for (std::size_t j = 0; j < n; ++j) {
				a.at(i, j) -= f * a.at(k, j);
				inv.at(i, j) -= f * inv.at(k, j);
			}
		}
	}
	return inv;
}

bool RatMatrix::invertible() const {
	RatMatrix a = *this;
	const std::size_t n = n_;
	for (std::size_t k = 0; k < n; ++k) {
		std::size_t p = k;
		while (p < n && a.at(p, k) == 0)
			++p;
		if (p == n)
			return false;
		if (p != k)
			for (std::size_t j = k; j < n; ++j)
				std::swap(a.at(k, j), a.at(p, j));
		for (std::size_t i = k + 1; i < n; ++i) {
			if (a.at(i, k) == 0)
				continue;
			Rat f = a.at(i, k) / a.at(k, k);
			for (std::size_t j = k; j < n; ++j)
				a.at(i, j) -= f * a.at(k, j);
		}
	}
	return true;
}

// ------------------------------------------------------------- LambdaMatrix

LambdaMatrix::LambdaMatrix(std::size_t n, int gens)
    : n_(n), gens_(gens), entries_(n * n, GroupRingElement::zero(gens)) {
	if (gens < 1)
		throw precondition_error("generator count must be positive");
}

LambdaMatrix LambdaMatrix::identity(std::size_t n, int gens) {
	LambdaMatrix m(n, gens);
	for (std::size_t i = 0; i < n; ++i)
		m.at(i, i) = GroupRingElement::constant(gens, 1);
	return m;
}

LambdaMatrix LambdaMatrix::from_int(const IntMatrix &m, int gens) {
	LambdaMatrix r(m.size(), gens);
	for (std::size_t i = 0; i < m.size(); ++i)
		for (std::size_t j = 0; j < m.size(); ++j)
			r.at(i, j) = GroupRingElement::constant(gens, Rat(m.at(i, j)));
	return r;
}

LambdaMatrix LambdaMatrix::from_rat(const RatMatrix &m, int gens) {
	LambdaMatrix r(m.size(), gens);
	for (std::size_t i = 0; i < m.size(); ++i)
		for (std::size_t j = 0; j < m.size(); ++j)
			r.at(i, j) = GroupRingElement::constant(gens, m.at(i, j));
	return r;
}

LambdaMatrix LambdaMatrix::star() const {
	LambdaMatrix m(n_, gens_);
	for (std::size_t i = 0; i < n_; ++i)
		for (std::size_t j = 0; j < n_; ++j)
			m.at(i, j) = at(j, i).star();
	return m;
}

bool LambdaMatrix::is_hermitian() const { return *this == star(); }

bool LambdaMatrix::has_integer_coefficients() const {
	return std::all_of(entries_.begin(), entries_.end(),
	                   [](const GroupRingElement &e) { return e.has_integer_coefficients(); });
}

RatMatrix LambdaMatrix::augment() const {
	RatMatrix m(n_);
	for (std::size_t i = 0; i < n_; ++i)
		for (std::size_t j = 0; j < n_; ++j)
			m.at(i, j) = at(i, j).augment();
	return m;
}

IntMatrix LambdaMatrix::augment_int() const {
	RatMatrix m = augment();
	if (!m.is_integer())
		throw precondition_error("augmentation has non-integer entries");
	return m.to_int();
}

LambdaMatrix LambdaMatrix::direct_sum(const LambdaMatrix &b) const {
	require_same_gens(gens_, b.gens_, "direct sum");
	LambdaMatrix m(n_ + b.n_, gens_);
	for (std::size_t i = 0; i < n_; ++i)
		for (std::size_t j = 0; j < n_; ++j)
			m.at(i, j) = at(i, j);
	for (std::size_t i = 0; i < b.n_; ++i)
		for (std::size_t j = 0; j < b.n_; ++j)
			m.at(n_ + i, n_ + j) = b.at(i, j);
	return m;
}

LambdaMatrix operator*(const LambdaMatrix &a, const LambdaMatrix &b) {
	require_same_size(a.n_, b.n_, "lambda matrix mul");
	require_same_gens(a.gens_, b.gens_, "lambda matrix mul");
	LambdaMatrix r(a.n_, a.gens_);
	for (std::size_t i = 0; i < a.n_; ++i)
		for (std::size_t j = 0; j < a.n_; ++j) {
			GroupRingElement s = GroupRingElement::zero(a.gens_);
			for (std::size_t k = 0; k < a.n_; ++k) {
				if (a.at(i, k).is_zero() || b.at(k, j).is_zero())
					continue;
				s += a.at(i, k) * b.at(k, j);
			}
			r.at(i, j) = std::move(s);
		}
	return r;
}

LambdaMatrix operator+(const LambdaMatrix &a, const LambdaMatrix &b) {
	require_same_size(a.n_, b.n_, "lambda matrix add");
	require_same_gens(a.gens_, b.gens_, "lambda matrix add");
	LambdaMatrix r(a.n_, a.gens_);
	for (std::size_t i = 0; i < a.n_ * a.n_; ++i)
		r.entries_[i] = a.entries_[i] + b.entries_[i];
	return r;
}

LambdaMatrix operator-(const LambdaMatrix &a, const LambdaMatrix &b) {
	require_same_size(a.n_, b.n_, "lambda matrix sub");
	require_same_gens(a.gens_, b.gens_, "lambda matrix sub");
	LambdaMatrix r(a.n_, a.gens_);
	for (std::size_t i = 0; i < a.n_ * a.n_; ++i)
		r.entries_[i] = a.entries_[i] - b.entries_[i];
	return r;
}

// ------------------------------------------------------------- SeriesMatrix

SeriesMatrix::SeriesMatrix(std::size_t n, int gens, int order)
    : n_(n), gens_(gens), order_(order), entries_(n * n, NCSeries(gens, order)) {}

SeriesMatrix SeriesMatrix::identity(std::size_t n, int gens, int order) {
	SeriesMatrix m(n, gens, order);
	for (std::size_t i = 0; i < n; ++i)
		m.at(i, i) = NCSeries::constant(gens, order, 1);
	return m;
}

SeriesMatrix SeriesMatrix::from_rat(const RatMatrix &m, int gens, int order) {
	SeriesMatrix r(m.size(), gens, order);
	for (std::size_t i = 0; i < m.size(); ++i)
		for (std::size_t j = 0; j < m.size(); ++j)
			r.at(i, j) = NCSeries::constant(gens, order, m.at(i, j));
	return r;
}

namespace {

void require_compatible(const SeriesMatrix &a, const SeriesMatrix &b, const char *what) {
	require_same_size(a.size(), b.size(), what);
	require_same_gens(a.gens(), b.gens(), what);
	if (a.order() != b.order())
		throw precondition_error(std::string(what) + ": truncation orders differ");
}

} // namespace

SeriesMatrix operator+(const SeriesMatrix &a, const SeriesMatrix &b) {
	require_compatible(a, b, "series matrix add");
	SeriesMatrix r(a.n_, a.gens_, a.order_);
	for (std::size_t i = 0; i < a.n_ * a.n_; ++i)
		r.entries_[i] = a.entries_[i] + b.entries_[i];
	return r;
}

SeriesMatrix operator-(const SeriesMatrix &a, const SeriesMatrix &b) {
	require_compatible(a, b, "series matrix sub");
	SeriesMatrix r(a.n_, a.gens_, a.order_);
	for (std::size_t i = 0; i < a.n_ * a.n_; ++i)
		r.entries_[i] = a.entries_[i] - b.entries_[i];
	return r;
}

SeriesMatrix operator*(const Rat &c, const SeriesMatrix &a) {
	SeriesMatrix r(a.n_, a.gens_, a.order_);
	for (std::size_t i = 0; i < a.n_ * a.n_; ++i)
		r.entries_[i] = c * a.entries_[i];
	return r;
}

SeriesMatrix mul_serial(const SeriesMatrix &a, const SeriesMatrix &b) {
	require_compatible(a, b, "series matrix mul");
	const std::size_t n = a.size();
	SeriesMatrix r(n, a.gens(), a.order());
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			NCSeries s(a.gens(), a.order());
			for (std::size_t k = 0; k < n; ++k) {
				if (a.at(i, k).is_zero() || b.at(k, j).is_zero())
					continue;
				s += a.at(i, k) * b.at(k, j);
			}
			r.at(i, j) = std::move(s);
		}
	return r;
}

SeriesMatrix mul_parallel(const SeriesMatrix &a, const SeriesMatrix &b) {
	require_compatible(a, b, "series matrix mul");
	const std::size_t n = a.size();
	SeriesMatrix r(n, a.gens(), a.order());
	const std::ptrdiff_t cells = static_cast<std::ptrdiff_t>(n * n);
#pragma omp parallel for schedule(dynamic)
	for (std::ptrdiff_t cell = 0; cell < cells; ++cell) {
		const std::size_t i = static_cast<std::size_t>(cell) / n;
		const std::size_t j = static_cast<std::size_t>(cell) % n;
		NCSeries s(a.gens(), a.order());
		for (std::size_t k = 0; k < n; ++k) {
			if (a.at(i, k).is_zero() || b.at(k, j).is_zero())
				continue;
			s += a.at(i, k) * b.at(k, j);
		}
		r.at(i, j) = std::move(s);
	}
	return r;
}

SeriesMatrix operator*(const SeriesMatrix &a, const SeriesMatrix &b) { return mul_parallel(a, b); }

NCSeries SeriesMatrix::trace() const {
	NCSeries s(gens_, order_);
	for (std::size_t i = 0; i < n_; ++i)
		s += at(i, i);
	return s;
}

RatMatrix SeriesMatrix::constant_matrix() const {
	RatMatrix m(n_);
	for (std::size_t i = 0; i < n_; ++i)
		for (std::size_t j = 0; j < n_; ++j)
			m.at(i, j) = at(i, j).constant_term();
	return m;
}

namespace {

bool all_zero(const SeriesMatrix &m) {
	for (std::size_t i = 0; i < m.size(); ++i)
		for (std::size_t j = 0; j < m.size(); ++j)
			if (!m.at(i, j).is_zero())
				return false;
	return true;
}

} // namespace

SeriesMatrix SeriesMatrix::inverse() const {
	RatMatrix c0 = constant_matrix().inverse(); // throws if singular over Q
	SeriesMatrix b0 = SeriesMatrix::from_rat(c0, gens_, order_);
	SeriesMatrix k = SeriesMatrix::identity(n_, gens_, order_) - (*this) * b0;
	SeriesMatrix acc = SeriesMatrix::identity(n_, gens_, order_);
	SeriesMatrix pow = SeriesMatrix::identity(n_, gens_, order_);
	for (int m = 1; m <= order_; ++m) {
		pow = pow * k;
		if (all_zero(pow))
			break;
		acc = acc + pow;
	}
	return b0 * acc;
}

SeriesMatrix magnus_embed(const LambdaMatrix &a, int order) {
	const std::size_t n = a.size();
	SeriesMatrix r(n, a.gens(), order);
	// Entries of a moved matrix share many words; memoize their images.
	std::map<Letters, NCSeries> cache;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			NCSeries s(a.gens(), order);
			for (const auto &[w, c] : a.at(i, j).terms()) {
				auto it = cache.find(w.letters());
				if (it == cache.end())
					it = cache.emplace(w.letters(), magnus_word(w, order)).first;
				s += c * it->second;
			}
			r.at(i, j) = std::move(s);
		}
	return r;
}

SeriesMatrix log_plus(const SeriesMatrix &a) {
	RatMatrix eps_inv = a.constant_matrix().inverse();
	SeriesMatrix m = a * SeriesMatrix::from_rat(eps_inv, a.gens(), a.order());
	SeriesMatrix u = m - SeriesMatrix::identity(a.size(), a.gens(), a.order());
	SeriesMatrix r(a.size(), a.gens(), a.order());
	SeriesMatrix pow = SeriesMatrix::identity(a.size(), a.gens(), a.order());
	for (int n = 1; n <= a.order(); ++n) {
		pow = pow * u;
		if (all_zero(pow))
			break;
		r = r + Rat(n % 2 == 1 ? 1 : -1, n) * pow;
	}
	return r;
}

namespace {

void check_augmentation(const RatMatrix &eps, AugmentPolicy policy) {
	if (policy == AugmentPolicy::strict) {
		if (!eps.is_integer())
			throw precondition_error("augmentation has non-integer entries");
		if (!unimodular(eps.to_int()))
			throw precondition_error("augmentation is not invertible over Z");
	} else {
		if (!eps.invertible())
			throw precondition_error("augmentation is singular over Q");
	}
}

} // namespace

CyclicSeries chi(const SeriesMatrix &a, AugmentPolicy policy) {
	check_augmentation(a.constant_matrix(), policy);
	if (a.size() == 0)
		return CyclicSeries::zero(a.gens(), a.order());
	return cyclic_project(log_plus(a).trace());
}

CyclicSeries chi(const LambdaMatrix &a, int order, AugmentPolicy policy) {
	check_augmentation(a.augment(), policy);
	if (a.size() == 0)
		return CyclicSeries::zero(a.gens(), order);
	return cyclic_project(log_plus(magnus_embed(a, order)).trace());
}

} // namespace nct
