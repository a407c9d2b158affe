#include "nct/seifert.hpp"

#include <algorithm>
#include <sstream>

namespace nct {

// ------------------------------------------------------------------ IntPoly

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
	for (long c : coeffs)
		coeffs_.emplace_back(c);
	trim();
}

IntPoly IntPoly::constant(Int c) {
	IntPoly p;
	if (c != 0)
		p.coeffs_.push_back(std::move(c));
	return p;
}

IntPoly IntPoly::variable() { return IntPoly{0, 1}; }

void IntPoly::trim() {
	while (!coeffs_.empty() && coeffs_.back() == 0)
		coeffs_.pop_back();
}

IntPoly IntPoly::operator-() const {
	IntPoly r = *this;
	for (Int &c : r.coeffs_)
		c = -c;
	return r;
}

IntPoly operator+(const IntPoly &a, const IntPoly &b) {
	IntPoly r;
	r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
	for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
		r.coeffs_[i] += a.coeffs_[i];
	for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
		r.coeffs_[i] += b.coeffs_[i];
	r.trim();
	return r;
}

IntPoly operator-(const IntPoly &a, const IntPoly &b) { return a + (-b); }

IntPoly operator*(const IntPoly &a, const IntPoly &b) {
	if (a.is_zero() || b.is_zero())
		return IntPoly();
	IntPoly r;
	r.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
	for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
		for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
			r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
	r.trim();
	return r;
}

IntPoly IntPoly::divexact(const IntPoly &num, const IntPoly &den) {
	if (den.is_zero())
		throw invariant_error("polynomial division by zero");
	if (num.is_zero())
		return IntPoly();
	IntPoly rem = num;
	IntPoly quot;
	quot.coeffs_.resize(num.coeffs_.size() - den.coeffs_.size() + 1, Int(0));
	const Int &lead = den.coeffs_.back();
	for (std::size_t d = quot.coeffs_.size(); d-- > 0;) {
		Int top = rem.coefficient(d + den.coeffs_.size() - 1);
		if (top == 0)
			continue;
		Int q;
		mpz_tdiv_q(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
		if (q * lead != top)
			throw invariant_error("inexact polynomial division");
		quot.coeffs_[d] = q;
		IntPoly shift;
		shift.coeffs_.assign(d, Int(0));
		shift.coeffs_.push_back(q);
		rem = rem - shift * den;
	}
	if (!rem.is_zero())
		throw invariant_error("inexact polynomial division");
	quot.trim();
	return quot;
}

Int IntPoly::eval_int(const Int &t) const {
	Int r = 0;
	for (std::size_t i = coeffs_.size(); i-- > 0;)
		r = r * t + coeffs_[i];
	return r;
}

NCSeries IntPoly::eval_one_plus_h(int order) const {
	NCSeries t = NCSeries::constant(1, order, 1) + NCSeries::generator(1, order, 1);
	NCSeries r = NCSeries::zero(1, order);
	for (std::size_t i = coeffs_.size(); i-- > 0;)
		r = r * t + NCSeries::constant(1, order, Rat(coeffs_[i]));
	return r;
}

std::string IntPoly::str() const {
	if (is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (std::size_t d = coeffs_.size(); d-- > 0;) {
		const Int &c = coeffs_[d];
		if (c == 0)
			continue;
		Int a = abs(c);
		if (first)
			os << (c < 0 ? "-" : "");
		else
			os << (c < 0 ? " - " : " + ");
		if (a != 1 || d == 0)
			os << a.get_str();
		if (d >= 1)
			os << "t";
		if (d >= 2)
			os << "^" << d;
		first = false;
	}
	return os.str();
}

IntPoly poly_determinant(std::vector<std::vector<IntPoly>> m) {
	const std::size_t n = m.size();
	for (const auto &row : m)
		if (row.size() != n)
			throw precondition_error("determinant of a non-square matrix");
	if (n == 0)
		return IntPoly::constant(1);
	IntPoly prev = IntPoly::constant(1);
	int sign = 1;
	for (std::size_t k = 0; k + 1 < n; ++k) {
		if (m[k][k].is_zero()) {
			std::size_t p = k + 1;
			while (p < n && m[p][k].is_zero())
				++p;
			if (p == n)
				return IntPoly();
			std::swap(m[k], m[p]);
			sign = -sign;
		}
		for (std::size_t i = k + 1; i < n; ++i)
			for (std::size_t j = k + 1; j < n; ++j)
				m[i][j] = IntPoly::divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
		prev = m[k][k];
	}
	return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// ---------------------------------------------------------- Seifert pipeline

SeifertMatrix validate_seifert(const IntMatrix &a) {
	const std::size_t n = a.size();
	if (n % 2 != 0)
		throw precondition_error("Seifert matrix must have even dimension");
	const std::size_t k = n / 2;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			Int expected = 0;
			if (i < k && j == i + k)
				expected = 1;
			else if (i >= k && j == i - k)
				expected = -1;
			Int got = a.at(i, j) - a.at(j, i);
			if (got != expected) {
				std::ostringstream os;
				os << "not a Seifert matrix in the alternating band basis: (A - A')[" << i << "]["
				   << j << "] = " << got.get_str() << ", expected " << expected.get_str();
				throw precondition_error(os.str());
			}
		}
	return SeifertMatrix{a, k};
}

RatMatrix compute_Z(const SeifertMatrix &a) {
	const std::size_t n = a.entries.size();
	const std::size_t k = a.genus;
	// (A - A')^{-1} = [[0, -I], [I, 0]]
	IntMatrix jinv(n);
	for (std::size_t i = 0; i < k; ++i) {
		jinv.at(i, i + k) = -1;
		jinv.at(i + k, i) = 1;
	}
	return RatMatrix(a.entries * jinv);
}

SurgeryData build_W(const SeifertMatrix &a) {
	const std::size_t n = a.entries.size();
	const std::size_t k = a.genus;
	const int g = 1;

	IntMatrix upper(n); // E = [[0, I], [0, 0]]
	for (std::size_t i = 0; i < k; ++i)
		upper.at(i, i + k) = 1;
	IntMatrix L = a.entries - upper;

	GroupRingElement x = GroupRingElement::generator(g, 1) - GroupRingElement::constant(g, 1);
	GroupRingElement xbar =
	    GroupRingElement::monomial(1, GroupWord(g, {-1})) - GroupRingElement::constant(g, 1);

	LambdaMatrix B(n, g);
	for (std::size_t i = 0; i < k; ++i) {
		B.at(i, i + k) = x;
		B.at(i + k, i) = xbar;
	}

	LambdaMatrix X(n, g);
	for (std::size_t i = 0; i < n; ++i)
		X.at(i, i) = x;

	LambdaMatrix W(2 * n, g);
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t j = 0; j < n; ++j) {
			W.at(i, j) = GroupRingElement::constant(g, Rat(L.at(i, j)));
			W.at(n + i, n + j) = B.at(i, j);
		}
		W.at(i, n + i) = GroupRingElement::constant(g, 1);
		W.at(n + i, i) = GroupRingElement::constant(g, 1);
	}
	return SurgeryData{std::move(L), std::move(B), std::move(W), std::move(X)};
}

CyclicSeries chi_delta(const SeifertMatrix &a, int order) {
	const std::size_t n = a.entries.size();
	const int g = 1;
	if (n == 0)
		return CyclicSeries::zero(g, order);
	SurgeryData sd = build_W(a);
	LambdaMatrix z = LambdaMatrix::from_rat(compute_Z(a), g);
	LambdaMatrix ixz = LambdaMatrix::identity(n, g) + sd.X * z;
	return chi(ixz, order, AugmentPolicy::permissive);
}

PathwayReport compare_pathways(const SeifertMatrix &a, int order) {
	const std::size_t n = a.entries.size();
	const int g = 1;
	SurgeryData sd = build_W(a);

	CyclicSeries chi_w = chi(sd.W, order);

	LambdaMatrix bl = sd.B * LambdaMatrix::from_int(sd.L, g);
	LambdaMatrix ibl = LambdaMatrix::identity(n, g) - bl;
	CyclicSeries chi_ibl = chi(ibl, order);

	CyclicSeries chi_ixz = chi_delta(a, order);

	// W (eps W)^{-1} = [[I, 0], [B, I - BL]], exactly over the group ring.
	bool structural = true;
	{
		IntMatrix we = sd.W.augment_int();
		LambdaMatrix winv = LambdaMatrix::from_int(we.inverse_unimodular(), g);
		LambdaMatrix lhs = sd.W * winv;
		LambdaMatrix rhs(2 * n, g);
		for (std::size_t i = 0; i < n; ++i) {
			rhs.at(i, i) = GroupRingElement::constant(g, 1);
			for (std::size_t j = 0; j < n; ++j) {
				rhs.at(n + i, j) = sd.B.at(i, j);
				rhs.at(n + i, n + j) = ibl.at(i, j);
			}
		}
		structural = lhs == rhs;
	}

	bool equal = cyc_equal(chi_w, chi_ibl) && cyc_equal(chi_ibl, chi_ixz);
	return PathwayReport{std::move(chi_w), std::move(chi_ibl), std::move(chi_ixz), equal,
	                     structural};
}

IntPoly alexander(const SeifertMatrix &a) {
	const std::size_t n = a.entries.size();
	std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			// t*A[i][j] - A[j][i]
			IntPoly p;
			p = IntPoly::constant(-a.entries.at(j, i)) +
			    IntPoly::variable() * IntPoly::constant(a.entries.at(i, j));
			m[i][j] = std::move(p);
		}
	return poly_determinant(std::move(m));
}

} // namespace nct
