#include "nct/cyclic.hpp"

#include <algorithm>

namespace nct {

namespace {

// Booth's least-rotation algorithm, O(n).
std::size_t least_rotation(const Letters &s) {
	const std::size_t n = s.size();
	if (n == 0)
		return 0;
	auto at = [&](std::size_t i) { return s[i % n]; };
	std::vector<std::ptrdiff_t> fail(2 * n, -1);
	std::size_t k = 0;
	for (std::size_t j = 1; j < 2 * n; ++j) {
		std::int32_t sj = at(j);
		std::ptrdiff_t i = fail[j - k - 1];
		while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
			if (sj < at(k + static_cast<std::size_t>(i) + 1))
				k = j - static_cast<std::size_t>(i) - 1;
			i = fail[static_cast<std::size_t>(i)];
		}
		if (i == -1 && sj != at(k)) {
			if (sj < at(k))
				k = j;
			fail[j - k] = -1;
		} else {
			fail[j - k] = i + 1;
		}
	}
	return k % n;
}

} // namespace

Monomial necklace_canonical(const Monomial &m) {
	const Letters &ls = m.letters();
	if (ls.size() < 2)
		return m;
	std::size_t k = least_rotation(ls);
	if (k == 0)
		return m;
	Letters rotated;
	rotated.reserve(ls.size());
	rotated.insert(rotated.end(), ls.begin() + static_cast<std::ptrdiff_t>(k), ls.end());
	rotated.insert(rotated.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k));
	return Monomial(m.gens(), std::span<const std::int32_t>(rotated.data(), rotated.size()));
}

CyclicSeries::CyclicSeries(int gens, int order) : gens_(gens), order_(order) {
	if (gens < 1)
		throw precondition_error("generator count must be positive");
	if (order < 1)
		throw precondition_error("truncation order must be positive");
}

namespace {

void normalize_terms(std::vector<CyclicSeries::Term> &terms) {
	std::sort(terms.begin(), terms.end(),
	          [](const auto &a, const auto &b) { return Monomial::less(a.first, b.first); });
	std::size_t out = 0;
	for (std::size_t i = 0; i < terms.size();) {
		Monomial m = terms[i].first;
		Rat c = terms[i].second;
		std::size_t j = i + 1;
		while (j < terms.size() && terms[j].first == m)
			c += terms[j++].second;
		if (c != 0)
			terms[out++] = {std::move(m), std::move(c)};
		i = j;
	}
	terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(out), terms.end());
}

} // namespace

CyclicSeries CyclicSeries::from_terms(int gens, int order, std::vector<Term> terms) {
	CyclicSeries r(gens, order);
	for (auto &[m, c] : terms) {
		require_same_gens(gens, m.gens(), "cyclic term");
		if (static_cast<int>(m.degree()) > order)
			throw precondition_error("cyclic term exceeds truncation order");
		m = necklace_canonical(m);
	}
	normalize_terms(terms);
	r.terms_ = std::move(terms);
	return r;
}

CyclicSeries CyclicSeries::operator-() const {
	CyclicSeries r(gens_, order_);
	r.terms_.reserve(terms_.size());
	for (const auto &[m, c] : terms_)
		r.terms_.emplace_back(m, -c);
	return r;
}

CyclicSeries operator+(const CyclicSeries &a, const CyclicSeries &b) {
	require_same_gens(a.gens_, b.gens_, "cyclic add");
	if (a.order_ != b.order_)
		throw precondition_error("cyclic add: truncation orders differ");
	std::vector<CyclicSeries::Term> terms;
	terms.reserve(a.terms_.size() + b.terms_.size());
	terms.insert(terms.end(), a.terms_.begin(), a.terms_.end());
	terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
	normalize_terms(terms);
	CyclicSeries r(a.gens_, a.order_);
	r.terms_ = std::move(terms);
	return r;
}

CyclicSeries operator-(const CyclicSeries &a, const CyclicSeries &b) { return a + (-b); }

CyclicSeries operator*(const Rat &c, const CyclicSeries &a) {
	CyclicSeries r(a.gens_, a.order_);
	if (c == 0)
		return r;
	r.terms_.reserve(a.terms_.size());
	for (const auto &[m, cm] : a.terms_)
		r.terms_.emplace_back(m, c * cm);
	return r;
}

NCSeries CyclicSeries::as_series() const {
	std::vector<NCSeries::Term> terms(terms_.begin(), terms_.end());
	return NCSeries::from_terms(gens_, order_, std::move(terms));
}

bool cyc_equal(const CyclicSeries &a, const CyclicSeries &b) {
	require_same_gens(a.gens_, b.gens_, "cyclic compare");
	if (a.order_ != b.order_)
		throw precondition_error("cyclic compare: truncation orders differ");
	return a.terms_ == b.terms_;
}

CyclicSeries cyclic_project(const NCSeries &a) {
	std::vector<CyclicSeries::Term> terms(a.terms().begin(), a.terms().end());
	return CyclicSeries::from_terms(a.gens(), a.order(), std::move(terms));
}

std::string CyclicSeries::str() const { return as_series().str(); }

} // namespace nct
