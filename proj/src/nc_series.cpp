#include "nct/nc_series.hpp"

#include <algorithm>
#include <sstream>

namespace nct {

Monomial::Monomial(int gens, std::span<const std::int32_t> letters) : gens_(gens) {
	if (gens < 1)
		throw precondition_error("generator count must be positive");
	for (std::int32_t letter : letters) {
		if (letter < 1 || letter > gens) {
			std::ostringstream os;
			os << "invalid series variable index " << letter << " (g=" << gens << ")";
			throw precondition_error(os.str());
		}
		letters_.push_back(letter);
	}
}

Monomial operator*(const Monomial &a, const Monomial &b) {
	require_same_gens(a.gens_, b.gens_, "monomial mul");
	Monomial r(a.gens_);
	r.letters_.reserve(a.letters_.size() + b.letters_.size());
	r.letters_ = a.letters_;
	r.letters_.insert(r.letters_.end(), b.letters_.begin(), b.letters_.end());
	return r;
}

bool Monomial::less(const Monomial &a, const Monomial &b) {
	if (a.letters_.size() != b.letters_.size())
		return a.letters_.size() < b.letters_.size();
	return std::lexicographical_compare(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
	                                    b.letters_.end());
}

namespace {

void require_compatible(const NCSeries &a, const NCSeries &b, const char *what) {
	require_same_gens(a.gens(), b.gens(), what);
	if (a.order() != b.order()) {
		std::ostringstream os;
		os << what << ": truncation orders differ (" << a.order() << " vs " << b.order() << ")";
		throw precondition_error(os.str());
	}
}

void normalize_terms(std::vector<NCSeries::Term> &terms) {
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

NCSeries::NCSeries(int gens, int order) : gens_(gens), order_(order) {
	if (gens < 1)
		throw precondition_error("generator count must be positive");
	if (order < 1)
		throw precondition_error("truncation order must be positive");
}

NCSeries NCSeries::constant(int gens, int order, Rat c) {
	NCSeries r(gens, order);
	if (c != 0)
		r.terms_.emplace_back(Monomial(gens), std::move(c));
	return r;
}

NCSeries NCSeries::generator(int gens, int order, int k) {
	NCSeries r(gens, order);
	r.terms_.emplace_back(Monomial(gens, {static_cast<std::int32_t>(k)}), 1);
	return r;
}

NCSeries NCSeries::from_terms(int gens, int order, std::vector<Term> terms) {
	NCSeries r(gens, order);
	for (const auto &[m, c] : terms) {
		require_same_gens(gens, m.gens(), "series term");
		if (static_cast<int>(m.degree()) > order)
			throw precondition_error("series term exceeds truncation order");
	}
	normalize_terms(terms);
	r.terms_ = std::move(terms);
	return r;
}

Rat NCSeries::constant_term() const {
	if (!terms_.empty() && terms_.front().first.degree() == 0)
		return terms_.front().second;
	return 0;
}

Rat NCSeries::coefficient(const Monomial &m) const {
	auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term &t, const Monomial &key) {
		return Monomial::less(t.first, key);
	});
	if (it != terms_.end() && it->first == m)
		return it->second;
	return 0;
}

NCSeries NCSeries::operator-() const {
	NCSeries r(gens_, order_);
	r.terms_.reserve(terms_.size());
	for (const auto &[m, c] : terms_)
		r.terms_.emplace_back(m, -c);
	return r;
}

NCSeries operator+(const NCSeries &a, const NCSeries &b) {
	require_compatible(a, b, "series add");
	NCSeries r(a.gens_, a.order_);
	r.terms_.reserve(a.terms_.size() + b.terms_.size());
	std::size_t i = 0, j = 0;
	while (i < a.terms_.size() && j < b.terms_.size()) {
		if (a.terms_[i].first == b.terms_[j].first) {
			Rat c = a.terms_[i].second + b.terms_[j].second;
			if (c != 0)
				r.terms_.emplace_back(a.terms_[i].first, std::move(c));
			++i, ++j;
		} else if (Monomial::less(a.terms_[i].first, b.terms_[j].first)) {
			r.terms_.push_back(a.terms_[i++]);
		} else {
			r.terms_.push_back(b.terms_[j++]);
		}
	}
	for (; i < a.terms_.size(); ++i)
		r.terms_.push_back(a.terms_[i]);
	for (; j < b.terms_.size(); ++j)
		r.terms_.push_back(b.terms_[j]);
	return r;
}

NCSeries operator-(const NCSeries &a, const NCSeries &b) { return a + (-b); }

NCSeries operator*(const NCSeries &a, const NCSeries &b) {
	require_compatible(a, b, "series mul");
	std::vector<NCSeries::Term> terms;
	// Terms are sorted by degree, so the inner loop stops as soon as the
	// degree budget is exhausted.
	for (const auto &[ma, ca] : a.terms_) {
		std::size_t budget = static_cast<std::size_t>(a.order_) - ma.degree();
		for (const auto &[mb, cb] : b.terms_) {
			if (mb.degree() > budget)
				break;
			terms.emplace_back(ma * mb, ca * cb);
		}
	}
	normalize_terms(terms);
	NCSeries r(a.gens_, a.order_);
	r.terms_ = std::move(terms);
	return r;
}

NCSeries operator*(const Rat &c, const NCSeries &a) {
	NCSeries r(a.gens_, a.order_);
	if (c == 0)
		return r;
	r.terms_.reserve(a.terms_.size());
	for (const auto &[m, cm] : a.terms_)
		r.terms_.emplace_back(m, c * cm);
	return r;
}

NCSeries NCSeries::inverse() const {
	Rat c = constant_term();
	if (c == 0)
		throw precondition_error("series is not a unit (zero constant term)");
	Rat cinv = 1 / c;
	NCSeries u = NCSeries::constant(gens_, order_, 1) - cinv * (*this); // zero constant term
	NCSeries acc = NCSeries::constant(gens_, order_, 1);
	NCSeries pow = NCSeries::constant(gens_, order_, 1);
	for (int n = 1; n <= order_; ++n) {
		pow *= u;
		if (pow.is_zero())
			break;
		acc += pow;
	}
	return cinv * acc;
}

NCSeries NCSeries::abelianized() const {
	std::vector<Term> terms;
	terms.reserve(terms_.size());
	for (const auto &[m, c] : terms_) {
		Monomial s = m;
		std::sort(s.letters_.begin(), s.letters_.end());
		terms.emplace_back(std::move(s), c);
	}
	normalize_terms(terms);
	NCSeries r(gens_, order_);
	r.terms_ = std::move(terms);
	return r;
}

NCSeries log(const NCSeries &a) {
	if (a.constant_term() != 1)
		throw precondition_error("log requires constant term 1");
	NCSeries u = a - NCSeries::constant(a.gens(), a.order(), 1);
	NCSeries r = NCSeries::zero(a.gens(), a.order());
	NCSeries pow = NCSeries::constant(a.gens(), a.order(), 1);
	for (int n = 1; n <= a.order(); ++n) {
		pow *= u;
		if (pow.is_zero())
			break;
		r += Rat(n % 2 == 1 ? 1 : -1, n) * pow;
	}
	return r;
}

NCSeries exp(const NCSeries &a) {
	if (a.constant_term() != 0)
		throw precondition_error("exp requires constant term 0");
	NCSeries r = NCSeries::constant(a.gens(), a.order(), 1);
	NCSeries inc = NCSeries::constant(a.gens(), a.order(), 1);
	for (int n = 1; n <= a.order(); ++n) {
		inc *= a;
		inc = Rat(1, n) * inc;
		if (inc.is_zero())
			break;
		r += inc;
	}
	return r;
}

NCSeries magnus_word(const GroupWord &w, int order) {
	int g = w.gens();
	NCSeries r = NCSeries::constant(g, order, 1);
	for (std::int32_t letter : w.letters()) {
		int k = letter > 0 ? letter : -letter;
		NCSeries img(g, order);
		if (letter > 0) {
			img = NCSeries::constant(g, order, 1) + NCSeries::generator(g, order, k);
		} else {
			// inverse of 1 + h_k modulo degree order+1
			std::vector<NCSeries::Term> terms;
			Letters run;
			for (int d = 0; d <= order; ++d) {
				terms.emplace_back(Monomial(g, std::span<const std::int32_t>(run.data(), run.size())),
				                   d % 2 == 0 ? 1 : -1);
				run.push_back(k);
			}
			img = NCSeries::from_terms(g, order, std::move(terms));
		}
		r *= img;
	}
	return r;
}

NCSeries magnus_embed(const GroupRingElement &a, int order) {
	NCSeries r(a.gens(), order);
	for (const auto &[w, c] : a.terms())
		r += c * magnus_word(w, order);
	return r;
}

std::string NCSeries::str() const {
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[m, c] : terms_) {
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
		if (a != 1 || m.degree() == 0)
			os << rat_to_string(a) << (m.degree() == 0 ? "" : " ");
		// render runs as powers: h1^2 h2
		const auto &ls = m.letters();
		for (std::size_t i = 0; i < ls.size();) {
			std::size_t j = i;
			while (j < ls.size() && ls[j] == ls[i])
				++j;
			if (i > 0)
				os << " ";
			os << "h" << ls[i];
			if (j - i > 1)
				os << "^" << (j - i);
			i = j;
		}
		first = false;
	}
	return os.str();
}

} // namespace nct
