#include "nct/moves.hpp"

#include <random>
#include <sstream>

namespace nct {

namespace {

void require_move_domain(const LambdaMatrix &a) {
	if (!a.is_hermitian())
		throw precondition_error("move applied to a non-Hermitian matrix");
	if (!unimodular(a.augment_int()))
		throw precondition_error("move applied to a matrix with non-unimodular augmentation");
}

void require_index(std::size_t i, std::size_t n) {
	if (i >= n) {
		std::ostringstream os;
		os << "move index " << i << " out of range for size " << n;
		throw precondition_error(os.str());
	}
}

LambdaMatrix congruence(const LambdaMatrix &a, const LambdaMatrix &p) { return p * a * p.star(); }

} // namespace

bool destabilizable(const LambdaMatrix &a, std::size_t index) {
	if (index >= a.size())
		return false;
	const GroupRingElement &d = a.at(index, index);
	if (!d.is_constant())
		return false;
	Rat c = d.constant_term();
	if (c != 1 && c != -1)
		return false;
	for (std::size_t k = 0; k < a.size(); ++k) {
		if (k == index)
			continue;
		if (!a.at(index, k).is_zero() || !a.at(k, index).is_zero())
			return false;
	}
	return true;
}

LambdaMatrix apply_move(const LambdaMatrix &a, const Move &m) {
	require_move_domain(a);
	const std::size_t n = a.size();
	const int g = a.gens();

	if (const auto *s = std::get_if<Stabilize>(&m)) {
		if (s->sign != 1 && s->sign != -1)
			throw precondition_error("stabilization sign must be +1 or -1");
		LambdaMatrix block(1, g);
		block.at(0, 0) = GroupRingElement::constant(g, s->sign);
		return a.direct_sum(block);
	}

	if (const auto *d = std::get_if<Destabilize>(&m)) {
		require_index(d->index, n);
		if (!destabilizable(a, d->index))
			throw precondition_error("invalid destabilization target");
		LambdaMatrix r(n - 1, g);
		for (std::size_t i = 0, ri = 0; i < n; ++i) {
			if (i == d->index)
				continue;
			for (std::size_t j = 0, rj = 0; j < n; ++j) {
				if (j == d->index)
					continue;
				r.at(ri, rj) = a.at(i, j);
				++rj;
			}
			++ri;
		}
		return r;
	}

	if (const auto *e = std::get_if<ElementaryCongruence>(&m)) {
		require_index(e->i, n);
		require_index(e->j, n);
		if (e->i == e->j)
			throw precondition_error("elementary congruence requires i != j");
		require_same_gens(g, e->lambda.gens(), "elementary congruence");
		LambdaMatrix p = LambdaMatrix::identity(n, g);
		p.at(e->i, e->j) = e->lambda;
		return congruence(a, p);
	}

	const auto &dc = std::get<DiagonalCongruence>(m);
	require_index(dc.i, n);
	if (dc.sign != 1 && dc.sign != -1)
		throw precondition_error("diagonal congruence sign must be +1 or -1");
	require_same_gens(g, dc.word.gens(), "diagonal congruence");
	LambdaMatrix p = LambdaMatrix::identity(n, g);
	p.at(dc.i, dc.i) = GroupRingElement::monomial(dc.sign, dc.word);
	return congruence(a, p);
}

LambdaMatrix apply_moves(const LambdaMatrix &a, const MoveSequence &seq) {
	LambdaMatrix cur = a;
	for (const Move &m : seq)
		cur = apply_move(cur, m);
	return cur;
}

namespace {

// mt19937_64 plus modulo keeps sequences identical across standard library
// implementations (distributions are not portable).
struct Rng {
	std::mt19937_64 eng;
	explicit Rng(std::uint64_t seed) : eng(seed) {}
	std::uint64_t next(std::uint64_t bound) { return eng() % bound; }
	int pick_sign() { return next(2) == 0 ? 1 : -1; }
};

GroupWord random_word(Rng &rng, int gens, int max_len) {
	std::vector<std::int32_t> raw;
	std::size_t len = rng.next(static_cast<std::uint64_t>(max_len) + 1);
	for (std::size_t i = 0; i < len; ++i) {
		std::int32_t k = static_cast<std::int32_t>(rng.next(static_cast<std::uint64_t>(gens))) + 1;
		raw.push_back(rng.pick_sign() > 0 ? k : -k);
	}
	return reduce_word(raw, gens);
}

GroupRingElement random_lambda(Rng &rng, int gens, int max_word_len) {
	std::size_t nterms = 1 + rng.next(2);
	GroupRingElement r = GroupRingElement::zero(gens);
	for (std::size_t t = 0; t < nterms; ++t) {
		Rat c = static_cast<long>(rng.next(4)) - 2; // -2..1
		if (c == 0)
			c = 2;
		r += GroupRingElement::monomial(c, random_word(rng, gens, max_word_len));
	}
	return r;
}

} // namespace

MoveSequence random_move_sequence(const LambdaMatrix &start, std::uint64_t seed, int length,
                                  int max_word_len) {
	if (length < 0)
		throw precondition_error("sequence length must be nonnegative");
	Rng rng(seed);
	MoveSequence seq;
	seq.reserve(static_cast<std::size_t>(length));
	LambdaMatrix cur = start;
	const std::size_t size_cap = start.size() + 3;
	const int g = start.gens();

	for (int step = 0; step < length; ++step) {
		Move move = Stabilize{1};
		bool chosen = false;
		while (!chosen) {
			std::uint64_t roll = rng.next(100);
			if (roll < 30 && cur.size() >= 2) {
				std::size_t i = rng.next(cur.size());
				std::size_t j = rng.next(cur.size() - 1);
				if (j >= i)
					++j;
				move = ElementaryCongruence{i, j, random_lambda(rng, g, max_word_len)};
				chosen = true;
			} else if (roll < 55 && cur.size() >= 1) {
				move = DiagonalCongruence{rng.next(cur.size()), rng.pick_sign(),
				                          random_word(rng, g, max_word_len)};
				chosen = true;
			} else if (roll < 80) {
				if (cur.size() < size_cap) {
					move = Stabilize{rng.pick_sign()};
					chosen = true;
				}
			} else {
				std::vector<std::size_t> targets;
				for (std::size_t i = 0; i < cur.size(); ++i)
					if (destabilizable(cur, i))
						targets.push_back(i);
				if (!targets.empty()) {
					move = Destabilize{targets[rng.next(targets.size())]};
					chosen = true;
				}
			}
		}
		cur = apply_move(cur, move);
		seq.push_back(std::move(move));
	}
	return seq;
}

bool verify_chi_invariance(const LambdaMatrix &a, const MoveSequence &seq, int order) {
	CyclicSeries before = chi(a, order);
	CyclicSeries after = chi(apply_moves(a, seq), order);
	return cyc_equal(before, after);
}

} // namespace nct
