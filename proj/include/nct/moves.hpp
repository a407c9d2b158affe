#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "nct/matrices.hpp"

namespace nct {

// Single generators of simple stable congruence on Hermitian matrices with
// unimodular integer augmentation. Indices are 0-based here; the JSON wire
// format is 1-based.

struct Stabilize {
	int sign; // +1 or -1; appends the block at the last index
	friend bool operator==(const Stabilize &, const Stabilize &) = default;
};

struct Destabilize {
	std::size_t index; // diagonal entry must be +-1 with zero row/column
	friend bool operator==(const Destabilize &, const Destabilize &) = default;
};

// Congruence by P = I + lambda E_{ij}, i != j.
struct ElementaryCongruence {
	std::size_t i, j;
	GroupRingElement lambda;
	friend bool operator==(const ElementaryCongruence &, const ElementaryCongruence &) = default;
};

// Congruence by the diagonal P with unit +-w at position i.
struct DiagonalCongruence {
	std::size_t i;
	int sign;
	GroupWord word;
	friend bool operator==(const DiagonalCongruence &, const DiagonalCongruence &) = default;
};

using Move = std::variant<Stabilize, Destabilize, ElementaryCongruence, DiagonalCongruence>;
using MoveSequence = std::vector<Move>;

// Applies one move; the input must be Hermitian with unimodular integer
// augmentation and the result is again such a matrix.
LambdaMatrix apply_move(const LambdaMatrix &a, const Move &m);
LambdaMatrix apply_moves(const LambdaMatrix &a, const MoveSequence &seq);

bool destabilizable(const LambdaMatrix &a, std::size_t index);

// Deterministic seeded sequence of moves, each applicable at its turn on the
// given start matrix (destabilizations are only emitted when a valid target
// exists). Growth is capped a few stabilizations above the start size.
MoveSequence random_move_sequence(const LambdaMatrix &start, std::uint64_t seed, int length,
                                  int max_word_len);

// chi(A) == chi(A after seq) in the cyclic quotient at the given order.
bool verify_chi_invariance(const LambdaMatrix &a, const MoveSequence &seq, int order);

} // namespace nct
