#pragma once

#include <gmpxx.h>

#include <string>

#include "nct/errors.hpp"

namespace nct {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat &q) { return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0; }

// Serialized form is "p/q" for non-integers and plain "n" otherwise.
inline std::string rat_to_string(const Rat &q) { return q.get_str(); }

Rat rat_from_string(const std::string &s);

} // namespace nct
