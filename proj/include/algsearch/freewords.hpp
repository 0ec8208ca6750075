#pragma once

#include "algsearch/words.hpp"

namespace algsearch {

/// Freely reduced form: no adjacent x X or X x pair remains. Linear time.
Word free_reduce(const Word& w);

/// True iff w is the identity of the free group.
bool is_identity_free(const Word& w);

/// True iff w is the identity of the free abelian group of the given rank,
/// i.e. every generator occurs as often as its inverse.
/// Throws std::domain_error for letters beyond 2 * rank.
bool is_identity_abelian(const Word& w, int rank = 2);

}  // namespace algsearch
