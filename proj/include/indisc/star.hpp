#pragma once

#include "indisc/formula.hpp"

#include <vector>

namespace indisc {

/// A Delta_0 formula in which the unbounded existentials of the input have
/// been bounded by the fresh block z1..zk.
struct StarResult {
  Formula star = Formula::eq(Term::zero(), Term::zero());
  std::size_t k = 0;
  std::vector<VarId> zblock;  // z1..zk
};

/// Recursive transformation for inputs over {~, \/, exists}:
///   atomic*        = atomic
///   (~f)*          = ~ f*
///   (f \/ g)*      = f* \/ g*        (shared z-block, k = max)
///   (exists y f)*  = exists y < z1 . shift(f*)   with shift: z_i -> z_{i+1}
/// Throws FormulaError for un-normalized connectives, the I predicate, or any
/// z-variable in the input.
StarResult star(const Formula& f);

/// Prenex form with a quantifier prefix over the ordinary namespace. Bound
/// variables are renamed (leftmost-outermost, fresh x-indices ascending) only
/// when their name is already in use.
Formula to_prenex(const Formula& f);

/// to_prenex, then bound the i-th prefix quantifier by z_i.
StarResult star_pnf(const Formula& f);

/// Replaces z_i by z_{i+offset} throughout.
Formula shift_fresh(const Formula& f, std::uint32_t offset);

}  // namespace indisc
