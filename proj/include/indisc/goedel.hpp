#pragma once

#include "indisc/formula.hpp"

namespace indisc {

/// Cantor pairing (a+b)(a+b+1)/2 + b and its inverse.
Natural cantor_pair(const Natural& a, const Natural& b);
std::pair<Natural, Natural> cantor_unpair(const Natural& c);

/// Constructor tags of the coding.
enum class CodeTag : unsigned {
  Zero = 0, Var = 1, Succ = 2, Add = 3, Mul = 4, Eq = 5, Lt = 6, InI = 7, Not = 8, Or = 9,
  And = 10, Implies = 11, Exists = 12, Forall = 13, BddExists = 14, BddForall = 15
};

/// code(node) = pair(tag, fold(child codes)) where fold([]) = 0, fold([c]) = c
/// and fold([c, rest...]) = pair(c, fold(rest)). A variable id is pair(namespace, index).
///
/// Codes roughly square per nesting level, so deep terms such as long numerals
/// have astronomically large codes; encode only what you need to compare.
Natural goedel_encode(const Formula& f);
Natural goedel_encode(const Term& t);

/// Inverse of goedel_encode; throws NotACodeError for values outside its image.
Formula goedel_decode(const Natural& code);
Term goedel_decode_term(const Natural& code);

/// Pluggable coding policy for the code-guard comparisons. All guard-dependent
/// behaviour is relative to the policy in use.
class GoedelCoding {
 public:
  virtual ~GoedelCoding() = default;
  virtual Natural code(const Formula& f) const = 0;
};

class CantorCoding final : public GoedelCoding {
 public:
  Natural code(const Formula& f) const override { return goedel_encode(f); }
};

const GoedelCoding& default_coding();

}  // namespace indisc
