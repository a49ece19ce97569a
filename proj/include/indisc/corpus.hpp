#pragma once

#include "indisc/formula.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace indisc {

struct GeneratedFormula {
  Formula formula;
  std::size_t arity = 0;
  std::size_t exists_depth = 0;  // of the normalized formula
};

/// Reproducible pseudo-random L_A formulas whose quantifier nesting (bounded or
/// not) is at most `depth`. The generator uses only mt19937_64 output and
/// modular reduction, so results are identical on every platform.
std::vector<GeneratedFormula> generate_corpus(std::uint64_t seed, std::size_t depth, std::size_t count);

/// Corpus file text: a "# arity=.. exists_depth=.." line before each formula.
std::string format_corpus(const std::vector<GeneratedFormula>& corpus);

}  // namespace indisc
