#pragma once

#include "gzero/filter.hpp"

namespace gzero::detail {

Tri memberLine(const Filter& f, const SymSet& x);
Tri memberProduct(const Filter& f, const ProdSet& x);

NormalForm perpNF(const NormalForm& nf);
bool balancedNF(const NormalForm& nf);
/// Evaluation parameter beyond every constant of the filter and the set.
Point stableParameter(const Filter& f, Point setConstant);

}  // namespace gzero::detail
