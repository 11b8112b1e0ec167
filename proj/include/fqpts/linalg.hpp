#pragma once

#include <cstddef>
#include <vector>

#include "fqpts/field.hpp"

namespace fqpts {

using Matrix = std::vector<std::vector<FieldElement>>;

/// Rank by row-echelon elimination with exact field inverses.
std::size_t matrix_rank(const Field& field, Matrix rows);

}  // namespace fqpts
