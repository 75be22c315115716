#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stonework/bitvec.hpp"
#include "stonework/term.hpp"

namespace stonework::boolalg::detail {

using GenIndex = std::unordered_map<std::string, std::size_t>;

GenIndex make_index(const std::vector<std::string>& gens);

/// Evaluates `t` pointwise given one column per generator.
BitVec eval_columns(const Term& t, const GenIndex& index, std::span<const BitVec> columns,
                    std::size_t width);

/// Columns of the generators over all 2^n assignments, key-indexed.
std::vector<BitVec> assignment_columns(std::size_t n);

}  // namespace stonework::boolalg::detail
