#pragma once

#include <cstdint>
#include <string>

#include "rgood/json_io.hpp"

namespace rgood::cli {

// Desk-scale reproduction table: one group of rows per acceptance criterion.
// Output depends only on the seed; `jobs` affects wall time alone.
Json reproduction_table(int jobs, std::uint64_t seed);

// Fixed-width text rendering of reproduction_table.
std::string table_text(const Json& table);

}  // namespace rgood::cli
