#pragma once

#include <iosfwd>
#include <vector>

#include "nilloop/loop.hpp"

namespace nilloop {

// Text table format: first line the order n, then n lines of n entries,
// then optionally one line with n element names. Anything after that is
// rejected.
FiniteLoop read_loop(std::istream& in);
void write_loop(std::ostream& out, const FiniteLoop& L);

// Triality datum: a table file without a names line, followed by one line
// with n entries (the projection onto the pinned S3 table) and one line
// with 6 entries (the section).
struct DatumFile {
  FiniteLoop G;
  std::vector<int32_t> p_map;
  std::vector<int32_t> i_map;
};
DatumFile read_datum(std::istream& in);
void write_datum(std::ostream& out, const FiniteLoop& G,
                 const std::vector<int32_t>& p_map,
                 const std::vector<int32_t>& i_map);

} // namespace nilloop
