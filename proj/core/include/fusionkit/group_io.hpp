#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fusionkit/permutation.hpp"

namespace fusionkit {

/// Degree plus generators, as read from or written to a group file.
///
/// File format: the first significant line holds the degree n; every later
/// non-empty line not starting with '#' is one generator, either n
/// whitespace-separated 1-based images or disjoint cycles "(1 2 3)(4 5)".
struct GroupSpec {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// Throws ParseError carrying the 1-based line number of the offending line.
GroupSpec parse_group_text(const std::string& text);
GroupSpec read_group_file(const std::string& path);

/// Cycle notation, one generator per line, with an optional leading comment.
std::string format_group_text(const GroupSpec& spec, const std::string& comment = {});
void write_group_file(const std::string& path, const GroupSpec& spec, const std::string& comment = {});

/// One generator line (images or cycles) in a group of the given degree.
Permutation parse_generator(std::size_t degree, const std::string& line);

}  // namespace fusionkit
