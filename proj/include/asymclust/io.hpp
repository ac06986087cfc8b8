#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "asymclust/network.hpp"
#include "asymclust/ultrametric.hpp"

namespace asymclust {

enum class InputFormat {
  matrix,  // dense CSV, optional label header row / label column
  edges,   // src<TAB>dst<TAB>weight lines; absent pairs are +inf
};

/// Labels plus raw square matrix, before any network/ultrametric
/// validation. Labels are synthesized as "0","1",... when the input has
/// no header.
struct ParsedMatrix {
  std::vector<std::string> labels;
  SquareMatrix values;
};

/// Dense CSV. A header row is recognized when the first line contains a
/// non-numeric field; data rows may repeat the label in their first
/// column. Blank lines and '#' comment lines are skipped.
/// Throws ParseError.
ParsedMatrix parse_matrix_csv(std::string_view text);

/// One `src<TAB>dst<TAB>weight` edge per line (spaces work too); nodes
/// ordered by first appearance; missing ordered pairs become +inf.
/// Throws ParseError on syntax and on weight <= 0 or self-edges.
ParsedMatrix parse_edge_list(std::string_view text);

Network parse_network(std::string_view text, InputFormat format);
Ultrametric parse_ultrametric(std::string_view text, InputFormat format);

/// Dense CSV with a label header row and label-prefixed rows; numbers as
/// shortest round-trip decimals so re-reading reproduces values exactly.
std::string write_matrix_csv(const std::vector<std::string>& labels, const SquareMatrix& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace asymclust
