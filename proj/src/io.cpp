#include "asymclust/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "asymclust/errors.hpp"
#include "asymclust/values.hpp"

namespace asymclust {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

// Data lines of the input: blank lines and '#' comments dropped.
std::vector<std::string> data_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find('\n', start), text.size());
    std::string line = trim(text.substr(start, stop - start));
    if (!line.empty() && line[0] != '#') lines.push_back(std::move(line));
    start = stop + 1;
  }
  return lines;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (start <= line.size()) {
    const std::size_t stop = std::min(line.find(sep, start), line.size());
    fields.push_back(trim(std::string_view(line).substr(start, stop - start)));
    start = stop + 1;
  }
  return fields;
}

bool all_numeric(const std::vector<std::string>& fields) {
  Value ignored;
  return std::all_of(fields.begin(), fields.end(),
                     [&](const std::string& f) { return try_parse_value(f, ignored); });
}

}  // namespace

ParsedMatrix parse_matrix_csv(std::string_view text) {
  const std::vector<std::string> lines = data_lines(text);
  if (lines.empty()) {
    throw ParseError("empty matrix input");
  }

  std::vector<std::string> first = split(lines[0], ',');
  bool has_header = !all_numeric(first);
  std::vector<std::string> labels;
  std::size_t data_start = 0;
  if (has_header) {
    // Header row: optional empty corner cell, then one label per column.
    if (!first.empty() && first.front().empty()) first.erase(first.begin());
    labels = std::move(first);
    if (labels.empty()) {
      throw ParseError("header row carries no labels");
    }
    data_start = 1;
  }

  const std::size_t n = has_header ? labels.size() : split(lines[0], ',').size();
  if (lines.size() - data_start != n) {
    throw ParseError("expected " + std::to_string(n) + " matrix rows, found " +
                     std::to_string(lines.size() - data_start));
  }
  if (!has_header) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  }

  SquareMatrix values(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> fields = split(lines[data_start + i], ',');
    if (fields.size() == n + 1) {
      // Row label column; must agree with the header.
      if (has_header && fields.front() != labels[i]) {
        throw ParseError("row " + std::to_string(i) + " labeled '" + fields.front() +
                         "', expected '" + labels[i] + "'");
      }
      fields.erase(fields.begin());
    }
    if (fields.size() != n) {
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(fields.size()) +
                       " fields, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!try_parse_value(fields[j], values(i, j))) {
        throw ParseError("row " + std::to_string(i) + ", column " + std::to_string(j) +
                         ": not a number: '" + fields[j] + "'");
      }
    }
  }
  return {std::move(labels), std::move(values)};
}

ParsedMatrix parse_edge_list(std::string_view text) {
  struct Edge {
    std::size_t src, dst;
    Value weight;
  };
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& label) {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it != labels.end()) return static_cast<std::size_t>(it - labels.begin());
    labels.push_back(label);
    return labels.size() - 1;
  };

  for (const std::string& line : data_lines(text)) {
    std::istringstream fields(line);
    std::string src, dst, weight_text;
    if (!(fields >> src >> dst >> weight_text)) {
      throw ParseError("bad edge line: '" + line + "'");
    }
    std::string extra;
    if (fields >> extra) {
      throw ParseError("trailing fields on edge line: '" + line + "'");
    }
    Value weight;
    if (!try_parse_value(weight_text, weight)) {
      throw ParseError("bad edge weight: '" + weight_text + "'");
    }
    if (!(weight > 0.0)) {
      throw ParseError("edge weight must be positive: '" + line + "'");
    }
    if (src == dst) {
      throw ParseError("self-edge not allowed: '" + line + "'");
    }
    edges.push_back({intern(src), intern(dst), weight});
  }
  if (labels.empty()) {
    throw ParseError("empty edge list");
  }

  SquareMatrix values(labels.size(), kInf);
  for (std::size_t i = 0; i < labels.size(); ++i) values(i, i) = 0.0;
  for (const Edge& e : edges) values(e.src, e.dst) = e.weight;
  return {std::move(labels), std::move(values)};
}

namespace {

ParsedMatrix parse_any(std::string_view text, InputFormat format) {
  return format == InputFormat::matrix ? parse_matrix_csv(text) : parse_edge_list(text);
}

}  // namespace

Network parse_network(std::string_view text, InputFormat format) {
  ParsedMatrix parsed = parse_any(text, format);
  return Network::validate(std::move(parsed.labels), std::move(parsed.values));
}

Ultrametric parse_ultrametric(std::string_view text, InputFormat format) {
  ParsedMatrix parsed = parse_any(text, format);
  return Ultrametric::validate(std::move(parsed.labels), std::move(parsed.values));
}

std::string write_matrix_csv(const std::vector<std::string>& labels, const SquareMatrix& m) {
  std::ostringstream out;
  for (const auto& label : labels) out << ',' << label;
  out << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << labels[i];
    for (std::size_t j = 0; j < m.size(); ++j) out << ',' << format_value(m(i, j));
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write '" + path + "'");
  }
  out << content;
}

}  // namespace asymclust
