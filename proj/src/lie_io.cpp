#include "lielab/lie_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace lielab {

namespace {

std::string_view strip(std::string_view s) {
  const auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_index(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

LieAlgebra parse_lie(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw_line;
  int line_no = 0;
  int dim = -1;
  std::string name;
  bool seen_bracket = false;
  RawBrackets raw;
  std::set<std::tuple<int, int, int>> seen;
  while (std::getline(in, raw_line)) {
    ++line_no;
    const auto line = strip(raw_line);
    if (line.empty()) continue;
    std::istringstream fields{std::string(line)};
    std::string head;
    fields >> head;
    if (dim < 0) {
      if (head != "dim") throw ParseError(line_no, "first line must be 'dim N'");
      std::string n, extra;
      if (!(fields >> n) || (fields >> extra)) throw ParseError(line_no, "expected 'dim N'");
      dim = parse_index(n, line_no);
      if (dim < 1) throw ParseError(line_no, "dimension must be positive");
      continue;
    }
    if (head == "name") {
      if (seen_bracket || !name.empty()) throw ParseError(line_no, "'name' must directly follow 'dim'");
      std::string rest;
      std::getline(fields, rest);
      name = std::string(strip(rest));
      if (name.empty()) throw ParseError(line_no, "empty name");
      continue;
    }
    std::string tj, tk, tc, extra;
    if (!(fields >> tj >> tk >> tc) || (fields >> extra))
      throw ParseError(line_no, "expected 'i j k coefficient'");
    const int i = parse_index(head, line_no), j = parse_index(tj, line_no), k = parse_index(tk, line_no);
    for (int idx : {i, j, k})
      if (idx < 1 || idx > dim) throw ParseError(line_no, "index " + std::to_string(idx) + " outside 1.." + std::to_string(dim));
    if (i >= j) throw ParseError(line_no, "bracket lines need i < j");
    if (!seen.insert({i, j, k}).second) throw ParseError(line_no, "duplicate entry for (i,j,k)");
    Rational c;
    try {
      c = parse_rational(tc);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    seen_bracket = true;
    if (c != 0) raw[{i, j}].emplace_back(k, c);
  }
  if (dim < 0) throw ParseError(line_no, "missing 'dim N'");
  return LieAlgebra::validate(raw, dim, name);
}

LieAlgebra read_lie_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_lie(ss.str());
}

std::string write_lie(const LieAlgebra& g) {
  std::ostringstream out;
  out << "dim " << g.dim() << "\n";
  if (!g.name().empty()) out << "name " << g.name() << "\n";
  for (const auto& [key, terms] : g.brackets())
    for (const auto& [k, c] : terms) out << key.first << " " << key.second << " " << k << " " << c.get_str() << "\n";
  return out.str();
}

std::string structure_hash(const LieAlgebra& g) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : write_lie(g)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lielab
