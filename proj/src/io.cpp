#include "forge/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "forge/errors.hpp"

namespace forge {

namespace {

struct Lines {
  std::vector<std::string> data;  // non-comment, non-blank lines
  bool group_marker = false;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Lines read_lines(std::istream& in) {
  Lines lines;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line == "#group" && lines.data.empty()) lines.group_marker = true;
      continue;
    }
    lines.data.push_back(line);
  }
  return lines;
}

std::vector<long long> integers(const std::string& line, std::size_t line_no) {
  std::istringstream ss(line);
  std::vector<long long> values;
  std::string token;
  while (ss >> token) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParseError("line " + std::to_string(line_no) + ": not an integer: " + token);
    values.push_back(v);
  }
  return values;
}

Table table_from(const Lines& lines) {
  if (lines.data.empty()) throw ParseError("empty table");
  auto header = integers(lines.data[0], 1);
  if (header.size() != 1 || header[0] < 1) throw ParseError("first line must be a positive order");
  const int n = static_cast<int>(header[0]);
  if (static_cast<int>(lines.data.size()) != n + 1)
    throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(lines.data.size() - 1));
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    auto row = integers(lines.data[a + 1], a + 2);
    if (static_cast<int>(row.size()) != n) throw ParseError("row " + std::to_string(a + 1) + " has " + std::to_string(row.size()) + " entries");
    for (int b = 0; b < n; ++b) {
      if (row[b] < 1 || row[b] > n) throw ParseError("entry " + std::to_string(row[b]) + " out of range 1.." + std::to_string(n));
      t[a][b] = static_cast<int>(row[b] - 1);
    }
  }
  return t;
}

template <class F>
auto with_file(const std::string& path, F parse) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse(in);
}

}  // namespace

Table parse_table(std::istream& in) { return table_from(read_lines(in)); }

Quandle parse_quandle(std::istream& in) { return validate_quandle(parse_table(in)); }

FiniteGroup parse_group(std::istream& in) {
  Lines lines = read_lines(in);
  if (!lines.group_marker) throw ParseError("group file lacks the #group header");
  try {
    return FiniteGroup::from_table(table_from(lines));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("not a group table: ") + e.what());
  }
}

Cochain2 parse_cochain(std::istream& in) {
  Lines lines = read_lines(in);
  if (lines.data.empty()) throw ParseError("empty cocycle file");
  auto header = integers(lines.data[0], 1);
  if (header.size() != 2 || header[0] < 1 || header[1] < 1) throw ParseError("first line must be \"n m\"");
  const int n = static_cast<int>(header[0]), m = static_cast<int>(header[1]);
  if (static_cast<int>(lines.data.size()) != n + 1) throw ParseError("expected " + std::to_string(n) + " cocycle rows");
  Cochain2 f = Cochain2::zero(n, m);
  for (int x = 0; x < n; ++x) {
    auto row = integers(lines.data[x + 1], x + 2);
    if (static_cast<int>(row.size()) != n) throw ParseError("cocycle row " + std::to_string(x + 1) + " has wrong length");
    for (int y = 0; y < n; ++y) f.at(x, y) = static_cast<int>(((row[y] % m) + m) % m);
  }
  return f;
}

std::vector<BraidKnot> parse_knot_table(std::istream& in) {
  std::vector<BraidKnot> knots;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto s1 = line.find(';');
    auto s2 = s1 == std::string::npos ? s1 : line.find(';', s1 + 1);
    if (s2 == std::string::npos) throw ParseError("line " + std::to_string(line_no) + ": expected name;strands;word");
    std::string name = trim(line.substr(0, s1));
    std::string strands_text = trim(line.substr(s1 + 1, s2 - s1 - 1));
    std::string word_text = line.substr(s2 + 1);
    for (char& c : word_text)
      if (c == ',') c = ' ';
    auto strands = integers(strands_text, line_no);
    if (strands.size() != 1) throw ParseError("line " + std::to_string(line_no) + ": bad strand count");
    std::vector<int> word;
    for (long long g : integers(word_text, line_no)) word.push_back(static_cast<int>(g));
    knots.push_back(parse_braid(name, static_cast<int>(strands[0]), word));
  }
  return knots;
}

void write_table(std::ostream& out, const Table& t) {
  out << t.size() << '\n';
  for (const auto& row : t) {
    for (std::size_t b = 0; b < row.size(); ++b) out << (b ? " " : "") << row[b] + 1;
    out << '\n';
  }
}

void write_quandle(std::ostream& out, const Quandle& q) { write_table(out, q.rows()); }

void write_group(std::ostream& out, const FiniteGroup& g) {
  out << "#group\n";
  write_table(out, g.table());
}

void write_cochain(std::ostream& out, const Cochain2& f) {
  out << f.n << ' ' << f.m << '\n';
  for (int x = 0; x < f.n; ++x) {
    for (int y = 0; y < f.n; ++y) out << (y ? " " : "") << f.at(x, y);
    out << '\n';
  }
}

void write_knot_table(std::ostream& out, const std::vector<BraidKnot>& knots) {
  for (const auto& k : knots) {
    out << k.name() << ';' << k.strands() << ';';
    for (std::size_t i = 0; i < k.word().size(); ++i) out << (i ? "," : "") << k.word()[i];
    out << '\n';
  }
}

Table read_table(const std::string& path) {
  return with_file(path, [](std::istream& in) { return parse_table(in); });
}

Quandle read_quandle(const std::string& path) {
  return with_file(path, [](std::istream& in) { return parse_quandle(in); });
}

FiniteGroup read_group(const std::string& path) {
  return with_file(path, [](std::istream& in) { return parse_group(in); });
}

Cochain2 read_cochain(const std::string& path) {
  return with_file(path, [](std::istream& in) { return parse_cochain(in); });
}

std::vector<BraidKnot> read_knot_table(const std::string& path) {
  return with_file(path, [](std::istream& in) { return parse_knot_table(in); });
}

}  // namespace forge
