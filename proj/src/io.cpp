#include "mlat/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "mlat/error.hpp"

namespace mlat {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      const char ch = raw[i];
      if (ch == ' ' || ch == '\t') {
        ++i;
        continue;
      }
      if (ch == '\r') {
        throw ParseError(number, i + 1, "CR line endings are not allowed");
      }
      if (static_cast<unsigned char>(ch) < 0x21 ||
          static_cast<unsigned char>(ch) > 0x7e) {
        throw ParseError(number, i + 1, "non-ASCII or control character");
      }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r')
        ++j;
      line.tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  const Line& next(const char* expecting) {
    if (at_ >= lines_.size()) {
      const std::size_t last = lines_.empty() ? 1 : lines_.back().number + 1;
      throw ParseError(last, 1, std::string("unexpected end of input, expected ") +
                                    expecting);
    }
    return lines_[at_++];
  }
  const Line* peek() const { return at_ < lines_.size() ? &lines_[at_] : nullptr; }
  bool done() const { return at_ >= lines_.size(); }
  const Line& current_extra() const { return lines_[at_]; }

 private:
  std::vector<Line> lines_;
  std::size_t at_ = 0;
};

std::size_t parse_number(const Line& line, const Token& tok) {
  std::size_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line.number, tok.column,
                     "expected a decimal number, got '" + std::string(tok.text) + "'");
  }
  return value;
}

void expect_keyword(const Line& line, std::string_view keyword,
                    std::size_t arity) {
  if (line.tokens.front().text != keyword) {
    throw ParseError(line.number, line.tokens.front().column,
                     "expected '" + std::string(keyword) + "', got '" +
                         std::string(line.tokens.front().text) + "'");
  }
  if (line.tokens.size() != arity + 1) {
    const auto col = line.tokens.size() > arity + 1
                         ? line.tokens[arity + 1].column
                         : line.tokens.back().column;
    throw ParseError(line.number, col,
                     "'" + std::string(keyword) + "' takes " +
                         std::to_string(arity) + " argument(s)");
  }
}

}  // namespace

MultLattice parse_mlat(std::string_view text) {
  Cursor in(tokenize(text));

  const auto& header = in.next("'MLAT 1'");
  expect_keyword(header, "MLAT", 1);
  if (header.tokens[1].text != "1") {
    throw ParseError(header.number, header.tokens[1].column,
                     "unsupported MLAT version '" +
                         std::string(header.tokens[1].text) + "'");
  }

  const auto& size_line = in.next("'n <N>'");
  expect_keyword(size_line, "n", 1);
  const std::size_t n = parse_number(size_line, size_line.tokens[1]);
  if (n == 0) {
    throw ParseError(size_line.number, size_line.tokens[1].column,
                     "element count must be at least 1");
  }

  std::vector<std::string> names;
  if (const auto* p = in.peek(); p && p->tokens.front().text == "names") {
    const auto& line = in.next("names");
    expect_keyword(line, "names", n);
    for (std::size_t i = 1; i <= n; ++i) names.emplace_back(line.tokens[i].text);
  }

  expect_keyword(in.next("'leq'"), "leq", 0);
  Relation leq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = in.next("a leq row");
    if (row.tokens.size() != n) {
      throw ParseError(row.number,
                       row.tokens.size() > n ? row.tokens[n].column
                                             : row.tokens.back().column,
                       "leq row must have " + std::to_string(n) + " tokens");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& tok = row.tokens[j];
      if (tok.text != "0" && tok.text != "1") {
        throw ParseError(row.number, tok.column, "leq entries must be 0 or 1");
      }
      leq.set(i, j, tok.text == "1");
    }
  }

  expect_keyword(in.next("'mul'"), "mul", 0);
  MulTable mul;
  mul.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = in.next("a mul row");
    if (row.tokens.size() != n) {
      throw ParseError(row.number,
                       row.tokens.size() > n ? row.tokens[n].column
                                             : row.tokens.back().column,
                       "mul row must have " + std::to_string(n) + " tokens");
    }
    for (const auto& tok : row.tokens) {
      const auto v = parse_number(row, tok);
      if (v >= n) {
        throw ParseError(row.number, tok.column,
                         "element index " + std::to_string(v) + " out of range");
      }
      mul.emplace_back(static_cast<std::uint32_t>(v));
    }
  }
  if (!in.done()) {
    const auto& extra = in.current_extra();
    throw ParseError(extra.number, extra.tokens.front().column,
                     "trailing content after mul table");
  }

  try {
    return validate_quantale(build_lattice(leq, std::move(names)), std::move(mul));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(e);
  }
}

std::string emit_mlat(const MultLattice& M) {
  const std::size_t n = M.size();
  std::ostringstream out;
  out << "MLAT 1\n";
  out << "n " << n << '\n';
  if (M.lattice().has_names()) {
    out << "names";
    for (const auto& name : M.lattice().names()) out << ' ' << name;
    out << '\n';
  }
  out << "leq\n";
  for (auto a : M.elements()) {
    for (auto b : M.elements()) {
      if (b.index() != 0) out << ' ';
      out << (M.leq(a, b) ? '1' : '0');
    }
    out << '\n';
  }
  out << "mul\n";
  for (auto a : M.elements()) {
    for (auto b : M.elements()) {
      if (b.index() != 0) out << ' ';
      out << M.mul(a, b).value;
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_dot(const MultLattice& M) {
  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  for (auto x : M.elements()) {
    std::string label;
    for (char ch : M.label(x)) {
      if (ch == '"' || ch == '\\') label += '\\';
      label += ch;
    }
    out << "  n" << x.value << " [label=\"" << label << "\"];\n";
  }
  for (auto [lo, hi] : covers(M.lattice())) {
    out << "  n" << lo.value << " -> n" << hi.value << ";\n";
  }
  out << "}\n";
  return out.str();
}

MultLattice read_mlat_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_mlat(buf.str());
}

}  // namespace mlat
