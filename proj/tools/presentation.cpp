#include "presentation.hpp"

#include <fstream>
#include <sstream>

#include "superlie/error.hpp"

namespace superlie::cli {

namespace {

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::size_t first_token(std::string_view line) {
  return line.find_first_not_of(" \t\r");
}

}  // namespace

Input parse_input(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t number = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto line = strip_comment(text.substr(pos, end - pos));
    if (first_token(line) != std::string_view::npos) lines.emplace_back(number, line);
    pos = end + 1;
  }

  Input in;
  if (!lines.empty()) {
    auto line = lines.front().second;
    if (line.substr(first_token(line)).starts_with("rank")) {
      in.cartan = true;
      in.data = CartanData::parse(text);
      return in;
    }
  }

  std::vector<GradedLetter> letters;
  std::size_t k = 0;
  for (; k < lines.size(); ++k) {
    auto [row, line] = lines[k];
    auto start = first_token(line);
    if (!line.substr(start).starts_with("letter")) break;
    std::istringstream fields{std::string(line.substr(start + 6))};
    GradedLetter g;
    if (!(fields >> g.name >> g.parity >> g.rank))
      throw ParseError("expected 'letter <name> <parity> <rank>'", row, start + 1);
    std::string extra;
    if (fields >> extra) throw ParseError("trailing text after letter", row, start + 1);
    letters.push_back(g);
  }
  AlphabetPtr x;
  try {
    x = std::make_shared<const Alphabet>(std::move(letters));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), k == 0 ? 1 : lines[k - 1].first, 1);
  }

  in.relations = RelationSet(x);
  for (; k < lines.size(); ++k) {
    auto [row, line] = lines[k];
    auto start = first_token(line);
    auto body = line.substr(start);
    if (!body.starts_with("rel") || (body.size() > 3 && body[3] != ' ' && body[3] != '\t'))
      throw ParseError("expected 'rel <polynomial>'", row, start + 1);
    std::size_t offset = start + 3;
    SuperPolynomial p;
    try {
      p = parse_polynomial(line.substr(offset), x);
    } catch (const ParseError& e) {
      // Shift the single-line position into the file.
      std::string what = e.what();
      throw ParseError(what.substr(what.find(": ") + 2), row, offset + e.column());
    } catch (const Error& e) {
      throw ParseError(e.what(), row, start + 1);
    }
    if (p.is_zero()) throw ParseError("zero relation", row, start + 1);
    in.relations.add(p, is_lie_element(p), "line " + std::to_string(row));
  }
  return in;
}

Input read_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::parse_error, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_input(buf.str());
}

}  // namespace superlie::cli
