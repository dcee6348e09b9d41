#pragma once

#include <string>
#include <string_view>

#include "superlie/kacmoody.hpp"

namespace superlie::cli {

/// Contents of an input file. A file whose first statement is `rank` is
/// Cartan data; anything else is a presentation:
///
///   letter <name> <parity> <rank>
///   rel <polynomial>
///
/// with blank lines and `#` comments allowed. Letters must precede the
/// relations that use them.
struct Input {
  bool cartan = false;
  CartanData data;
  RelationSet relations{std::make_shared<const Alphabet>(std::vector<GradedLetter>{})};
};

/// Throws ParseError with the line and column in `text`.
Input parse_input(std::string_view text);
Input read_input(const std::string& path);

}  // namespace superlie::cli
