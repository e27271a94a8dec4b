// Finite group presentations with per-generator abelianization degrees, plus
// the text formats: a small word grammar and the .pres file format.
//
// Word grammar (whitespace-insensitive between tokens):
//   word := term+         term := atom ('^' signed-int)?
//   atom := generator-name | '(' word ')'
// An uppercase single letter is shorthand for the inverse of its lowercase
// generator (or macro, in .pres files).
//
// .pres file format, one item per line ('#' lines are comments):
//   gens: a b
//   deg: a=1 b=-1
//   let v = (A b)^1 (a B)^1
//   rel: a w A W
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "talex/word.hpp"

namespace talex {

struct Presentation {
    std::vector<std::string> generators;
    std::vector<int> degrees; // abelianization exponent of t per generator
    std::vector<Word> relators;

    int generator_index(const std::string& name) const;
};

// Parse error carrying a 1-based character position (word parsing) or line
// number (.pres parsing).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg), position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// Parses a word over the given generator names.
Word word_parse(const std::string& text, const std::vector<std::string>& generators);

// Parses/loads the .pres format.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);

// Writes the .pres format (relators fully expanded); parse round-trips.
std::string format_presentation(const Presentation& p);

} // namespace talex
