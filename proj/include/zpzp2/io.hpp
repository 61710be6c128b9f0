#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zpzp2/code.hpp"
#include "zpzp2/construct.hpp"
#include "zpzp2/gray.hpp"

namespace zpzp2 {

struct CodeFile {
    Prime p;
    Shape shape;
    std::vector<MixedWord> rows;
};

// JSON code files: {"alpha": A, "beta": B, "p": P, "rows": [[...], ...]},
// each row alpha + beta integers (X entries in [0,p), Y entries in [0,p^2)).
// Serialization is key-sorted and therefore byte-stable.
CodeFile parse_code_json(const std::string& text);
CodeFile load_code_file(const std::string& path);
std::string code_to_json(Prime p, Shape shape, const std::vector<MixedWord>& rows);
void save_code_file(const std::string& path, Prime p, Shape shape,
                    const std::vector<MixedWord>& rows);

// Word literal "x_1,...,x_alpha|y_1,...,y_beta"; either side may be empty.
// The shape is inferred from the literal.
MixedWord parse_word_literal(Prime p, const std::string& text);

std::string format_gray(const GrayWord& g);              // "2,1,2,0,0,0,0"
std::string format_type(const CodeType& t);              // "(2,10;2,4;1)"
std::string format_exponent_size(Prime p, int exponent); // "3^10"

// CSV grid, header "k\r,<ranks ascending>", one row per kernel dimension
// descending, cells 1/0, "\n" line ends.
std::string render_table_csv(const AchievabilityTable& table);

}  // namespace zpzp2
