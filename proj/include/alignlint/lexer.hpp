#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "alignlint/raw_model.hpp"

namespace alignlint {

enum class TokenType {
    identifier,
    keyword,
    number,
    lbrace,
    rbrace,
    comma,
    colon,
    dot,
    bad,  // unrecognized character or malformed literal
    end_of_input,
};

struct Token {
    TokenType type = TokenType::end_of_input;
    std::string text;
    SourcePos pos;
    std::size_t offset = 0;  // byte offset into the source
    std::size_t length = 0;  // byte length
};

/// Structural keywords are reserved and may not be used as element ids.
/// Value words (criticality levels, qualifiers, quality factor names) lex
/// as plain identifiers and are interpreted by the parser in context.
bool is_keyword(std::string_view word);

/// Splits source text into tokens. Never fails: unknown characters and
/// malformed number literals become `bad` tokens carrying their position.
/// The final token is always end_of_input.
std::vector<Token> tokenize(std::string_view text);

}  // namespace alignlint
