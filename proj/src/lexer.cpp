#include "alignlint/lexer.hpp"

#include <array>

namespace alignlint {

namespace {

constexpr std::array<std::string_view, 15> kKeywords = {
    "process",     "activity", "application", "datasource", "entity",
    "attribute",   "os",       "technology",  "criticality", "supported_by",
    "uses",        "functionality", "quality", "runs_on",    "accesses",
};

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_id_start(char c) { return is_letter(c); }
bool is_id_char(char c) { return is_letter(c) || is_digit(c) || c == '_'; }

// UTF-8 continuation bytes do not advance the column.
bool is_continuation_byte(char c) { return (static_cast<unsigned char>(c) & 0xC0) == 0x80; }

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool at_end() const { return offset_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return offset_ + ahead < text_.size() ? text_[offset_ + ahead] : '\0';
    }
    std::size_t offset() const { return offset_; }
    SourcePos pos() const { return SourcePos{line_, column_}; }

    void advance() {
        if (at_end()) return;
        const char c = text_[offset_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else if (!is_continuation_byte(c)) {
            ++column_;
        }
    }

private:
    std::string_view text_;
    std::size_t offset_ = 0;
    int line_ = 1;
    int column_ = 1;
};

}  // namespace

bool is_keyword(std::string_view word) {
    for (std::string_view k : kKeywords) {
        if (k == word) return true;
    }
    return false;
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    Cursor cur(text);

    auto emit = [&](TokenType type, SourcePos pos, std::size_t start) {
        tokens.push_back(Token{type, std::string(text.substr(start, cur.offset() - start)), pos,
                               start, cur.offset() - start});
    };

    while (!cur.at_end()) {
        const char c = cur.peek();
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            cur.advance();
            continue;
        }
        if (c == '#') {
            while (!cur.at_end() && cur.peek() != '\n') cur.advance();
            continue;
        }

        const SourcePos pos = cur.pos();
        const std::size_t start = cur.offset();

        if (is_id_start(c)) {
            while (!cur.at_end() && is_id_char(cur.peek())) cur.advance();
            const auto word = text.substr(start, cur.offset() - start);
            emit(is_keyword(word) ? TokenType::keyword : TokenType::identifier, pos, start);
            continue;
        }
        if (is_digit(c)) {
            while (!cur.at_end() && is_digit(cur.peek())) cur.advance();
            bool malformed = false;
            if (cur.peek() == '.') {
                if (is_digit(cur.peek(1))) {
                    cur.advance();
                    while (!cur.at_end() && is_digit(cur.peek())) cur.advance();
                } else {
                    cur.advance();  // digits followed by a bare dot: bad literal
                    malformed = true;
                }
            }
            if (is_id_char(cur.peek())) {
                while (!cur.at_end() && is_id_char(cur.peek())) cur.advance();
                malformed = true;
            }
            emit(malformed ? TokenType::bad : TokenType::number, pos, start);
            continue;
        }

        TokenType type;
        switch (c) {
            case '{': type = TokenType::lbrace; break;
            case '}': type = TokenType::rbrace; break;
            case ',': type = TokenType::comma; break;
            case ':': type = TokenType::colon; break;
            case '.': type = TokenType::dot; break;
            default: type = TokenType::bad; break;
        }
        cur.advance();
        if (type == TokenType::bad) {
            // Swallow the rest of a multi-byte sequence so the bad token is
            // one character, not one byte.
            while (!cur.at_end() && is_continuation_byte(cur.peek())) cur.advance();
        }
        emit(type, pos, start);
    }

    tokens.push_back(Token{TokenType::end_of_input, "", cur.pos(), cur.offset(), 0});
    return tokens;
}

}  // namespace alignlint
