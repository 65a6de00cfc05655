#include "lexer.hpp"

#include <cctype>

namespace chainlab::detail {

lexer::lexer(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        // UTF-8 minus sign U+2212.
        if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < n &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            toks_.push_back({tok_kind::symbol, "-", i});
            i += 3;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            toks_.push_back({tok_kind::integer, text.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                             text[j] == '_'))
                ++j;
            toks_.push_back({tok_kind::name, text.substr(i, j - i), i});
            i = j;
            continue;
        }
        static const std::string symbols = "+-*^(),=[]/:";
        if (symbols.find(c) != std::string::npos) {
            toks_.push_back({tok_kind::symbol, std::string(1, c), i});
            ++i;
            continue;
        }
        throw syntax_error("unexpected character '" + std::string(1, c) +
                           "' at position " + std::to_string(i));
    }
    toks_.push_back({tok_kind::end, "", n});
}

const token& lexer::peek(std::size_t ahead) const {
    std::size_t k = i_ + ahead;
    if (k >= toks_.size()) k = toks_.size() - 1;
    return toks_[k];
}

token lexer::next() {
    token t = toks_[i_];
    if (i_ + 1 < toks_.size()) ++i_;
    return t;
}

bool lexer::peek_symbol(char c) const {
    return peek().kind == tok_kind::symbol && peek().text[0] == c;
}

bool lexer::peek_name(const std::string& n) const {
    return peek().kind == tok_kind::name && peek().text == n;
}

bool lexer::accept_symbol(char c) {
    if (peek_symbol(c)) {
        next();
        return true;
    }
    return false;
}

bool lexer::accept_name(const std::string& n) {
    if (peek_name(n)) {
        next();
        return true;
    }
    return false;
}

void lexer::expect_symbol(char c) {
    if (!accept_symbol(c)) fail(std::string("expected '") + c + "'");
}

std::string lexer::expect_name() {
    if (peek().kind != tok_kind::name) fail("expected identifier");
    return next().text;
}

void lexer::expect_end() {
    if (!at_end()) fail("trailing input");
}

void lexer::fail(const std::string& what) const {
    throw syntax_error(what + " at position " + std::to_string(peek().pos) +
                       (peek().kind == tok_kind::end
                            ? " (end of input)"
                            : " (near '" + peek().text + "')"));
}

} // namespace chainlab::detail
