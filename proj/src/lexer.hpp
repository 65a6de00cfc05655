#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chainlab/errors.hpp"

namespace chainlab::detail {

enum class tok_kind { integer, name, symbol, end };

struct token {
    tok_kind kind;
    std::string text;
    std::size_t pos;
};

// Shared tokenizer for the polynomial, sentence, and ring-spec grammars.
// The UTF-8 minus sign is folded to '-'.
class lexer {
public:
    explicit lexer(const std::string& text);

    const token& peek(std::size_t ahead = 0) const;
    token next();

    bool at_end() const { return peek().kind == tok_kind::end; }
    bool peek_symbol(char c) const;
    bool peek_name(const std::string& n) const;
    bool accept_symbol(char c);
    bool accept_name(const std::string& n);
    void expect_symbol(char c);
    std::string expect_name();
    void expect_end();

    [[noreturn]] void fail(const std::string& what) const;

private:
    std::vector<token> toks_;
    std::size_t i_ = 0;
};

} // namespace chainlab::detail
