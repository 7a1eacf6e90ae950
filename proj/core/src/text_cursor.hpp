#pragma once

// Shared scanning helper for the ordinal and formula parsers.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "glp/error.hpp"
#include "glp/ordinal.hpp"

namespace glp::detail {

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_with(std::string_view s) {
    skip_space();
    return text_.substr(pos_).starts_with(s);
  }
  bool accept(std::string_view s) {
    if (!starts_with(s)) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Natural read_natural() {
    if (!peek_digit()) fail("expected a natural number");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Natural(std::string(text_.substr(start, pos_ - start)));
  }

  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(what + " (end of input)", pos_);
    throw ParseError(what, pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

/// ord := cnf-term ("+" cnf-term)*, consuming as much as the grammar allows.
CnfOrdinal parse_ordinal_at(TextCursor& cur);

}  // namespace glp::detail
