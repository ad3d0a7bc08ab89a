#pragma once

// Text form of a step function: "t_0 v_1 t_1 v_2 ... t_k" with exact
// fractions, e.g. "0 1 1/2 2 1". Values that are themselves step functions
// are written in brackets: "0 [0 1 1/2 2 1] 1/3 [0 2 1] 1".

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hmkit/error.hpp"
#include "hmkit/step_fn.hpp"

namespace hmkit {

template <class V, class Fmt>
std::string to_text(const StepFn<V>& f, Fmt&& fmt_value) {
  std::string out = f.breakpoints().front().str();
  for (std::size_t i = 0; i < f.pieces(); ++i) {
    out += ' ';
    out += fmt_value(f.values()[i]);
    out += ' ';
    out += f.piece_end(i).str();
  }
  return out;
}

/// Whitespace-separated tokens; '[' and ']' are always tokens of their own.
class TextReader {
 public:
  explicit TextReader(std::string_view text) {
    std::string cur;
    const auto flush = [&] {
      if (!cur.empty()) tokens_.push_back(std::move(cur));
      cur.clear();
    };
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else if (c == '[' || c == ']') {
        flush();
        tokens_.emplace_back(1, c);
      } else {
        cur += c;
      }
    }
    flush();
  }

  bool done() const { return pos_ == tokens_.size(); }
  const std::string& peek() const {
    if (done()) throw Error("unexpected end of step-function text");
    return tokens_[pos_];
  }
  std::string next() {
    std::string t = peek();
    ++pos_;
    return t;
  }
  void expect(std::string_view tok) {
    if (next() != tok) throw Error("expected '" + std::string(tok) + "' in step-function text");
  }

 private:
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

/// Reads one step function; parse_value(reader) consumes exactly one value.
/// Stops before a closing ']' or at end of input.
template <class Parse>
auto read_step_fn(TextReader& in, Parse&& parse_value)
    -> StepFn<std::decay_t<std::invoke_result_t<Parse&, TextReader&>>> {
  using V = std::decay_t<std::invoke_result_t<Parse&, TextReader&>>;
  std::vector<Rat> breaks{Rat::parse(in.next())};
  std::vector<V> values;
  while (!in.done() && in.peek() != "]") {
    values.push_back(parse_value(in));
    breaks.push_back(Rat::parse(in.next()));
  }
  return StepFn<V>::canonicalize(std::move(breaks), std::move(values));
}

template <class Parse>
auto parse_step_fn(std::string_view text, Parse&& parse_value) {
  TextReader in(text);
  auto f = read_step_fn(in, parse_value);
  if (!in.done()) throw Error("trailing tokens in step-function text");
  return f;
}

}  // namespace hmkit
