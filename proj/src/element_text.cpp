#include <cctype>
#include <string>

#include "adlvkit/affine_weyl.hpp"
#include "adlvkit/errors.hpp"

namespace adlv {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0 || c == '*'; }

int read_index(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw ParseError("expected an index", start);
  return std::stoi(std::string(text.substr(start, pos - start)));
}

}  // namespace

AffineElement AffineWeyl::parse(std::string_view text) const {
  AffineElement x = identity();
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    any = true;
    if (text.compare(pos, 3, "tau") == 0) {
      pos += 3;
      const int k = read_index(text, pos);
      if (k > rank()) throw ParseError("tau index out of range", start);
      const auto t = tau(k);
      if (!t)
        throw ParseError("tau" + std::to_string(k) + " is not available for lattice " +
                             datum_->name(),
                         start);
      x = multiply(x, *t);
    } else if (text[pos] == 's') {
      ++pos;
      const int k = read_index(text, pos);
      if (k >= num_simple()) throw ParseError("reflection index out of range", start);
      x = multiply(x, simples_[k]);
    } else if (text[pos] == 't') {
      ++pos;
      if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
      ++pos;
      Vec lambda{};
      int count = 0;
      for (;;) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        std::size_t num_start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == num_start || (pos == num_start + 1 && !std::isdigit(static_cast<unsigned char>(text[num_start]))))
          throw ParseError("expected an integer", num_start);
        if (count >= dim()) throw ParseError("too many coordinates", num_start);
        lambda[count++] = std::stoi(std::string(text.substr(num_start, pos - num_start)));
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        throw ParseError("expected ',' or ')'", pos);
      }
      if (count != dim())
        throw ParseError("translation needs " + std::to_string(dim()) + " coordinates", start);
      x = multiply(x, translation(lambda));
    } else if (text[pos] == '1' && (pos + 1 == text.size() || is_space(text[pos + 1]))) {
      ++pos;
    } else {
      throw ParseError("unknown generator", start);
    }
  }
  if (!any) throw ParseError("empty element", 0);
  return x;
}

std::string AffineWeyl::format(const AffineElement& x) const {
  std::string out;
  if (!is_zero(x.translation)) {
    out += "t(";
    for (int i = 0; i < dim(); ++i) {
      if (i) out += ',';
      out += std::to_string(x.translation[i]);
    }
    out += ')';
  }
  for (int i : datum_->reduced_word(x.finite)) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(i);
  }
  return out.empty() ? "1" : out;
}

std::string AffineWeyl::format_word(const AffineElement& x) const {
  AffineElement omega;
  const auto word = reduced_affine_word(x, &omega);
  std::string out;
  for (int i : word) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(i);
  }
  if (omega != identity()) {
    if (!out.empty()) out += ' ';
    const auto j = tau_index(omega);
    out += j ? "tau" + std::to_string(*j) : format(omega);
  }
  return out.empty() ? "1" : out;
}

}  // namespace adlv
