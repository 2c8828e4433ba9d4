#include "secanta/ket.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>

namespace secanta {

namespace {

using Terms = std::vector<std::pair<cd, std::string>>;

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Terms parse() {
    Terms out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    if (out.empty()) fail("empty expression");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ErrorCode::SyntaxError, pos_, what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool accept_word(const char* word) {
    skip_ws();
    std::size_t n = 0;
    while (word[n] != '\0') ++n;
    if (text_.compare(pos_, n, word) != 0) return false;
    pos_ += n;
    return true;
  }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  Terms expr() {
    Terms out;
    double sign = 1.0;
    if (accept('-'))
      sign = -1.0;
    else
      accept('+');
    while (true) {
      Terms t = term();
      for (auto& [c, label] : t) out.emplace_back(sign * c, std::move(label));
      if (accept('+'))
        sign = 1.0;
      else if (accept('-'))
        sign = -1.0;
      else
        break;
    }
    return out;
  }

  // term := factor+ where each factor may carry a leading coefficient.
  Terms term() {
    Terms acc{{cd(1.0), std::string()}};
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      const char c = text_[pos_];
      if (any && (c == '+' || c == '-' || c == ')')) break;
      if (any && c == '*') {
        ++pos_;
        continue;
      }
      cd coeff = 1.0;
      bool had_coeff = false;
      if (auto z = coefficient()) {
        coeff = *z;
        had_coeff = true;
      }
      Terms f = factor(had_coeff);
      Terms next;
      next.reserve(acc.size() * f.size());
      for (const auto& [ca, la] : acc)
        for (const auto& [cb, lb] : f) next.emplace_back(ca * coeff * cb, la + lb);
      acc = std::move(next);
      any = true;
    }
    if (!any) fail("expected a ket or a parenthesized group");
    return acc;
  }

  Terms factor(bool after_coeff) {
    skip_ws();
    if (accept('|')) {
      std::string label;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) label += text_[pos_++];
      if (label.empty()) fail("ket label must contain digits");
      if (!accept('>')) fail("expected '>' closing the ket");
      return {{cd(1.0), label}};
    }
    if (accept('(')) {
      Terms inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(after_coeff ? "coefficient must be followed by a ket or group" : "expected a ket or a parenthesized group");
  }

  std::optional<double> real_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    // Optional exponent, only when digits follow.
    if (pos_ > start && pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    if (pos_ == start) return std::nullopt;
    const std::string token = text_.substr(start, pos_ - start);
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size()) {
      pos_ = start;
      fail("malformed number '" + token + "'");
    }
    return v;
  }

  // atom := literal | 'sqrt(' literal ')'
  std::optional<double> atom() {
    const std::size_t save = pos_;
    if (accept_word("sqrt")) {
      if (!accept('(')) fail("expected '(' after sqrt");
      auto v = real_literal();
      if (!v) fail("expected a number inside sqrt()");
      if (!accept(')')) fail("expected ')' closing sqrt");
      return std::sqrt(*v);
    }
    pos_ = save;
    return real_literal();
  }

  // number := atom ('/' atom)?
  std::optional<double> number() {
    auto v = atom();
    if (!v) return std::nullopt;
    const std::size_t save = pos_;
    if (accept('/')) {
      auto d = atom();
      if (!d) {
        pos_ = save;
        fail("expected a divisor after '/'");
      }
      return *v / *d;
    }
    return v;
  }

  // coeff := number ['i'] | 'i' | '(' number ('+'|'-') number 'i' ')'
  std::optional<cd> coefficient() {
    skip_ws();
    const std::size_t save = pos_;
    if (accept('(')) {
      if (auto re = number()) {
        double sign = 0.0;
        if (accept('+'))
          sign = 1.0;
        else if (accept('-'))
          sign = -1.0;
        if (sign != 0.0) {
          auto im = number();
          if (im && accept('i') && accept(')')) return cd(*re, sign * *im);
        }
      }
      pos_ = save;
      return std::nullopt;
    }
    if (auto v = number()) {
      if (accept('i')) return cd(0.0, *v);
      return cd(*v, 0.0);
    }
    if (accept('i')) return cd(0.0, 1.0);
    return std::nullopt;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

KetExpr parse_ket_expr(const std::string& text) { return KetExpr{Parser(text).parse()}; }

Tensor parse_ket(const std::string& text, const SystemSpec& spec) {
  const KetExpr parsed = parse_ket_expr(text);
  const auto particles = static_cast<std::size_t>(spec.particles());
  SparseEntries entries;
  for (const auto& [coeff, label] : parsed.terms) {
    if (label.size() != particles)
      throw Error(ErrorCode::LabelLengthMismatch, "label |" + label + "> has " + std::to_string(label.size()) +
                                                      " digits, system has " + std::to_string(particles) +
                                                      " particles");
    MultiIndex idx;
    for (std::size_t j = 0; j < label.size(); ++j) {
      const int digit = label[j] - '0';
      if (digit >= spec.local_dim(static_cast<int>(j)))
        throw Error(ErrorCode::DigitOutOfRange, "digit " + std::to_string(digit) + " in |" + label +
                                                    "> exceeds local dimension " +
                                                    std::to_string(spec.local_dim(static_cast<int>(j))));
      if (spec.kind() == Kind::Fermionic)
        for (int prev : idx)
          if (prev == digit) throw Error(ErrorCode::FermionRepeatedDigit, "label |" + label + "> repeats a digit");
      idx.push_back(digit);
    }
    entries.emplace_back(std::move(idx), coeff);
  }
  return make_tensor(spec, entries);
}

std::string format_ket(const Tensor& t) {
  const auto indices = packed_indices(t.spec());
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const cd v = t.entries()[static_cast<Eigen::Index>(i)];
    if (v == cd(0.0)) continue;
    std::string label = "|";
    for (int k : indices[i]) label += static_cast<char>('0' + k);
    label += ">";

    std::string coeff;
    bool negative = false;
    if (v.imag() == 0.0) {
      negative = v.real() < 0.0;
      const double mag = std::abs(v.real());
      if (mag != 1.0) coeff = format_real(mag);
    } else if (v.real() == 0.0) {
      negative = v.imag() < 0.0;
      const double mag = std::abs(v.imag());
      coeff = (mag == 1.0 ? std::string() : format_real(mag)) + "i";
    } else {
      coeff = "(" + format_real(v.real()) + (v.imag() < 0.0 ? "-" : "+") + format_real(std::abs(v.imag())) + "i)";
    }
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += coeff + label;
  }
  return out.empty() ? "0" : out;
}

}  // namespace secanta
