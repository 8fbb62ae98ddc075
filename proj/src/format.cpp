#include "charvar/format.hpp"

#include <cctype>
#include <sstream>

#include "charvar/errors.hpp"

namespace charvar {

namespace {

std::string monomial_text(const VarSet& vars, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.names[i];
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const std::string mono = monomial_text(*p.vars(), e);
    const Rational mag = abs(c);
    std::string body;
    if (mono.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.get_str() + "*" + mono;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string to_string(const RationalFunction& f) {
  if (f.is_polynomial()) {
    MultiPoly p = f.num();
    p *= 1 / f.den().constant_term();
    return to_string(p);
  }
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Vars& vars) : text_(text), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse_poly: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  MultiPoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    MultiPoly base = atom();
    if (accept('^')) {
      const int k = integer();
      if (k >= 0) return base.pow(k);
      if (base.terms().size() != 1) fail("negative power of a non-monomial");
      const auto& [e, c] = *base.terms().begin();
      Exponents neg(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
      MultiPoly inv = MultiPoly::monomial(vars_, neg, 1 / c);
      return inv.pow(-k);
    }
    return base;
  }

  int integer() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const int value = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return negative ? -value : value;
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Rational value(digits());
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected denominator");
        }
        mpz_class den = digits();
        if (den == 0) fail("zero denominator");
        value /= Rational(den);
      }
      return MultiPoly::constant(vars_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (!vars_->index_of(name)) fail("unknown variable '" + name + "'");
      return MultiPoly::variable(vars_, name);
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const Vars& vars_;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const Vars& vars) { return Parser(text, vars).parse(); }

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json j;
  j["vars"] = p.vars()->names;
  std::vector<std::string> laurent;
  for (std::size_t i = 0; i < p.num_vars(); ++i) {
    if (p.vars()->laurent[i]) laurent.push_back(p.vars()->names[i]);
  }
  j["laurent"] = laurent;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  j["terms"] = std::move(terms);
  return j;
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  try {
    auto names = j.at("vars").get<std::vector<std::string>>();
    std::vector<std::string> laurent;
    if (j.contains("laurent")) laurent = j.at("laurent").get<std::vector<std::string>>();
    MultiPoly p(make_vars(std::move(names), std::move(laurent)));
    for (const auto& t : j.at("terms")) {
      auto e = t.at("exp").get<Exponents>();
      if (e.size() != p.num_vars()) throw ParseError("poly_from_json: exponent vector has wrong length");
      const mpz_class num(t.at("num").get<std::string>());
      const mpz_class den(t.at("den").get<std::string>());
      if (den == 0) throw ParseError("poly_from_json: zero denominator");
      Rational c(num, den);
      c.canonicalize();
      p.add_term(e, c);
    }
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("poly_from_json: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    if (dynamic_cast<const ParseError*>(&ex)) throw;
    throw ParseError(std::string("poly_from_json: ") + ex.what());
  }
}

}  // namespace charvar
