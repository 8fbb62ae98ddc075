#include "charvar/freeword.hpp"

#include <cstdlib>
#include <sstream>

#include "charvar/errors.hpp"

namespace charvar {

int FreeWord::length() const {
  int n = 0;
  for (const auto& l : letters_) n += std::abs(l.exp);
  return n;
}

bool FreeWord::is_reduced() const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].exp == 0) return false;
    if (i > 0 && letters_[i].gen == letters_[i - 1].gen) return false;
  }
  return true;
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = -l.exp;
  return FreeWord(std::move(out));
}

FreeWord FreeWord::power(int n) const {
  const FreeWord base = n >= 0 ? *this : inverse();
  std::vector<Letter> out;
  for (int i = 0; i < std::abs(n); ++i) {
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  }
  return FreeWord(std::move(out));
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(std::move(out));
}

FreeWord reduce(const FreeWord& word) {
  std::vector<Letter> stack;
  for (const auto& l : word.letters()) {
    if (l.exp == 0) continue;
    if (!stack.empty() && stack.back().gen == l.gen) {
      stack.back().exp += l.exp;
      if (stack.back().exp == 0) stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return FreeWord(std::move(stack));
}

FreeWord reverse(const FreeWord& word) {
  return FreeWord(std::vector<Letter>(word.letters().rbegin(), word.letters().rend()));
}

FreeWord expand_unit_letters(const FreeWord& word) {
  std::vector<Letter> out;
  for (const auto& l : word.letters()) {
    const int unit = l.exp > 0 ? 1 : -1;
    for (int i = 0; i < std::abs(l.exp); ++i) out.push_back({l.gen, unit});
  }
  return FreeWord(std::move(out));
}

FreeWord rotate(const FreeWord& word, int k) {
  const FreeWord units = expand_unit_letters(word);
  const int n = static_cast<int>(units.letters().size());
  if (n == 0) return word;
  const int shift = ((k % n) + n) % n;
  std::vector<Letter> out(units.letters().begin() + shift, units.letters().end());
  out.insert(out.end(), units.letters().begin(), units.letters().begin() + shift);
  return reduce(FreeWord(std::move(out)));
}

FreeWord parse_word(std::string_view text, std::string_view first_name, std::string_view second_name) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::string name = token;
    int exp = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      const std::string e = token.substr(caret + 1);
      char* end = nullptr;
      const long v = std::strtol(e.c_str(), &end, 10);
      if (e.empty() || *end != '\0' || v == 0) throw ParseError("parse_word: bad exponent in '" + token + "'");
      exp = static_cast<int>(v);
    }
    if (name == first_name) {
      letters.push_back({Generator::First, exp});
    } else if (name == second_name) {
      letters.push_back({Generator::Second, exp});
    } else {
      throw ParseError("parse_word: unknown generator '" + name + "'");
    }
  }
  return FreeWord(std::move(letters));
}

std::string to_string(const FreeWord& word, std::string_view first_name, std::string_view second_name) {
  std::string out;
  for (const auto& l : word.letters()) {
    if (!out.empty()) out += ' ';
    out += l.gen == Generator::First ? first_name : second_name;
    if (l.exp != 1) out += '^' + std::to_string(l.exp);
  }
  return out;
}

}  // namespace charvar
