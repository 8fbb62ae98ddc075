#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace charvar {

enum class Generator : std::uint8_t { First, Second };

struct Letter {
  Generator gen;
  int exp;  // nonzero

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the free group on two generators. Construction keeps the letters
/// as given; reduce() produces the freely reduced form.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static FreeWord first(int exp = 1) { return FreeWord({{Generator::First, exp}}); }
  static FreeWord second(int exp = 1) { return FreeWord({{Generator::Second, exp}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  /// Sum of |exponent| over the letters.
  int length() const;
  bool is_reduced() const;

  FreeWord inverse() const;
  FreeWord power(int n) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

FreeWord reduce(const FreeWord& word);
FreeWord reverse(const FreeWord& word);
/// Cyclic rotation by k single letters (exponents split as needed).
FreeWord rotate(const FreeWord& word, int k);
/// Expands every letter into |exp| unit letters.
FreeWord expand_unit_letters(const FreeWord& word);

/// Parses whitespace-separated letters with optional ^exponent, e.g. "a w^-1 a w".
/// Throws ParseError on unknown names or malformed exponents.
FreeWord parse_word(std::string_view text, std::string_view first_name = "a",
                    std::string_view second_name = "b");
std::string to_string(const FreeWord& word, std::string_view first_name = "a",
                      std::string_view second_name = "b");

}  // namespace charvar
