#pragma once

// Monomials of the free algebra Z<x1..xm> and their cyclic classes.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace divpow {

/// A word in the letters x1..xm, stored as 1-based letter indices. The empty
/// word is the unit monomial 1. Words are ordered by degree, then
/// lexicographically on letter indices.
class Word {
 public:
  using Letter = std::uint32_t;

  Word() = default;
  explicit Word(std::vector<Letter> letters);
  static Word letter(Letter k) { return Word({k}); }

  std::span<const Letter> letters() const { return letters_; }
  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter max_letter() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& l, const Word& r) {
    if (auto c = l.letters_.size() <=> r.letters_.size(); c != 0) return c;
    return l.letters_ <=> r.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& u, const Word& v);
Word power(const Word& w, unsigned k);

/// Least rotation. Throws on the empty word.
Word cyclic_canonical(const Word& w);

/// True iff w is not u^k for some k >= 2. Throws on the empty word.
bool is_primitive(const Word& w);

/// (f, k) with w = f^k and f primitive. Throws on the empty word.
std::pair<Word, unsigned> primitive_root(const Word& w);

struct Necklace {
  Word word;  // least rotation of its class
  bool primitive = false;

  friend bool operator==(const Necklace&, const Necklace&) = default;
};

/// Primitive necklaces of degree 1..max_degree over m letters, sorted by
/// (degree, lex).
std::vector<Necklace> necklaces_up_to(unsigned m, unsigned max_degree);

std::vector<Word> words_of_degree(unsigned m, unsigned degree);
/// Words of degree 1..max_degree in the Word order.
std::vector<Word> words_up_to(unsigned m, unsigned max_degree);

/// "x1.x2.x1"; the empty word prints as "1".
std::string to_string(const Word& w);
Word parse_word(std::string_view text);

}  // namespace divpow
