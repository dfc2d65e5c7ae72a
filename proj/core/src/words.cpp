#include "divpow/words.hpp"

#include <algorithm>

#include "divpow/exact.hpp"

namespace divpow {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (auto l : letters_)
    if (l == 0) throw Error("letter indices start at 1");
}

Word::Letter Word::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word concat(const Word& u, const Word& v) {
  std::vector<Word::Letter> l(u.letters().begin(), u.letters().end());
  l.insert(l.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(l));
}

Word power(const Word& w, unsigned k) {
  std::vector<Word::Letter> l;
  l.reserve(w.degree() * k);
  for (unsigned i = 0; i < k; ++i) l.insert(l.end(), w.letters().begin(), w.letters().end());
  return Word(std::move(l));
}

Word cyclic_canonical(const Word& w) {
  if (w.empty()) throw Error("cyclic_canonical: empty word");
  auto letters = w.letters();
  const std::size_t d = letters.size();
  std::vector<Word::Letter> best(letters.begin(), letters.end());
  std::vector<Word::Letter> rot(d);
  for (std::size_t s = 1; s < d; ++s) {
    for (std::size_t i = 0; i < d; ++i) rot[i] = letters[(s + i) % d];
    if (rot < best) best = rot;
  }
  return Word(std::move(best));
}

std::pair<Word, unsigned> primitive_root(const Word& w) {
  if (w.empty()) throw Error("primitive_root: empty word");
  auto letters = w.letters();
  const std::size_t d = letters.size();
  for (std::size_t p = 1; p <= d; ++p) {
    if (d % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < d && periodic; ++i) periodic = letters[i] == letters[i - p];
    if (periodic)
      return {Word(std::vector<Word::Letter>(letters.begin(), letters.begin() + static_cast<long>(p))),
              static_cast<unsigned>(d / p)};
  }
  return {w, 1};  // unreachable: p = d always qualifies
}

bool is_primitive(const Word& w) {
  if (w.empty()) throw Error("is_primitive: empty word");
  return primitive_root(w).second == 1;
}

std::vector<Word> words_of_degree(unsigned m, unsigned degree) {
  std::vector<Word> out;
  if (m == 0) return out;
  std::vector<Word::Letter> cur(degree, 1);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = degree;
    while (i > 0 && cur[i - 1] == m) cur[--i] = 1;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

std::vector<Word> words_up_to(unsigned m, unsigned max_degree) {
  std::vector<Word> out;
  for (unsigned d = 1; d <= max_degree; ++d) {
    auto level = words_of_degree(m, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Necklace> necklaces_up_to(unsigned m, unsigned max_degree) {
  if (m < 1 || max_degree < 1) throw Error("necklaces_up_to: need m >= 1 and D >= 1");
  std::vector<Necklace> out;
  for (unsigned d = 1; d <= max_degree; ++d)
    for (auto& w : words_of_degree(m, d))
      if (is_primitive(w) && cyclic_canonical(w) == w) out.push_back({std::move(w), true});
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (auto l : w.letters()) {
    if (!s.empty()) s += '.';
    s += 'x' + std::to_string(l);
  }
  return s;
}

Word parse_word(std::string_view text) {
  if (text == "1") return Word();
  std::vector<Word::Letter> letters;
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size() || text[pos] != 'x') throw Error("malformed word '" + std::string(text) + "'");
    ++pos;
    std::size_t start = pos;
    unsigned long v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') v = v * 10 + static_cast<unsigned long>(text[pos++] - '0');
    if (pos == start || v == 0) throw Error("malformed word '" + std::string(text) + "'");
    letters.push_back(static_cast<Word::Letter>(v));
    if (pos == text.size()) break;
    if (text[pos] != '.') throw Error("malformed word '" + std::string(text) + "'");
    ++pos;
  }
  return Word(std::move(letters));
}

}  // namespace divpow
