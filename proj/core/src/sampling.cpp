#include "divpow/sampling.hpp"

#include <algorithm>

namespace divpow {

std::vector<GammaBasisElem> basis_elements(std::uint32_t n, std::uint32_t m, std::uint32_t max_degree) {
  const auto words = words_up_to(m, max_degree);
  std::vector<GammaBasisElem> out;
  std::vector<Part> parts;
  auto recurse = [&](auto&& self, std::size_t from, std::uint32_t weight_left) -> void {
    out.emplace_back(n, parts);
    for (std::size_t w = from; w < words.size(); ++w)
      for (std::uint32_t mult = 1; mult <= weight_left; ++mult) {
        parts.emplace_back(words[w], mult);
        self(self, w + 1, weight_left - mult);
        parts.pop_back();
      }
  };
  recurse(recurse, 0, n);
  std::sort(out.begin(), out.end());
  return out;
}

Word random_word(std::mt19937_64& rng, std::uint32_t m, std::uint32_t min_degree, std::uint32_t max_degree) {
  std::uniform_int_distribution<std::uint32_t> degree(min_degree, max_degree);
  std::uniform_int_distribution<std::uint32_t> letter(1, m);
  std::vector<Word::Letter> letters(degree(rng));
  for (auto& l : letters) l = letter(rng);
  return Word(std::move(letters));
}

GammaBasisElem random_basis_elem(std::mt19937_64& rng, std::uint32_t n, std::uint32_t m, std::uint32_t max_degree) {
  std::uniform_int_distribution<std::uint32_t> weight_dist(0, n);
  std::uint32_t weight = weight_dist(rng);
  std::map<Word, std::uint32_t> parts;
  while (weight > 0) {
    std::uniform_int_distribution<std::uint32_t> mult(1, weight);
    const std::uint32_t k = mult(rng);
    parts[random_word(rng, m, 1, max_degree)] += k;
    weight -= k;
  }
  return GammaBasisElem(n, std::vector<Part>(parts.begin(), parts.end()));
}

GammaElem random_gamma_elem(std::mt19937_64& rng, std::uint32_t n, std::uint32_t m, std::uint32_t max_degree,
                            std::uint32_t max_terms) {
  std::uniform_int_distribution<std::uint32_t> count(1, std::max<std::uint32_t>(1, max_terms));
  std::uniform_int_distribution<int> coeff(-3, 3);
  GammaElem out(n);
  const std::uint32_t terms = count(rng);
  for (std::uint32_t t = 0; t < terms; ++t) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    out.add_term(random_basis_elem(rng, n, m, max_degree), c);
  }
  return out;
}

}  // namespace divpow
