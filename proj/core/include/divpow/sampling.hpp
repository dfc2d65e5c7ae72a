#pragma once

// Exhaustive enumeration and seeded random sampling of Gamma^n(F) elements.

#include <cstdint>
#include <random>
#include <vector>

#include "divpow/gamma.hpp"

namespace divpow {

/// Every basis element of Gamma^n(F) over m letters whose words have degree
/// <= max_degree (weight 0..n), in the GammaBasisElem order.
std::vector<GammaBasisElem> basis_elements(std::uint32_t n, std::uint32_t m, std::uint32_t max_degree);

Word random_word(std::mt19937_64& rng, std::uint32_t m, std::uint32_t min_degree, std::uint32_t max_degree);

/// Random basis element with weight 0..n and word degrees 1..max_degree.
GammaBasisElem random_basis_elem(std::mt19937_64& rng, std::uint32_t n, std::uint32_t m, std::uint32_t max_degree);

/// Random combination of up to `max_terms` basis elements with coefficients
/// in [-3, 3].
GammaElem random_gamma_elem(std::mt19937_64& rng, std::uint32_t n, std::uint32_t m, std::uint32_t max_degree,
                            std::uint32_t max_terms = 3);

}  // namespace divpow
