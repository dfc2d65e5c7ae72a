#include "divpow/gamma.hpp"

#include <algorithm>

namespace divpow {

GammaBasisElem::GammaBasisElem(std::uint32_t n, std::vector<Part> parts) : n_(n), parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end());
  std::uint64_t weight = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].first.empty()) throw Error("basis parts must be words of positive degree");
    if (parts_[i].second == 0) throw Error("basis part multiplicities must be positive");
    if (i > 0 && parts_[i].first == parts_[i - 1].first)
      throw Error("repeated word " + to_string(parts_[i].first) + " in basis element");
    weight += parts_[i].second;
  }
  if (weight > n)
    throw Error("weight " + std::to_string(weight) + " exceeds n=" + std::to_string(n));
}

std::uint32_t GammaBasisElem::weight() const {
  std::uint32_t w = 0;
  for (const auto& p : parts_) w += p.second;
  return w;
}

Word::Letter GammaBasisElem::max_letter() const {
  Word::Letter m = 0;
  for (const auto& p : parts_) m = std::max(m, p.first.max_letter());
  return m;
}

std::size_t GammaBasisElem::max_word_degree() const {
  std::size_t d = 0;
  for (const auto& p : parts_) d = std::max(d, p.first.degree());
  return d;
}

// ---------------------------------------------------------------------------

GammaElem::GammaElem(const GammaBasisElem& b, Int c) : n_(b.n()) {
  if (c != 0) terms_.emplace(b, std::move(c));
}

Int GammaElem::coefficient(const GammaBasisElem& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Int(0) : it->second;
}

void GammaElem::add_term(const GammaBasisElem& b, const Int& c) {
  if (b.n() != n_)
    throw Error("basis element of degree " + std::to_string(b.n()) + " added to Gamma^" + std::to_string(n_));
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(b, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GammaElem::require_same_n(const GammaElem& o) const {
  if (o.n_ != n_)
    throw Error("mismatched divided-power degrees " + std::to_string(n_) + " and " + std::to_string(o.n_));
}

GammaElem& GammaElem::operator+=(const GammaElem& o) {
  require_same_n(o);
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

GammaElem& GammaElem::operator-=(const GammaElem& o) {
  require_same_n(o);
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

GammaElem& GammaElem::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [b, v] : terms_) v *= c;
  }
  return *this;
}

GammaElem GammaElem::operator-() const {
  GammaElem out = *this;
  for (auto& [b, v] : out.terms_) v = -v;
  return out;
}

// ---------------------------------------------------------------------------

FreeElem::FreeElem(const Word& w, Int c) {
  if (c != 0) terms_.emplace(w, std::move(c));
}

void FreeElem::add_term(const Word& w, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeElem& FreeElem::operator+=(const FreeElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeElem operator*(const FreeElem& l, const FreeElem& r) {
  FreeElem out;
  for (const auto& [u, a] : l.terms_)
    for (const auto& [v, b] : r.terms_) out.add_term(concat(u, v), a * b);
  return out;
}

// ---------------------------------------------------------------------------

GammaElem merge_parts(std::uint32_t n, std::span<const Part> raw) {
  std::map<Word, std::vector<std::uint32_t>> grouped;
  std::uint64_t weight = 0;
  for (const auto& [w, mult] : raw) {
    if (w.empty() || mult == 0) continue;
    grouped[w].push_back(mult);
    weight += mult;
  }
  if (weight > n) return GammaElem(n);
  Int coeff = 1;
  std::vector<Part> parts;
  parts.reserve(grouped.size());
  for (const auto& [w, mults] : grouped) {
    std::uint64_t total = 0;
    for (auto m : mults) {
      total += m;
      coeff *= binomial(total, m);
    }
    parts.emplace_back(w, static_cast<std::uint32_t>(total));
  }
  return GammaElem(GammaBasisElem(n, std::move(parts)), coeff);
}

namespace {

// Enumerates the interior entries gamma_ij (i, j >= 1) of the product
// matrices; border entries are forced by the row and column sums.
class StarEnumerator {
 public:
  StarEnumerator(const GammaBasisElem& u, const GammaBasisElem& v, GammaElem& out)
      : u_(u), v_(v), out_(out), h_(u.parts().size()), k_(v.parts().size()), interior_(h_ * k_, 0) {
    row_left_.reserve(h_);
    col_left_.reserve(k_);
    for (const auto& p : u.parts()) row_left_.push_back(p.second);
    for (const auto& p : v.parts()) col_left_.push_back(p.second);
    products_.reserve(h_ * k_);
    for (const auto& r : u.parts())
      for (const auto& s : v.parts()) products_.push_back(concat(r.first, s.first));
    const std::uint64_t total = std::uint64_t(u.weight()) + v.weight();
    min_interior_ = total > u.n() ? total - u.n() : 0;
  }

  void run() { visit(0, 0); }

 private:
  void visit(std::size_t cell, std::uint64_t interior_sum) {
    if (cell == h_ * k_) {
      if (interior_sum >= min_interior_) emit();
      return;
    }
    const std::size_t i = cell / k_, j = cell % k_;
    // the rest of this row and all later rows bound what is still reachable
    std::uint64_t reachable = 0;
    for (std::size_t r = i; r < h_; ++r) reachable += row_left_[r];
    if (interior_sum + reachable < min_interior_) return;
    const std::uint32_t cap = std::min(row_left_[i], col_left_[j]);
    for (std::uint32_t g = 0; g <= cap; ++g) {
      interior_[cell] = g;
      row_left_[i] -= g;
      col_left_[j] -= g;
      visit(cell + 1, interior_sum + g);
      row_left_[i] += g;
      col_left_[j] += g;
    }
    interior_[cell] = 0;
  }

  void emit() {
    std::vector<Part> raw;
    raw.reserve(h_ + k_ + h_ * k_);
    for (std::size_t i = 0; i < h_; ++i)
      if (row_left_[i] > 0) raw.emplace_back(u_.parts()[i].first, row_left_[i]);
    for (std::size_t j = 0; j < k_; ++j)
      if (col_left_[j] > 0) raw.emplace_back(v_.parts()[j].first, col_left_[j]);
    for (std::size_t c = 0; c < interior_.size(); ++c)
      if (interior_[c] > 0) raw.emplace_back(products_[c], interior_[c]);
    out_ += merge_parts(u_.n(), raw);
  }

  const GammaBasisElem& u_;
  const GammaBasisElem& v_;
  GammaElem& out_;
  std::size_t h_, k_;
  std::vector<std::uint32_t> interior_;
  std::vector<std::uint32_t> row_left_;
  std::vector<std::uint32_t> col_left_;
  std::vector<Word> products_;
  std::uint64_t min_interior_ = 0;
};

}  // namespace

GammaElem star(const GammaBasisElem& u, const GammaBasisElem& v) {
  if (u.n() != v.n())
    throw Error("star: mismatched degrees " + std::to_string(u.n()) + " and " + std::to_string(v.n()));
  GammaElem out(u.n());
  StarEnumerator(u, v, out).run();
  return out;
}

GammaElem star(const GammaElem& u, const GammaElem& v) {
  if (u.n() != v.n())
    throw Error("star: mismatched degrees " + std::to_string(u.n()) + " and " + std::to_string(v.n()));
  GammaElem out(u.n());
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) out += star(a, b) * Int(ca * cb);
  return out;
}

GammaElem gamma_power(const FreeElem& f, std::uint32_t n) {
  std::vector<std::pair<Word, Int>> support(f.terms().begin(), f.terms().end());
  GammaElem out(n);
  if (support.empty()) {
    if (n == 0) out.add_term(GammaBasisElem::unit(0), 1);
    return out;
  }
  std::vector<std::uint32_t> xi(support.size(), 0);
  // compositions of n into support.size() parts
  auto recurse = [&](auto&& self, std::size_t idx, std::uint32_t left) -> void {
    if (idx + 1 == support.size()) {
      xi[idx] = left;
      Int coeff = 1;
      std::vector<Part> raw;
      for (std::size_t s = 0; s < support.size(); ++s) {
        if (xi[s] == 0) continue;
        Int p;
        mpz_pow_ui(p.get_mpz_t(), support[s].second.get_mpz_t(), xi[s]);
        coeff *= p;
        raw.emplace_back(support[s].first, xi[s]);
      }
      out += merge_parts(n, raw) * coeff;
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      xi[idx] = e;
      self(self, idx + 1, left - e);
    }
  };
  recurse(recurse, 0, n);
  return out;
}

GammaBasisElem generator(std::uint32_t n, std::uint32_t i, const Word& mu) {
  if (mu.empty()) throw Error("generator word must have positive degree");
  if (i < 1 || i > n)
    throw Error("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  return GammaBasisElem(n, {{mu, i}});
}

// ---------------------------------------------------------------------------

std::string to_string(const GammaBasisElem& b) {
  std::string s = "D(" + std::to_string(b.n()) + ";";
  bool first = true;
  for (const auto& [w, mult] : b.parts()) {
    s += first ? " " : ", ";
    first = false;
    s += to_string(w);
    if (mult > 1) s += '^' + std::to_string(mult);
  }
  return s + ")";
}

namespace {

template <class Terms, class Render>
std::string render_sum(const Terms& terms, Render render) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [key, c] : terms) {
    Int mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) s += mag.get_str() + "*";
    s += render(key);
  }
  return s;
}

}  // namespace

std::string to_string(const GammaElem& u) {
  return render_sum(u.terms(), [](const GammaBasisElem& b) { return to_string(b); });
}

std::string to_string(const FreeElem& f) {
  return render_sum(f.terms(), [](const Word& w) { return to_string(w); });
}

}  // namespace divpow
