#include "divpow/exact.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace divpow {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::string str(s);
    if (str.empty()) throw Error("malformed rational '" + std::string(text) + "'");
    std::size_t start = (str[0] == '-' || str[0] == '+') ? 1 : 0;
    if (start == str.size() ||
        !std::all_of(str.begin() + static_cast<long>(start), str.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw Error("malformed rational '" + std::string(text) + "'");
    if (str[0] == '+') str.erase(0, 1);
    return Int(str, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  return make_rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Int binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// ---------------------------------------------------------------------------

VarId VarId::xi(unsigned k, unsigned i, unsigned j) {
  return {VarTag::xi, static_cast<std::uint16_t>(k), static_cast<std::uint16_t>(i),
          static_cast<std::uint16_t>(j)};
}
VarId VarId::t(unsigned s) { return {VarTag::t, static_cast<std::uint16_t>(s), 0, 0}; }
VarId VarId::x(unsigned i, unsigned j) {
  return {VarTag::x, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j), 0};
}
VarId VarId::e(unsigned i) { return {VarTag::e, static_cast<std::uint16_t>(i), 0, 0}; }

std::string to_string(const VarId& v) {
  std::ostringstream os;
  switch (v.tag) {
    case VarTag::xi: os << "xi(" << v.a << ',' << v.b << ',' << v.c << ')'; break;
    case VarTag::t: os << "t(" << v.a << ')'; break;
    case VarTag::x: os << "x(" << v.a << ',' << v.b << ')'; break;
    case VarTag::e: os << "e(" << v.a << ')'; break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& l, const Factor& r) { return l.first < r.first; });
  for (const auto& f : factors) {
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first)
      factors_.back().second += f.second;
    else
      factors_.push_back(f);
  }
}

Monomial Monomial::of(VarId v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.factors_.emplace_back(v, exp);
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VarId x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& f : factors_)
    if (other.exponent(f.first) < f.second) return false;
  return true;
}

Monomial operator*(const Monomial& l, const Monomial& r) {
  Monomial out;
  auto& o = out.factors_;
  o.reserve(l.factors_.size() + r.factors_.size());
  auto a = l.factors_.begin(), ae = l.factors_.end();
  auto b = r.factors_.begin(), be = r.factors_.end();
  while (a != ae && b != be) {
    if (a->first < b->first) {
      o.push_back(*a++);
    } else if (b->first < a->first) {
      o.push_back(*b++);
    } else {
      o.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  o.insert(o.end(), a, ae);
  o.insert(o.end(), b, be);
  return out;
}

Monomial operator/(const Monomial& l, const Monomial& r) {
  std::vector<Monomial::Factor> f;
  for (const auto& [v, e] : l.factors_) {
    std::uint32_t d = r.exponent(v);
    if (d > e) throw Error("monomial division is not exact");
    if (e > d) f.emplace_back(v, e - d);
  }
  if (!r.divides(l)) throw Error("monomial division is not exact");
  Monomial out;
  out.factors_ = std::move(f);
  return out;
}

int grlex_compare(const Monomial& l, const Monomial& r) {
  auto dl = l.degree(), dr = r.degree();
  if (dl != dr) return dl < dr ? -1 : 1;
  const auto& a = l.factors();
  const auto& b = r.factors();
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first ? 1 : -1;
    if (a[i].second != b[i].second) return a[i].second < b[i].second ? -1 : 1;
  }
  if (i < a.size()) return 1;
  if (i < b.size()) return -1;
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& [v, e] : m.factors()) {
    h ^= v.key() * 0x9E3779B97F4A7C15ull + e;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += '*';
    s += to_string(v);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

bool term_greater(const MultiPoly::Term& l, const MultiPoly::Term& r) {
  return grlex_compare(l.first, r.first) > 0;
}

using Accumulator = std::unordered_map<Monomial, Int, MonomialHash>;

MultiPoly from_accumulator(Accumulator& acc) {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.emplace_back(m, std::move(c));
  return MultiPoly::from_terms(std::move(terms));
}

}  // namespace

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.emplace_back(Monomial(), Int(c));
}

MultiPoly::MultiPoly(const Int& c) {
  if (c != 0) terms_.emplace_back(Monomial(), c);
}

MultiPoly MultiPoly::variable(VarId v) { return term(Monomial::of(v), 1); }

MultiPoly MultiPoly::term(Monomial m, Int c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

std::uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

const MultiPoly::Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

Int MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) {
                               return grlex_compare(t.first, x) > 0;
                             });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

std::set<VarId> MultiPoly::variables() const {
  std::set<VarId> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vars.insert(f.first);
  return vars;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Int MultiPoly::constant_value() const {
  return coefficient(Monomial());
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {

template <bool Subtract>
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    int c = grlex_compare(i->first, j->first);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.emplace_back(j->first, Subtract ? Int(-j->second) : j->second);
      ++j;
    } else {
      Int s = Subtract ? Int(i->second - j->second) : Int(i->second + j->second);
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  for (; j != b.end(); ++j) out.emplace_back(j->first, Subtract ? Int(-j->second) : j->second);
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  terms_ = merge_terms<false>(terms_, o.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  terms_ = merge_terms<true>(terms_, o.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& l, const MultiPoly& r) {
  if (l.is_zero() || r.is_zero()) return {};
  if (l.is_constant()) return r * l.terms_.front().second;
  if (r.is_constant()) return l * r.terms_.front().second;
  Accumulator acc;
  acc.reserve(l.size() * r.size());
  for (const auto& [ml, cl] : l.terms_)
    for (const auto& [mr, cr] : r.terms_) {
      auto [it, fresh] = acc.try_emplace(ml * mr);
      if (fresh)
        it->second = cl * cr;
      else
        mpz_addmul(it->second.get_mpz_t(), cl.get_mpz_t(), cr.get_mpz_t());
    }
  return from_accumulator(acc);
}

MultiPoly pow(const MultiPoly& p, unsigned e) {
  MultiPoly result(1);
  MultiPoly base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly mul_truncated(const MultiPoly& l, const MultiPoly& r, const Monomial& caps) {
  auto within = [&](const Monomial& m) {
    for (const auto& [v, cap] : caps.factors())
      if (m.exponent(v) > cap) return false;
    return true;
  };
  Accumulator acc;
  for (const auto& [ml, cl] : l.terms())
    for (const auto& [mr, cr] : r.terms()) {
      Monomial m = ml * mr;
      if (!within(m)) continue;
      auto [it, fresh] = acc.try_emplace(std::move(m));
      if (fresh)
        it->second = cl * cr;
      else
        mpz_addmul(it->second.get_mpz_t(), cl.get_mpz_t(), cr.get_mpz_t());
    }
  return from_accumulator(acc);
}

MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw Error("division by the zero polynomial");
  const auto& [lm, lc] = den.leading_term();
  std::vector<MultiPoly::Term> quotient;
  MultiPoly rest = num;
  while (!rest.is_zero()) {
    const auto& [rm, rc] = rest.leading_term();
    if (!lm.divides(rm) || !mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t()))
      throw Error("polynomial division is not exact");
    Int q = rc / lc;
    Monomial qm = rm / lm;
    MultiPoly step = MultiPoly::term(qm, q);
    quotient.emplace_back(std::move(qm), std::move(q));
    rest -= step * den;
  }
  return MultiPoly::from_terms(std::move(quotient));
}

Rat poly_eval(const MultiPoly& p, const std::map<VarId, Rat>& assignment) {
  // powers are cached per variable since the same variable recurs in many terms
  std::map<VarId, std::vector<Rat>> powers;
  auto power_of = [&](VarId v, std::uint32_t e) -> const Rat& {
    auto it = powers.find(v);
    if (it == powers.end()) {
      auto a = assignment.find(v);
      if (a == assignment.end())
        throw Error("assignment is missing variable " + to_string(v));
      it = powers.emplace(v, std::vector<Rat>{Rat(1), a->second}).first;
    }
    auto& table = it->second;
    while (table.size() <= e) table.push_back(table.back() * table[1]);
    return table[e];
  };
  Rat sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rat term = c;
    for (const auto& [v, e] : m.factors()) term *= power_of(v, e);
    sum += term;
  }
  return sum;
}

MultiPoly poly_substitute(const MultiPoly& p, const std::map<VarId, MultiPoly>& subst) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term(c);
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = subst.find(v);
      if (it == subst.end())
        kept.emplace_back(v, e);
      else
        term *= pow(it->second, e);
    }
    if (!kept.empty()) term *= MultiPoly::term(Monomial(std::move(kept)), 1);
    out += term;
  }
  return out;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Int mag = abs(c);
    if (first) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + '*';
      s += to_string(m);
    }
  }
  return s;
}

}  // namespace divpow
