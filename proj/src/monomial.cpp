#include "hilbstab/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilbstab {

std::string Generator::name() const {
  switch (kind) {
    case GenKind::A: return "a";
    case GenKind::HbarHalf: return "hbar_half";
    case GenKind::Z: return "z";
    case GenKind::Q: return "q";
    case GenKind::X: return "x" + std::to_string(index);
    case GenKind::Zi: return "z" + std::to_string(index);
  }
  return "?";
}

Monomial Monomial::doubled(Generator g, int twice_exponent) {
  Monomial m;
  if (twice_exponent != 0) m.terms_.emplace_back(g, twice_exponent);
  return m;
}

Monomial Monomial::t1() { return of(gen_a()) * of(gen_hbar_half()); }
Monomial Monomial::t2() { return of(gen_a(), -1) * of(gen_hbar_half()); }
Monomial Monomial::hbar() { return of(gen_hbar_half(), 2); }

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      r.terms_.push_back(*i++);
    } else if (i == terms_.end() || j->first < i->first) {
      r.terms_.push_back(*j++);
    } else {
      int e = i->second + j->second;
      if (e != 0) r.terms_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Monomial Monomial::pow(int k) const {
  if (k == 0) return {};
  Monomial r = *this;
  for (auto& t : r.terms_) t.second *= k;
  return r;
}

Monomial Monomial::pow_half(int num) const {
  if (num == 0) return {};
  Monomial r = *this;
  for (auto& t : r.terms_) {
    int e = t.second * num;
    if (e % 2 != 0) throw std::domain_error("pow_half: exponent leaves (1/2)Z in " + to_string());
    t.second = e / 2;
  }
  return r;
}

int Monomial::twice_exponent(Generator g) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const Term& t, const Generator& k) { return t.first < k; });
  return (it != terms_.end() && it->first == g) ? it->second : 0;
}

bool Monomial::has_kind(GenKind k) const {
  return std::any_of(terms_.begin(), terms_.end(), [k](const Term& t) { return t.first.kind == k; });
}

Monomial Monomial::only(GenKind k) const {
  Monomial r;
  for (const auto& t : terms_)
    if (t.first.kind == k) r.terms_.push_back(t);
  return r;
}

Monomial Monomial::without(GenKind k) const {
  Monomial r;
  for (const auto& t : terms_)
    if (t.first.kind != k) r.terms_.push_back(t);
  return r;
}

namespace {

std::string power_str(const std::string& base, int twice) {
  if (twice == 2) return base;
  if (twice % 2 == 0) return base + "^" + std::to_string(twice / 2);
  return base + "^(" + std::to_string(twice) + "/2)";
}

}  // namespace

// a and hbar_half are rendered through t1, t2 whenever the exponents allow it.
std::string Monomial::to_string() const {
  std::vector<std::string> parts;
  int ea = 0, eh = 0;
  for (const auto& [g, e] : terms_) {
    if (g.kind == GenKind::A) ea = e;
    else if (g.kind == GenKind::HbarHalf) eh = e;
  }
  for (const auto& [g, e] : terms_) {
    if (g.kind == GenKind::A || g.kind == GenKind::HbarHalf) continue;
    parts.push_back(power_str(g.name(), e));
  }
  // a^{ea/2} h^{eh/2} = t1^{(ea+eh)/4} t2^{(eh-ea)/4}; doubled t-exponents below
  if ((ea + eh) % 2 == 0 && (eh - ea) % 2 == 0) {
    int d1 = (ea + eh) / 2, d2 = (eh - ea) / 2;
    if (d1 != 0) parts.push_back(power_str("t1", d1));
    if (d2 != 0) parts.push_back(power_str("t2", d2));
  } else {
    if (ea != 0) parts.push_back(power_str("a", ea));
    if (eh != 0) parts.push_back(power_str("hbar_half", eh));
  }
  if (parts.empty()) return "1";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
  return s;
}

}  // namespace hilbstab
