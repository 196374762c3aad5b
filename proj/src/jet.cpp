#include "hilbstab/jet.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilbstab {

Jet Jet::constant(cd c, int order) {
  Jet j(order);
  if (c == 0.0) return j;
  j.coeffs_.assign(order + 1, 0.0);
  j.coeffs_[0] = c;
  return j;
}

Jet Jet::variable(int order) {
  Jet j(order);
  j.valuation_ = 1;
  j.coeffs_.assign(order + 1, 0.0);
  j.coeffs_[0] = 1.0;
  return j;
}

Jet Jet::from_coeffs(int valuation, std::vector<cd> coeffs, int order) {
  Jet j(order);
  coeffs.resize(order + 1, 0.0);
  j.valuation_ = valuation;
  j.coeffs_ = std::move(coeffs);
  if (std::all_of(j.coeffs_.begin(), j.coeffs_.end(), [](cd c) { return c == 0.0; })) j.coeffs_.clear();
  return j;
}

Jet Jet::exp_linear(cd a, int order) {
  Jet j(order);
  j.coeffs_.resize(order + 1);
  cd t = 1.0;
  for (int k = 0; k <= order; ++k) {
    j.coeffs_[k] = t;
    t *= a / double(k + 1);
  }
  return j;
}

cd Jet::coeff(int p) const {
  int k = p - valuation_;
  if (is_zero() || k < 0 || k > order_) return 0.0;
  return coeffs_[k];
}

Jet Jet::operator+(const Jet& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const int K = std::min(order_, o.order_);
  Jet r(K);
  r.valuation_ = std::min(valuation_, o.valuation_);
  r.coeffs_.assign(K + 1, 0.0);
  for (int k = 0; k <= K; ++k) {
    int p = r.valuation_ + k;
    r.coeffs_[k] = coeff(p) + o.coeff(p);
  }
  if (std::all_of(r.coeffs_.begin(), r.coeffs_.end(), [](cd c) { return c == 0.0; })) r.coeffs_.clear();
  return r;
}

Jet Jet::operator*(const Jet& o) const {
  const int K = std::min(order_, o.order_);
  Jet r(K);
  if (is_zero() || o.is_zero()) return r;
  r.valuation_ = valuation_ + o.valuation_;
  r.coeffs_.assign(K + 1, 0.0);
  for (int i = 0; i <= K; ++i)
    for (int j = 0; i + j <= K; ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  return r;
}

Jet Jet::operator*(cd c) const {
  if (c == 0.0) return Jet(order_);
  Jet r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Jet Jet::normalized() const {
  if (is_zero()) return *this;
  int lead = 0;
  while (coeffs_[lead] == 0.0) ++lead;
  if (lead == 0) return *this;
  Jet r(order_ - lead);
  r.valuation_ = valuation_ + lead;
  r.coeffs_.assign(coeffs_.begin() + lead, coeffs_.end());
  return r;
}

Jet Jet::operator/(const Jet& o) const {
  Jet d = o.normalized();
  if (d.is_zero()) throw std::domain_error("jet division by zero");
  const int K = std::min(order_, d.order_);
  Jet r(K);
  if (is_zero()) return r;
  r.valuation_ = valuation_ - d.valuation_;
  r.coeffs_.assign(K + 1, 0.0);
  const cd inv0 = 1.0 / d.coeffs_[0];
  for (int k = 0; k <= K; ++k) {
    cd acc = coeffs_[k];
    for (int j = 1; j <= k; ++j) acc -= d.coeffs_[j] * r.coeffs_[k - j];
    r.coeffs_[k] = acc * inv0;
  }
  return r;
}

Jet jet_exp(const Jet& a) {
  const int K = a.order();
  if (a.is_zero()) return Jet::constant(1.0, K);
  if (a.valuation() < 0) throw std::domain_error("jet_exp of a series with a pole");
  std::vector<cd> f(K + 1, 0.0);  // coefficients of a in absolute powers
  for (int p = 0; p <= K; ++p) f[p] = a.coeff(p);
  std::vector<cd> e(K + 1, 0.0);
  e[0] = std::exp(f[0]);
  // e' = a' e
  for (int k = 1; k <= K; ++k) {
    cd acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += double(j) * f[j] * e[k - j];
    e[k] = acc / double(k);
  }
  return Jet::from_coeffs(0, std::move(e), K);
}

Jet jet_log(const Jet& a) {
  Jet u = a.normalized();
  if (u.is_zero() || u.valuation() != 0) throw std::domain_error("jet_log needs a unit");
  const int K = u.order();
  const auto& c = u.coeffs();
  std::vector<cd> l(K + 1, 0.0);
  l[0] = std::log(c[0]);
  // c l' = c'
  for (int k = 1; k <= K; ++k) {
    cd acc = double(k) * c[k];
    for (int j = 1; j < k; ++j) acc -= double(j) * l[j] * c[k - j];
    l[k] = acc / (double(k) * c[0]);
  }
  return Jet::from_coeffs(0, std::move(l), K);
}

LogJet LogJet::from_jet(const Jet& j) {
  Jet u = j.normalized();
  const int K = j.order();
  LogJet r;
  if (u.is_zero()) {
    r.zero = true;
    r.tail.assign(K, 0.0);
    return r;
  }
  r.valuation = u.valuation();
  r.lead = u.coeffs()[0];
  Jet unit = u * (1.0 / r.lead);
  Jet lg = jet_log(Jet::from_coeffs(0, unit.coeffs(), K));
  r.tail.assign(K, 0.0);
  for (int k = 1; k <= K; ++k) r.tail[k - 1] = lg.coeff(k);
  return r;
}

Jet LogJet::to_jet(int order) const {
  if (zero) return Jet(order);
  std::vector<cd> t(order + 1, 0.0);
  for (int k = 1; k <= order && k - 1 < static_cast<int>(tail.size()); ++k) t[k] = tail[k - 1];
  Jet e = jet_exp(Jet::from_coeffs(0, std::move(t), order));
  Jet r = Jet::from_coeffs(valuation, e.coeffs(), order);
  return r * lead;
}

LogJet& LogJet::multiply(const LogJet& o, int power) {
  if (o.zero) {
    if (power < 0) throw std::domain_error("LogJet division by zero");
    zero = true;
    return *this;
  }
  valuation += power * o.valuation;
  lead *= power == 1 ? o.lead : (power == -1 ? 1.0 / o.lead : std::pow(o.lead, power));
  if (tail.size() < o.tail.size()) tail.resize(o.tail.size(), 0.0);
  for (std::size_t k = 0; k < o.tail.size(); ++k) tail[k] += double(power) * o.tail[k];
  return *this;
}

LogJet& LogJet::operator*=(const LogJet& o) { return multiply(o, 1); }
LogJet& LogJet::operator/=(const LogJet& o) { return multiply(o, -1); }

}  // namespace hilbstab
