#include "hilbstab/term.hpp"

#include <algorithm>
#include <stdexcept>

#include "hilbstab/errors.hpp"
#include "hilbstab/theta.hpp"

namespace hilbstab {

std::string FactorList::to_string(bool elliptic) const {
  const std::string f = elliptic ? "theta" : "ahat";
  std::string num, den;
  auto join = [](std::string& s, const std::string& piece) { s += s.empty() ? piece : " " + piece; };
  for (const auto& m : numerator) join(num, f + "(" + m.to_string() + ")");
  for (const auto& p : kaehler_pairs) {
    join(num, "theta(" + (p.u * p.k).to_string() + ")");
    join(den, "theta(" + p.k.to_string() + ")");
  }
  for (const auto& m : monomials) join(num, "[" + m.to_string() + "]");
  for (const auto& m : denominator) join(den, f + "(" + m.to_string() + ")");
  std::string s = sign < 0 ? "-" : "";
  s += num.empty() ? "1" : num;
  if (!den.empty()) s += " / " + den;
  return s;
}

FactorList operator*(const FactorList& a, const FactorList& b) {
  FactorList r = a;
  r.sign *= b.sign;
  r.numerator.insert(r.numerator.end(), b.numerator.begin(), b.numerator.end());
  r.denominator.insert(r.denominator.end(), b.denominator.begin(), b.denominator.end());
  r.kaehler_pairs.insert(r.kaehler_pairs.end(), b.kaehler_pairs.begin(), b.kaehler_pairs.end());
  r.monomials.insert(r.monomials.end(), b.monomials.begin(), b.monomials.end());
  return r;
}

LinearForm linearize(const Monomial& m) {
  LinearForm f;
  int ea = 0, eh = 0;
  for (const auto& [g, e] : m.terms()) {
    switch (g.kind) {
      case GenKind::X:
        if (e % 2) throw std::domain_error("linearize: half power of x in " + m.to_string());
        f = f + LinearForm::var(g.index, e / 2);
        break;
      case GenKind::A: ea = e; break;
      case GenKind::HbarHalf: eh = e; break;
      default: throw std::domain_error("linearize: Kaehler variable in " + m.to_string());
    }
  }
  if ((ea + eh) % 4 || (eh - ea) % 4) throw std::domain_error("linearize: fractional t-power in " + m.to_string());
  f.t1 = (ea + eh) / 4;
  f.t2 = (eh - ea) / 4;
  return f;
}

LinearFactorList linearize(const FactorList& f) {
  if (!f.kaehler_pairs.empty()) throw std::domain_error("linearize: Kaehler pairs have no additive image");
  LinearFactorList r;
  r.sign = f.sign;
  for (const auto& m : f.numerator) r.numerator.push_back(linearize(m));
  for (const auto& m : f.denominator) r.denominator.push_back(linearize(m));
  return r;
}

namespace {

CompiledFactor split(const Monomial& m, FactorKind kind, int power, std::vector<Monomial>& others) {
  CompiledFactor f;
  f.kind = kind;
  f.power = power;
  Monomial rest;
  for (const auto& [g, e] : m.terms()) {
    switch (g.kind) {
      case GenKind::X: f.x.emplace_back(g.index - 1, e); break;
      case GenKind::A: f.g1 = e; break;
      case GenKind::HbarHalf: f.g2 = e; break;
      default: rest *= Monomial::doubled(g, e);
    }
  }
  if (!rest.is_one()) {
    auto it = std::find(others.begin(), others.end(), rest);
    f.other = static_cast<int>(it - others.begin());
    if (it == others.end()) others.push_back(rest);
  }
  return f;
}

CompiledFactor split_linear(const LinearForm& l, int power) {
  CompiledFactor f;
  f.kind = FactorKind::Linear;
  f.power = power;
  for (auto [slot, c] : l.x) f.x.emplace_back(slot - 1, c);
  f.g1 = l.t1;
  f.g2 = l.t2;
  return f;
}

}  // namespace

CompiledTerm compile(const FactorList& fl, FactorKind base) {
  CompiledTerm t;
  t.sign = fl.sign;
  for (const auto& m : fl.numerator) t.factors.push_back(split(m, base, 1, t.others));
  for (const auto& m : fl.denominator) t.factors.push_back(split(m, base, -1, t.others));
  for (const auto& p : fl.kaehler_pairs) {
    t.factors.push_back(split(p.u * p.k, FactorKind::Theta, 1, t.others));
    t.factors.push_back(split(p.k, FactorKind::Theta, -1, t.others));
  }
  for (const auto& m : fl.monomials) t.factors.push_back(split(m, FactorKind::Mono, 1, t.others));
  return t;
}

CompiledTerm compile(const LinearFactorList& fl) {
  CompiledTerm t;
  t.sign = fl.sign;
  for (const auto& l : fl.numerator) t.factors.push_back(split_linear(l, 1));
  for (const auto& l : fl.denominator) t.factors.push_back(split_linear(l, -1));
  return t;
}

cd evaluate_offshell(const CompiledTerm& t, const GeneratorContext& ctx, const std::vector<int>& sigma) {
  cd r = double(t.sign);
  std::vector<cd> other_logs;
  for (const auto& m : t.others) other_logs.push_back(ctx.log_of(m));
  for (const auto& f : t.factors) {
    const bool one = f.x.empty() && f.g1 == 0 && f.g2 == 0 && f.other < 0;
    cd L = 0.5 * double(f.g1) * ctx.log_a + 0.5 * double(f.g2) * ctx.log_hbar_half;
    if (f.other >= 0) L += other_logs[f.other];
    for (auto [slot, e] : f.x) L += 0.5 * double(e) * ctx.log_x.at(sigma[slot]);
    cd v;
    switch (f.kind) {
      case FactorKind::Theta: v = one ? 0.0 : theta_from_log(L, ctx.q(), ctx.theta_tol); break;
      case FactorKind::Ahat: v = one ? 0.0 : ahat_from_log(L); break;
      case FactorKind::Mono: v = std::exp(L); break;
      case FactorKind::Linear: throw std::logic_error("linear factor in a multiplicative term");
    }
    if (v == 0.0) {
      if (f.power < 0) throw NonGeneric("off-shell evaluation hit a vanishing denominator");
      return 0.0;
    }
    r *= f.power == 1 ? v : 1.0 / v;
  }
  return r;
}

cd evaluate_offshell_linear(const CompiledTerm& t, const CohContext& ctx, const std::vector<int>& sigma) {
  cd r = double(t.sign);
  for (const auto& f : t.factors) {
    cd v = double(f.g1) * ctx.t1 + double(f.g2) * ctx.t2;
    for (auto [slot, c] : f.x) v += double(c) * ctx.x.at(sigma[slot]);
    if (v == 0.0) {
      if (f.power < 0) throw NonGeneric("off-shell evaluation hit a vanishing denominator");
      return 0.0;
    }
    r *= f.power == 1 ? v : 1.0 / v;
  }
  return r;
}

cd evaluate_factor_list(const GeneratorContext& ctx, const FactorList& f, FactorKind base) {
  auto fn = [&](const Monomial& m) {
    return base == FactorKind::Theta ? theta(ctx, m) : (m.is_one() ? cd(0.0) : ahat_from_log(ctx.log_of(m)));
  };
  cd r = double(f.sign);
  for (const auto& m : f.numerator) r *= fn(m);
  for (const auto& m : f.denominator) r /= fn(m);
  for (const auto& p : f.kaehler_pairs) r *= theta(ctx, p.u * p.k) / theta(ctx, p.k);
  for (const auto& m : f.monomials) r *= ctx.value(m);
  return r;
}

}  // namespace hilbstab
