#include "hilbstab/kernels.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <exception>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "hilbstab/theta.hpp"

namespace hilbstab {

FixedPoint fixed_point(const BoxTable& mu, const GeneratorContext& ctx, std::vector<double> dir) {
  FixedPoint fp;
  const int n = mu.n();
  for (int b = 0; b < n; ++b) {
    Monomial ch = box_character(mu.boxes[b]);
    fp.e1.push_back(ch.twice_exponent(gen_a()));
    fp.e2.push_back(ch.twice_exponent(gen_hbar_half()));
    fp.value.push_back(ctx.log_of(ch));
  }
  if (dir.empty())
    for (int b = 0; b < n; ++b) dir.push_back(b + 1.0);
  fp.dir = std::move(dir);
  return fp;
}

FixedPoint fixed_point_additive(const BoxTable& mu, const CohContext& ctx, std::vector<double> dir) {
  FixedPoint fp;
  fp.additive = true;
  const int n = mu.n();
  for (int b = 0; b < n; ++b) {
    LinearForm ch = box_character_additive(mu.boxes[b]);
    fp.e1.push_back(ch.t1);
    fp.e2.push_back(ch.t2);
    fp.value.push_back(double(ch.t1) * ctx.t1 + double(ch.t2) * ctx.t2);
  }
  if (dir.empty())
    for (int b = 0; b < n; ++b) dir.push_back(b + 1.0);
  fp.dir = std::move(dir);
  return fp;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

// Exceptions may not leave an OpenMP region; the first one is rethrown after the loop.
template <class F>
void parallel_for(long count, F&& body) {
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(hilbstab_err)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace

struct RestrictionProblem::Key {
  FactorKind kind;
  int e1, e2, other_term, other;
  double c;
  auto tie() const { return std::tie(kind, e1, e2, other_term, other, c); }
  bool operator<(const Key& o) const { return tie() < o.tie(); }
};

RestrictionProblem::RestrictionProblem(std::vector<CompiledTerm> terms, FixedPoint fp, const GeneratorContext& ctx,
                                       Backend backend)
    : n_(static_cast<int>(fp.dir.size())),
      order_(ctx.jet_order),
      terms_(std::move(terms)),
      fp_(std::move(fp)),
      log_a_(ctx.log_a),
      log_hh_(ctx.log_hbar_half),
      q_(ctx.q()),
      theta_tol_(ctx.theta_tol) {
  for (const auto& t : terms_) {
    std::vector<cd> logs;
    for (const auto& m : t.others) logs.push_back(ctx.log_of(m));
    other_logs_.push_back(std::move(logs));
  }
  build(backend);
}

RestrictionProblem::RestrictionProblem(std::vector<CompiledTerm> terms, FixedPoint fp, const CohContext& ctx,
                                       int order, Backend backend)
    : n_(static_cast<int>(fp.dir.size())),
      order_(order),
      terms_(std::move(terms)),
      fp_(std::move(fp)),
      additive_(true),
      t1_(ctx.t1),
      t2_(ctx.t2) {
  other_logs_.resize(terms_.size());
  build(backend);
}

LogJet RestrictionProblem::direct(const CompiledTerm& t, std::size_t term, const CompiledFactor& f,
                                  const std::vector<int>& boxes) const {
  (void)t;
  if (additive_) {
    int e1 = f.g1, e2 = f.g2;
    double c = 0.0;
    for (std::size_t k = 0; k < f.x.size(); ++k) {
      int w = f.x[k].second, b = boxes[k];
      e1 += w * fp_.e1[b];
      e2 += w * fp_.e2[b];
      c += w * fp_.dir[b];
    }
    return linear_logjet(double(e1) * t1_ + double(e2) * t2_, e1 == 0 && e2 == 0, c, order_);
  }
  // x^{e/2} with x = a^{A/2} hbar_half^{H/2} contributes A e / 2 to the doubled a-exponent
  int e1 = f.g1, e2 = f.g2;
  double c = 0.0;
  for (std::size_t k = 0; k < f.x.size(); ++k) {
    int e = f.x[k].second, b = boxes[k];
    e1 += e * fp_.e1[b] / 2;
    e2 += e * fp_.e2[b] / 2;
    c += 0.5 * e * fp_.dir[b];
  }
  cd L = 0.5 * double(e1) * log_a_ + 0.5 * double(e2) * log_hh_;
  if (f.other >= 0) L += other_logs_[term][f.other];
  const bool one = e1 == 0 && e2 == 0 && f.other < 0;
  switch (f.kind) {
    case FactorKind::Theta: return theta_logjet(L, one, c, q_, theta_tol_, order_);
    case FactorKind::Ahat: return ahat_logjet(L, one, c, order_);
    case FactorKind::Mono: return monomial_logjet(L, c, order_);
    case FactorKind::Linear: break;
  }
  throw std::logic_error("linear factor in a multiplicative problem");
}

void RestrictionProblem::build(Backend backend) {
  std::map<Key, int> index;
  struct Work {
    std::size_t term;
    const CompiledFactor* f;
    std::vector<int> boxes;
  };
  std::vector<Work> work;
  entries_.resize(terms_.size());
  for (std::size_t ti = 0; ti < terms_.size(); ++ti) {
    const auto& t = terms_[ti];
    entries_[ti].resize(t.factors.size());
    for (std::size_t fi = 0; fi < t.factors.size(); ++fi) {
      const auto& f = t.factors[fi];
      Entry& e = entries_[ti][fi];
      e.slots = static_cast<int>(f.x.size());
      if (e.slots > 2) continue;
      int size = 1;
      for (int k = 0; k < e.slots; ++k) size *= n_;
      e.table.assign(size, -1);
      for (int code = 0; code < size; ++code) {
        std::vector<int> boxes;
        for (int k = 0, c = code; k < e.slots; ++k, c /= n_) boxes.push_back(c % n_);
        if (e.slots == 2 && boxes[0] == boxes[1]) continue;
        Key key{f.kind, f.g1, f.g2, f.other >= 0 ? int(ti) : -1, f.other, 0.0};
        for (std::size_t k = 0; k < boxes.size(); ++k) {
          int w = f.x[k].second, b = boxes[k];
          if (additive_) {
            key.e1 += w * fp_.e1[b];
            key.e2 += w * fp_.e2[b];
            key.c += w * fp_.dir[b];
          } else {
            key.e1 += w * fp_.e1[b] / 2;
            key.e2 += w * fp_.e2[b] / 2;
            key.c += 0.5 * w * fp_.dir[b];
          }
        }
        auto [it, fresh] = index.emplace(key, static_cast<int>(work.size()));
        if (fresh) work.push_back({ti, &f, boxes});
        e.table[code] = it->second;
      }
    }
  }
  jets_.assign(work.size(), LogJet{});
  const long count = static_cast<long>(work.size());
  auto one = [&](long i) { jets_[i] = direct(terms_[work[i].term], work[i].term, *work[i].f, work[i].boxes); };
  if (backend == Backend::OpenMP) {
    parallel_for(count, one);
  } else {
    for (long i = 0; i < count; ++i) one(i);
  }
}

Jet RestrictionProblem::at(const std::vector<int>& sigma, int* min_term_valuation,
                           std::vector<Jet>* per_term) const {
  Jet acc(order_);
  for (std::size_t ti = 0; ti < terms_.size(); ++ti) {
    const auto& t = terms_[ti];
    LogJet lj = LogJet::one(order_);
    lj.lead = double(t.sign);
    for (std::size_t fi = 0; fi < t.factors.size() && !lj.zero; ++fi) {
      const auto& f = t.factors[fi];
      const Entry& e = entries_[ti][fi];
      if (e.slots <= 2) {
        int code = 0;
        for (int k = e.slots - 1; k >= 0; --k) code = code * n_ + sigma[f.x[k].first];
        lj.multiply(jets_[e.table[code]], f.power);
      } else {
        std::vector<int> boxes;
        for (const auto& [slot, w] : f.x) boxes.push_back(sigma[slot]);
        lj.multiply(direct(t, ti, f, boxes), f.power);
      }
    }
    if (lj.zero) continue;
    if (min_term_valuation) *min_term_valuation = std::min(*min_term_valuation, lj.valuation);
    Jet j = lj.to_jet(order_);
    if (per_term) per_term->push_back(j);
    acc += j;
  }
  return acc;
}

SymmetrizedValue reduce_in_order(const std::vector<Jet>& per_sigma, int min_term_valuation) {
  SymmetrizedValue r;
  Jet total(per_sigma.empty() ? 0 : per_sigma.front().order());
  for (const Jet& j : per_sigma) total += j;
  r.value = total.coeff(0);
  r.max_pole_order = std::max(0, -min_term_valuation);
  r.total_valuation = total.is_zero() ? 0 : total.valuation();
  if (!total.is_zero())
    for (int p = total.valuation(); p < 0; ++p) {
      double scale = 0.0;
      for (const Jet& j : per_sigma) scale = std::max(scale, std::abs(j.coeff(p)));
      double res = scale > 0 ? std::abs(total.coeff(p)) / scale : 0.0;
      r.max_cancel_residual = std::max(r.max_cancel_residual, res);
    }
  return r;
}

SymmetrizedValue symmetrize(const RestrictionProblem& p, Backend backend) {
  const auto perms = all_permutations(p.n());
  const long count = static_cast<long>(perms.size());
  std::vector<Jet> per_sigma(perms.size());
  std::vector<int> minval(perms.size(), INT_MAX);
  auto one = [&](long i) { per_sigma[i] = p.at(perms[i], &minval[i]); };
  if (backend == Backend::OpenMP) {
    parallel_for(count, one);
  } else {
    for (long i = 0; i < count; ++i) one(i);
  }
  int mv = *std::min_element(minval.begin(), minval.end());
  return reduce_in_order(per_sigma, mv == INT_MAX ? 0 : mv);
}

}  // namespace hilbstab
