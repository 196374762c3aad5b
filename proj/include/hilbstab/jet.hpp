#pragma once

#include <complex>
#include <vector>

namespace hilbstab {

using cd = std::complex<double>;

// Truncated Laurent series s^v (c_0 + c_1 s + ... + c_K s^K) + O(s^{v+K+1}).
// For a nonzero jet built by multiplication c_0 != 0; sums keep the smaller valuation and do
// not renormalise, so cancelled poles stay visible as small leading coefficients.
class Jet {
 public:
  explicit Jet(int order = 0) : order_(order) {}
  static Jet constant(cd c, int order);
  static Jet variable(int order);  // s
  static Jet from_coeffs(int valuation, std::vector<cd> coeffs, int order);
  // exp(a s) for a scalar a
  static Jet exp_linear(cd a, int order);

  bool is_zero() const { return coeffs_.empty(); }
  int valuation() const { return valuation_; }
  int order() const { return order_; }
  const std::vector<cd>& coeffs() const { return coeffs_; }
  // coefficient of s^p; zero outside the stored window
  cd coeff(int p) const;

  Jet operator+(const Jet& o) const;
  Jet operator-(const Jet& o) const { return *this + o * cd(-1.0); }
  Jet operator*(const Jet& o) const;
  Jet operator*(cd c) const;
  Jet operator/(const Jet& o) const;
  Jet& operator+=(const Jet& o) { return *this = *this + o; }

  // strip exactly-zero leading coefficients
  Jet normalized() const;

 private:
  int valuation_ = 0;
  int order_ = 0;
  std::vector<cd> coeffs_;  // size order_ + 1 unless zero
};

// exp and log of power series with valuation 0 (for exp, the constant term is exponentiated).
Jet jet_exp(const Jet& a);
Jet jet_log(const Jet& a);

// Product-friendly representation of a nonzero jet: s^v * lead * exp(tail), where tail has
// no constant term. Products and quotients are O(K).
struct LogJet {
  bool zero = false;
  int valuation = 0;
  cd lead = 1.0;
  std::vector<cd> tail;  // coefficients of s^1..s^K stored at [0..K-1]

  static LogJet one(int order) { return {false, 0, 1.0, std::vector<cd>(order, 0.0)}; }
  static LogJet from_jet(const Jet& j);
  Jet to_jet(int order) const;

  LogJet& operator*=(const LogJet& o);
  LogJet& operator/=(const LogJet& o);
  LogJet& multiply(const LogJet& o, int power);
};

}  // namespace hilbstab
