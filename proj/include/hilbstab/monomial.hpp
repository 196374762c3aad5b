#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hilbstab {

enum class GenKind : std::uint8_t { A, HbarHalf, Z, Q, X, Zi };

struct Generator {
  GenKind kind = GenKind::A;
  int index = 0;  // 1-based for X and Zi

  auto operator<=>(const Generator&) const = default;
  std::string name() const;
};

inline Generator gen_a() { return {GenKind::A, 0}; }
inline Generator gen_hbar_half() { return {GenKind::HbarHalf, 0}; }
inline Generator gen_z() { return {GenKind::Z, 0}; }
inline Generator gen_q() { return {GenKind::Q, 0}; }
inline Generator gen_x(int i) { return {GenKind::X, i}; }
inline Generator gen_zi(int i) { return {GenKind::Zi, i}; }

// Laurent monomial with exponents in (1/2)Z. Exponents are stored doubled.
class Monomial {
 public:
  using Term = std::pair<Generator, int>;

  Monomial() = default;

  static Monomial of(Generator g, int exponent = 1) { return doubled(g, 2 * exponent); }
  static Monomial doubled(Generator g, int twice_exponent);

  // t1 = a hbar^{1/2}, t2 = a^{-1} hbar^{1/2}, hbar = t1 t2
  static Monomial t1();
  static Monomial t2();
  static Monomial hbar();

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const { return *this * o.inverse(); }
  Monomial& operator*=(const Monomial& o) { return *this = *this * o; }
  Monomial inverse() const;
  Monomial pow(int k) const;
  // M^{num/2}; throws if an exponent leaves (1/2)Z
  Monomial pow_half(int num) const;

  int twice_exponent(Generator g) const;
  bool is_one() const { return terms_.empty(); }
  bool has_kind(GenKind k) const;
  const std::vector<Term>& terms() const { return terms_; }

  // restriction to generators of the given kind, and its complement
  Monomial only(GenKind k) const;
  Monomial without(GenKind k) const;

  std::string to_string() const;

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial& o) const { return terms_ <=> o.terms_; }

 private:
  std::vector<Term> terms_;  // sorted by generator, exponents nonzero
};

namespace mono {
inline Monomial x(int i) { return Monomial::of(gen_x(i)); }
inline Monomial z() { return Monomial::of(gen_z()); }
inline Monomial zi(int i) { return Monomial::of(gen_zi(i)); }
inline Monomial a() { return Monomial::of(gen_a()); }
}  // namespace mono

}  // namespace hilbstab
