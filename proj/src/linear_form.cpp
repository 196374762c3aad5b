#include "hilbstab/linear_form.hpp"

#include <algorithm>

namespace hilbstab {

LinearForm LinearForm::operator+(const LinearForm& o) const {
  LinearForm r;
  r.t1 = t1 + o.t1;
  r.t2 = t2 + o.t2;
  auto i = x.begin();
  auto j = o.x.begin();
  while (i != x.end() || j != o.x.end()) {
    if (j == o.x.end() || (i != x.end() && i->first < j->first)) {
      r.x.push_back(*i++);
    } else if (i == x.end() || j->first < i->first) {
      r.x.push_back(*j++);
    } else {
      if (int c = i->second + j->second; c != 0) r.x.emplace_back(i->first, c);
      ++i;
      ++j;
    }
  }
  return r;
}

LinearForm LinearForm::scaled(int k) const {
  if (k == 0) return {};
  LinearForm r = *this;
  for (auto& p : r.x) p.second *= k;
  r.t1 *= k;
  r.t2 *= k;
  return r;
}

std::string LinearForm::to_string() const {
  std::string s;
  auto term = [&s](int c, const std::string& name) {
    if (c == 0) return;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    int m = c < 0 ? -c : c;
    if (m != 1) s += std::to_string(m) + "*";
    s += name;
  };
  for (const auto& [slot, c] : x) term(c, "x" + std::to_string(slot));
  term(t1, "t1");
  term(t2, "t2");
  return s.empty() ? "0" : s;
}

}  // namespace hilbstab
