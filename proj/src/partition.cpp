#include "hilbstab/partition.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>

#include "hilbstab/errors.hpp"

namespace hilbstab {

std::string Box::to_string() const {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw UsageError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw UsageError("partition parts must be non-increasing");
    size_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (!parts_.empty()) {
    c.assign(parts_.front(), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++c[j];
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

int env_cap(int fallback) {
  if (const char* v = std::getenv("HILBSTAB_MAX_N")) {
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return static_cast<int>(n);
  }
  return fallback;
}

Partition parse_partition(std::string_view text) {
  std::string body;
  for (char c : text)
    if (c != '(' && c != ')' && c != '[' && c != ']') body += c;
  std::vector<int> parts;
  std::size_t start = 0;
  bool any = body.find_first_not_of(" \t\n") != std::string::npos;
  if (!any) throw UsageError("empty partition");
  for (;;) {
    std::size_t comma = body.find(',', start);
    std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto l = tok.find_first_not_of(" \t\n"), r = tok.find_last_not_of(" \t\n");
    tok = l == std::string::npos ? "" : tok.substr(l, r - l + 1);
    if (tok.empty() || tok.size() > 4 || tok.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("cannot parse partition: bad token '" + tok + "'");
    int v = std::stoi(tok);
    if (v == 0) throw UsageError("cannot parse partition: parts must be positive, got '" + tok + "'");
    if (!parts.empty() && v > parts.back())
      throw UsageError("cannot parse partition: parts must be non-increasing, '" + tok + "' follows " +
                       std::to_string(parts.back()));
    parts.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions_unchecked(int n) {
  std::vector<Partition> out;
  if (n <= 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> enumerate_partitions(int n, int cap) {
  if (cap < 0) cap = env_cap(kDefaultEnumerationCap);
  if (n < 1) throw UsageError("n must be positive");
  if (n > cap) throw CapExceeded("n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  return enumerate_partitions_unchecked(n);
}

Dominance dominance_compare(const Partition& lhs, const Partition& rhs) {
  if (lhs.size() != rhs.size()) throw UsageError("dominance needs partitions of the same size");
  bool ge = true, le = true;
  int sl = 0, sr = 0;
  int len = std::max(lhs.length(), rhs.length());
  for (int i = 1; i <= len; ++i) {
    sl += lhs.part(i);
    sr += rhs.part(i);
    if (sl < sr) ge = false;
    if (sl > sr) le = false;
  }
  if (ge && le) return Dominance::Equal;
  if (ge) return Dominance::Greater;
  if (le) return Dominance::Less;
  return Dominance::Incomparable;
}

int profile_beta(const std::map<int, int>& diag_counts, int k) {
  auto d = [&](int c) {
    auto it = diag_counts.find(c);
    return it == diag_counts.end() ? 0 : it->second;
  };
  auto A = [&](int c) { return std::abs(c) + 2 * d(c); };
  return A(k + 1) == A(k) + 1 ? 1 : 0;
}

int BoxTable::index_of(Box b) const {
  for (int i = 0; i < n(); ++i)
    if (boxes[i] == b) return i;
  return -1;
}

int BoxTable::d(int k) const {
  auto it = diag_counts.find(k);
  return it == diag_counts.end() ? 0 : it->second;
}

BoxTable box_table(const Partition& lambda) {
  BoxTable t;
  t.lambda = lambda;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) t.boxes.push_back({i, j});
  std::stable_sort(t.boxes.begin(), t.boxes.end(), [](const Box& x, const Box& y) {
    if (x.content() != y.content()) return x.content() < y.content();
    return x.height() > y.height();
  });
  Partition conj = lambda.conjugate();
  for (const Box& b : t.boxes) ++t.diag_counts[b.content()];
  for (int i = 0; i < t.n(); ++i) {
    const Box& b = t.boxes[i];
    t.content.push_back(b.content());
    t.height.push_back(b.height());
    t.beta.push_back(profile_beta(t.diag_counts, b.content()));
    t.leg.push_back(lambda.part(b.row) - b.col);
    t.arm.push_back(conj.part(b.col) - b.row);
    if (b == Box{1, 1}) t.root = i;
  }
  return t;
}

bool rho_exceeds_plus_one(const BoxTable& t, int j, int i) {
  int dc = t.content[j] - t.content[i];
  return dc > 1 || (dc == 1 && t.height[j] < t.height[i]);
}

Monomial box_character(Box b) {
  return Monomial::t1().pow(-(b.col - 1)) * Monomial::t2().pow(-(b.row - 1));
}

LinearForm box_character_additive(Box b) { return LinearForm::of_t(1 - b.col, 1 - b.row); }

}  // namespace hilbstab
