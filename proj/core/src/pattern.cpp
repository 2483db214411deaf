#include "qtower/pattern.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qtower {

namespace {

using Partners = std::array<std::int8_t, kMaxPoints + 1>;

// Bitmask over points a of arches (a, partner a) enclosing gap g.
std::uint32_t gap_signature(int n, const Partners& partner, int g) {
  std::uint32_t sig = 0;
  for (int a = 1; a <= n; ++a) {
    int b = partner[a];
    if (b > a && gap_inside(a, b, g)) sig |= 1u << a;
  }
  return sig;
}

void check_matching(int n, const Partners& partner, int defect) {
  for (int a = 1; a <= n; ++a) {
    int b = partner[a];
    if (a == defect) {
      if (b != 0) throw std::invalid_argument("Pattern: defect point is matched");
      continue;
    }
    if (b < 1 || b > n || b == a || partner[b] != a) throw std::invalid_argument("Pattern: not a matching");
  }
  for (int a = 1; a <= n; ++a) {
    int b = partner[a];
    if (b <= a) continue;
    for (int c = a + 1; c < b; ++c) {
      int d = partner[c];
      if (d != 0 && (d < a || d > b)) throw std::invalid_argument("Pattern: crossing arches");
    }
  }
}

void noncrossing_matchings(std::vector<int>& points, Partners& partner, std::vector<Partners>& out) {
  if (points.empty()) {
    out.push_back(partner);
    return;
  }
  int first = points[0];
  for (std::size_t j = 1; j < points.size(); j += 2) {
    int other = points[j];
    std::vector<int> inner(points.begin() + 1, points.begin() + static_cast<long>(j));
    std::vector<int> outer(points.begin() + static_cast<long>(j) + 1, points.end());
    partner[first] = static_cast<std::int8_t>(other);
    partner[other] = static_cast<std::int8_t>(first);
    std::vector<Partners> inner_done;
    noncrossing_matchings(inner, partner, inner_done);
    for (auto& p : inner_done) noncrossing_matchings(outer, p, out);
    partner[first] = 0;
    partner[other] = 0;
  }
}

}  // namespace

int canonical_gap(int n, const Partners& partner, int g) {
  g = ((g % n) + n) % n;
  std::uint32_t sig = gap_signature(n, partner, g);
  for (int h = 0; h < n; ++h)
    if (gap_signature(n, partner, h) == sig) return h;
  return g;
}

Pattern Pattern::even(int n, const Partners& partner, int gap) {
  if (n % 2 != 0 || n < 0 || n > kMaxPoints) throw std::invalid_argument("Pattern: even size expected");
  check_matching(n, partner, 0);
  Pattern p;
  p.n_ = n;
  p.partner_ = partner;
  p.gap_ = n == 0 ? 0 : ((gap % n) + n) % n;
  p.finish();
  return p;
}

Pattern Pattern::odd(int n, const Partners& partner, int defect) {
  if (n % 2 != 1 || n > kMaxPoints) throw std::invalid_argument("Pattern: odd size expected");
  if (defect < 1 || defect > n) throw std::invalid_argument("Pattern: defect out of range");
  check_matching(n, partner, defect);
  Pattern p;
  p.n_ = n;
  p.partner_ = partner;
  p.defect_ = defect;
  p.finish();
  return p;
}

Pattern Pattern::from_arches(int n, const std::vector<std::pair<int, int>>& arches, int gap_or_defect) {
  Partners partner{};
  for (auto [a, b] : arches) {
    if (a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("Pattern: arch endpoint out of range");
    partner[a] = static_cast<std::int8_t>(b);
    partner[b] = static_cast<std::int8_t>(a);
  }
  return n % 2 == 0 ? even(n, partner, gap_or_defect) : odd(n, partner, gap_or_defect);
}

void Pattern::finish() {
  if (n_ % 2 == 0 && n_ > 0) gap_ = canonical_gap(n_, partner_, gap_);
  word_ = 0;
  auto set_beta = [&](int pos) { word_ |= 1u << (n_ - pos); };
  for (int a = 1; a <= n_; ++a) {
    int b = partner_[a];
    if (b <= a) continue;
    if (flagged(a, b)) {
      set_beta(a);
    } else {
      set_beta(b);
    }
  }
}

bool Pattern::flagged(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (n_ % 2 == 0) return gap_inside(a, b, gap_);
  return a < defect_ && defect_ < b;
}

std::vector<std::pair<int, int>> Pattern::arches() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n_; ++a)
    if (partner_[a] > a) out.emplace_back(a, partner_[a]);
  return out;
}

std::vector<int> Pattern::stratum() const {
  if (n_ % 2 == 1) return {defect_};
  std::vector<int> out;
  if (n_ == 0) return out;
  std::uint32_t sig = gap_signature(n_, partner_, gap_);
  for (int g = 1; g <= n_; ++g)
    if (gap_signature(n_, partner_, g % n_) == sig) out.push_back(g);
  return out;
}

std::string Pattern::key() const {
  std::ostringstream os;
  auto arch_list = [&]() {
    for (auto [a, b] : arches()) os << "(" << a << " " << b << ")";
  };
  if (n_ % 2 == 0) {
    os << "E;M:";
    arch_list();
    os << ";G:" << gap_;
  } else {
    os << "O;D:" << defect_ << ";M:";
    arch_list();
  }
  return os.str();
}

std::string Pattern::word_string() const {
  std::string s;
  for (int pos = 1; pos <= n_; ++pos) s += (word_ >> (n_ - pos)) & 1u ? 'b' : 'a';
  return s;
}

std::vector<Pattern> enumerate(int n) {
  if (n < 0 || n > kMaxPoints) throw std::invalid_argument("enumerate: size out of range");
  std::vector<Pattern> out;
  if (n % 2 == 0) {
    std::vector<int> pts;
    for (int i = 1; i <= n; ++i) pts.push_back(i);
    Partners empty{};
    std::vector<Partners> matchings;
    noncrossing_matchings(pts, empty, matchings);
    for (const auto& m : matchings) {
      std::vector<std::uint32_t> seen;
      for (int g = 0; g < std::max(n, 1); ++g) {
        std::uint32_t sig = n == 0 ? 0 : gap_signature(n, m, g);
        if (std::find(seen.begin(), seen.end(), sig) != seen.end()) continue;
        seen.push_back(sig);
        out.push_back(Pattern::even(n, m, g));
      }
    }
  } else {
    for (int d = 1; d <= n; ++d) {
      std::vector<int> pts;
      for (int i = 1; i <= n; ++i)
        if (i != d) pts.push_back(i);
      Partners empty{};
      std::vector<Partners> matchings;
      noncrossing_matchings(pts, empty, matchings);
      for (const auto& m : matchings) out.push_back(Pattern::odd(n, m, d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long pattern_count(int n) {
  int k = (n + 1) / 2;
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

Basis::Basis(int n) : n_(n), patterns_(enumerate(n)), by_word_(std::size_t{1} << n, -1) {
  for (int i = 0; i < static_cast<int>(patterns_.size()); ++i) {
    int& slot = by_word_[patterns_[i].word()];
    if (slot != -1) throw std::logic_error("Basis: word encoding is not injective");
    slot = i;
  }
}

const Basis& Basis::of(int n) {
  if (n < 0 || n > kMaxPoints) throw std::invalid_argument("Basis: size out of range");
  static std::once_flag flags[kMaxPoints + 1];
  static const Basis* cache[kMaxPoints + 1] = {};
  std::call_once(flags[n], [n]() { cache[n] = new Basis(n); });
  return *cache[n];
}

int Basis::index(const Pattern& p) const {
  if (p.n() != n_) return -1;
  return by_word_[p.word()];
}

int Basis::index_of_word(std::uint32_t w) const {
  if (w >= by_word_.size()) return -1;
  return by_word_[w];
}

const Pattern& Basis::decode(std::uint32_t w) const {
  int i = index_of_word(w);
  if (i < 0) throw std::invalid_argument("Basis: unrealizable word");
  return patterns_[i];
}

int Basis::index_of_key(const std::string& key) const {
  for (int i = 0; i < size(); ++i)
    if (patterns_[i].key() == key) return i;
  return -1;
}

Pattern fully_nested(int n) {
  std::vector<std::pair<int, int>> arches;
  if (n == 0) return Pattern::from_arches(0, arches, 0);
  if (n % 2 == 0) {
    int k = n / 2;
    arches.emplace_back(1, n);
    for (int j = 0; j + 1 < k; ++j) arches.emplace_back(k - j, k + 1 + j);
    return Pattern::from_arches(n, arches, k);
  }
  int k = n / 2;
  if (k >= 1) arches.emplace_back(1, n);
  for (int j = 0; j + 1 < k; ++j) arches.emplace_back(k - j, k + 2 + j);
  return Pattern::from_arches(n, arches, k + 1);
}

Pattern least_nested(int n) {
  std::vector<std::pair<int, int>> arches;
  for (int i = 1; 2 * i <= n; ++i) arches.emplace_back(2 * i - 1, 2 * i);
  return Pattern::from_arches(n, arches, n % 2 == 0 ? 0 : n);
}

bool in_dyck_stratum(const Pattern& p) {
  if (p.n() % 2 == 0) return p.gap() == 0;
  return p.defect() == p.n();
}

std::vector<int> dyck_path(const Pattern& p) {
  if (!in_dyck_stratum(p)) throw std::invalid_argument("dyck_path: pattern outside the stratum");
  int m = p.n() % 2 == 0 ? p.n() : p.n() - 1;
  std::vector<int> h;
  int height = 0;
  for (int j = 1; j <= m; ++j) {
    height += p.partner(j) > j ? 1 : -1;
    h.push_back(height);
  }
  return h;
}

Pattern from_dyck_path(int n, const std::vector<int>& heights) {
  int m = n % 2 == 0 ? n : n - 1;
  if (static_cast<int>(heights.size()) != m) throw std::invalid_argument("from_dyck_path: length mismatch");
  std::vector<std::pair<int, int>> arches;
  std::vector<int> open;
  int prev = 0;
  for (int j = 1; j <= m; ++j) {
    int h = heights[j - 1];
    if (h < 0 || (h - prev != 1 && h - prev != -1)) throw std::invalid_argument("from_dyck_path: not a Dyck path");
    if (h > prev) {
      open.push_back(j);
    } else {
      arches.emplace_back(open.back(), j);
      open.pop_back();
    }
    prev = h;
  }
  if (prev != 0) throw std::invalid_argument("from_dyck_path: path does not return to 0");
  return Pattern::from_arches(n, arches, n % 2 == 0 ? 0 : n);
}

int dyck_content(const std::vector<int>& heights) {
  int m = static_cast<int>(heights.size());
  int total = 0;
  for (int j = 1; j <= m; ++j) {
    int top = std::min(j, m - j);
    total += top - heights[j - 1];
  }
  return total / 2;
}

}  // namespace qtower
