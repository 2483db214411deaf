#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qtower {

constexpr int kMaxPoints = 8;

// Punctured link pattern on n boundary points of a disc.
//
// Even n: a noncrossing perfect matching plus the puncture face, stored as
// the smallest boundary gap of that face (gap g lies between points g and
// g+1; gap 0 lies between n and 1). An arch (a,b), a<b, is "flagged" when
// the puncture lies on the side of the arch away from gap 0, i.e. when
// a <= gap < b.
//
// Odd n: a defect point d joined to the puncture plus a noncrossing
// matching of the remaining points; arch (a,b) is flagged iff a < d < b.
class Pattern {
 public:
  Pattern() = default;

  static Pattern even(int n, const std::array<std::int8_t, kMaxPoints + 1>& partner, int gap);
  static Pattern odd(int n, const std::array<std::int8_t, kMaxPoints + 1>& partner, int defect);
  // Build from a list of arches (1-based endpoints, any order).
  static Pattern from_arches(int n, const std::vector<std::pair<int, int>>& arches, int gap_or_defect);

  int n() const { return n_; }
  bool is_even() const { return n_ % 2 == 0; }
  int defect() const { return defect_; }  // 0 for even n
  int gap() const { return gap_; }        // canonical puncture gap, even n only
  int partner(int i) const { return partner_[i]; }  // 0 at the defect
  const std::array<std::int8_t, kMaxPoints + 1>& partners() const { return partner_; }
  std::uint32_t word() const { return word_; }

  // Arches as (a,b), a<b, sorted by a.
  std::vector<std::pair<int, int>> arches() const;
  bool flagged(int a, int b) const;
  // Gaps of the puncture face (1..n with n standing for gap 0) for even n;
  // {d} for odd n.
  std::vector<int> stratum() const;

  std::string key() const;
  std::string word_string() const;  // letters 'a' (alpha) and 'b' (beta)

  friend bool operator==(const Pattern& a, const Pattern& b) { return a.n_ == b.n_ && a.word_ == b.word_; }
  friend bool operator!=(const Pattern& a, const Pattern& b) { return !(a == b); }
  friend bool operator<(const Pattern& a, const Pattern& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.word_ < b.word_;
  }

 private:
  void finish();  // canonical gap + word
  int n_ = 0;
  int defect_ = 0;
  int gap_ = 0;
  std::array<std::int8_t, kMaxPoints + 1> partner_{};
  std::uint32_t word_ = 0;
};

// True iff gap g lies inside arch (a,b), a<b, relative to gap 0.
inline bool gap_inside(int a, int b, int g) { return a <= g && g < b; }

// Smallest gap whose set of enclosing arches equals that of gap g.
int canonical_gap(int n, const std::array<std::int8_t, kMaxPoints + 1>& partner, int g);

// Canonical basis of V_n ordered by word encoding; cached per n.
class Basis {
 public:
  static const Basis& of(int n);
  int n() const { return n_; }
  int size() const { return static_cast<int>(patterns_.size()); }
  const Pattern& operator[](int i) const { return patterns_[i]; }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  // Index of a pattern; -1 if not of this size.
  int index(const Pattern& p) const;
  int index_of_word(std::uint32_t w) const;
  // Decode a word; throws std::invalid_argument if unrealizable.
  const Pattern& decode(std::uint32_t w) const;
  int index_of_key(const std::string& key) const;

 private:
  explicit Basis(int n);
  int n_;
  std::vector<Pattern> patterns_;
  std::vector<int> by_word_;
};

std::vector<Pattern> enumerate(int n);
// Binomial(n, ceil(n/2)).
long long pattern_count(int n);

Pattern fully_nested(int n);
Pattern least_nested(int n);

// Dyck path of a pattern in the stratum touching gap 0 (even) or with
// defect at n (odd); throws std::invalid_argument otherwise.
std::vector<int> dyck_path(const Pattern& p);
Pattern from_dyck_path(int n, const std::vector<int>& heights);
// Number of boxes between the path and the maximal path.
int dyck_content(const std::vector<int>& heights);
bool in_dyck_stratum(const Pattern& p);

}  // namespace qtower
