#ifndef UPTOLAB_INTPRED_HPP
#define UPTOLAB_INTPRED_HPP

// Predicates over the integers: finite unions of intervals whose ends may be
// infinite. Kept in canonical form (sorted, disjoint, non-adjacent), so
// structural equality is set equality.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uptolab/error.hpp"

namespace uptolab {

class IntPred {
 public:
  using Int = std::int64_t;
  static constexpr Int kNegInf = std::numeric_limits<Int>::min();
  static constexpr Int kPosInf = std::numeric_limits<Int>::max();

  struct Interval {
    Int lo, hi;
    friend bool operator==(const Interval&, const Interval&) = default;
  };

  IntPred() = default;

  static IntPred empty() { return {}; }
  static IntPred all() { return from_intervals({{kNegInf, kPosInf}}); }
  static IntPred point(Int v) { return from_intervals({{v, v}}); }
  static IntPred range(Int lo, Int hi) { return from_intervals({{lo, hi}}); }
  static IntPred at_least(Int lo) { return from_intervals({{lo, kPosInf}}); }
  static IntPred at_most(Int hi) { return from_intervals({{kNegInf, hi}}); }

  static IntPred of(std::initializer_list<Int> values) {
    std::vector<Interval> iv;
    for (Int v : values) iv.push_back({v, v});
    return from_intervals(std::move(iv));
  }

  /// Canonicalizes an arbitrary list; intervals with lo > hi are dropped.
  /// Finite ends must lie strictly between the two sentinels.
  static IntPred from_intervals(std::vector<Interval> iv) {
    for (const auto& i : iv) {
      if ((i.lo == kPosInf) || (i.hi == kNegInf))
        throw Error(Errc::PreconditionFailed, "interval end uses the wrong infinity");
    }
    std::erase_if(iv, [](const Interval& i) { return i.lo > i.hi; });
    std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) {
      return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    IntPred p;
    for (const auto& i : iv) {
      if (!p.iv_.empty()) {
        auto& last = p.iv_.back();
        if (last.hi == kPosInf || i.lo <= last.hi + 1) {
          last.hi = std::max(last.hi, i.hi);
          continue;
        }
      }
      p.iv_.push_back(i);
    }
    return p;
  }

  const std::vector<Interval>& intervals() const noexcept { return iv_; }
  bool is_empty() const noexcept { return iv_.empty(); }
  bool is_all() const noexcept { return iv_.size() == 1 && iv_[0].lo == kNegInf && iv_[0].hi == kPosInf; }

  bool contains(Int v) const {
    for (const auto& i : iv_)
      if (i.lo <= v && v <= i.hi) return true;
    return false;
  }

  IntPred complement() const {
    std::vector<Interval> out;
    Int next = kNegInf;  // first integer not yet covered
    bool open = true;
    for (const auto& i : iv_) {
      if (open && (next == kNegInf ? i.lo > kNegInf + 1 : next < i.lo))
        out.push_back({next, i.lo - 1});
      if (i.hi >= kPosInf - 1) {
        open = false;
        break;
      }
      next = i.hi + 1;
    }
    if (open) out.push_back({next, kPosInf});
    return from_intervals(std::move(out));
  }

  friend IntPred operator|(const IntPred& a, const IntPred& b) {
    auto iv = a.iv_;
    iv.insert(iv.end(), b.iv_.begin(), b.iv_.end());
    return from_intervals(std::move(iv));
  }

  friend IntPred operator&(const IntPred& a, const IntPred& b) {
    std::vector<Interval> out;
    for (const auto& x : a.iv_)
      for (const auto& y : b.iv_) {
        Int lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
        if (lo <= hi) out.push_back({lo, hi});
      }
    return from_intervals(std::move(out));
  }

  /// {v + k | v in P}. Infinite ends stay infinite.
  IntPred shift(Int k) const {
    auto move = [&](Int v) {
      if (v == kNegInf || v == kPosInf) return v;
      Int r;
      if (__builtin_add_overflow(v, k, &r) || r == kNegInf || r == kPosInf)
        throw Error(Errc::PreconditionFailed, "integer overflow while shifting a predicate");
      return r;
    };
    std::vector<Interval> out;
    for (const auto& i : iv_) out.push_back({move(i.lo), move(i.hi)});
    return from_intervals(std::move(out));
  }

  bool subset_of(const IntPred& o) const { return (*this & o) == *this; }

  friend bool operator==(const IntPred&, const IntPred&) = default;

  /// Textual form accepted back by parse(): `{}`, `Z`, `{5}`, `[1,inf)`,
  /// `(-inf,0]`, `[0,5]`, joined by ` U `.
  std::string str() const {
    if (iv_.empty()) return "{}";
    if (is_all()) return "Z";
    std::string out;
    for (const auto& i : iv_) {
      if (!out.empty()) out += " U ";
      if (i.lo == i.hi) {
        out += "{" + std::to_string(i.lo) + "}";
        continue;
      }
      out += i.lo == kNegInf ? "(-inf" : "[" + std::to_string(i.lo);
      out += ",";
      out += i.hi == kPosInf ? "inf)" : std::to_string(i.hi) + "]";
    }
    return out;
  }

  static IntPred parse(std::string_view text);

 private:
  std::vector<Interval> iv_;
};

namespace detail {

class PredParser {
 public:
  explicit PredParser(std::string_view s) : s_(s) {}

  IntPred parse_all() {
    IntPred p = parse_union();
    skip();
    if (pos_ < s_.size()) fail("expected 'U' between predicates");
    return p;
  }

  /// Parses a union of terms and stops at the first character that cannot
  /// continue it; pos() is then the index of that character.
  IntPred parse_union() {
    IntPred acc = term();
    for (skip(); pos_ < s_.size() && (s_[pos_] == 'U' || s_[pos_] == '|'); skip()) {
      ++pos_;
      acc = acc | term();
    }
    return acc;
  }

  std::size_t pos() const noexcept { return pos_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::Parse, "predicate '" + std::string(s_) + "': " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  // Integer, or `inf` / `+inf` / `-inf`; returns the sentinel for infinities.
  IntPred::Int bound() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    if (s_.substr(pos_, 3) == "inf") {
      pos_ += 3;
      return neg ? IntPred::kNegInf : IntPred::kPosInf;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer or inf");
    IntPred::Int v = 0;
    for (std::size_t k = start; k < pos_; ++k) {
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, s_[k] - '0', &v))
        fail("integer out of range");
    }
    v = neg ? -v : v;
    if (v == IntPred::kNegInf || v == IntPred::kPosInf) fail("integer out of range");
    return v;
  }

  IntPred term() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == 'Z') {
      ++pos_;
      return IntPred::all();
    }
    if (c == '{') {
      ++pos_;
      std::vector<IntPred::Interval> iv;
      if (eat('}')) return IntPred::empty();
      do {
        auto v = bound();
        if (v == IntPred::kNegInf || v == IntPred::kPosInf) fail("set literal cannot contain inf");
        iv.push_back({v, v});
      } while (eat(','));
      expect('}');
      return IntPred::from_intervals(std::move(iv));
    }
    if (c == '[' || c == '(') {
      ++pos_;
      bool open_lo = c == '(';
      auto lo = bound();
      expect(',');
      auto hi = bound();
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != ']' && s_[pos_] != ')')) fail("expected ']' or ')'");
      bool open_hi = s_[pos_++] == ')';
      if (lo == IntPred::kPosInf || hi == IntPred::kNegInf) fail("misplaced infinity");
      if ((lo == IntPred::kNegInf) != open_lo && lo == IntPred::kNegInf) fail("-inf needs '('");
      if ((hi == IntPred::kPosInf) != open_hi && hi == IntPred::kPosInf) fail("inf needs ')'");
      if (open_lo && lo != IntPred::kNegInf) ++lo;
      if (open_hi && hi != IntPred::kPosInf) --hi;
      return IntPred::range(lo, hi);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline IntPred IntPred::parse(std::string_view text) { return detail::PredParser(text).parse_all(); }

/// Parses a predicate starting at text[pos] and advances pos past it.
inline IntPred parse_pred_prefix(std::string_view text, std::size_t& pos) {
  detail::PredParser p(text.substr(pos));
  IntPred out = p.parse_union();
  pos += p.pos();
  return out;
}

}  // namespace uptolab

#endif  // UPTOLAB_INTPRED_HPP
