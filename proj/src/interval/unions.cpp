#include <algorithm>

#include "stonework/error.hpp"
#include "stonework/interval.hpp"

namespace stonework::interval {

namespace {

const Dyadic kZero = Dyadic::integer(0);
const Dyadic kOne = Dyadic::integer(1);

}  // namespace

IntervalUnion::IntervalUnion(Kind kind, std::vector<Part> parts) : kind_(kind) {
  for (const Part& p : parts) {
    if (p.lo < kZero || p.hi > kOne || p.lo > p.hi)
      throw OutOfRange("part [" + p.lo.to_string() + ", " + p.hi.to_string() + "] is not a subinterval of [0,1]");
  }
  if (kind == Kind::OpenInI) {
    std::erase_if(parts, [](const Part& p) { return p.lo == p.hi; });
  }
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  for (Part& p : parts) {
    if (!parts_.empty()) {
      Part& last = parts_.back();
      bool joins = kind == Kind::Closed ? p.lo <= last.hi : p.lo < last.hi;
      if (joins) {
        last.hi = std::max(last.hi, p.hi);
        continue;
      }
    }
    parts_.push_back(std::move(p));
  }
}

bool IntervalUnion::contains(const Dyadic& x) const {
  for (const Part& p : parts_) {
    if (kind_ == Kind::Closed) {
      if (p.lo <= x && x <= p.hi) return true;
    } else {
      bool above = p.lo < x || (p.lo == kZero && x == kZero);
      bool below = x < p.hi || (p.hi == kOne && x == kOne);
      if (above && below) return true;
    }
  }
  return false;
}

bool IntervalUnion::is_normalized() const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const Part& p = parts_[i];
    if (p.lo < kZero || p.hi > kOne || p.lo > p.hi) return false;
    if (i == 0) continue;
    const Dyadic& prev = parts_[i - 1].hi;
    if (kind_ == Kind::Closed ? !(prev < p.lo) : !(prev <= p.lo)) return false;
  }
  return true;
}

std::string IntervalUnion::to_string() const {
  if (parts_.empty()) return "empty";
  std::string out;
  for (const Part& p : parts_) {
    if (!out.empty()) out += " u ";
    bool open_lo = kind_ == Kind::OpenInI && p.lo != kZero;
    bool open_hi = kind_ == Kind::OpenInI && p.hi != kOne;
    out += open_lo ? '(' : '[';
    out += p.lo.to_string() + ", " + p.hi.to_string();
    out += open_hi ? ')' : ']';
  }
  return out;
}

IntervalUnion cylinder_image(const BitWord& w) {
  Dyadic lo = cs_value(w);
  return IntervalUnion(IntervalUnion::Kind::Closed, {Part{lo, lo + Dyadic::unit(w.size())}});
}

IntervalUnion decidable_image(std::span<const BitWord> words) {
  std::vector<Part> parts;
  parts.reserve(words.size());
  for (const BitWord& w : words) {
    Dyadic lo = cs_value(w);
    parts.push_back(Part{lo, lo + Dyadic::unit(w.size())});
  }
  return IntervalUnion(IntervalUnion::Kind::Closed, std::move(parts));
}

IntervalUnion complement_closed_union(const IntervalUnion& u) {
  if (u.kind() != IntervalUnion::Kind::Closed) throw InvariantViolated("expected a closed union");
  return complement(u);
}

IntervalUnion complement(const IntervalUnion& u) {
  const auto& ps = u.parts();
  bool closed = u.kind() == IntervalUnion::Kind::Closed;
  auto kind = closed ? IntervalUnion::Kind::OpenInI : IntervalUnion::Kind::Closed;
  if (ps.empty()) return IntervalUnion(kind, {Part{kZero, kOne}});

  std::vector<Part> gaps;
  // For an open union the leading part already holds 0 when it starts there.
  if (ps.front().lo > kZero) gaps.push_back(Part{kZero, ps.front().lo});
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) gaps.push_back(Part{ps[i].hi, ps[i + 1].lo});
  if (ps.back().hi < kOne) gaps.push_back(Part{ps.back().hi, kOne});
  return IntervalUnion(kind, std::move(gaps));
}

BitWord Expansion::truncate(std::size_t m) const {
  std::vector<bool> bits(m, repeat);
  for (std::size_t i = 0; i < std::min(m, prefix.size()); ++i) bits[i] = prefix[i];
  return BitWord(std::move(bits));
}

std::string Expansion::to_string() const {
  return prefix.to_string() + "(" + (repeat ? "1" : "0") + ")";
}

std::vector<Expansion> cs_fiber(const Dyadic& d) {
  if (d < kZero || d > kOne) throw OutOfRange("dyadic " + d.to_string() + " lies outside [0,1]");
  if (d == kZero) return {Expansion{BitWord(), false}};
  if (d == kOne) return {Expansion{BitWord(), true}};
  BitWord w = BitWord::from_value(d.num(), d.exp());
  std::vector<bool> lowered = w.bits();
  lowered.back() = false;
  return {Expansion{w, false}, Expansion{BitWord(std::move(lowered)), true}};
}

}  // namespace stonework::interval
