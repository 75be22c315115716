#include <charconv>
#include <cstdint>

#include "stonework/error.hpp"
#include "stonework/interval.hpp"

namespace stonework::interval {

namespace {

Int pow2(std::size_t n) { return Int(1) << n; }

std::size_t trailing_zeros(const Int& v) {
  if (v == 0) return 0;
  return boost::multiprecision::lsb(boost::multiprecision::abs(v));
}

}  // namespace

Dyadic::Dyadic(Int num, std::size_t exp) : num_(std::move(num)), exp_(exp) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  std::size_t shift = std::min(trailing_zeros(num_), exp_);
  num_ >>= shift;
  exp_ -= shift;
}

Dyadic Dyadic::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto slash = text.find('/');
  std::string_view num_text = trim(text.substr(0, slash));
  if (num_text.empty()) throw OutOfRange("empty dyadic numerator");
  Int num;
  try {
    num = Int(std::string(num_text));
  } catch (const std::exception&) {
    throw OutOfRange("bad dyadic numerator '" + std::string(num_text) + "'");
  }
  if (slash == std::string_view::npos) return Dyadic(num, 0);
  std::string_view den = trim(text.substr(slash + 1));
  if (den.starts_with("2^")) {
    den.remove_prefix(2);
  } else if (den.starts_with("2**")) {
    den.remove_prefix(3);
  } else {
    throw OutOfRange("dyadic denominator must be 2^n");
  }
  std::size_t exp = 0;
  auto [ptr, ec] = std::from_chars(den.data(), den.data() + den.size(), exp);
  if (ec != std::errc() || ptr != den.data() + den.size()) throw OutOfRange("bad dyadic exponent");
  return Dyadic(num, exp);
}

std::string Dyadic::to_string() const {
  return num_.str() + "/2^" + std::to_string(exp_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  std::size_t e = std::max(a.exp_, b.exp_);
  return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  std::size_t e = std::max(a.exp_, b.exp_);
  return Dyadic((a.num_ << (e - a.exp_)) - (b.num_ << (e - b.exp_)), e);
}

Dyadic abs(const Dyadic& a) { return Dyadic(boost::multiprecision::abs(a.num_), a.exp_); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  std::size_t e = std::max(a.exp_, b.exp_);
  Int l = a.num_ << (e - a.exp_);
  Int r = b.num_ << (e - b.exp_);
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BitWord BitWord::parse(std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw OutOfRange("bit word may only contain 0 and 1: '" + std::string(text) + "'");
    bits.push_back(c == '1');
  }
  return BitWord(std::move(bits));
}

BitWord BitWord::from_value(const Int& k, std::size_t n) {
  if (k < 0 || k >= pow2(n)) throw OutOfRange("value " + k.str() + " does not fit in " + std::to_string(n) + " bits");
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = boost::multiprecision::bit_test(k, n - 1 - i);
  return BitWord(std::move(bits));
}

Int BitWord::value() const {
  Int v = 0;
  for (bool b : bits_) {
    v <<= 1;
    if (b) v |= 1;
  }
  return v;
}

std::string BitWord::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

BitWord BitWord::prefix(std::size_t n) const {
  if (n > bits_.size()) throw OutOfRange("prefix longer than word");
  return BitWord(std::vector<bool>(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(n)));
}

BitWord BitWord::concat(const BitWord& other) const {
  std::vector<bool> bits = bits_;
  bits.insert(bits.end(), other.bits_.begin(), other.bits_.end());
  return BitWord(std::move(bits));
}

Dyadic cs_value(const BitWord& w) { return Dyadic(w.value(), w.size()); }

namespace {

void check_lengths(std::size_t n, const BitWord& s, const BitWord& t) {
  if (s.size() != n || t.size() != n)
    throw DimensionMismatch("words must have length " + std::to_string(n) + ", got " + std::to_string(s.size()) +
                            " and " + std::to_string(t.size()));
}

constexpr std::size_t kWordBits = 62;

std::uint64_t small_value(const BitWord& w) {
  std::uint64_t v = 0;
  for (bool b : w.bits()) v = (v << 1) | (b ? 1 : 0);
  return v;
}

// (u.0.1...)|n and (u.1.0...)|n as integers, for u of length m <= n.
std::pair<std::uint64_t, std::uint64_t> companions(std::uint64_t u, std::size_t m, std::size_t n) {
  if (m >= n) return {u >> (m - n), u >> (m - n)};
  std::size_t rest = n - m;
  std::uint64_t base = u << rest;
  std::uint64_t half = std::uint64_t{1} << (rest - 1);
  return {base + half - 1, base + half};
}

}  // namespace

bool near(std::size_t n, const BitWord& s, const BitWord& t) {
  check_lengths(n, s, t);
  Int d = s.value() - t.value();
  return d >= -1 && d <= 1;
}

bool is_near_witness(std::size_t n, const BitWord& s, const BitWord& t, const BitWord& u) {
  check_lengths(n, s, t);
  auto extend = [&](bool first) {
    std::vector<bool> bits;
    bits.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i < u.size())
        bits.push_back(u[i]);
      else
        bits.push_back(i == u.size() ? first : !first);
    }
    return BitWord(std::move(bits));
  };
  BitWord low = extend(false);
  BitWord high = extend(true);
  return (s == low && t == high) || (s == high && t == low);
}

std::optional<BitWord> near_companion_witness(std::size_t n, const BitWord& s, const BitWord& t) {
  check_lengths(n, s, t);
  if (n > kWordBits) throw CapExceeded(n, kWordBits);
  std::uint64_t sv = small_value(s);
  std::uint64_t tv = small_value(t);
  for (std::size_t m = 0; m <= n; ++m) {
    std::uint64_t count = std::uint64_t{1} << m;
    for (std::uint64_t u = 0; u < count; ++u) {
      auto [low, high] = companions(u, m, n);
      if ((sv == low && tv == high) || (sv == high && tv == low)) return BitWord::from_value(Int(u), m);
    }
  }
  return std::nullopt;
}

bool near_companion(std::size_t n, const BitWord& s, const BitWord& t) {
  return near_companion_witness(n, s, t).has_value();
}

}  // namespace stonework::interval
