#include "otfgraph/toss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace otfgraph {

namespace {

using u128 = unsigned __int128;
using boost::multiprecision::cpp_int;

constexpr std::uint64_t kMaxAlpha = std::uint64_t{1} << 62;

// Largest y in [0, t-1] with P'_y <= num/den, for 0 <= num < den.
// P'_y <= H  <=>  y * (1 - H) <= H * (xi - 1).
std::uint64_t bucket(std::uint64_t num, std::uint64_t den, std::uint64_t xi,
                     std::uint64_t t) {
  const u128 y = (u128{num} * (xi - 1)) / (den - num);
  return y >= t - 1 ? t - 1 : static_cast<std::uint64_t>(y);
}

cpp_int bucket(const cpp_int& num, const cpp_int& den, std::uint64_t xi,
               std::uint64_t t) {
  cpp_int y = (num * (xi - 1)) / (den - num);
  return y >= t - 1 ? cpp_int(t - 1) : y;
}

}  // namespace

Toss::Toss(std::uint64_t alpha) : alpha_(std::clamp<std::uint64_t>(alpha, 2, kMaxAlpha)) {}

Toss Toss::for_graph(Node n, double exponent) {
  if (!(exponent > 1.0)) throw std::invalid_argument("toss exponent must exceed 1");
  const double a = std::pow(static_cast<double>(n), exponent);
  if (!(a < static_cast<double>(kMaxAlpha))) return Toss(kMaxAlpha);
  return Toss(static_cast<std::uint64_t>(a));
}

std::uint64_t Toss::operator()(BitSource& source, std::uint64_t xi, std::uint64_t t) {
  if (xi == 0) throw std::invalid_argument("toss: xi must be positive");
  if (t == 0) throw std::invalid_argument("toss: t must be positive");
  ++calls_;
  if (t == 1) return 0;

  const std::uint64_t m = source.uniform_int(alpha_);
  const std::uint64_t y = bucket(m, alpha_, xi, t);
  // The cell [m, m+1)/alpha must end at or before P'_{y+1} = (y+1)/(xi+y).
  if (y + 1 == t || u128{m + 1} * (xi + y) <= u128{y + 1} * alpha_) return y;

  ++refinements_;
  cpp_int lo = m;
  cpp_int den = alpha_;
  for (;;) {
    lo = (lo << 1) | static_cast<unsigned>(source.bit());
    den <<= 1;
    const cpp_int z = bucket(lo, den, xi, t);
    if (z + 1 == t || (lo + 1) * (xi + z) <= (z + 1) * den) {
      return static_cast<std::uint64_t>(z);
    }
  }
}

}  // namespace otfgraph
