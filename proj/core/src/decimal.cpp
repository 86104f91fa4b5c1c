#include "camcom/decimal.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>

namespace camcom {

namespace {

double pow10d(int e) { return std::pow(10.0, e); }

long long pow10ll(int e) {
  long long v = 1;
  for (int i = 0; i < e; ++i) v *= 10;
  return v;
}

bool admissible(double v, double lo, double hi, bool lo_closed, bool hi_closed) {
  if (lo_closed ? v < lo : v <= lo) return false;
  if (hi_closed ? v > hi : v >= hi) return false;
  return true;
}

struct Candidate {
  double value;
  double dist;
};

void consider(std::optional<Candidate>& best, double v, double mid, double lo, double hi,
              bool lo_closed, bool hi_closed) {
  if (!admissible(v, lo, hi, lo_closed, hi_closed)) return;
  double dist = std::fabs(v - mid);
  if (!best || dist < best->dist || (dist == best->dist && v < best->value))
    best = Candidate{v, dist};
}

}  // namespace

double round_up(double x, int places) {
  if (!std::isfinite(x)) return x;
  double s = pow10d(places);
  return std::ceil(x * s) / s;
}

double round_down(double x, int places) {
  if (!std::isfinite(x)) return x;
  double s = pow10d(places);
  return std::floor(x * s) / s;
}

std::optional<double> nicest_decimal(double lo, double hi, bool lo_closed, bool hi_closed) {
  if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(lo)) return std::nullopt;

  if (std::isinf(hi)) {
    // Smallest single-digit decimal at or above lo.
    int t = static_cast<int>(std::floor(std::log10(lo)));
    for (int e = t; e < t + 3; ++e) {
      double g = pow10d(e);
      for (int m = 1; m <= 9; ++m) {
        double v = m * g;
        if (lo_closed ? v >= lo : v > lo) return v;
      }
    }
    return std::nullopt;
  }

  double mid = lo / 2 + hi / 2;
  int tlo = static_cast<int>(std::floor(std::log10(lo))) - 1;
  int thi = static_cast<int>(std::floor(std::log10(hi))) + 1;

  for (int k = 1; k <= 17; ++k) {
    std::optional<Candidate> best;
    for (int t = tlo; t <= thi; ++t) {
      int ge = t - k + 1;  // grid exponent: candidates are m * 10^ge
      double g = pow10d(ge);
      double first_f = std::ceil(lo / g) - 2.0;
      double last_f = std::floor(hi / g) + 2.0;
      if (first_f > 9.0e18 || last_f < 1.0) continue;
      long long m_first = std::max(static_cast<long long>(first_f), pow10ll(k - 1));
      long long m_last =
          std::min(last_f > 9.0e18 ? pow10ll(k) - 1 : static_cast<long long>(last_f),
                   pow10ll(k) - 1);
      if (m_first > m_last) continue;

      auto probe = [&](long long m) {
        if (m < m_first || m > m_last) return;
        consider(best, static_cast<double>(m) * g, mid, lo, hi, lo_closed, hi_closed);
      };
      for (long long m = m_first; m <= m_first + 3 && m <= m_last; ++m) probe(m);
      for (long long m = m_last; m >= m_last - 3 && m >= m_first; --m) probe(m);
      double near_f = mid / g;
      if (near_f > 0 && near_f < 9.0e18) {
        long long m_near = static_cast<long long>(std::llround(near_f));
        for (long long m = m_near - 2; m <= m_near + 2; ++m) probe(m);
      }
    }
    if (best) return best->value;
  }
  return std::nullopt;
}

std::string shortest_decimal(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

}  // namespace camcom
