#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace chek {

using Rat = boost::rational<long long>;

inline std::string rat_to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "p", "p/q" and plain decimals such as "10.5" (parsed exactly).
inline Rat rat_from_string(const std::string& s) {
  auto bad = [&]() -> Rat { throw std::runtime_error("bad rational: '" + s + "'"); };
  if (s.empty()) return bad();
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) return bad();
    return Rat(num, den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rat(std::stoll(s));
  std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
  if (fp.empty()) return Rat(std::stoll(ip));
  long long den = 1;
  for (size_t i = 0; i < fp.size(); ++i) {
    if (den > (1LL << 52)) return bad();
    den *= 10;
  }
  bool neg = !ip.empty() && ip[0] == '-';
  long long whole = ip.empty() || ip == "-" ? 0 : std::stoll(ip);
  long long frac = std::stoll(fp);
  Rat r = Rat(whole) + (neg ? -Rat(frac, den) : Rat(frac, den));
  return r;
}

inline double rat_to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace chek
