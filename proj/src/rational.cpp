#include "bosonic/rational.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace bosonic {

std::string to_decimal(const Rational& q, int significant) {
  if (significant < 1) throw std::invalid_argument("precision must be positive");
  if (q == 0) return "0";
  const auto bits = static_cast<mp_bitcnt_t>(significant * 4 + 64);
  mpf_class f(q, bits);
  char* buffer = nullptr;
  gmp_asprintf(&buffer, "%.*Fg", significant, f.get_mpf_t());
  std::string out(buffer);
  void (*free_fn)(void*, size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &free_fn);
  free_fn(buffer, out.size() + 1);
  return out;
}

std::string to_decimal(double x, int significant) {
  if (significant < 1) throw std::invalid_argument("precision must be positive");
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", significant > 40 ? 40 : significant, x);
  return buffer;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace bosonic
