#include "mulab/field.hpp"

#include <cstdint>

#include "mulab/util.hpp"

namespace mulab {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw InputError("field characteristic must be a prime < 2^31, got " + std::to_string(p));
  return FieldSpec{p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "q" || s == "Q" || s == "0") return rationals();
  std::string body = s;
  if (s.rfind("p:", 0) == 0 || s.rfind("P:", 0) == 0) body = s.substr(2);
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(body, &pos);
    if (pos != body.size()) throw InputError("bad field spec: '" + s + "'");
    return prime(static_cast<std::uint32_t>(v));
  } catch (const std::logic_error&) {
    throw InputError("bad field spec: '" + s + "' (expected q or p:<prime>)");
  }
}

std::string FieldSpec::str() const {
  return is_rational() ? "q" : "p:" + std::to_string(p);
}

}  // namespace mulab
