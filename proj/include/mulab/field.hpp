#pragma once

#include <cstdint>
#include <string>

namespace mulab {

// Coefficient field for homology: the rationals (p == 0) or F_p for a prime
// p < 2^31.
struct FieldSpec {
  std::uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(std::uint32_t p);
  // Accepts "q", "Q", "p:7", or a bare prime like "7".
  static FieldSpec parse(const std::string& s);
  std::string str() const;  // "q" or "p:7"

  bool operator==(const FieldSpec& o) const { return p == o.p; }
  bool operator!=(const FieldSpec& o) const { return p != o.p; }
  bool operator<(const FieldSpec& o) const { return p < o.p; }
};

bool is_prime_u32(std::uint32_t n);

}  // namespace mulab
