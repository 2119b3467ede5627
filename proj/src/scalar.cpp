#include "tpschur/scalar.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace tpschur {

namespace {

unsigned g_precision_bits = 0;  // 0 = not initialized yet

unsigned digits10_for_bits(unsigned bits) {
  // ceil(bits * log10(2)), one extra guard digit
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398119521)) + 1;
}

}  // namespace

void set_float_precision_bits(unsigned bits) {
  if (bits < 64) throw DomainError("float precision must be at least 64 bits");
  g_precision_bits = bits;
  BigFloat::default_precision(digits10_for_bits(bits));
}

unsigned float_precision_bits() {
  if (g_precision_bits == 0) set_float_precision_bits(256);
  return g_precision_bits;
}

Integer factorial(unsigned k) {
  static std::mutex mu;
  static std::vector<Integer> cache{Integer(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= k) {
    cache.push_back(cache.back() * Integer(cache.size()));
  }
  return cache[k];
}

namespace {

// "-12.345e-2" -> (-12345 / 1000) * 10^-2, exactly
Rational decimal_to_rational(const std::string& text) {
  std::string digits;
  long exp10 = 0;
  bool neg = false;
  size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_dot) --exp10;
      seen_digit = true;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      exp10 += std::stol(text.substr(i + 1));
      break;
    } else {
      throw DomainError("cannot parse number: " + text);
    }
  }
  if (!seen_digit) throw DomainError("cannot parse number: " + text);
  Rational mantissa{Integer(digits)};
  if (neg) mantissa = -mantissa;
  Rational scale = exp10 >= 0 ? Rational(pow_n(Integer(10), exp10))
                              : Rational(1) / Rational(pow_n(Integer(10), -exp10));
  return mantissa * scale;
}

}  // namespace

Rational rational_from_text(const std::string& text) {
  if (text.empty()) throw DomainError("empty number");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational num = decimal_to_rational(text.substr(0, slash));
    Rational den = decimal_to_rational(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator: " + text);
    return num / den;
  }
  return decimal_to_rational(text);
}

BigFloat bigfloat_from_text(const std::string& text) {
  float_precision_bits();  // make sure precision is initialized
  if (text.empty()) throw DomainError("empty number");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigFloat num(text.substr(0, slash));
      BigFloat den(text.substr(slash + 1));
      if (den == 0) throw DomainError("zero denominator: " + text);
      return num / den;
    }
    return BigFloat(text);
  } catch (const std::runtime_error&) {
    throw DomainError("cannot parse number: " + text);
  }
}

std::string to_text(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return v.str();
}

std::string to_text(const BigFloat& v) { return v.str(); }

}  // namespace tpschur
