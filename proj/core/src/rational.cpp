#include "boxdot/rational.hpp"

#include "boxdot/errors.hpp"

#include <cctype>

namespace boxdot {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::NonInjectiveWeights: return "NonInjectiveWeights";
    case Errc::Disconnected: return "Disconnected";
    case Errc::TooSmall: return "TooSmall";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::BadBudget: return "BadBudget";
    case Errc::InvalidArc: return "InvalidArc";
    case Errc::TargetEqualsOrigin: return "TargetEqualsOrigin";
    case Errc::DegenerateApex: return "DegenerateApex";
    case Errc::OnLattice: return "OnLattice";
    case Errc::GeneralPositionViolation: return "GeneralPositionViolation";
    case Errc::NoSuchWeight: return "NoSuchWeight";
    case Errc::TooLarge: return "TooLarge";
    case Errc::GenerationExhausted: return "GenerationExhausted";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

Rational rational_from_decimal(std::string_view s) {
  if (s.empty()) raise(Errc::BadInput, "empty decimal string");
  size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') {
    negative = (s[i] == '-');
    ++i;
  }
  BigInt digits = 0;
  size_t int_digits = 0, frac_digits = 0;
  bool seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) raise(Errc::BadInput, "two dots in decimal: " + std::string(s));
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      raise(Errc::BadInput, "bad character in decimal: " + std::string(s));
    digits = digits * 10 + (c - '0');
    (seen_dot ? frac_digits : int_digits)++;
  }
  if (int_digits + frac_digits == 0)
    raise(Errc::BadInput, "no digits in decimal: " + std::string(s));
  BigInt den = 1;
  for (size_t k = 0; k < frac_digits; ++k) den *= 10;
  if (negative) digits = -digits;
  return Rational(digits, den);
}

std::string to_decimal_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  // Count factors of 2 and 5 in den; a pure 2^a*5^b denominator has an
  // exact decimal expansion with max(a, b) fractional digits.
  BigInt d = den;
  unsigned twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return num.str() + "/" + den.str();
  unsigned digits = twos > fives ? twos : fives;
  BigInt scale = 1;
  for (unsigned k = 0; k < digits; ++k) scale *= 10;
  BigInt scaled = num * (scale / den);
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string body = scaled.str();
  std::string out;
  if (digits == 0) {
    out = body;
  } else {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
    // trim trailing zeros but keep at least one fractional digit trimmed off cleanly
    size_t last = out.find_last_not_of('0');
    if (out[last] == '.') --last;
    out.erase(last + 1);
  }
  if (neg) out.insert(out.begin(), '-');
  return out;
}

BigInt rational_floor(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt floor_sqrt(const Rational& r) {
  if (r < 0) raise(Errc::BadInput, "floor_sqrt of negative rational");
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  // Initial guess from integer sqrt of num/den, then adjust exactly:
  // k = max { k : k^2 * den <= num }.
  BigInt k = boost::multiprecision::sqrt(num / den);
  while ((k + 1) * (k + 1) * den <= num) ++k;
  while (k > 0 && k * k * den > num) --k;
  return k;
}

}  // namespace boxdot
