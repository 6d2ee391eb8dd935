#ifndef COMMPROB_BIGNUM_HPP_
#define COMMPROB_BIGNUM_HPP_

#include <cstddef>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace commprob {

  //! Exact non-negative counts; these grow like a^d.
  using BigCount = boost::multiprecision::cpp_int;

  //! Exact rationals, always kept in lowest terms with positive denominator.
  using BigRational = boost::multiprecision::cpp_rational;

  inline BigCount power(BigCount base, unsigned long long exponent) {
    BigCount result = 1;
    while (exponent > 0) {
      if (exponent & 1) {
        result *= base;
      }
      base *= base;
      exponent >>= 1;
    }
    return result;
  }

  inline BigRational power(BigRational base, unsigned long long exponent) {
    return BigRational(power(boost::multiprecision::numerator(base), exponent),
                       power(boost::multiprecision::denominator(base), exponent));
  }

  inline BigRational make_rational(BigCount num, BigCount den) {
    return BigRational(std::move(num), std::move(den));
  }

  inline std::string to_string(BigCount const& x) {
    return x.str();
  }

  //! "num/den" in lowest terms, or just "num" for integers.
  inline std::string to_string(BigRational const& x) {
    auto const& den = boost::multiprecision::denominator(x);
    if (den == 1) {
      return boost::multiprecision::numerator(x).str();
    }
    return boost::multiprecision::numerator(x).str() + "/" + den.str();
  }

  //! Fixed-point decimal expansion truncated toward zero.
  inline std::string to_decimal(BigRational const& x, unsigned digits) {
    BigCount num = boost::multiprecision::numerator(x);
    BigCount den = boost::multiprecision::denominator(x);
    bool     negative = num < 0;
    if (negative) {
      num = -num;
    }
    BigCount    scaled = num * power(BigCount(10), digits) / den;
    std::string s      = scaled.str();
    if (s.size() <= digits) {
      s.insert(0, digits + 1 - s.size(), '0');
    }
    std::string out = s.substr(0, s.size() - digits);
    if (digits > 0) {
      out += "." + s.substr(s.size() - digits);
    }
    return negative ? "-" + out : out;
  }

  inline BigRational abs_value(BigRational const& x) {
    return x < 0 ? BigRational(-x) : x;
  }

}  // namespace commprob

#endif  // COMMPROB_BIGNUM_HPP_
