#ifndef COMMPROB_FIELD_HPP_
#define COMMPROB_FIELD_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace commprob {

  namespace detail {
    inline bool is_prime(std::uint64_t n) noexcept {
      if (n < 2) {
        return false;
      }
      for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
          return false;
        }
      }
      return true;
    }

    // Returns (p, k) with n = p^k, or (0, 0) when n is not a prime power.
    inline std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
      if (n < 2) {
        return {0, 0};
      }
      std::uint64_t p = 0;
      for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
          p = f;
          break;
        }
      }
      if (p == 0) {
        return {n, 1};
      }
      unsigned k = 0;
      while (n % p == 0) {
        n /= p;
        ++k;
      }
      return n == 1 ? std::pair{p, k} : std::pair<std::uint64_t, unsigned>{0, 0};
    }
  }  // namespace detail

  //! A finite field F_{p^k}.
  //!
  //! Elements are the integers 0 .. p^k - 1.  An element encodes the
  //! polynomial representative sum_i c_i x^i (reduced modulo the defining
  //! polynomial) through its base-p digits, c_0 being the least significant
  //! digit.  For k = 1 this is just the residue mod p.
  //!
  //! The defining polynomial is given by its coefficients from the constant
  //! term up to the (monic) leading term, so x^2 + x + 1 is {1, 1, 1}.
  class Field {
   public:
    using value_type = std::uint32_t;

    //! Largest supported field order.
    static constexpr std::uint64_t max_order = std::uint64_t(1) << 20;

    Field(std::uint32_t p, unsigned k = 1, std::vector<value_type> modulus = {})
        : _p(p), _k(k), _q(1), _modulus(std::move(modulus)) {
      if (!detail::is_prime(p)) {
        throw Error(Errc::non_prime, std::to_string(p) + " is not prime");
      }
      if (k < 1) {
        throw Error(Errc::invalid_field, "extension degree must be >= 1");
      }
      std::uint64_t q = 1;
      for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > max_order) {
          throw Error(Errc::invalid_field,
                      "field order exceeds " + std::to_string(max_order));
        }
      }
      _q = static_cast<value_type>(q);
      if (k == 1 && _modulus.empty()) {
        _modulus = {0, 1};
      }
      validate_modulus();
      if (_q <= table_limit) {
        build_tables();
      }
    }

    std::uint32_t characteristic() const noexcept {
      return _p;
    }

    unsigned degree() const noexcept {
      return _k;
    }

    //! Number of elements p^k.
    value_type order() const noexcept {
      return _q;
    }

    std::vector<value_type> const& modulus() const noexcept {
      return _modulus;
    }

    value_type zero() const noexcept {
      return 0;
    }

    value_type one() const noexcept {
      return 1;
    }

    value_type add(value_type a, value_type b) const {
      if (_k == 1) {
        return static_cast<value_type>((std::uint64_t(a) + b) % _p);
      }
      if (!_add.empty()) {
        return _add[std::size_t(a) * _q + b];
      }
      return digitwise(a, b, [this](value_type x, value_type y) {
        return (x + y) % _p;
      });
    }

    value_type neg(value_type a) const {
      if (_k == 1) {
        return a == 0 ? 0 : _p - a;
      }
      return digitwise(a, 0, [this](value_type x, value_type) {
        return (_p - x) % _p;
      });
    }

    value_type sub(value_type a, value_type b) const {
      return add(a, neg(b));
    }

    value_type mul(value_type a, value_type b) const {
      if (_k == 1) {
        return static_cast<value_type>((std::uint64_t(a) * b) % _p);
      }
      if (!_mul.empty()) {
        return _mul[std::size_t(a) * _q + b];
      }
      return slow_mul(a, b);
    }

    //! Multiplicative inverse; a must be nonzero.
    value_type inv(value_type a) const {
      if (a == 0 || a >= _q) {
        throw Error(Errc::invalid_element, "no inverse of " + std::to_string(a));
      }
      if (!_inv.empty()) {
        return _inv[a];
      }
      // a^(q-2)
      value_type result = 1, base = a;
      for (std::uint64_t e = _q - 2; e > 0; e >>= 1) {
        if (e & 1) {
          result = mul(result, base);
        }
        base = mul(base, base);
      }
      return result;
    }

    bool operator==(Field const& that) const noexcept {
      return _p == that._p && _k == that._k && _modulus == that._modulus;
    }

   private:
    static constexpr value_type table_limit = 256;

    template <typename Op>
    value_type digitwise(value_type a, value_type b, Op op) const {
      value_type result = 0, place = 1;
      for (unsigned i = 0; i < _k; ++i) {
        result += place * op(a % _p, b % _p);
        a /= _p;
        b /= _p;
        place *= _p;
      }
      return result;
    }

    std::vector<value_type> digits(value_type a) const {
      std::vector<value_type> out(_k);
      for (unsigned i = 0; i < _k; ++i) {
        out[i] = a % _p;
        a /= _p;
      }
      return out;
    }

    value_type slow_mul(value_type a, value_type b) const {
      auto x = digits(a), y = digits(b);
      std::vector<std::uint64_t> prod(2 * _k - 1, 0);
      for (unsigned i = 0; i < _k; ++i) {
        for (unsigned j = 0; j < _k; ++j) {
          prod[i + j] = (prod[i + j] + std::uint64_t(x[i]) * y[j]) % _p;
        }
      }
      // reduce with the monic modulus: x^k = -sum_{i<k} m_i x^i
      for (std::size_t top = prod.size(); top-- > _k;) {
        std::uint64_t c = prod[top];
        if (c == 0) {
          continue;
        }
        prod[top] = 0;
        for (unsigned i = 0; i < _k; ++i) {
          std::size_t pos = top - _k + i;
          prod[pos] = (prod[pos] + (_p - _modulus[i]) * c) % _p;
        }
      }
      value_type result = 0, place = 1;
      for (unsigned i = 0; i < _k; ++i) {
        result += place * static_cast<value_type>(prod[i]);
        place *= _p;
      }
      return result;
    }

    void validate_modulus() const {
      if (_modulus.size() != _k + 1 || _modulus.back() != 1) {
        throw Error(Errc::invalid_field,
                    "modulus must be monic of degree " + std::to_string(_k));
      }
      for (auto c : _modulus) {
        if (c >= _p) {
          throw Error(Errc::invalid_field, "modulus coefficient out of range");
        }
      }
      if (_k == 1) {
        return;
      }
      // Trial division by every monic polynomial of degree 1 .. k/2.
      for (unsigned deg = 1; deg <= _k / 2; ++deg) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < deg; ++i) {
          count *= _p;
        }
        for (std::uint64_t code = 0; code < count; ++code) {
          std::vector<std::uint64_t> divisor(deg + 1);
          std::uint64_t c = code;
          for (unsigned i = 0; i < deg; ++i) {
            divisor[i] = c % _p;
            c /= _p;
          }
          divisor[deg] = 1;
          if (divides(divisor)) {
            throw Error(Errc::reducible_modulus,
                        "modulus has a factor of degree " + std::to_string(deg));
          }
        }
      }
    }

    bool divides(std::vector<std::uint64_t> const& divisor) const {
      std::vector<std::uint64_t> rem(_modulus.begin(), _modulus.end());
      std::size_t deg = divisor.size() - 1;
      for (std::size_t top = rem.size(); top-- > deg;) {
        std::uint64_t c = rem[top];
        if (c == 0) {
          continue;
        }
        for (std::size_t i = 0; i <= deg; ++i) {
          std::size_t pos = top - deg + i;
          rem[pos] = (rem[pos] + (_p - divisor[i]) * c) % _p;
        }
      }
      for (std::size_t i = 0; i < deg; ++i) {
        if (rem[i] != 0) {
          return false;
        }
      }
      return true;
    }

    void build_tables() {
      if (_k == 1) {
        _inv.assign(_q, 0);
        for (value_type a = 1; a < _q; ++a) {
          for (value_type b = 1; b < _q; ++b) {
            if ((std::uint64_t(a) * b) % _p == 1) {
              _inv[a] = b;
              break;
            }
          }
        }
        return;
      }
      std::size_t const n = std::size_t(_q) * _q;
      _add.resize(n);
      _mul.resize(n);
      _inv.assign(_q, 0);
      for (value_type a = 0; a < _q; ++a) {
        for (value_type b = 0; b < _q; ++b) {
          _add[std::size_t(a) * _q + b] = digitwise(
              a, b, [this](value_type x, value_type y) { return (x + y) % _p; });
          value_type prod = slow_mul(a, b);
          _mul[std::size_t(a) * _q + b] = prod;
          if (prod == 1) {
            _inv[a] = b;
          }
        }
      }
    }

    std::uint32_t _p;
    unsigned _k;
    value_type _q;
    std::vector<value_type> _modulus;
    std::vector<value_type> _add;
    std::vector<value_type> _mul;
    std::vector<value_type> _inv;
  };

}  // namespace commprob

#endif  // COMMPROB_FIELD_HPP_
