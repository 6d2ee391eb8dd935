#ifndef COMMPROB_ELEMENT_HPP_
#define COMMPROB_ELEMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace commprob {

  //! An invertible matrix over a finite field, or a permutation of
  //! {0, ..., m-1}.
  //!
  //! Permutations compose as functions: (a * b)(x) = a(b(x)).  Two elements
  //! are equal iff their canonical encodings are equal; the encoding is the
  //! row-major entry list (matrices) or the image array (permutations), each
  //! value written little-endian with a fixed width of 1, 2 or 4 bytes
  //! chosen from the size of the carrier.
  class GroupElement {
   public:
    enum class Kind : std::uint8_t { matrix, permutation };
    using value_type = std::uint32_t;

    //! An n x n matrix, entries row-major as field element indices.
    static GroupElement matrix(std::shared_ptr<Field const> field,
                               std::size_t                  n,
                               std::vector<value_type>      entries) {
      if (!field) {
        throw Error(Errc::invalid_element, "matrix without a field");
      }
      if (n == 0 || entries.size() != n * n) {
        throw Error(Errc::invalid_element,
                    "expected " + std::to_string(n * n) + " matrix entries");
      }
      for (auto v : entries) {
        if (v >= field->order()) {
          throw Error(Errc::invalid_element,
                      "entry " + std::to_string(v) + " is not a field element");
        }
      }
      GroupElement g(Kind::matrix, n, std::move(entries), std::move(field));
      if (g.determinant() == 0) {
        throw Error(Errc::invalid_element, "matrix is singular");
      }
      return g;
    }

    static GroupElement permutation(std::vector<value_type> images) {
      std::vector<bool> seen(images.size(), false);
      for (auto v : images) {
        if (v >= images.size() || seen[v]) {
          throw Error(Errc::invalid_element, "image array is not a bijection");
        }
        seen[v] = true;
      }
      if (images.empty()) {
        throw Error(Errc::invalid_element, "empty permutation");
      }
      auto m = images.size();
      return GroupElement(Kind::permutation, m, std::move(images), nullptr);
    }

    Kind kind() const noexcept {
      return _kind;
    }

    //! Matrix size n, or permutation domain size m.
    std::size_t degree() const noexcept {
      return _degree;
    }

    std::vector<value_type> const& data() const noexcept {
      return _data;
    }

    std::shared_ptr<Field const> const& field() const noexcept {
      return _field;
    }

    bool same_carrier(GroupElement const& that) const noexcept {
      if (_kind != that._kind || _degree != that._degree) {
        return false;
      }
      return _kind == Kind::permutation || *_field == *that._field;
    }

    GroupElement identity() const {
      std::vector<value_type> data(_data.size(), 0);
      if (_kind == Kind::permutation) {
        std::iota(data.begin(), data.end(), value_type(0));
      } else {
        for (std::size_t i = 0; i < _degree; ++i) {
          data[i * _degree + i] = 1;
        }
      }
      return GroupElement(_kind, _degree, std::move(data), _field);
    }

    bool is_identity() const {
      return *this == identity();
    }

    GroupElement operator*(GroupElement const& that) const {
      if (!same_carrier(that)) {
        throw Error(Errc::mixed_carriers, "elements live in different carriers");
      }
      std::vector<value_type> out(_data.size());
      if (_kind == Kind::permutation) {
        for (std::size_t i = 0; i < _degree; ++i) {
          out[i] = _data[that._data[i]];
        }
      } else {
        Field const& F = *_field;
        std::size_t  n = _degree;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            value_type acc = 0;
            for (std::size_t k = 0; k < n; ++k) {
              acc = F.add(acc, F.mul(_data[i * n + k], that._data[k * n + j]));
            }
            out[i * n + j] = acc;
          }
        }
      }
      return GroupElement(_kind, _degree, std::move(out), _field);
    }

    GroupElement inverse() const {
      std::vector<value_type> out(_data.size());
      if (_kind == Kind::permutation) {
        for (std::size_t i = 0; i < _degree; ++i) {
          out[_data[i]] = static_cast<value_type>(i);
        }
        return GroupElement(_kind, _degree, std::move(out), _field);
      }
      // Gauss-Jordan on [A | I]
      Field const&            F = *_field;
      std::size_t             n = _degree;
      std::vector<value_type> a = _data;
      for (std::size_t i = 0; i < n; ++i) {
        out[i * n + i] = 1;
      }
      for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (a[pivot * n + col] == 0) {
          ++pivot;
        }
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a[pivot * n + j], a[col * n + j]);
          std::swap(out[pivot * n + j], out[col * n + j]);
        }
        value_type s = F.inv(a[col * n + col]);
        for (std::size_t j = 0; j < n; ++j) {
          a[col * n + j]   = F.mul(s, a[col * n + j]);
          out[col * n + j] = F.mul(s, out[col * n + j]);
        }
        for (std::size_t r = 0; r < n; ++r) {
          value_type f = a[r * n + col];
          if (r == col || f == 0) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            a[r * n + j]   = F.sub(a[r * n + j], F.mul(f, a[col * n + j]));
            out[r * n + j] = F.sub(out[r * n + j], F.mul(f, out[col * n + j]));
          }
        }
      }
      return GroupElement(_kind, _degree, std::move(out), _field);
    }

    //! Determinant as a field element; only meaningful for matrices.
    value_type determinant() const {
      Field const&            F = *_field;
      std::size_t             n = _degree;
      std::vector<value_type> a = _data;
      value_type              det = 1;
      for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot * n + col] == 0) {
          ++pivot;
        }
        if (pivot == n) {
          return 0;
        }
        if (pivot != col) {
          for (std::size_t j = 0; j < n; ++j) {
            std::swap(a[pivot * n + j], a[col * n + j]);
          }
          det = F.neg(det);
        }
        det          = F.mul(det, a[col * n + col]);
        value_type s = F.inv(a[col * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
          value_type f = F.mul(a[r * n + col], s);
          if (f == 0) {
            continue;
          }
          for (std::size_t j = col; j < n; ++j) {
            a[r * n + j] = F.sub(a[r * n + j], F.mul(f, a[col * n + j]));
          }
        }
      }
      return det;
    }

    std::string encoding() const {
      std::size_t width = byte_width();
      std::string out;
      out.reserve(_data.size() * width);
      for (auto v : _data) {
        for (std::size_t b = 0; b < width; ++b) {
          out.push_back(static_cast<char>((v >> (8 * b)) & 0xFF));
        }
      }
      return out;
    }

    bool operator==(GroupElement const& that) const {
      return same_carrier(that) && _data == that._data;
    }

   private:
    GroupElement(Kind                         kind,
                 std::size_t                  degree,
                 std::vector<value_type>      data,
                 std::shared_ptr<Field const> field)
        : _kind(kind),
          _degree(degree),
          _data(std::move(data)),
          _field(std::move(field)) {}

    std::size_t byte_width() const noexcept {
      std::uint64_t range
          = _kind == Kind::permutation ? _degree : _field->order();
      return range <= 0x100 ? 1 : range <= 0x10000 ? 2 : 4;
    }

    Kind                         _kind;
    std::size_t                  _degree;
    std::vector<value_type>      _data;
    std::shared_ptr<Field const> _field;
  };

}  // namespace commprob

#endif  // COMMPROB_ELEMENT_HPP_
