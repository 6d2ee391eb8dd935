#ifndef COMMPROB_PSI_HPP_
#define COMMPROB_PSI_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bignum.hpp"
#include "error.hpp"

namespace commprob {

  //! Degree of a polynomial or tropical entry; nullopt is -infinity.
  using Degree = std::optional<std::int64_t>;

  namespace tropical {
    inline Degree plus(Degree a, Degree b) {  // max
      if (!a) {
        return b;
      }
      if (!b) {
        return a;
      }
      return std::max(*a, *b);
    }

    inline Degree times(Degree a, Degree b) {  // +
      if (!a || !b) {
        return std::nullopt;
      }
      return *a + *b;
    }
  }  // namespace tropical

  //! Univariate polynomial in psi with non-negative integer coefficients,
  //! stored sparsely without zero coefficients.
  class PsiPoly {
   public:
    PsiPoly() = default;

    static PsiPoly monomial(std::int64_t degree, BigCount coeff = 1) {
      PsiPoly p;
      if (coeff != 0) {
        p._terms.emplace(degree, std::move(coeff));
      }
      return p;
    }

    static PsiPoly constant(BigCount c) {
      return monomial(0, std::move(c));
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    bool is_monomial() const noexcept {
      return _terms.size() == 1 && _terms.begin()->second == 1;
    }

    Degree degree() const {
      if (_terms.empty()) {
        return std::nullopt;
      }
      return _terms.rbegin()->first;
    }

    BigCount coefficient(std::int64_t degree) const {
      auto it = _terms.find(degree);
      return it == _terms.end() ? BigCount(0) : it->second;
    }

    std::map<std::int64_t, BigCount> const& terms() const noexcept {
      return _terms;
    }

    PsiPoly& operator+=(PsiPoly const& that) {
      for (auto const& [deg, c] : that._terms) {
        _terms[deg] += c;
      }
      return *this;
    }

    friend PsiPoly operator+(PsiPoly a, PsiPoly const& b) {
      a += b;
      return a;
    }

    friend PsiPoly operator*(PsiPoly const& a, PsiPoly const& b) {
      PsiPoly out;
      for (auto const& [da, ca] : a._terms) {
        for (auto const& [db, cb] : b._terms) {
          out._terms[da + db] += ca * cb;
        }
      }
      return out;
    }

    bool operator==(PsiPoly const&) const = default;

    std::string to_string() const {
      if (_terms.empty()) {
        return "0";
      }
      std::string out;
      for (auto it = _terms.rbegin(); it != _terms.rend(); ++it) {
        if (!out.empty()) {
          out += " + ";
        }
        auto const& [deg, c] = *it;
        if (c != 1 || deg == 0) {
          out += c.str();
        }
        if (deg != 0) {
          out += deg == 1 ? "psi" : "psi^" + std::to_string(deg);
        }
      }
      return out;
    }

   private:
    std::map<std::int64_t, BigCount> _terms;
  };

  //! Square matrix over (Z u {-inf}, max, +).
  class TropicalMatrix {
   public:
    explicit TropicalMatrix(std::size_t n = 0) : _n(n), _entries(n * n) {}

    std::size_t size() const noexcept {
      return _n;
    }

    Degree& operator()(std::size_t i, std::size_t j) {
      return _entries.at(i * _n + j);
    }

    Degree operator()(std::size_t i, std::size_t j) const {
      return _entries.at(i * _n + j);
    }

    friend TropicalMatrix operator*(TropicalMatrix const& A, TropicalMatrix const& B) {
      TropicalMatrix C(A._n);
      for (std::size_t i = 0; i < A._n; ++i) {
        for (std::size_t k = 0; k < A._n; ++k) {
          auto a = A(i, k);
          if (!a) {
            continue;
          }
          for (std::size_t j = 0; j < A._n; ++j) {
            C(i, j) = tropical::plus(C(i, j), tropical::times(a, B(k, j)));
          }
        }
      }
      return C;
    }

    //! Tropical identity: 0 on the diagonal, -inf elsewhere.
    static TropicalMatrix identity(std::size_t n) {
      TropicalMatrix I(n);
      for (std::size_t i = 0; i < n; ++i) {
        I(i, i) = 0;
      }
      return I;
    }

    TropicalMatrix power(unsigned long long e) const {
      TropicalMatrix result = identity(_n), base = *this;
      for (; e > 0; e >>= 1) {
        if (e & 1) {
          result = result * base;
        }
        if (e > 1) {
          base = base * base;
        }
      }
      return result;
    }

    //! A v over the tropical semiring.
    std::vector<Degree> apply(std::vector<Degree> const& v) const {
      std::vector<Degree> out(_n);
      for (std::size_t i = 0; i < _n; ++i) {
        for (std::size_t j = 0; j < _n; ++j) {
          out[i] = tropical::plus(out[i], tropical::times((*this)(i, j), v[j]));
        }
      }
      return out;
    }

    bool operator==(TropicalMatrix const&) const = default;

   private:
    std::size_t         _n;
    std::vector<Degree> _entries;
  };

  //! Branching matrix of an algebraic group with entries 0 or psi^x.
  //!
  //! The metadata records the group dimension n, its rank, the center
  //! dimension, and the abelian types (0-based columns).  alpha is the
  //! largest exponent.
  class PsiMatrix {
   public:
    PsiMatrix() = default;

    //! Exponent grid, nullopt for zero entries.
    PsiMatrix(std::string name, std::vector<std::vector<Degree>> const& exponents)
        : _name(std::move(name)), _n(exponents.size()) {
      _entries.resize(_n * _n);
      for (std::size_t i = 0; i < _n; ++i) {
        if (exponents[i].size() != _n) {
          throw Error(Errc::validation_error,
                      "row " + std::to_string(i + 1) + " has "
                          + std::to_string(exponents[i].size()) + " entries, expected "
                          + std::to_string(_n));
        }
        for (std::size_t j = 0; j < _n; ++j) {
          if (auto x = exponents[i][j]) {
            if (*x < 0) {
              throw Error(Errc::validation_error, "negative exponent");
            }
            _entries[i * _n + j] = PsiPoly::monomial(*x);
          }
        }
      }
    }

    std::string const& name() const noexcept {
      return _name;
    }

    std::size_t size() const noexcept {
      return _n;
    }

    PsiPoly const& operator()(std::size_t i, std::size_t j) const {
      return _entries.at(i * _n + j);
    }

    Degree exponent(std::size_t i, std::size_t j) const {
      return (*this)(i, j).degree();
    }

    unsigned dimension = 0;   // n = dim G
    unsigned rank      = 0;   // rho
    unsigned center_dimension = 0;
    std::vector<std::size_t> abelian_columns;

    //! alpha: the largest exponent among the entries.
    std::int64_t alpha() const {
      std::int64_t best = 0;
      for (auto const& e : _entries) {
        if (auto d = e.degree()) {
          best = std::max(best, *d);
        }
      }
      return best;
    }

    TropicalMatrix degrees() const {
      TropicalMatrix T(_n);
      for (std::size_t i = 0; i < _n; ++i) {
        for (std::size_t j = 0; j < _n; ++j) {
          T(i, j) = exponent(i, j);
        }
      }
      return T;
    }

    //! Column e_1 of B^d with exact polynomial entries.
    std::vector<PsiPoly> power_first_column(unsigned d) const {
      std::vector<PsiPoly> v(_n);
      v.at(0) = PsiPoly::constant(1);
      for (unsigned k = 0; k < d; ++k) {
        std::vector<PsiPoly> next(_n);
        for (std::size_t i = 0; i < _n; ++i) {
          for (std::size_t j = 0; j < _n; ++j) {
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) {
              next[i] += (*this)(i, j) * v[j];
            }
          }
        }
        v = std::move(next);
      }
      return v;
    }

    //! Full B^d with exact polynomial entries.
    std::vector<PsiPoly> power(unsigned d) const {
      std::vector<PsiPoly> result(_n * _n);
      for (std::size_t i = 0; i < _n; ++i) {
        result[i * _n + i] = PsiPoly::constant(1);
      }
      for (unsigned k = 0; k < d; ++k) {
        std::vector<PsiPoly> next(_n * _n);
        for (std::size_t i = 0; i < _n; ++i) {
          for (std::size_t m = 0; m < _n; ++m) {
            if ((*this)(i, m).is_zero()) {
              continue;
            }
            for (std::size_t j = 0; j < _n; ++j) {
              if (!result[m * _n + j].is_zero()) {
                next[i * _n + j] += (*this)(i, m) * result[m * _n + j];
              }
            }
          }
        }
        result = std::move(next);
      }
      return result;
    }

    bool operator==(PsiMatrix const& that) const {
      return _name == that._name && _n == that._n && _entries == that._entries
             && dimension == that.dimension && rank == that.rank
             && center_dimension == that.center_dimension
             && abelian_columns == that.abelian_columns;
    }

   private:
    std::string          _name;
    std::size_t          _n = 0;
    std::vector<PsiPoly> _entries;
  };

  namespace detail {
    inline std::vector<std::vector<Degree>> exponent_grid(
        std::vector<std::vector<int>> const& rows) {
      std::vector<std::vector<Degree>> out;
      for (auto const& r : rows) {
        auto& o = out.emplace_back();
        for (int x : r) {
          o.push_back(x < 0 ? Degree{} : Degree{x});
        }
      }
      return out;
    }

    inline PsiMatrix make_fixture(std::string                          name,
                                  std::vector<std::vector<int>> const& rows,
                                  unsigned                             dim,
                                  unsigned                             rank,
                                  std::vector<std::size_t>             abelian) {
      PsiMatrix B(std::move(name), exponent_grid(rows));
      B.dimension        = dim;
      B.rank             = rank;
      B.center_dimension = 1;
      B.abelian_columns  = std::move(abelian);
      return B;
    }
  }  // namespace detail

  //! Branching matrices of GL_2, GL_3 and GL_4 ("gl2", "gl3", "gl4").
  //! Rows and columns follow the z-class order: scalars, then the
  //! remaining 1-tuple types, then (gl4 only) four 2-tuple types and one
  //! 3-tuple type.  -1 marks a zero entry.
  inline PsiMatrix fixture(std::string const& name) {
    int const _ = -1;
    if (name == "gl2") {
      return detail::make_fixture(name,
                                  {{1, _, _},  //
                                   {1, 2, _},
                                   {2, _, 2}},
                                  4, 2, {1, 2});
    }
    if (name == "gl3") {
      return detail::make_fixture(name,
                                  {{1, _, _, _, _, _},  //
                                   {1, 2, _, _, _, _},
                                   {2, _, 2, _, _, _},
                                   {1, 2, _, 3, _, _},
                                   {2, 3, 2, _, 3, _},
                                   {3, _, 3, _, _, 3}},
                                  9, 3, {3, 4, 5});
    }
    if (name == "gl4") {
      // clang-format off
      return detail::make_fixture(name, {
        {1, _, _, _, _, _, _, _, _, _, _, _, _, _, _, _, _, _, _},
        {1, 2, _, _, _, _, _, _, _, _, _, _, _, _, _, _, _, _, _},
        {1, _, 2, _, _, _, _, _, _, _, _, _, _, _, _, _, _, _, _},
        {1, 2, _, 3, _, _, _, _, _, _, _, _, _, _, _, _, _, _, _},
        {2, _, _, _, 2, _, _, _, _, _, _, _, _, _, _, _, _, _, _},
        {2, 3, _, _, 2, 3, _, _, _, _, _, _, _, _, _, _, _, _, _},
        {2, _, _, _, _, _, 2, _, _, _, _, _, _, _, _, _, _, _, _},
        {2, 3, _, _, _, _, 2, 3, _, _, _, _, _, _, _, _, _, _, _},
        {3, _, _, _, 3, _, 3, _, 3, _, _, _, _, _, _, _, _, _, _},
        {1, 2, 3, 3, _, _, _, _, _, 4, _, _, _, _, 4, _, 3, 3, _},
        {2, 3, _, 4, 2, 3, _, _, _, _, 4, _, _, _, _, _, 4, 4, _},
        {2, 3, 4, _, _, _, 2, 3, _, _, _, 4, _, _, _, 4, _, _, _},
        {3, 4, _, _, 3, 4, 3, 4, 3, _, _, _, 4, _, _, _, _, _, _},
        {4, _, _, _, 4, _, 4, _, 4, _, _, _, _, 4, _, _, _, _, _},
        {_, 1, 2, _, _, _, _, _, _, _, _, _, _, _, 3, _, _, _, _},
        {_, 2, 3, _, _, _, _, _, _, _, _, _, _, _, _, 3, _, _, _},
        {_, 1, _, _, _, _, _, _, _, _, _, _, _, _, _, _, 3, _, _},
        {_, 1, _, _, _, _, _, _, _, _, _, _, _, _, _, _, _, 3, _},
        {_, _, _, _, _, _, _, _, _, _, _, _, _, _, 4, 4, 3, 3, 5},
      }, 16, 4, {9, 10, 11, 12, 13, 18});
      // clang-format on
    }
    throw Error(Errc::unknown_fixture, "no fixture named '" + name + "'");
  }

  //! Text grid form: "key=value" metadata lines, then one line per row of
  //! comma-separated exponents with -1 for zero entries.  Import also
  //! accepts an empty field as zero; export is canonical.
  inline std::string export_grid(PsiMatrix const& B) {
    std::ostringstream out;
    out << "name=" << B.name() << "\n";
    out << "dimension=" << B.dimension << "\n";
    out << "rank=" << B.rank << "\n";
    out << "center_dimension=" << B.center_dimension << "\n";
    out << "abelian_columns=";
    for (std::size_t i = 0; i < B.abelian_columns.size(); ++i) {
      out << (i ? "," : "") << B.abelian_columns[i] + 1;
    }
    out << "\n";
    for (std::size_t i = 0; i < B.size(); ++i) {
      for (std::size_t j = 0; j < B.size(); ++j) {
        auto x = B.exponent(i, j);
        out << (j ? "," : "") << (x ? *x : -1);
      }
      out << "\n";
    }
    return out.str();
  }

  namespace detail {
    inline std::vector<std::string> split(std::string const& s, char sep) {
      std::vector<std::string> out;
      std::string              cur;
      for (char c : s) {
        if (c == sep) {
          out.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(c);
        }
      }
      out.push_back(cur);
      return out;
    }

    inline std::string trim(std::string const& s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) {
        return "";
      }
      auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    inline long long parse_int(std::string const& s, std::string const& what) {
      try {
        std::size_t pos = 0;
        long long   v   = std::stoll(s, &pos);
        if (pos != s.size()) {
          throw Error(Errc::parse_error, what + ": trailing characters in '" + s + "'");
        }
        return v;
      } catch (std::logic_error const&) {
        throw Error(Errc::parse_error, what + ": not an integer: '" + s + "'");
      }
    }
  }  // namespace detail

  inline PsiMatrix import_grid(std::string const& text) {
    std::istringstream                  in(text);
    std::string                         line;
    std::map<std::string, std::string>  meta;
    std::vector<std::vector<Degree>>    rows;
    std::size_t                         lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      if (detail::trim(line).empty() || line[0] == '#') {
        continue;
      }
      if (auto eq = line.find('='); eq != std::string::npos) {
        meta[detail::trim(line.substr(0, eq))] = detail::trim(line.substr(eq + 1));
        continue;
      }
      auto& row = rows.emplace_back();
      for (auto const& field : detail::split(line, ',')) {
        auto f = detail::trim(field);
        auto v = f.empty() ? -1 : detail::parse_int(f, "line " + std::to_string(lineno));
        if (v < -1) {
          throw Error(Errc::parse_error, "line " + std::to_string(lineno) + ": bad exponent");
        }
        row.push_back(v < 0 ? Degree{} : Degree{v});
      }
    }
    PsiMatrix B(meta.count("name") ? meta["name"] : "", rows);
    auto uint_meta = [&](std::string const& key) -> unsigned {
      return meta.count(key) ? static_cast<unsigned>(detail::parse_int(meta[key], key)) : 0;
    };
    B.dimension        = uint_meta("dimension");
    B.rank             = uint_meta("rank");
    B.center_dimension = uint_meta("center_dimension");
    if (meta.count("abelian_columns") && !meta["abelian_columns"].empty()) {
      for (auto const& f : detail::split(meta["abelian_columns"], ',')) {
        auto c = detail::parse_int(detail::trim(f), "abelian_columns");
        if (c < 1 || static_cast<std::size_t>(c) > B.size()) {
          throw Error(Errc::validation_error, "abelian column out of range");
        }
        B.abelian_columns.push_back(static_cast<std::size_t>(c - 1));
      }
    }
    return B;
  }

  //! Largest exponent among the entries of B.
  inline std::int64_t max_entry_degree(PsiMatrix const& B) {
    return B.alpha();
  }

  namespace detail {
    //! deg(1 . B^d . e_1) by tropical iteration.
    inline Degree tropical_first_column_degree(TropicalMatrix const& T, unsigned long long d) {
      std::vector<Degree> v(T.size());
      v.at(0) = 0;
      if (d > 64) {
        auto P = T.power(d);
        for (std::size_t i = 0; i < T.size(); ++i) {
          v[i] = P(i, 0);
        }
      } else {
        for (unsigned long long k = 0; k < d; ++k) {
          v = T.apply(v);
        }
      }
      Degree best;
      for (auto x : v) {
        best = tropical::plus(best, x);
      }
      return best;
    }
  }  // namespace detail

  //! Above this power only the tropical route runs; the exact polynomial
  //! power would carry thousands of big-integer coefficients.
  inline constexpr unsigned exact_power_limit = 64;

  struct FirstColumnDegree {
    std::int64_t degree;
    bool         exact_checked;  // polynomial route ran and agreed
  };

  //! deg(1 . B^d . e_1) by tropical power, cross-checked against the exact
  //! polynomial power for d <= exact_power_limit.
  inline FirstColumnDegree first_column_degree_checked(PsiMatrix const& B, unsigned long long d) {
    if (d < 1) {
      throw Error(Errc::precondition_violated, "d must be >= 1");
    }
    auto trop = detail::tropical_first_column_degree(B.degrees(), d);
    if (!trop) {
      throw Error(Errc::precondition_violated, "first column of B^d is zero");
    }
    if (d > exact_power_limit) {
      return {*trop, false};
    }
    PsiPoly sum;
    for (auto const& p : B.power_first_column(static_cast<unsigned>(d))) {
      sum += p;
    }
    if (sum.degree() != trop) {
      throw Error(Errc::precondition_violated,
                  "tropical degree " + std::to_string(*trop) + " disagrees with polynomial degree");
    }
    return {*trop, true};
  }

  inline std::int64_t first_column_degree(PsiMatrix const& B, unsigned long long d) {
    return first_column_degree_checked(B, d).degree;
  }

  //! deg(1 . B^d . e_1) for d = 1 .. dmax, computed incrementally.
  inline std::vector<FirstColumnDegree> first_column_degree_sequence(PsiMatrix const& B,
                                                                     unsigned         dmax) {
    auto                 T = B.degrees();
    std::vector<Degree>  v(B.size());
    std::vector<PsiPoly> p(B.size());
    v.at(0) = 0;
    p.at(0) = PsiPoly::constant(1);
    std::vector<FirstColumnDegree> out;
    for (unsigned d = 1; d <= dmax; ++d) {
      v = T.apply(v);
      Degree best;
      for (auto x : v) {
        best = tropical::plus(best, x);
      }
      if (!best) {
        throw Error(Errc::precondition_violated, "first column of B^d is zero");
      }
      bool exact = d <= exact_power_limit;
      if (exact) {
        std::vector<PsiPoly> next(B.size());
        PsiPoly              sum;
        for (std::size_t i = 0; i < B.size(); ++i) {
          for (std::size_t j = 0; j < B.size(); ++j) {
            if (!B(i, j).is_zero() && !p[j].is_zero()) {
              next[i] += B(i, j) * p[j];
            }
          }
          sum += next[i];
        }
        p = std::move(next);
        if (sum.degree() != best) {
          throw Error(Errc::precondition_violated,
                      "tropical and polynomial degrees disagree at d = " + std::to_string(d));
        }
      }
      out.push_back({*best, exact});
    }
    return out;
  }

  struct CpBounds {
    BigRational lower;
    BigRational upper;
  };

  //! deg/(d n) <= cp_d <= deg/(d n) + 1/d, given deg = deg(1 . B^d . e_1).
  inline CpBounds cp_bounds_for_degree(PsiMatrix const& B, unsigned long long d, std::int64_t deg) {
    if (B.dimension == 0) {
      throw Error(Errc::precondition_violated, "matrix has no dimension metadata");
    }
    BigRational lower(BigCount(deg), BigCount(d) * B.dimension);
    return {lower, lower + BigRational(1, BigCount(d))};
  }

  inline CpBounds cp_bounds(PsiMatrix const& B, unsigned long long d) {
    return cp_bounds_for_degree(B, d, first_column_degree(B, d));
  }

  struct DegreeWindow {
    std::int64_t degree;        // deg(1 . B^d . e_1)
    std::int64_t degree_lower;  // (d - beta) alpha
    std::int64_t degree_upper;  // d alpha
    BigRational  lower;         // (1 - beta/d) alpha/n
    BigRational  upper;         // alpha/n + 1/d
  };

  //! Checks (d - beta) alpha <= deg <= d alpha for deg = deg(1 . B^d . e_1)
  //! and returns the resulting window for cp_d.
  inline DegreeWindow degree_window_for_degree(PsiMatrix const&   B,
                                                   unsigned long long d,
                                                   std::int64_t       deg) {
    if (B.dimension == 0) {
      throw Error(Errc::precondition_violated, "matrix has no dimension metadata");
    }
    std::int64_t alpha = B.alpha();
    auto         beta  = static_cast<std::int64_t>(B.size());
    auto         dd    = static_cast<std::int64_t>(d);
    DegreeWindow W{deg, (dd - beta) * alpha, dd * alpha,
                     BigRational(BigCount((dd - beta) * alpha), BigCount(dd) * B.dimension),
                     BigRational(BigCount(alpha), BigCount(B.dimension))
                         + BigRational(1, BigCount(dd))};
    if (deg < W.degree_lower || deg > W.degree_upper) {
      throw Error(Errc::window_violated,
                  "degree " + std::to_string(deg) + " outside [" + std::to_string(W.degree_lower)
                      + ", " + std::to_string(W.degree_upper) + "] at d = " + std::to_string(d));
    }
    return W;
  }

  inline DegreeWindow degree_window(PsiMatrix const& B, unsigned long long d) {
    return degree_window_for_degree(B, d, first_column_degree(B, d));
  }

  struct DegreeInterval {
    std::int64_t degree;  // degree in t of (B^r)_{l,1}
    std::int64_t lower;   // r - m
    std::int64_t upper;   // r
    bool holds() const {
      return lower <= degree && degree <= upper;
    }
  };

  //! Treats B(l, l) as an indeterminate t and returns the degree in t of
  //! (B^r)_{l,1}, with the interval [r - m, r] it must lie in.  B needs a
  //! nonzero diagonal and, in every row after the first, a nonzero entry
  //! before the diagonal.  l is 0-based.
  inline DegreeInterval diagonal_degree_interval(std::vector<std::vector<BigCount>> const& B,
                                                 std::size_t                               l,
                                                 unsigned                                  r) {
    std::size_t m = B.size();
    if (m == 0 || l >= m || r < 2) {
      throw Error(Errc::precondition_violated, "need m >= 1, l < m and r >= 2");
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (B[i].size() != m) {
        throw Error(Errc::precondition_violated, "matrix is not square");
      }
      if (B[i][i] <= 0) {
        throw Error(Errc::precondition_violated,
                    "diagonal entry " + std::to_string(i + 1) + " is not positive");
      }
      bool pre = i == 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (B[i][j] < 0) {
          throw Error(Errc::precondition_violated, "negative entry");
        }
        if (j < i && B[i][j] != 0) {
          pre = true;
        }
      }
      if (!pre) {
        throw Error(Errc::precondition_violated,
                    "row " + std::to_string(i + 1) + " has no entry before the diagonal");
      }
    }
    auto entry = [&](std::size_t i, std::size_t j) {
      return i == l && j == l ? PsiPoly::monomial(1) : PsiPoly::constant(B[i][j]);
    };
    std::vector<PsiPoly> v(m);
    v[0] = PsiPoly::constant(1);
    for (unsigned k = 0; k < r; ++k) {
      std::vector<PsiPoly> next(m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          if (!v[j].is_zero()) {
            next[i] += entry(i, j) * v[j];
          }
        }
      }
      v = std::move(next);
    }
    auto deg = v[l].degree();
    if (!deg) {
      throw Error(Errc::precondition_violated, "(B^r)_{l,1} vanishes");
    }
    auto rr = static_cast<std::int64_t>(r);
    return {*deg, rr - static_cast<std::int64_t>(m), rr};
  }

  //! Structural checks for a symbolic branching matrix: monomial entries,
  //! (1,1) = psi^{center dimension}, first row zero after (1,1), a nonzero
  //! entry before the diagonal in every later row, abelian columns
  //! diagonal-only, and the largest exponent attained on the diagonal.
  struct SymbolicCheck {
    std::string name;
    bool        passed;
    std::string detail;
  };

  inline std::vector<SymbolicCheck> verify_symbolic_structure(PsiMatrix const& B) {
    std::vector<SymbolicCheck> out;
    auto                       n     = B.size();
    auto                       coord = [](std::size_t i, std::size_t j) {
      return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    };

    SymbolicCheck mono{"monomial_entries", true, ""};
    for (std::size_t i = 0; i < n && mono.passed; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!B(i, j).is_zero() && !B(i, j).is_monomial()) {
          mono = {mono.name, false, "entry " + coord(i, j)};
          break;
        }
      }
    }
    out.push_back(mono);

    SymbolicCheck corner{"corner_is_center", true, ""};
    if (n == 0 || B.exponent(0, 0) != Degree{B.center_dimension}) {
      corner = {corner.name, false, "(1,1) is not psi^" + std::to_string(B.center_dimension)};
    }
    out.push_back(corner);

    SymbolicCheck first{"first_row_zero", true, ""};
    for (std::size_t j = 1; j < n; ++j) {
      if (!B(0, j).is_zero()) {
        first = {first.name, false, "nonzero entry at " + coord(0, j)};
        break;
      }
    }
    out.push_back(first);

    SymbolicCheck pre{"pre_diagonal", true, ""};
    for (std::size_t i = 1; i < n && pre.passed; ++i) {
      bool found = false;
      for (std::size_t j = 0; j < i; ++j) {
        found = found || !B(i, j).is_zero();
      }
      if (!found) {
        pre = {pre.name, false, "row " + std::to_string(i + 1)};
      }
    }
    out.push_back(pre);

    SymbolicCheck abel{"abelian_columns", true, ""};
    for (auto col : B.abelian_columns) {
      for (std::size_t i = 0; i < n && abel.passed; ++i) {
        bool zero = B(i, col).is_zero();
        if ((i == col) == zero) {
          abel = {abel.name, false, "entry " + coord(i, col)};
        }
      }
    }
    out.push_back(abel);

    SymbolicCheck maxdiag{"max_entry_on_diagonal", true, ""};
    std::int64_t  diag_best = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (auto d = B.exponent(i, i)) {
        diag_best = std::max(diag_best, *d);
      }
    }
    if (diag_best != B.alpha()) {
      maxdiag = {maxdiag.name, false,
                 "largest exponent " + std::to_string(B.alpha()) + " is off the diagonal"};
    }
    out.push_back(maxdiag);
    return out;
  }

}  // namespace commprob

#endif  // COMMPROB_PSI_HPP_
