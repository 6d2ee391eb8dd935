#ifndef COMMPROB_BRANCHING_HPP_
#define COMMPROB_BRANCHING_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bignum.hpp"
#include "conjugacy.hpp"
#include "error.hpp"
#include "group.hpp"

namespace commprob {

  //! 0-based index into a TypeRegistry; type 0 is G itself.
  using TypeId = std::size_t;

  //! One z-class of tuples: a G-conjugacy class of common centralizers.
  struct TupleType {
    CommutingTuple tuple;        // representative
    Subgroup       centralizer;  // Z_G(tuple)
    std::size_t    depth;        // length of the representative tuple
    bool           abelian;
  };

  //! Catalogue of z-class types of commuting tuples in discovery order.
  //!
  //! No two registered types have G-conjugate centralizers.  The first
  //! type is always G, represented by the 1-tuple (e).
  class TypeRegistry {
   public:
    explicit TypeRegistry(FiniteGroup G) : _group(std::move(G)) {
      insert(CommutingTuple{_group.identity()}, Subgroup::whole(_group));
    }

    FiniteGroup const& group() const noexcept {
      return _group;
    }

    std::size_t size() const noexcept {
      return _types.size();
    }

    TupleType const& operator[](TypeId id) const {
      if (id >= _types.size()) {
        throw Error(Errc::unknown_type, "type " + std::to_string(id + 1));
      }
      return _types[id];
    }

    std::vector<TupleType> const& types() const noexcept {
      return _types;
    }

    std::optional<TypeId> find(Subgroup const& C) const {
      auto it = _buckets.find(detail::fingerprint(C));
      if (it == _buckets.end()) {
        return std::nullopt;
      }
      for (auto id : it->second) {
        if (subgroup_conjugate(_group, C, _types[id].centralizer)) {
          return id;
        }
      }
      return std::nullopt;
    }

    //! Type of C, registering (tuple, C) as a new type if unseen.
    TypeId find_or_register(CommutingTuple tuple, Subgroup C) {
      if (auto id = find(C)) {
        return *id;
      }
      return insert(std::move(tuple), std::move(C));
    }

   private:
    TypeId insert(CommutingTuple tuple, Subgroup C) {
      TypeId id    = _types.size();
      auto   depth = tuple.size();
      bool   ab    = C.is_abelian();
      _buckets[detail::fingerprint(C)].push_back(id);
      _types.push_back(TupleType{std::move(tuple), std::move(C), depth, ab});
      return id;
    }

    FiniteGroup                                         _group;
    std::vector<TupleType>                              _types;
    std::map<detail::Fingerprint, std::vector<TypeId>> _buckets;
  };

  //! Type of the common centralizer of t, registering it if unseen.  The
  //! empty tuple has the type of G.
  inline TypeId tuple_z_type(FiniteGroup const&            G,
                             std::span<ElementIndex const> t,
                             TypeRegistry&                 reg) {
    if (!is_commuting(G, t)) {
      throw Error(Errc::not_commuting, "tuple entries do not commute");
    }
    Subgroup C = centralizer(G, t);
    return reg.find_or_register(CommutingTuple(t.begin(), t.end()), std::move(C));
  }

  //! Square non-negative integer matrix whose rows and columns are labelled
  //! by registry types.
  class BranchingMatrixInt {
   public:
    using value_type = std::uint64_t;

    BranchingMatrixInt() = default;

    BranchingMatrixInt(std::vector<TypeId> labels)
        : _labels(std::move(labels)),
          _entries(_labels.size() * _labels.size(), 0) {}

    static BranchingMatrixInt from_rows(std::vector<std::vector<value_type>> const& rows) {
      std::vector<TypeId> labels(rows.size());
      for (std::size_t i = 0; i < labels.size(); ++i) {
        labels[i] = i;
      }
      BranchingMatrixInt B(std::move(labels));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
          throw Error(Errc::validation_error, "matrix is not square");
        }
        for (std::size_t j = 0; j < rows.size(); ++j) {
          B(i, j) = rows[i][j];
        }
      }
      return B;
    }

    std::size_t size() const noexcept {
      return _labels.size();
    }

    std::vector<TypeId> const& labels() const noexcept {
      return _labels;
    }

    value_type& operator()(std::size_t row, std::size_t col) {
      return _entries.at(row * size() + col);
    }

    value_type operator()(std::size_t row, std::size_t col) const {
      return _entries.at(row * size() + col);
    }

    std::vector<std::vector<value_type>> rows() const {
      std::vector<std::vector<value_type>> out(size());
      for (std::size_t i = 0; i < size(); ++i) {
        out[i].assign(_entries.begin() + i * size(),
                      _entries.begin() + (i + 1) * size());
      }
      return out;
    }

    value_type max_entry() const {
      return _entries.empty() ? 0 : *std::max_element(_entries.begin(), _entries.end());
    }

    //! B v, exactly.
    std::vector<BigCount> apply(std::vector<BigCount> const& v) const {
      std::vector<BigCount> out(size());
      for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
          auto b = (*this)(i, j);
          if (b != 0) {
            out[i] += v[j] * b;
          }
        }
      }
      return out;
    }

    //! Column e of B^d.
    std::vector<BigCount> power_column(unsigned d, std::size_t e) const {
      std::vector<BigCount> v(size());
      v.at(e) = 1;
      for (unsigned k = 0; k < d; ++k) {
        v = apply(v);
      }
      return v;
    }

    bool operator==(BranchingMatrixInt const&) const = default;

   private:
    std::vector<TypeId>     _labels;
    std::vector<value_type> _entries;
  };

  struct BranchingResult {
    BranchingMatrixInt matrix;
    TypeRegistry       registry;
  };

  //! Builds B_G by the worklist construction: each type tau, with
  //! centralizer H, contributes one column listing, for every type a, the
  //! number of H-conjugacy classes whose H-centralizer has G-type a.
  //! Types are processed in registration order.
  inline BranchingResult branching_matrix(FiniteGroup const& G) {
    TypeRegistry reg(G);
    // sparse columns collected while the registry grows
    std::vector<std::map<TypeId, std::uint64_t>> columns;
    for (TypeId tau = 0; tau < reg.size(); ++tau) {
      Subgroup const H      = reg[tau].centralizer;
      auto const     parent = reg[tau].tuple;
      auto const     P      = conjugacy_classes(H);
      columns.emplace_back();
      for (auto const& z : z_classes(H, P)) {
        CommutingTuple t;
        if (tau != 0) {
          t = parent;
        }
        t.push_back(P.classes[z.member_classes.front()].representative);
        TypeId a = reg.find_or_register(std::move(t), z.centralizer);
        columns[tau][a] += z.class_count();
      }
    }
    std::vector<TypeId> labels(reg.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      labels[i] = i;
    }
    BranchingMatrixInt B(std::move(labels));
    for (TypeId tau = 0; tau < columns.size(); ++tau) {
      for (auto [a, count] : columns[tau]) {
        B(a, tau) = count;
      }
    }
    return BranchingResult{std::move(B), std::move(reg)};
  }

  //! Rows and columns of the types reachable from tau through nonzero
  //! entries (tau, its branches, their branches, ...), in the order of B.
  inline BranchingMatrixInt branching_submatrix(BranchingMatrixInt const& B,
                                                TypeRegistry const&       reg,
                                                TypeId                    tau) {
    (void) reg[tau];  // throws UnknownType
    auto const& labels = B.labels();
    auto        pos_of = [&](TypeId t) -> std::size_t {
      auto it = std::find(labels.begin(), labels.end(), t);
      if (it == labels.end()) {
        throw Error(Errc::unknown_type, "type " + std::to_string(t + 1) + " not in matrix");
      }
      return static_cast<std::size_t>(it - labels.begin());
    };
    std::vector<bool>        reach(B.size(), false);
    std::vector<std::size_t> stack{pos_of(tau)};
    reach[stack.back()] = true;
    while (!stack.empty()) {
      auto col = stack.back();
      stack.pop_back();
      for (std::size_t row = 0; row < B.size(); ++row) {
        if (B(row, col) != 0 && !reach[row]) {
          reach[row] = true;
          stack.push_back(row);
        }
      }
    }
    std::vector<std::size_t> keep;
    std::vector<TypeId>      sub_labels;
    for (std::size_t i = 0; i < B.size(); ++i) {
      if (reach[i]) {
        keep.push_back(i);
        sub_labels.push_back(labels[i]);
      }
    }
    BranchingMatrixInt S(std::move(sub_labels));
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = 0; j < keep.size(); ++j) {
        S(i, j) = B(keep[i], keep[j]);
      }
    }
    return S;
  }

  struct PropertyCheck {
    std::string name;
    bool        passed;
    std::string detail;  // counterexample coordinates when failed
  };

  struct StructureReport {
    std::vector<PropertyCheck> checks;

    bool all_passed() const {
      return std::all_of(checks.begin(), checks.end(),
                         [](auto const& c) { return c.passed; });
    }

    PropertyCheck const* find(std::string const& name) const {
      for (auto const& c : checks) {
        if (c.name == name) {
          return &c;
        }
      }
      return nullptr;
    }
  };

  namespace detail {
    inline std::string coord(std::size_t i, std::size_t j) {
      return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    }
  }  // namespace detail

  //! Checks needing only the matrix: first row zero after the diagonal and
  //! a nonzero entry before the diagonal in every later row.
  inline StructureReport verify_structure(BranchingMatrixInt const& B) {
    StructureReport R;
    {
      PropertyCheck c{"first_row_zero", true, ""};
      for (std::size_t j = 1; j < B.size(); ++j) {
        if (B(0, j) != 0) {
          c = {c.name, false, "nonzero entry at " + detail::coord(0, j)};
          break;
        }
      }
      R.checks.push_back(c);
    }
    {
      PropertyCheck c{"pre_diagonal", true, ""};
      for (std::size_t i = 1; i < B.size() && c.passed; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < i; ++j) {
          found = found || B(i, j) != 0;
        }
        if (!found) {
          c = {c.name, false, "row " + std::to_string(i + 1) + " has no entry before the diagonal"};
        }
      }
      R.checks.push_back(c);
    }
    return R;
  }

  //! All structural properties of a branching matrix built over reg, with
  //! counterexample coordinates for failures.  Submatrix stability is
  //! checked for powers up to max_power.
  inline StructureReport verify_structure(BranchingMatrixInt const& B,
                                          TypeRegistry const&       reg,
                                          unsigned                  max_power = 6) {
    StructureReport R = verify_structure(B);
    auto const&     labels = B.labels();

    PropertyCheck diag{"diagonal_is_center", true, ""};
    PropertyCheck abel{"abelian_columns", true, ""};
    PropertyCheck sums{"column_sums", true, ""};
    for (std::size_t t = 0; t < B.size(); ++t) {
      TupleType const& type = reg[labels[t]];
      auto             Z    = center(type.centralizer).order();
      if (diag.passed && B(t, t) != Z) {
        diag = {diag.name, false,
                detail::coord(t, t) + " = " + std::to_string(B(t, t)) + ", center order "
                    + std::to_string(Z)};
      }
      if (abel.passed && type.abelian) {
        for (std::size_t i = 0; i < B.size(); ++i) {
          auto expect = i == t ? type.centralizer.order() : 0;
          if (B(i, t) != expect) {
            abel = {abel.name, false, "abelian column entry at " + detail::coord(i, t)};
            break;
          }
        }
      }
      if (sums.passed) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < B.size(); ++i) {
          s += B(i, t);
        }
        auto classes = conjugacy_classes(type.centralizer).size();
        if (s != classes) {
          sums = {sums.name, false,
                  "column " + std::to_string(t + 1) + " sums to " + std::to_string(s)
                      + ", expected " + std::to_string(classes)};
        }
      }
    }
    R.checks.push_back(diag);
    R.checks.push_back(abel);
    R.checks.push_back(sums);

    {
      PropertyCheck c{"first_column_class_count", true, ""};
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < B.size(); ++i) {
        s += B(i, 0);
      }
      auto classes = conjugacy_classes(reg.group()).size();
      if (B.size() == 0 || labels[0] != 0 || s != classes) {
        c = {c.name, false,
             "1.B.e1 = " + std::to_string(s) + ", class count " + std::to_string(classes)};
      }
      R.checks.push_back(c);
    }

    {
      PropertyCheck c{"submatrix_stability", true, ""};
      for (std::size_t t = 0; t < B.size() && c.passed; ++t) {
        auto S     = branching_submatrix(B, reg, labels[t]);
        auto s_pos = static_cast<std::size_t>(
            std::find(S.labels().begin(), S.labels().end(), labels[t]) - S.labels().begin());
        auto full = B.power_column(0, t);
        auto part = S.power_column(0, s_pos);
        for (unsigned d = 1; d <= max_power && c.passed; ++d) {
          full = B.apply(full);
          part = S.apply(part);
          for (std::size_t i = 0; i < S.size(); ++i) {
            auto row = static_cast<std::size_t>(
                std::find(labels.begin(), labels.end(), S.labels()[i]) - labels.begin());
            if (full[row] != part[i]) {
              c = {c.name, false,
                   "power " + std::to_string(d) + " differs at " + detail::coord(row, t)};
              break;
            }
          }
        }
      }
      R.checks.push_back(c);
    }

    R.checks.push_back({"finite", true, std::to_string(B.size()) + " types"});
    return R;
  }

}  // namespace commprob

#endif  // COMMPROB_BRANCHING_HPP_
