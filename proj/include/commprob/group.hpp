#ifndef COMMPROB_GROUP_HPP_
#define COMMPROB_GROUP_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "element.hpp"
#include "error.hpp"

namespace commprob {

  using ElementIndex = std::uint32_t;

  //! Default bound on the order of a generated group.
  inline constexpr std::size_t default_group_cap = 20000;

  //! A fully enumerated finite group.
  //!
  //! The identity has index 0 and the remaining elements follow in
  //! breadth-first discovery order from the generators.  Copies share the
  //! same immutable storage, so a FiniteGroup is cheap to pass by value.
  class FiniteGroup {
    struct Data {
      std::vector<GroupElement>                     elements;
      std::unordered_map<std::string, ElementIndex> index;
      std::vector<ElementIndex>                     inverse;
      std::vector<ElementIndex>                     table;  // empty if too large
      std::vector<std::uint32_t>                    element_order;
    };

   public:
    //! Groups up to this order get a full multiplication table.
    static constexpr std::size_t table_limit = 2048;

    //! Closure of gens under multiplication, by breadth-first search over
    //! left multiplication by the generators and then their inverses.
    static FiniteGroup generate(std::span<GroupElement const> gens,
                                std::size_t cap = default_group_cap) {
      if (gens.empty()) {
        throw Error(Errc::precondition_violated,
                    "at least one generator is required");
      }
      if (cap < 1) {
        throw Error(Errc::precondition_violated, "cap must be >= 1");
      }
      for (auto const& g : gens) {
        if (!g.same_carrier(gens.front())) {
          throw Error(Errc::mixed_carriers,
                      "generators do not share one carrier");
        }
      }
      std::vector<GroupElement> steps(gens.begin(), gens.end());
      for (auto const& g : gens) {
        steps.push_back(g.inverse());
      }

      auto data = std::make_shared<Data>();
      auto add  = [&](GroupElement g) {
        auto [it, inserted] = data->index.emplace(
            g.encoding(), static_cast<ElementIndex>(data->elements.size()));
        if (inserted) {
          if (data->elements.size() >= cap) {
            throw Error(Errc::cap_exceeded,
                        "group order exceeds cap " + std::to_string(cap));
          }
          data->elements.push_back(std::move(g));
        }
      };
      add(gens.front().identity());
      for (std::size_t i = 0; i < data->elements.size(); ++i) {
        for (auto const& s : steps) {
          add(s * data->elements[i]);
        }
      }
      build(*data);
      return FiniteGroup(std::move(data));
    }

    std::size_t order() const noexcept {
      return _data->elements.size();
    }

    ElementIndex identity() const noexcept {
      return 0;
    }

    GroupElement const& element(ElementIndex i) const {
      return _data->elements.at(i);
    }

    std::vector<GroupElement> const& elements() const noexcept {
      return _data->elements;
    }

    std::optional<ElementIndex> find(GroupElement const& g) const {
      auto it = _data->index.find(g.encoding());
      if (it == _data->index.end() || !g.same_carrier(_data->elements[0])) {
        return std::nullopt;
      }
      return it->second;
    }

    ElementIndex multiply(ElementIndex a, ElementIndex b) const {
      if (!_data->table.empty()) {
        return _data->table[std::size_t(a) * order() + b];
      }
      return _data->index.at((_data->elements[a] * _data->elements[b]).encoding());
    }

    ElementIndex inverse(ElementIndex a) const {
      return _data->inverse[a];
    }

    //! g x g^-1
    ElementIndex conjugate(ElementIndex g, ElementIndex x) const {
      return multiply(multiply(g, x), inverse(g));
    }

    bool commute(ElementIndex a, ElementIndex b) const {
      return multiply(a, b) == multiply(b, a);
    }

    std::uint32_t element_order(ElementIndex a) const {
      return _data->element_order[a];
    }

    bool contains_index(ElementIndex a) const noexcept {
      return a < order();
    }

    //! Same storage, hence the same group with the same indexing.
    bool operator==(FiniteGroup const& that) const noexcept {
      return _data == that._data;
    }

   private:
    explicit FiniteGroup(std::shared_ptr<Data> data) : _data(std::move(data)) {}

    static void build(Data& d) {
      std::size_t n = d.elements.size();
      if (n <= table_limit) {
        d.table.resize(n * n);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            d.table[a * n + b]
                = d.index.at((d.elements[a] * d.elements[b]).encoding());
          }
        }
      }
      auto mul = [&d, n](ElementIndex a, ElementIndex b) {
        if (!d.table.empty()) {
          return d.table[std::size_t(a) * n + b];
        }
        return d.index.at((d.elements[a] * d.elements[b]).encoding());
      };
      d.inverse.resize(n);
      for (std::size_t a = 0; a < n; ++a) {
        d.inverse[a] = d.index.at(d.elements[a].inverse().encoding());
      }
      d.element_order.resize(n);
      for (std::size_t a = 0; a < n; ++a) {
        auto          g = static_cast<ElementIndex>(a);
        std::uint32_t k = 1;
        for (ElementIndex x = g; x != 0; x = mul(x, g)) {
          ++k;
        }
        d.element_order[a] = k;
      }
    }

    std::shared_ptr<Data const> _data;
  };

  //! A subgroup of a FiniteGroup, stored as its sorted member indices.
  class Subgroup {
   public:
    //! members must be closed under the parent's operations; this is not
    //! re-checked here (see is_closed).
    Subgroup(FiniteGroup parent, std::vector<ElementIndex> members)
        : _parent(std::move(parent)), _members(std::move(members)) {
      std::sort(_members.begin(), _members.end());
      _members.erase(std::unique(_members.begin(), _members.end()),
                     _members.end());
      _mask.assign(_parent.order(), false);
      for (auto m : _members) {
        if (!_parent.contains_index(m)) {
          throw Error(Errc::element_not_in_group,
                      "index " + std::to_string(m) + " is not in the group");
        }
        _mask[m] = true;
      }
    }

    static Subgroup whole(FiniteGroup const& G) {
      std::vector<ElementIndex> all(G.order());
      for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = static_cast<ElementIndex>(i);
      }
      return Subgroup(G, std::move(all));
    }

    FiniteGroup const& parent() const noexcept {
      return _parent;
    }

    std::size_t order() const noexcept {
      return _members.size();
    }

    std::vector<ElementIndex> const& members() const noexcept {
      return _members;
    }

    bool contains(ElementIndex x) const noexcept {
      return x < _mask.size() && _mask[x];
    }

    bool is_abelian() const {
      for (std::size_t i = 0; i < _members.size(); ++i) {
        for (std::size_t j = i + 1; j < _members.size(); ++j) {
          if (!_parent.commute(_members[i], _members[j])) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_closed() const {
      if (!contains(_parent.identity())) {
        return false;
      }
      for (auto a : _members) {
        if (!contains(_parent.inverse(a))) {
          return false;
        }
        for (auto b : _members) {
          if (!contains(_parent.multiply(a, b))) {
            return false;
          }
        }
      }
      return true;
    }

    bool operator==(Subgroup const& that) const noexcept {
      return _parent == that._parent && _members == that._members;
    }

   private:
    FiniteGroup               _parent;
    std::vector<ElementIndex> _members;
    std::vector<bool>         _mask;
  };

  inline FiniteGroup group_generate(std::span<GroupElement const> gens,
                                    std::size_t cap = default_group_cap) {
    return FiniteGroup::generate(gens, cap);
  }

  //! Center of H, computed inside H.
  inline Subgroup center(Subgroup const& H) {
    FiniteGroup const&        G = H.parent();
    std::vector<ElementIndex> out;
    for (auto z : H.members()) {
      bool central = true;
      for (auto g : H.members()) {
        if (!G.commute(z, g)) {
          central = false;
          break;
        }
      }
      if (central) {
        out.push_back(z);
      }
    }
    return Subgroup(G, std::move(out));
  }

  inline Subgroup center(FiniteGroup const& G) {
    return center(Subgroup::whole(G));
  }

}  // namespace commprob

#endif  // COMMPROB_GROUP_HPP_
