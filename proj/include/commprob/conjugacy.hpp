#ifndef COMMPROB_CONJUGACY_HPP_
#define COMMPROB_CONJUGACY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "group.hpp"

namespace commprob {

  //! Element indices g_1, ..., g_d of a FiniteGroup, pairwise commuting.
  using CommutingTuple = std::vector<ElementIndex>;

  struct ConjugacyClass {
    ElementIndex              representative;  // minimal member index
    std::vector<ElementIndex> members;         // sorted
  };

  //! Orbit partition of a group (or subgroup) under its own conjugation.
  struct ClassPartition {
    std::vector<ConjugacyClass> classes;   // ordered by representative
    std::vector<std::size_t>    class_of;  // indexed by parent element index
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t size() const noexcept {
      return classes.size();
    }
  };

  //! Conjugacy classes of H sharing one H-conjugacy class of centralizers.
  struct ZClass {
    std::vector<std::size_t> member_classes;  // ids into the ClassPartition
    Subgroup                 centralizer;     // Z_H(rep) for the first member
    std::size_t              class_count() const noexcept {
      return member_classes.size();
    }
  };

  namespace detail {
    inline void check_in_group(FiniteGroup const& G, std::span<ElementIndex const> t) {
      for (auto x : t) {
        if (!G.contains_index(x)) {
          throw Error(Errc::element_not_in_group,
                      "index " + std::to_string(x) + " is not in the group");
        }
      }
    }

    //! Order plus the sorted multiset of element orders.
    struct Fingerprint {
      std::size_t                order;
      std::vector<std::uint32_t> element_orders;
      auto operator<=>(Fingerprint const&) const = default;
    };

    inline Fingerprint fingerprint(Subgroup const& A) {
      Fingerprint fp{A.order(), {}};
      fp.element_orders.reserve(A.order());
      for (auto x : A.members()) {
        fp.element_orders.push_back(A.parent().element_order(x));
      }
      std::sort(fp.element_orders.begin(), fp.element_orders.end());
      return fp;
    }

    //! A small generating set, chosen greedily by increasing index.
    inline std::vector<ElementIndex> generating_set(Subgroup const& A) {
      FiniteGroup const&        G = A.parent();
      std::vector<ElementIndex> gens;
      std::vector<bool>         in_span(G.order(), false);
      std::vector<ElementIndex> span{G.identity()};
      in_span[G.identity()] = true;
      for (auto x : A.members()) {
        if (in_span[x]) {
          continue;
        }
        gens.push_back(x);
        // re-close: multiply every element of the span by all generators
        for (std::size_t i = 0; i < span.size(); ++i) {
          for (auto g : gens) {
            auto y = G.multiply(span[i], g);
            if (!in_span[y]) {
              in_span[y] = true;
              span.push_back(y);
            }
          }
        }
      }
      return gens;
    }
  }  // namespace detail

  //! Z_H(t): the elements of H commuting with every entry of t.  The empty
  //! tuple yields H.
  inline Subgroup centralizer(Subgroup const& H, std::span<ElementIndex const> t) {
    FiniteGroup const& G = H.parent();
    detail::check_in_group(G, t);
    std::vector<ElementIndex> out;
    for (auto h : H.members()) {
      bool ok = true;
      for (auto x : t) {
        if (!G.commute(h, x)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.push_back(h);
      }
    }
    return Subgroup(G, std::move(out));
  }

  inline Subgroup centralizer(FiniteGroup const& G, std::span<ElementIndex const> t) {
    return centralizer(Subgroup::whole(G), t);
  }

  inline bool is_commuting(FiniteGroup const& G, std::span<ElementIndex const> t) {
    detail::check_in_group(G, t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        if (!G.commute(t[i], t[j])) {
          return false;
        }
      }
    }
    return true;
  }

  //! Conjugacy classes of H under conjugation by H.
  inline ClassPartition conjugacy_classes(Subgroup const& H) {
    FiniteGroup const& G = H.parent();
    ClassPartition     P;
    P.class_of.assign(G.order(), ClassPartition::npos);
    for (auto x : H.members()) {
      if (P.class_of[x] != ClassPartition::npos) {
        continue;
      }
      std::size_t    id = P.classes.size();
      ConjugacyClass cls{x, {}};
      for (auto h : H.members()) {
        auto y = G.conjugate(h, x);
        if (P.class_of[y] == ClassPartition::npos) {
          P.class_of[y] = id;
          cls.members.push_back(y);
        }
      }
      std::sort(cls.members.begin(), cls.members.end());
      P.classes.push_back(std::move(cls));
    }
    return P;
  }

  inline ClassPartition conjugacy_classes(FiniteGroup const& G) {
    return conjugacy_classes(Subgroup::whole(G));
  }

  //! Some g in the ambient group with g A g^-1 = B, found by exhaustive
  //! transporter search, or nullopt if A and B are not conjugate there.
  inline std::optional<ElementIndex> subgroup_conjugate(Subgroup const& ambient,
                                                        Subgroup const& A,
                                                        Subgroup const& B) {
    FiniteGroup const& G = ambient.parent();
    if (A.order() != B.order()) {
      return std::nullopt;
    }
    if (A == B) {
      return G.identity();
    }
    if (detail::fingerprint(A) != detail::fingerprint(B)) {
      return std::nullopt;
    }
    // g A g^-1 is a subgroup of order |B| generated by the conjugated
    // generators, so it suffices that those land in B.
    auto gens = detail::generating_set(A);
    for (auto g : ambient.members()) {
      bool ok = true;
      for (auto a : gens) {
        if (!B.contains(G.conjugate(g, a))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        return g;
      }
    }
    return std::nullopt;
  }

  inline std::optional<ElementIndex> subgroup_conjugate(FiniteGroup const& G,
                                                        Subgroup const&    A,
                                                        Subgroup const&    B) {
    return subgroup_conjugate(Subgroup::whole(G), A, B);
  }

  //! Conjugate subgroup g A g^-1.
  inline Subgroup conjugate_subgroup(Subgroup const& A, ElementIndex g) {
    FiniteGroup const&        G = A.parent();
    std::vector<ElementIndex> out;
    out.reserve(A.order());
    for (auto a : A.members()) {
      out.push_back(G.conjugate(g, a));
    }
    return Subgroup(G, std::move(out));
  }

  //! z-classes of H: its conjugacy classes grouped by H-conjugacy of their
  //! centralizers in H.  The z-class of the central elements comes first,
  //! the rest follow by minimal representative index.
  inline std::vector<ZClass> z_classes(Subgroup const& H, ClassPartition const& P) {
    std::vector<ZClass> out;
    for (std::size_t id = 0; id < P.classes.size(); ++id) {
      ElementIndex x = P.classes[id].representative;
      Subgroup     C = centralizer(H, std::span(&x, 1));
      bool         placed = false;
      for (auto& z : out) {
        if (subgroup_conjugate(H, C, z.centralizer)) {
          z.member_classes.push_back(id);
          placed = true;
          break;
        }
      }
      if (!placed) {
        out.push_back(ZClass{{id}, std::move(C)});
      }
    }
    return out;
  }

  inline std::vector<ZClass> z_classes(Subgroup const& H) {
    return z_classes(H, conjugacy_classes(H));
  }

  //! z-classes of a subgroup H of G.  G only fixes the parent; centralizers
  //! and conjugacy are taken inside H.
  inline std::vector<ZClass> z_classes(FiniteGroup const& G, Subgroup const& H) {
    if (!(H.parent() == G)) {
      throw Error(Errc::element_not_in_group, "subgroup of a different group");
    }
    return z_classes(H);
  }

}  // namespace commprob

#endif  // COMMPROB_CONJUGACY_HPP_
