#ifndef COMMPROB_COUNTING_HPP_
#define COMMPROB_COUNTING_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bignum.hpp"
#include "branching.hpp"
#include "conjugacy.hpp"
#include "error.hpp"
#include "field.hpp"
#include "group.hpp"

namespace commprob {

  //! c_G(d) = 1 . B^d . e_1, the number of simultaneous conjugacy classes of
  //! commuting d-tuples; c_G(0) = 1.
  inline BigCount class_count(BranchingMatrixInt const& B, unsigned d) {
    BigCount sum = 0;
    for (auto const& x : B.power_column(d, 0)) {
      sum += x;
    }
    return sum;
  }

  inline BigCount class_count(BranchingResult const& R, unsigned d) {
    return class_count(R.matrix, d);
  }

  //! c_G(0), ..., c_G(dmax).
  inline std::vector<BigCount> class_counts(BranchingMatrixInt const& B, unsigned dmax) {
    std::vector<BigCount> out;
    out.reserve(dmax + 1);
    std::vector<BigCount> v(B.size());
    v.at(0) = 1;
    for (unsigned d = 0; d <= dmax; ++d) {
      if (d > 0) {
        v = B.apply(v);
      }
      BigCount sum = 0;
      for (auto const& x : v) {
        sum += x;
      }
      out.push_back(std::move(sum));
    }
    return out;
  }

  //! |C_d(G)| = |G| c_G(d-1).
  inline BigCount commuting_count(BranchingResult const& R, unsigned d) {
    if (d < 1) {
      throw Error(Errc::precondition_violated, "d must be >= 1");
    }
    return BigCount(R.registry.group().order()) * class_count(R, d - 1);
  }

  //! cp_d(G) = |C_d(G)| / |G|^d.
  inline BigRational cp(BranchingResult const& R, unsigned d) {
    return make_rational(commuting_count(R, d),
                         power(BigCount(R.registry.group().order()), d));
  }

  //! Default bound on |G| for the orbit-counting oracle.
  inline constexpr std::size_t default_oracle_cap = 500;

  namespace detail {
    //! |C_k(H)| by |C_{k+1}(H)| = sum_{g in H} |C_k(Z_H(g))|, memoized on the
    //! member set of H.  Uses only the group operations.
    class CommutingTupleCounter {
     public:
      explicit CommutingTupleCounter(FiniteGroup G) : _group(std::move(G)) {}

      BigCount count(std::vector<ElementIndex> const& H, unsigned k) {
        if (k == 1) {
          return BigCount(H.size());
        }
        auto& slot = _memo[H];
        if (slot.size() < k + 1) {
          slot.resize(k + 1, BigCount(-1));
        }
        if (slot[k] >= 0) {
          return slot[k];
        }
        BigCount total = 0;
        for (auto g : H) {
          std::vector<ElementIndex> C;
          for (auto h : H) {
            if (_group.commute(g, h)) {
              C.push_back(h);
            }
          }
          total += count(C, k - 1);
        }
        _memo[H][k] = total;
        return total;
      }

     private:
      FiniteGroup                                                 _group;
      std::map<std::vector<ElementIndex>, std::vector<BigCount>> _memo;
    };
  }  // namespace detail

  //! |C_k(G)| straight from the group, without the branching matrix.
  inline BigCount oracle_commuting_count(FiniteGroup const& G,
                                         unsigned           k,
                                         std::size_t        cap = default_oracle_cap) {
    if (k < 1) {
      throw Error(Errc::precondition_violated, "k must be >= 1");
    }
    if (G.order() > cap) {
      throw Error(Errc::cap_exceeded,
                  "oracle limited to groups of order <= " + std::to_string(cap));
    }
    detail::CommutingTupleCounter counter(G);
    return counter.count(Subgroup::whole(G).members(), k);
  }

  //! c_G(d) by Burnside: the orbit count of componentwise conjugation on
  //! commuting d-tuples is |C_{d+1}(G)| / |G|.
  inline BigCount oracle_class_count(FiniteGroup const& G,
                                     unsigned           d,
                                     std::size_t        cap = default_oracle_cap) {
    if (d < 1) {
      throw Error(Errc::precondition_violated, "d must be >= 1");
    }
    BigCount total = oracle_commuting_count(G, d + 1, cap);
    BigCount order(G.order());
    if (total % order != 0) {
      throw Error(Errc::inexact_division,
                  "|C_" + std::to_string(d + 1) + "| = " + total.str()
                      + " is not divisible by |G| = " + order.str());
    }
    return total / order;
  }

  struct MaxAbelian {
    BigCount a;
    Subgroup witness;
    TypeId   type;
    //! Largest entry of the branching matrix; equal to a.
    std::uint64_t max_entry;

    bool consistent() const {
      return a == max_entry;
    }
  };

  //! Largest abelian subgroup, read off the abelian (leaf) types.  A
  //! maximal abelian subgroup is its own centralizer, so it is always a
  //! registered type.
  inline MaxAbelian max_abelian(BranchingResult const& R) {
    auto const&           types = R.registry.types();
    std::optional<TypeId> best;
    for (TypeId t = 0; t < types.size(); ++t) {
      if (types[t].abelian
          && (!best || types[t].centralizer.order() > types[*best].centralizer.order())) {
        best = t;
      }
    }
    if (!best) {
      throw Error(Errc::precondition_violated, "registry has no abelian type");
    }
    return MaxAbelian{BigCount(types[*best].centralizer.order()),
                      types[*best].centralizer, *best, R.matrix.max_entry()};
  }

  struct RatioSequence {
    BigCount                 a;
    std::vector<BigCount>    counts;  // c_G(d), d = 0 .. dmax
    std::vector<BigRational> ratios;  // c_G(d) / a^d, d = 0 .. dmax

    //! r_dmax, the snapshot estimate of the asymptotic constant.
    BigRational const& estimate() const {
      return ratios.back();
    }

    //! |r_dmax - r_(dmax-1)|
    BigRational last_difference() const {
      return ratios.size() < 2 ? BigRational(0)
                               : abs_value(ratios.back() - ratios[ratios.size() - 2]);
    }
  };

  //! r_d = c_G(d) / a^d for d = 0 .. dmax.
  inline RatioSequence asymptotic_ratio(BranchingResult const& R, unsigned dmax) {
    RatioSequence S;
    S.a      = max_abelian(R).a;
    S.counts = class_counts(R.matrix, dmax);
    BigCount a_pow = 1;
    for (unsigned d = 0; d <= dmax; ++d) {
      if (d > 0) {
        a_pow *= S.a;
      }
      S.ratios.push_back(make_rational(S.counts[d], a_pow));
    }
    return S;
  }

  enum class Family { GL, U, Sp, O };

  inline std::string family_name(Family f) {
    switch (f) {
      case Family::GL: return "GL";
      case Family::U: return "U";
      case Family::Sp: return "Sp";
      case Family::O: return "O";
    }
    return "?";
  }

  //! GL_n(q), U_n(q), Sp_{2l}(q) or O_{2l}(q); size is n or l.
  struct FamilySpec {
    Family        family;
    unsigned      size;
    std::int64_t  q;
  };

  struct FamilyAsymptote {
    BigCount    order;
    BigCount    a;
    BigRational base;  // a / order; cp_d ~ const * base^(d-1)
  };

  namespace detail {
    inline BigRational ipow(BigRational x, unsigned e) {
      BigRational r = 1;
      for (unsigned i = 0; i < e; ++i) {
        r *= x;
      }
      return r;
    }

    //! Order of the family member as a polynomial in q, evaluated at any
    //! integer (negative q is used for the q -> -q comparison).
    //!
    //! For O_{2l} this is 2 q^{l(l-1)} prod_{i=1}^{l} (q^{2i} - 1), the
    //! product used for the asymptotic base; the order of the
    //! split orthogonal group O^+_{2l}(q) has (q^l - 1) in place of the
    //! i = l factor.
    inline BigRational family_order_poly(Family f, unsigned n, BigRational const& q) {
      BigRational r = 1;
      switch (f) {
        case Family::GL:
          r = ipow(q, n * (n - 1) / 2);
          for (unsigned i = 1; i <= n; ++i) {
            r *= ipow(q, i) - 1;
          }
          break;
        case Family::U:
          r = ipow(q, n * (n - 1) / 2);
          for (unsigned i = 1; i <= n; ++i) {
            r *= ipow(q, i) - (i % 2 == 0 ? 1 : -1);
          }
          break;
        case Family::Sp:
          r = ipow(q, n * n);
          for (unsigned i = 1; i <= n; ++i) {
            r *= ipow(q, 2 * i) - 1;
          }
          break;
        case Family::O:
          r = 2 * ipow(q, n * (n - 1));
          for (unsigned i = 1; i <= n; ++i) {
            r *= ipow(q, 2 * i) - 1;
          }
          break;
      }
      return r;
    }

    //! Maximal abelian order as a polynomial in q.
    inline BigRational family_abelian_poly(Family f, unsigned n, BigRational const& q) {
      switch (f) {
        case Family::GL:
          if (n == 2) {
            return q * q - 1;
          }
          if (n == 3) {
            return ipow(q, 3) - 1;
          }
          return ipow(q, n * n / 4) * (q - 1);
        case Family::U:
          if (n == 2) {
            return (q + 1) * (q + 1);
          }
          if (n == 3) {
            return ipow(q + 1, 3);
          }
          return ipow(q, n * n / 4) * (q + 1);
        case Family::Sp:
          return 2 * ipow(q, n * (n + 1) / 2);
        case Family::O:
          return 2 * ipow(q, n * (n - 1) / 2);
      }
      return 0;
    }
  }  // namespace detail

  //! a / |G| evaluated at an arbitrary nonzero integer q, with no parameter
  //! checks.  Used to compare the GL and U formulas under q -> -q.
  inline BigRational family_base_at(Family f, unsigned size, std::int64_t q) {
    BigRational Q(q);
    return detail::family_abelian_poly(f, size, Q) / detail::family_order_poly(f, size, Q);
  }

  inline FamilyAsymptote family_asymptote(FamilySpec const& spec) {
    auto fail = [&](std::string const& why) {
      throw Error(Errc::invalid_family_params, family_name(spec.family) + ": " + why);
    };
    if (spec.q < 2 || detail::prime_power(static_cast<std::uint64_t>(spec.q)).first == 0) {
      fail("q = " + std::to_string(spec.q) + " is not a prime power");
    }
    switch (spec.family) {
      case Family::GL:
      case Family::U:
        if (spec.size < 2) {
          fail("n must be >= 2");
        }
        break;
      case Family::Sp:
        if (spec.size < 1) {
          fail("l must be >= 1");
        }
        break;
      case Family::O:
        if (spec.size < 2) {
          fail("l must be >= 2");
        }
        break;
    }
    if ((spec.family == Family::Sp || spec.family == Family::O) && spec.q % 2 == 0) {
      fail("q must be odd");
    }
    BigRational Q(spec.q);
    BigRational order = detail::family_order_poly(spec.family, spec.size, Q);
    BigRational a     = detail::family_abelian_poly(spec.family, spec.size, Q);
    return FamilyAsymptote{boost::multiprecision::numerator(order),
                           boost::multiprecision::numerator(a), a / order};
  }

  //! Leading-order estimate q^{n + (d-1) alpha} of |C_d(G(F_q))|.
  inline BigCount lie_type_estimate(unsigned n_dim, unsigned alpha, std::uint64_t q, unsigned d) {
    if (alpha < 1 || n_dim < alpha) {
      throw Error(Errc::precondition_violated, "need n >= alpha >= 1");
    }
    if (d < 1) {
      throw Error(Errc::precondition_violated, "d must be >= 1");
    }
    if (detail::prime_power(q).first == 0) {
      throw Error(Errc::precondition_violated, "q must be a prime power");
    }
    return power(BigCount(q), n_dim + static_cast<unsigned long long>(d - 1) * alpha);
  }

}  // namespace commprob

#endif  // COMMPROB_COUNTING_HPP_
