#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "commprob/conjugacy.hpp"
#include "support.hpp"

using namespace commprob;
using commprob::testing::corpus_group;
using commprob::testing::corpus_stems;

namespace {

  ElementIndex index_of(FiniteGroup const& G, std::uint32_t p, std::size_t n,
                        std::vector<std::uint32_t> entries) {
    auto g = GroupElement::matrix(std::make_shared<Field const>(p), n, std::move(entries));
    auto i = G.find(g);
    EXPECT_TRUE(i.has_value());
    return *i;
  }

  //! All subgroups g A g^-1, by brute force.
  std::set<std::vector<ElementIndex>> conjugates(Subgroup const& A) {
    std::set<std::vector<ElementIndex>> out;
    for (ElementIndex g = 0; g < A.parent().order(); ++g) {
      out.insert(conjugate_subgroup(A, g).members());
    }
    return out;
  }

}  // namespace

TEST(ConjugacyClasses, CountsMatchOracle) {
  for (auto const& row : commprob::testing::oracle_table()) {
    auto G = corpus_group(row.stem);
    EXPECT_EQ(conjugacy_classes(G).size(), row.class_counts[0]) << row.stem;
  }
}

TEST(ConjugacyClasses, PartitionAndClassEquation) {
  for (auto const& stem : corpus_stems()) {
    auto        G = corpus_group(stem);
    auto        P = conjugacy_classes(G);
    std::size_t total = 0;
    for (std::size_t c = 0; c < P.size(); ++c) {
      auto const& cls = P.classes[c];
      EXPECT_EQ(G.order() % cls.members.size(), 0u) << stem;
      ElementIndex x = cls.representative;
      EXPECT_EQ(centralizer(G, std::span(&x, 1)).order() * cls.members.size(), G.order());
      for (auto m : cls.members) {
        EXPECT_EQ(P.class_of[m], c);
      }
      total += cls.members.size();
    }
    EXPECT_EQ(total, G.order()) << stem;
  }
}

TEST(Centralizer, UnipotentElements) {
  auto G3 = corpus_group("gl3_f2");
  auto u  = index_of(G3, 2, 3, {1, 1, 0, 0, 1, 1, 0, 0, 1});
  EXPECT_EQ(centralizer(G3, std::span(&u, 1)).order(), 4u);

  auto G2 = corpus_group("gl2_f3");
  auto v  = index_of(G2, 3, 2, {1, 1, 0, 1});
  EXPECT_EQ(centralizer(G2, std::span(&v, 1)).order(), 6u);
}

TEST(Centralizer, InvariantUnderTuplePermutation) {
  for (auto const& stem : corpus_stems()) {
    auto G = corpus_group(stem);
    std::mt19937 rng(11);
    std::uniform_int_distribution<ElementIndex> pick(0, G.order() - 1);
    for (int t = 0; t < 40; ++t) {
      std::vector<ElementIndex> tuple{pick(rng), pick(rng), pick(rng)};
      auto                      C = centralizer(G, tuple);
      EXPECT_TRUE(C.is_closed());
      for (auto c : C.members()) {
        for (auto x : tuple) {
          EXPECT_TRUE(G.commute(c, x));
        }
      }
      std::sort(tuple.begin(), tuple.end());
      do {
        EXPECT_EQ(centralizer(G, tuple), C) << stem;
      } while (std::next_permutation(tuple.begin(), tuple.end()));
    }
  }
}

TEST(Centralizer, RejectsForeignIndex) {
  auto         G = corpus_group("s3");
  ElementIndex x = 99;
  try {
    centralizer(G, std::span(&x, 1));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), Errc::element_not_in_group);
  }
}

TEST(SubgroupConjugate, AgreesWithBruteForce) {
  for (auto const& stem : {"s4", "gl2_f3", "d4"}) {
    auto G = corpus_group(stem);
    // centralizers of single elements and of pairs
    std::vector<Subgroup> pool;
    std::mt19937          rng(3);
    std::uniform_int_distribution<ElementIndex> pick(0, G.order() - 1);
    for (ElementIndex x = 0; x < G.order(); ++x) {
      pool.push_back(centralizer(G, std::span(&x, 1)));
    }
    for (int t = 0; t < 20; ++t) {
      std::vector<ElementIndex> pair{pick(rng), pick(rng)};
      pool.push_back(centralizer(G, pair));
    }
    for (std::size_t i = 0; i < pool.size(); i += 3) {
      auto orbit = conjugates(pool[i]);
      for (std::size_t j = 0; j < pool.size(); j += 2) {
        auto g = subgroup_conjugate(G, pool[i], pool[j]);
        EXPECT_EQ(g.has_value(), orbit.count(pool[j].members()) == 1) << stem;
        if (g) {
          EXPECT_EQ(conjugate_subgroup(pool[i], *g), pool[j]);
        }
      }
    }
  }
}

TEST(ZClasses, Counts) {
  EXPECT_EQ(z_classes(Subgroup::whole(corpus_group("s3"))).size(), 3u);
  EXPECT_EQ(z_classes(Subgroup::whole(corpus_group("q8"))).size(), 4u);
  EXPECT_EQ(z_classes(Subgroup::whole(corpus_group("gl2_f3"))).size(), 4u);
}

TEST(ZClasses, PartitionClassesWithConjugateCentralizers) {
  for (auto const& stem : corpus_stems()) {
    auto G = corpus_group(stem);
    auto W = Subgroup::whole(G);
    auto P = conjugacy_classes(W);
    auto Z = z_classes(W, P);
    std::size_t covered = 0;
    for (auto const& z : Z) {
      covered += z.class_count();
      for (auto c : z.member_classes) {
        ElementIndex x = P.classes[c].representative;
        EXPECT_TRUE(subgroup_conjugate(G, centralizer(G, std::span(&x, 1)), z.centralizer))
            << stem;
      }
    }
    EXPECT_EQ(covered, P.size());
    for (std::size_t i = 0; i < Z.size(); ++i) {
      for (std::size_t j = i + 1; j < Z.size(); ++j) {
        EXPECT_FALSE(subgroup_conjugate(G, Z[i].centralizer, Z[j].centralizer)) << stem;
      }
    }
  }
}

TEST(ZClasses, CentralFirst) {
  auto G = corpus_group("gl2_f3");
  auto Z = z_classes(Subgroup::whole(G));
  EXPECT_EQ(Z.front().centralizer.order(), G.order());
  EXPECT_EQ(Z.front().class_count(), 2u);
}
