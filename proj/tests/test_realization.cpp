// Copyright 2026 The crn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "crn/realization.hpp"
#include "support/gen.hpp"

using namespace crn;
using namespace crn::testing;

namespace {

MassActionSystem ab_reversible() {
  return make_system(2, {{pt({1, 0}), pt({0, 1}), Rat(1)}, {pt({0, 1}), pt({1, 0}), Rat(1)}});
}

/// Two triangles on six points, all linkage classes deficiency zero, total
/// deficiency one.
MassActionSystem type1_fixture() {
  RatVec o = pt({0, 0, 0}), x = pt({1, 0, 0}), y = pt({0, 1, 0}), xy = pt({1, 1, 0});
  RatVec z = pt({0, 0, 1}), z2 = pt({0, 0, 2});
  return make_system(3, {
                            {o, x, Rat(1)},
                            {x, z, Rat(1)},
                            {z, o, Rat(1)},
                            {y, xy, Rat(1)},
                            {xy, z2, Rat(1)},
                            {z2, y, Rat(1)},
                        });
}

/// Square cycle plus an independent reversible pair on the same six points:
/// one class of deficiency one, one of deficiency zero.
ReactionNetwork type3_fixture() {
  RatVec o = pt({0, 0, 0}), x = pt({1, 0, 0}), y = pt({0, 1, 0}), xy = pt({1, 1, 0});
  RatVec z = pt({0, 0, 1}), z2 = pt({0, 0, 2});
  return make_network(3, {
                             {o, x},
                             {x, xy},
                             {xy, y},
                             {y, o},
                             {z, z2},
                             {z2, z},
                         });
}

}  // namespace

TEST_CASE("find_rates on a fixed network") {
  TargetDynamics t = TargetDynamics::of(ab_reversible());
  RealizationResult r = find_rates(t, ab_reversible().network());
  REQUIRE(r.found);
  CHECK(r.system->rates() == std::vector<Rat>{Rat(1), Rat(1)});

  // (1,1) is not on the ray spanned by (-1,1)
  TargetDynamics bad{auto_context(2), {}};
  bad.map.emplace(pt({1, 0}), RatVec{Rat(1), Rat(1)});
  ReactionNetwork ab = make_network(2, {{pt({1, 0}), pt({0, 1})}});
  RealizationResult rb = find_rates(bad, ab);
  CHECK_FALSE(rb.found);
  REQUIRE(rb.rate_certificate.has_value());
  CHECK_FALSE(rb.rate_certificate->is_solution());

  // a target source missing from the candidate network
  TargetDynamics missing{auto_context(2), {}};
  missing.map.emplace(pt({3, 3}), RatVec{Rat(1), Rat(0)});
  RealizationResult rm = find_rates(missing, ab);
  CHECK_FALSE(rm.found);
  CHECK_FALSE(rm.rate_certificate.has_value());
}

TEST_CASE("dense support") {
  TargetDynamics t{auto_context(2), {}};
  t.map.emplace(pt({1, 0}), RatVec{Rat(-1), Rat(1)});
  std::vector<CandidateEdge> dense = dense_support(t, {pt({1, 0}), pt({0, 1})});
  REQUIRE(dense.size() == 1);
  CHECK(dense[0].source == pt({1, 0}));
  CHECK(dense[0].target == pt({0, 1}));

  // one net vector, two usable targets on its ray: both stay active
  TargetDynamics t2{auto_context(2), {}};
  t2.map.emplace(pt({0, 0}), RatVec{Rat(0), Rat(2)});
  std::vector<CandidateEdge> dense2 =
      dense_support(t2, {pt({0, 0}), pt({0, 1}), pt({0, 2})});
  CHECK(dense2.size() == 2);

  TargetDynamics t3 = TargetDynamics::of(square_cycle_system());
  CHECK_FALSE(dense_support(t3, t3.sources()).empty());
}

TEST_CASE("find_realization without property constraint returns the dense realization") {
  RealizationQuery q;
  q.target = TargetDynamics::of(ab_reversible());
  RealizationResult r = find_realization(q);
  REQUIRE(r.found);
  CHECK(net_vectors(*r.system).comparison() == q.target.map);
  CHECK(r.note == "dense realization");
}

TEST_CASE("conservative realization of the reversible pair") {
  RealizationQuery q;
  q.target = TargetDynamics::of(ab_reversible());
  q.property = RealizationProperty::Conservative;
  RealizationResult r = find_realization(q);
  REQUIRE(r.found);
  REQUIRE(r.conservation_vector.has_value());
  for (const Rat& x : *r.conservation_vector) CHECK(x > 0);
  for (const RatVec& rv : r.system->network().reaction_vectors())
    CHECK(dot(*r.conservation_vector, rv) == 0);
}

TEST_CASE("weakly reversible realization of an irreversible monomial does not exist") {
  MassActionSystem ab = make_system(2, {{pt({1, 0}), pt({0, 1}), Rat(1)}});
  RealizationQuery q;
  q.target = TargetDynamics::of(ab);
  q.property = RealizationProperty::WeaklyReversible;
  RealizationResult r = find_realization(q);
  CHECK_FALSE(r.found);
}

TEST_CASE("every found realization re-verifies") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 25; ++i) {
    MassActionSystem sys = with_random_rates(rng, random_wr_network(rng));
    TargetDynamics t = TargetDynamics::of(sys);
    if (t.map.empty()) continue;
    for (RealizationProperty p :
         {RealizationProperty::None, RealizationProperty::Consistent,
          RealizationProperty::Conservative, RealizationProperty::Endotactic}) {
      RealizationQuery q;
      q.target = t;
      q.property = p;
      RealizationResult r = find_realization(q);
      if (!r.found) continue;
      CHECK(net_vectors(*r.system).comparison() == t.map);
      switch (p) {
        case RealizationProperty::Consistent:
          REQUIRE(r.consistency_certificate.has_value());
          CHECK(verify_stiemke_solution(r.system->network().reaction_vectors(),
                                        *r.consistency_certificate->solution));
          break;
        case RealizationProperty::Conservative: {
          REQUIRE(r.conservation_vector.has_value());
          for (const RatVec& rv : r.system->network().reaction_vectors())
            CHECK(dot(*r.conservation_vector, rv) == 0);
          break;
        }
        case RealizationProperty::Endotactic:
          CHECK(is_endotactic(r.system->network()).pass);
          break;
        default:
          break;
      }
    }
  }
}

TEST_CASE("deficiency-one classification") {
  ReactionNetwork t1 = make_network(2, {{pt({1, 0}), pt({0, 1})},
                                        {pt({0, 1}), pt({1, 0})},
                                        {pt({2, 0}), pt({0, 2})},
                                        {pt({0, 2}), pt({2, 0})}});
  CHECK(classify_deficiency_one(t1) == DeficiencyOneType::TypeI);

  CHECK(classify_deficiency_one(square_cycle_system().network()) == DeficiencyOneType::TypeII);

  // A <-> B together with 0 <-> A+B <-> 2A+2B
  ReactionNetwork t3 = make_network(2, {{pt({1, 0}), pt({0, 1})},
                                        {pt({0, 1}), pt({1, 0})},
                                        {pt({0, 0}), pt({1, 1})},
                                        {pt({1, 1}), pt({0, 0})},
                                        {pt({1, 1}), pt({2, 2})},
                                        {pt({2, 2}), pt({1, 1})}});
  CHECK(classify_deficiency_one(t3) == DeficiencyOneType::TypeIII);

  CHECK(classify_deficiency_one(ab_reversible().network()) == DeficiencyOneType::NotApplicable);

  CHECK(classify_deficiency_one(type1_fixture().network()) == DeficiencyOneType::TypeI);
  CHECK(classify_deficiency_one(type3_fixture()) == DeficiencyOneType::TypeIII);
}

TEST_CASE("type-1 dynamics cannot be realized on a type-3 network") {
  Type1VsType3Report rep = check_type1_vs_type3(type1_fixture(), type3_fixture());
  CHECK(rep.infeasible);
  CHECK_FALSE(rep.theorem_violation);
  REQUIRE(rep.certificate.has_value());
  CHECK_FALSE(rep.certificate->is_solution());
}

TEST_CASE("type-1 vs type-3 preconditions are enforced") {
  // not weakly reversible
  MassActionSystem not_wr = make_system(3, {{pt({0, 0, 0}), pt({1, 0, 0}), Rat(1)}});
  CHECK_THROWS_AS(check_type1_vs_type3(not_wr, type3_fixture()), std::invalid_argument);

  // wrong linkage-class count: a type-1 fixture with three classes
  // (two parallel pairs overlap in direction, so the total deficiency is one)
  RatVec o = pt({0, 0, 0}), x = pt({1, 0, 0}), z = pt({0, 0, 1}), xz = pt({1, 0, 1});
  RatVec y = pt({0, 1, 0}), y2 = pt({0, 2, 0});
  MassActionSystem three_class = make_system(3, {
                                                    {o, x, Rat(1)},
                                                    {x, o, Rat(1)},
                                                    {z, xz, Rat(1)},
                                                    {xz, z, Rat(1)},
                                                    {y, y2, Rat(1)},
                                                    {y2, y, Rat(1)},
                                                });
  REQUIRE(classify_deficiency_one(three_class.network()) == DeficiencyOneType::TypeI);
  CHECK_THROWS_AS(check_type1_vs_type3(three_class, type3_fixture()), std::invalid_argument);
}

TEST_CASE("uniqueness probe: deficiency-zero targets have exactly one realization") {
  std::mt19937_64 rng(62);
  int tested = 0;
  for (int i = 0; i < 60 && tested < 15; ++i) {
    ReactionNetwork g = random_wr_def_zero(rng);
    MassActionSystem sys = with_random_rates(rng, g);
    TargetDynamics t = TargetDynamics::of(sys);
    if (t.map.empty()) continue;
    std::vector<RealizationResult> found = uniqueness_probe(t, UniquenessConstraint::WrDeficiencyZero);
    REQUIRE(found.size() == 1);
    CHECK(canonical_form(*found[0].system) == canonical_form(sys));
    ++tested;
  }
  CHECK(tested >= 10);
}

TEST_CASE("uniqueness probe: distinct WR deficiency-one realizations exist") {
  // collinear one-species target with two interleaved pairings
  MassActionSystem origin = make_system(1, {
                                               {pt({0}), pt({2}), Rat(1)},
                                               {pt({2}), pt({0}), Rat(1, 2)},
                                               {pt({1}), pt({3}), Rat(1, 2)},
                                               {pt({3}), pt({1}), Rat(1)},
                                           });
  TargetDynamics t = TargetDynamics::of(origin);
  std::vector<RealizationResult> found = uniqueness_probe(t, UniquenessConstraint::WrDeficiencyOne);
  size_t type1_two_class = 0;
  for (const RealizationResult& r : found) {
    REQUIRE(r.found);
    CHECK(net_vectors(*r.system).comparison() == t.map);
    StructuralReport rep = structural_report(r.system->network());
    CHECK(rep.weakly_reversible);
    CHECK(rep.deficiency == 1);
    if (classify_deficiency_one(r.system->network()) == DeficiencyOneType::TypeI &&
        rep.classes.size() == 2)
      ++type1_two_class;
  }
  CHECK(type1_two_class >= 2);
}

TEST_CASE("uniqueness probe: square dynamics has both a two-class def-0 and one-class def-1 realization") {
  TargetDynamics t = TargetDynamics::of(square_cycle_system());

  std::vector<RealizationResult> zero = uniqueness_probe(t, UniquenessConstraint::WrDeficiencyZero);
  REQUIRE(zero.size() == 1);
  CHECK(canonical_form(*zero[0].system) == canonical_form(square_diagonal_system()));
  CHECK(linkage_classes(zero[0].system->network()).size() == 2);

  std::vector<RealizationResult> one = uniqueness_probe(t, UniquenessConstraint::WrDeficiencyOne);
  bool single_class_def_one = false;
  for (const RealizationResult& r : one) {
    if (linkage_classes(r.system->network()).size() == 1) single_class_def_one = true;
    CHECK(is_dynamically_equivalent(*r.system, square_cycle_system()).equivalent);
  }
  CHECK(single_class_def_one);

  // equal-subspace lemma across every equivalent WR pair the probe produced
  std::vector<RealizationResult> all = zero;
  all.insert(all.end(), one.begin(), one.end());
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      CHECK(subspaces_equal(stoichiometric_subspace(all[i].system->network()),
                            stoichiometric_subspace(all[j].system->network())));
}

TEST_CASE("padded pools with ghost sources do not change realizability") {
  std::mt19937_64 rng(63);
  NetGenOpts small;
  small.max_species = 2;
  small.max_vertices = 4;
  int tested = 0;
  for (int i = 0; i < 40 && tested < 10; ++i) {
    MassActionSystem sys = with_random_rates(rng, random_wr_network(rng, small));
    TargetDynamics t = TargetDynamics::of(sys);
    if (t.map.empty()) continue;
    std::vector<RatVec> padded = t.sources();
    RatVec pad(sys.network().dim());
    for (auto& c : pad) c = Rat(static_cast<long>(rng() % 5) + 7);
    padded.push_back(pad);
    if (dense_support(t, padded, true).size() > 12) continue;  // desk scale

    for (RealizationProperty p :
         {RealizationProperty::StronglyEndotactic, RealizationProperty::Endotactic,
          RealizationProperty::Consistent, RealizationProperty::Conservative}) {
      RealizationQuery qs;
      qs.target = t;
      qs.property = p;
      RealizationQuery qp = qs;
      qp.pool = padded;
      qp.allow_ghost_sources = true;
      CHECK(find_realization(qs).found == find_realization(qp).found);
    }
    ++tested;
  }
  CHECK(tested >= 5);
}
