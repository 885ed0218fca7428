#include "doctest.h"
#include "qep/oracle.hpp"
#include "qep/parser.hpp"
#include "support/corpus.hpp"

namespace qep {
namespace {

using testing::example_matrix;

constexpr Truth O = Truth::zero;
constexpr Truth I = Truth::one;

QbfPolicy lam() { return QbfPolicy::leaf(); }
QbfPolicy e(const char* a, Truth v, QbfPolicy sub = lam()) {
  return QbfPolicy::exists(Atom(a), v, sub);
}

const Theory kMatrix{example_matrix()};

TEST_CASE("equilibrium configurations") {
  Binder fe = forall("x") + exists("z");
  CHECK(is_equilibrium_configuration({}, QbfPolicy::forall(Atom("x"), e("z", O), e("z", I)), fe,
                                     kMatrix));
  CHECK_FALSE(is_equilibrium_configuration({}, e("x", I, e("z", O)), exists("x") + exists("z"),
                                           kMatrix));
  CHECK_FALSE(is_equilibrium_configuration({}, lam(), Binder{}, {Formula::bot()}));
  CHECK_THROWS_AS(is_equilibrium_configuration({}, lam(), fe, kMatrix), PolicyShapeError);
}

TEST_CASE("oracle on the running example") {
  auto ee = brute_equilibrium_policies(exists("x") + exists("z"), kMatrix);
  CHECK(ee.policies == QbfPolicySet{e("x", O, e("z", O)), e("x", I, e("z", I))});
  CHECK(ee.inspected == 4);
  CHECK(brute_equilibrium_policies(forall("x") + forall("z"), kMatrix).policies.empty());
}

TEST_CASE("oracle on the difference theory inspects the whole universe") {
  auto t = parse_theory("forall x. exists y. exists z. z -> x. ~z -> y. ~y -> z.");
  auto result = brute_equilibrium_policies(t.binder, t.matrix);
  // Four choices for (y, z) on each of the two branches of x.
  CHECK(result.inspected == 16);
  for (const auto& p : result.policies) {
    for (const auto& m : result.witnesses.at(p)) CHECK(is_equilibrium_model(m, t.matrix));
  }
}

TEST_CASE("witnesses and inspected counts across the corpus") {
  for (const auto& t : testing::differential_corpus()) {
    auto result = brute_equilibrium_policies(t.binder, t.matrix);
    CHECK(result.inspected == policy_count(t.binder, Branching::binary));
    AtomSet domain = variables(t, true);
    InterpSet models = equilibrium_models(t.matrix, domain);
    CHECK(result.witnesses.size() == result.policies.size());
    for (const auto& [p, leaves] : result.witnesses) {
      CHECK(result.policies.contains(p));
      CHECK(leaves == members(p, t.binder, {}));
      for (const auto& m : leaves) {
        CHECK(m.is_crisp());
        CHECK(models.contains(m));
      }
      CHECK(is_equilibrium_configuration({}, p, t.binder, t.matrix));
    }
  }
}

TEST_CASE("oracle caps") {
  Limits tight;
  tight.oracle_binder = 1;
  CHECK_THROWS_AS(brute_equilibrium_policies(exists("x") + exists("z"), kMatrix, tight),
                  CapExceeded);
  CHECK_THROWS_AS(brute_equilibrium_policies(exists("x"), kMatrix), UndefinedAtomError);
}

}  // namespace
}  // namespace qep
