#include <algorithm>

#include "doctest.h"
#include "qep/parser.hpp"
#include "qep/policy.hpp"
#include "support/corpus.hpp"

namespace qep {
namespace {

using testing::example_matrix;

constexpr Truth O = Truth::zero;
constexpr Truth H = Truth::half;
constexpr Truth I = Truth::one;

QbfPolicy lam() { return QbfPolicy::leaf(); }
QbfPolicy ez(Truth v) { return QbfPolicy::exists(Atom("z"), v, lam()); }
Qg3Policy gz(Truth v) { return Qg3Policy::exists(Atom("z"), v, Qg3Policy::leaf()); }

const Binder kForallExists = forall("x") + exists("z");

TEST_CASE("conformance") {
  CHECK(conforms(lam(), Binder{}));
  CHECK_FALSE(conforms(QbfPolicy::exists(Atom("x"), O, lam()), forall("x")));
  CHECK(conforms(QbfPolicy::forall(Atom("x"), ez(O), ez(O)), kForallExists));
  CHECK_FALSE(conforms(QbfPolicy::forall(Atom("x"), ez(O), lam()), kForallExists));
  CHECK_FALSE(conforms(lam(), exists("x")));
  CHECK_FALSE(conforms(ez(O), exists("x")));
  CHECK_FALSE(conforms(ez(O), Binder{}));
}

TEST_CASE("binary policies refuse 1/2") {
  CHECK_THROWS_AS(QbfPolicy::exists(Atom("x"), H, lam()), std::invalid_argument);
  CHECK_NOTHROW(Qg3Policy::exists(Atom("x"), H, Qg3Policy::leaf()));
  CHECK_THROWS_AS(QbfPolicy::forall(Atom("x"), {lam()}), std::invalid_argument);
}

TEST_CASE("classical satisfaction of the four forall-exists policies") {
  Theory matrix{example_matrix()};
  QbfPolicy fig_a = QbfPolicy::forall(Atom("x"), ez(O), ez(O));
  QbfPolicy fig_b = QbfPolicy::forall(Atom("x"), ez(O), ez(I));
  CHECK(sat_classical({}, fig_a, kForallExists, matrix));
  CHECK(sat_classical({}, fig_b, kForallExists, matrix));
  CHECK_FALSE(sat_classical({}, QbfPolicy::forall(Atom("x"), ez(I), ez(O)), kForallExists, matrix));
  QbfPolicySet satisfying;
  for (const auto& p : enumerate_policies<Branching::binary>(kForallExists)) {
    if (sat_classical({}, p, kForallExists, matrix)) satisfying.insert(p);
  }
  CHECK(satisfying == QbfPolicySet{fig_a, fig_b});
  CHECK_THROWS_AS(sat_classical({}, ez(O), kForallExists, matrix), PolicyShapeError);
}

TEST_CASE("QG3 satisfaction picks two of the 27 ternary policies") {
  Theory matrix{example_matrix()};
  Atom x("x");
  Qg3Policy fig_a = Qg3Policy::forall(x, gz(O), gz(O), gz(O));
  Qg3Policy fig_b = Qg3Policy::forall(x, gz(O), gz(O), gz(I));
  auto all = enumerate_policies<Branching::ternary>(kForallExists);
  CHECK(all.size() == 27);
  std::set<Qg3Policy> satisfying;
  for (const auto& p : all) {
    if (sat_qg3({}, p, kForallExists, matrix)) satisfying.insert(p);
  }
  CHECK(satisfying == std::set<Qg3Policy>{fig_a, fig_b});
  CHECK_FALSE(sat_qg3({}, Qg3Policy::forall(x, gz(O), gz(H), gz(I)), kForallExists, matrix));
}

TEST_CASE("mixed satisfaction keeps 1/2 in the interpretation") {
  Theory matrix{example_matrix()};
  Atom x("x");
  CHECK(sat_mixed(Interp3{{x, O}}, ez(O), exists("z"), matrix));
  CHECK(sat_mixed(Interp3{{x, I}}, QbfPolicy::forall(Atom("z"), lam(), lam()), forall("z"), matrix));
  // {x=1/2, z=0} is a (non-crisp) model, so the leaf test passes.
  CHECK(sat_mixed(Interp3{{x, H}}, ez(O), exists("z"), matrix));
  CHECK_FALSE(sat_mixed(Interp3{{x, H}}, ez(I), exists("z"), matrix));
}

TEST_CASE("members") {
  Atom x("x"), z("z");
  CHECK(members(ez(O), exists("z"), Interp3{{x, I}}) == InterpSet{Interp3{{x, I}, {z, O}}});
  CHECK(members(QbfPolicy::forall(z, lam(), lam()), forall("z"), Interp3{{x, I}}) ==
        InterpSet{Interp3{{x, I}, {z, O}}, Interp3{{x, I}, {z, I}}});
  CHECK(members(lam(), Binder{}, Interp3{{x, H}}) == InterpSet{Interp3{{x, H}}});
  CHECK(is_member(Interp3{{x, H}, {z, O}}, ez(O), exists("z")));
  CHECK_FALSE(is_member(Interp3{{x, H}, {z, I}}, ez(O), exists("z")));
  CHECK_FALSE(is_member(Interp3{{z, H}}, QbfPolicy::forall(z, lam(), lam()), forall("z")));
  CHECK(is_member(Interp3{{z, H}}, Qg3Policy::forall(z, Qg3Policy::leaf(), Qg3Policy::leaf(),
                                                     Qg3Policy::leaf()),
                  forall("z")));
}

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_policies<Branching::binary>(exists("x")).size() == 2);
  CHECK(enumerate_policies<Branching::binary>(kForallExists).size() == 4);
  CHECK(enumerate_policies<Branching::binary>(Binder{}) == std::vector<QbfPolicy>{lam()});
  CHECK(enumerate_policies<Branching::ternary>(exists("x")).size() == 3);
  Limits tight;
  tight.binder = 1;
  CHECK_THROWS_AS(enumerate_policies<Branching::binary>(kForallExists, tight), CapExceeded);
  CHECK(policy_count(forall("a") + forall("b") + forall("c"), Branching::binary) == 1u);
  CHECK(policy_count(forall("a") + forall("b") + forall("c") + forall("d") + forall("e") +
                         forall("f") + exists("g"),
                     Branching::binary) == std::nullopt);
}

// Size of the policy universe by the recursion over the binder, from the
// innermost entry out.
std::uint64_t closed_form(const Binder& binder, std::uint64_t arity) {
  std::uint64_t n = 1;
  for (auto it = binder.end(); it != binder.begin();) {
    --it;
    std::uint64_t next = it->quantifier == Quantifier::exists ? arity * n : 1;
    if (it->quantifier == Quantifier::forall) {
      for (std::uint64_t k = 0; k < arity; ++k) next *= n;
    }
    n = next;
  }
  return n;
}

TEST_CASE("enumeration is complete, sorted and counted by the closed form") {
  auto abcd = testing::atoms({"a", "b", "c", "d"});
  for (std::size_t len = 0; len <= 4; ++len) {
    std::span<const Atom> prefix(abcd.data(), len);
    for (const auto& binder : testing::all_binders(prefix)) {
      INFO(to_string(binder));
      auto policies = enumerate_policies<Branching::binary>(binder);
      CHECK(policies.size() == closed_form(binder, 2));
      CHECK(policy_count(binder, Branching::binary) == closed_form(binder, 2));
      CHECK(std::adjacent_find(policies.begin(), policies.end(),
                               [](const auto& a, const auto& b) { return !(a < b); }) ==
            policies.end());
      if (len <= 3) {
        auto ternary = enumerate_policies<Branching::ternary>(binder);
        CHECK(ternary.size() == closed_form(binder, 3));
        CHECK(std::is_sorted(ternary.begin(), ternary.end()));
      }
    }
  }
}

TEST_CASE("member counts and leaf distribution") {
  testing::Rng rng(3);
  auto xyz = testing::atoms({"x", "y", "z"});
  for (std::size_t len = 1; len <= 3; ++len) {
    std::span<const Atom> prefix(xyz.data(), len);
    for (const auto& binder : testing::all_binders(prefix)) {
      std::size_t universals = std::count_if(binder.begin(), binder.end(), [](const auto& e) {
        return e.quantifier == Quantifier::forall;
      });
      Theory matrix = testing::random_theory(rng, prefix);
      for (const auto& p : enumerate_policies<Branching::binary>(binder)) {
        auto ms = members(p, binder, {});
        CHECK(ms.size() == (std::size_t{1} << universals));
        for (const auto& m1 : ms) {
          CHECK(m1.size() == len);
          CHECK(is_member(m1, p, binder));
        }
        bool mixed = sat_mixed({}, p, binder, matrix);
        CHECK(mixed == sat_classical({}, p, binder, matrix));
        if (mixed) {
          for (const auto& m1 : ms) CHECK(is_model(m1, matrix));
        }
      }
      for (const auto& p : enumerate_policies<Branching::ternary>(binder)) {
        std::size_t expected = 1;
        for (std::size_t k = 0; k < universals; ++k) expected *= 3;
        CHECK(members(p, binder, {}).size() == expected);
      }
    }
  }
}

TEST_CASE("mixed satisfaction distributes over members under 1/2 conditioning") {
  testing::Rng rng(9);
  auto xyz = testing::atoms({"x", "y", "z"});
  Binder binder = forall("y") + exists("z");
  for (int i = 0; i < 200; ++i) {
    Theory matrix = testing::random_theory(rng, xyz);
    for (Truth v : kTernaryValues) {
      Interp3 m{{Atom("x"), v}};
      for (const auto& p : enumerate_policies<Branching::binary>(binder)) {
        if (!sat_mixed(m, p, binder, matrix)) continue;
        for (const auto& m1 : members(p, binder, m)) CHECK(is_model(m1, matrix));
      }
    }
  }
}

}  // namespace
}  // namespace qep
