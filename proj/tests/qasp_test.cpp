#include "doctest.h"
#include "qep/parser.hpp"
#include "qep/qasp.hpp"
#include "qep/render.hpp"
#include "support/corpus.hpp"

namespace qep {
namespace {

constexpr Truth O = Truth::zero;
constexpr Truth I = Truth::one;

QbfPolicy lam() { return QbfPolicy::leaf(); }
QbfPolicy yz(Truth y, Truth z) {
  return QbfPolicy::exists(Atom("y"), y, QbfPolicy::exists(Atom("z"), z, lam()));
}

QuantifiedTheory difference() {
  return parse_theory("forall x. exists y. exists z. z -> x. ~z -> y. ~y -> z.");
}

const QbfPolicy kFig2a = QbfPolicy::forall(Atom("x"), yz(I, O), yz(O, I));
const QbfPolicy kFig2b = QbfPolicy::forall(Atom("x"), yz(I, O), yz(I, O));

TEST_CASE("augmentations") {
  Atom x("x");
  CHECK(positive_augmentation(x, SemanticsKind::fandinno) == parse_formula("~~x"));
  CHECK(positive_augmentation(x, SemanticsKind::stephan) == parse_formula("x"));
  CHECK(negative_augmentation(x) == parse_formula("~x"));
  auto t = parse_theory("exists x. forall z. x | z.");
  Theory g = augment(t, Interp3{{x, I}, {Atom("z"), O}}, SemanticsKind::fandinno);
  REQUIRE(g.size() == 3);
  CHECK(g[1] == parse_formula("~~x"));
  CHECK(g[2] == parse_formula("~z"));
}

TEST_CASE("the difference theory is satisfiable under both semantics") {
  CHECK(sat_qasp(difference(), SemanticsKind::fandinno));
  CHECK(sat_qasp(difference(), SemanticsKind::stephan));
}

TEST_CASE("the two semantics accept different policies") {
  auto t = difference();
  CHECK(accepts(kFig2a, t, SemanticsKind::fandinno));
  CHECK(accepts(kFig2a, t, SemanticsKind::stephan));
  CHECK(accepts(kFig2b, t, SemanticsKind::stephan));
  CHECK_FALSE(accepts(kFig2b, t, SemanticsKind::fandinno));
  auto fandinno = accepted_policies(t, SemanticsKind::fandinno);
  auto stephan = accepted_policies(t, SemanticsKind::stephan);
  CHECK(fandinno.contains(kFig2a));
  CHECK_FALSE(fandinno.contains(kFig2b));
  CHECK(stephan.contains(kFig2b));
  CHECK_THROWS_AS(accepts(lam(), t, SemanticsKind::stephan), PolicyShapeError);
}

TEST_CASE("accepted policies are exactly the accepting members of the universe") {
  auto t = difference();
  for (auto kind : {SemanticsKind::fandinno, SemanticsKind::stephan}) {
    QbfPolicySet expected;
    for (const auto& p : enumerate_policies<Branching::binary>(t.binder)) {
      if (accepts(p, t, kind)) expected.insert(p);
    }
    CHECK(accepted_policies(t, kind) == expected);
  }
}

TEST_CASE("trivial theories") {
  auto all_x = parse_theory("forall x. x.");
  CHECK_FALSE(sat_qasp(all_x, SemanticsKind::fandinno));
  CHECK_FALSE(sat_qasp(all_x, SemanticsKind::stephan));
  auto some_x = parse_theory("exists x. x.");
  QbfPolicy one = QbfPolicy::exists(Atom("x"), I, lam());
  CHECK(accepted_policies(some_x, SemanticsKind::fandinno) == QbfPolicySet{one});
  CHECK(accepted_policies(some_x, SemanticsKind::stephan) == QbfPolicySet{one});
  auto excluded_middle = parse_theory("forall x. x | ~x.");
  QbfPolicy both = QbfPolicy::forall(Atom("x"), lam(), lam());
  CHECK(accepted_policies(excluded_middle, SemanticsKind::fandinno) == QbfPolicySet{both});
  CHECK(accepted_policies(excluded_middle, SemanticsKind::stephan) == QbfPolicySet{both});
  auto empty = parse_theory("x | ~x.", ParseOptions{.allow_free = true});
  CHECK(sat_qasp(empty, SemanticsKind::stephan));
  CHECK(accepted_policies(empty, SemanticsKind::stephan) == QbfPolicySet{lam()});
}

TEST_CASE("comparison report") {
  auto report = compare_semantics(difference());
  CHECK(report.fandinno_sat);
  CHECK(report.stephan_sat);
  CHECK(report.diverges());
  CHECK(report.only_stephan.contains(kFig2b));
  auto json = to_json(report);
  CHECK(json["fandinno"]["sat"] == true);
  CHECK(json["only_stephan"].size() == report.only_stephan.size());
  CHECK(json.begin().key() == "fandinno");

  auto same = compare_semantics(parse_theory("exists x. x."));
  CHECK_FALSE(same.diverges());
  auto unsat = compare_semantics(parse_theory("forall x. x."));
  CHECK_FALSE(unsat.diverges());
  CHECK_FALSE(unsat.fandinno_sat);
}

TEST_CASE("satisfiable under fandinno implies satisfiable under stephan on the corpus") {
  for (const auto& t : testing::differential_corpus()) {
    bool f = sat_qasp(t, SemanticsKind::fandinno);
    bool s = sat_qasp(t, SemanticsKind::stephan);
    INFO(to_string(t));
    CHECK((!f || s));
    CHECK(f == !accepted_policies(t, SemanticsKind::fandinno).empty());
    CHECK(s == !accepted_policies(t, SemanticsKind::stephan).empty());
  }
}

TEST_CASE("leaf models under ~~x augmentation survive the fact augmentation") {
  for (const auto& t : testing::differential_corpus()) {
    AtomSet domain = answer_set_domain(t);
    std::vector<Atom> bound;
    for (const auto& e : t.binder) bound.push_back(e.atom);
    for_each_assignment(bound, kBinaryValues, Interp3{}, [&](const Interp3& choice) {
      auto weak = equilibrium_models(augment(t, choice, SemanticsKind::fandinno), domain);
      auto strong = equilibrium_models(augment(t, choice, SemanticsKind::stephan), domain);
      for (const auto& m : weak) CHECK(strong.contains(m));
    });
  }
}

TEST_CASE("caps") {
  Limits tight;
  tight.binder = 2;
  CHECK_THROWS_AS(sat_qasp(difference(), SemanticsKind::fandinno, tight), CapExceeded);
}

}  // namespace
}  // namespace qep
