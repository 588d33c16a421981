#include "doctest.h"

#include "test_support.hpp"
#include "torusbt/error.hpp"
#include "torusbt/manifest.hpp"
#include "torusbt/report.hpp"

#include <filesystem>
#include <fstream>

using namespace torusbt;
using support::class_of_order;

namespace {

Rational predicted(const std::string& name) {
  const auto& fx = fixture(name);
  auto report = btc_predict(fx.lattice, fx.realization, {}, std::nullopt, fx.presentation);
  REQUIRE(report.predicted.has_value());
  return *report.predicted;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::OracleMismatch;
}

nlohmann::json strip_timestamp(nlohmann::json j) {
  j.erase("generated_at");
  return j;
}

}  // namespace

TEST_CASE("predictions for the catalog") {
  CHECK(predicted("gm_q") == 2);
  CHECK(predicted("res_sqrt5") == 4);
  CHECK(predicted("normone_5") == 4);
  CHECK(predicted("res_sqrt2") == 4);
  CHECK(predicted("dual_normone_v4") == 112);
  CHECK(predicted("res_cubic7") == 8);
  auto gm = btc_predict(fixture("gm_q").lattice, fixture("gm_q").realization);
  CHECK(gm.lvalue->value == make_rational(-1, 12));
  CHECK(gm.w->total == 24);
  CHECK(gm.two_defect_rank == 1);
  CHECK(gm.motivic.verdict == MotivicVerdict::YesMetaCyclic);
}

TEST_CASE("prediction for the dual norm-one torus uses the presentation certificate") {
  const auto& fx = fixture("dual_normone_v4");
  auto report = btc_predict(fx.lattice, fx.realization, {}, std::nullopt, fx.presentation);
  CHECK(report.motivic.verdict == MotivicVerdict::YesInvertibleCertificate);
  CHECK(report.motivic.certificate_source == "presentation");
}

TEST_CASE("prediction without realization or with an imaginary field") {
  const auto& s3 = fixture("s3_standard");
  auto report = btc_predict(s3.lattice, std::nullopt);
  CHECK_FALSE(report.predicted.has_value());
  CHECK_FALSE(report.warnings.empty());
  auto c4 = make_group(cyclic_group(4));
  auto imag = AbelianRealization::create(c4, 5, {{2, 1}});
  auto r = btc_predict(support::regular(c4), imag);
  CHECK_FALSE(r.totally_real);
  CHECK_FALSE(r.predicted.has_value());
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("odd parts") {
  CHECK(odd_part(make_rational(24, 5)) == make_rational(3, 5));
  CHECK(odd_part(Rational(-8)) == -1);
}

TEST_CASE("isogeny invariance") {
  const auto& r = *fixture("res_sqrt5").realization;
  auto c2 = r.group();
  auto z = GLattice::trivial(c2);
  auto zm = sign_lattice(c2, {1, -1});
  auto same = isogeny_invariance_check(zm, zm, r);
  CHECK(same.ratio == 1);
  CHECK(same.pass);
  auto c = isogeny_invariance_check(direct_sum(zm, z), support::regular(c2), r);
  CHECK(c.predicted_first == 8);
  CHECK(c.predicted_second == 4);
  CHECK(c.ratio == 2);
  CHECK(c.two_exponent == 1);
  CHECK(c.pass);
  CHECK(c.odd_parts_equal);
  CHECK(code_of([&] { isogeny_invariance_check(z, zm, r); }) == ErrorCode::CharacterMismatch);
}

TEST_CASE("isogeny invariance for character-equal V4 lattices") {
  const auto& fx = fixture("dual_normone_v4");
  const auto& r = *fx.realization;
  auto g = fx.group;
  auto c = isogeny_invariance_check(augmentation_ideal(g), norm_quotient(g), r);
  CHECK(c.pass);
  CHECK(c.odd_parts_equal);
}

TEST_CASE("weil restriction matches the subfield prediction") {
  for (const auto& fx : fixture_catalog()) {
    if (!fx.realization || !fx.realization->totally_real()) continue;
    CAPTURE(fx.name);
    for (const auto& h : fx.group->subgroup_classes()) CHECK(weil_restriction_check(h, *fx.realization).pass);
  }
  auto w = weil_restriction_check(fixture("res_sqrt2").group->subgroup_classes().front(), *fixture("res_sqrt2").realization);
  CHECK(w.zeta == make_rational(1, 12));
  CHECK(w.w2 == 48);
  CHECK(w.predicted == 4);
}

TEST_CASE("local tables skip bad primes") {
  auto rows = local_table(fixture("res_sqrt5").lattice, *fixture("res_sqrt5").realization, 13);
  std::vector<long> primes;
  for (const auto& row : rows) primes.push_back(row.ell.get_si());
  CHECK(primes == std::vector<long>{2, 3, 7, 11, 13});
}

TEST_CASE("fixture catalog") {
  CHECK(fixture_catalog().size() >= 10);
  CHECK(code_of([] { fixture("no_such_fixture"); }) == ErrorCode::InvalidArgument);
  for (const auto& fx : fixture_catalog()) {
    CAPTURE(fx.name);
    CHECK_NOTHROW(validate(fx.lattice));
    CHECK(fx.lattice.group() == fx.group);
  }
}

TEST_CASE("manifest parsing") {
  auto m = parse_manifest(R"(
# comment
[group]
generators = [[1, 0]]
[lattice]
rank = 1; action.0 = [[-1]]
[realization]
modulus = 5
images = {2: "g0"}
[run]
commands = ["predict", "lvalue"]
)");
  CHECK(m.commands == std::vector<std::string>{"predict", "lvalue"});
  auto in = build_inputs(m);
  CHECK(in.group->order() == 2);
  CHECK(in.lattice.rank() == 1);
  REQUIRE(in.realization.has_value());
  CHECK(in.realization->modulus() == 5);
  CHECK(code_of([] { parse_manifest("[run]\ncommands = [\"fly\"]\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_manifest("[group]\ngenerators = [[1, 0]\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_manifest("[group]\nbogus = 1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_manifest("[nowhere]\nx = 1\n"); }) == ErrorCode::ParseError);
  try {
    parse_manifest("[group]\n\nbogus = 1\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("group words") {
  auto g = make_group(dihedral_group(4));
  CHECK(parse_group_word(*g, "e") == g->identity());
  CHECK(parse_group_word(*g, "g0^4") == g->identity());
  CHECK(parse_group_word(*g, "g0*g1") == g->multiply(g->generators()[0], g->generators()[1]));
  CHECK(code_of([&] { parse_group_word(*g, "g7"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("manifest report for the G_m fixture") {
  auto m = fixture_manifest("gm_q");
  auto report = run_manifest(m, {"predict"});
  CHECK(report["schema_version"] == kSchemaVersion);
  CHECK(report["results"][0]["status"] == "ok");
  CHECK(report["results"][0]["result"]["predicted_kt_order"] == "2");
}

TEST_CASE("per-command errors are embedded") {
  auto m = parse_manifest(R"(
[group]
builtin = "C2"
[lattice]
rank = 1; action.0 = [[-1]]
[realization]
modulus = 8
images = {3: "g0"}
)");
  auto report = run_manifest(m, {"resolve", "predict"});
  CHECK(report["results"][0]["status"] == "ok");
  CHECK(report["results"][1]["status"] == "error");
  CHECK(report["results"][1]["error"]["code"] == "IncompleteRealization");
}

TEST_CASE("cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / "torusbt_test_cache";
  std::filesystem::remove_all(dir);
  auto m = fixture_manifest("res_sqrt5");
  m.cache_dir = dir.string();
  auto first = run_manifest(m, {"predict", "wgroup"});
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 2);
  auto second = run_manifest(m, {"predict", "wgroup"});
  CHECK(render_report(strip_timestamp(first)) == render_report(strip_timestamp(second)));
  std::filesystem::remove_all(dir);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
