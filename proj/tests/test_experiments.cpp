#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ffg/error.hpp"
#include "ffg/experiments.hpp"
#include "ffg/farey.hpp"
#include "oracles.hpp"

using namespace ffg;

namespace {

Word w2(const char* s) { return parse_word(s, 2); }

// Keys and value types, with arrays reduced to their first element.
Json shape(const Json& j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (const auto& [k, v] : j.items()) out[k] = shape(v);
    return out;
  }
  if (j.is_array()) return j.empty() ? Json::array() : Json::array({shape(j.front())});
  if (j.is_boolean()) return "bool";
  if (j.is_number_float()) return "float";
  if (j.is_number()) return "int";
  if (j.is_string()) return "string";
  return "null";
}

// Record shapes vary (error fields, skipped trials), so only the top level
// and summary are pinned.
Json report_shape(const ExperimentReport& r) {
  Json j = r.to_json();
  Json out = shape(j);
  out["records"] = Json::array();
  out["summary"] = shape(j["summary"]);
  if (j["summary"].contains("grid")) out["summary"]["grid"] = Json::array();
  if (j["summary"].contains("envelope")) out["summary"]["envelope"] = "object";
  if (j["summary"].contains("last_rise")) out["summary"]["last_rise"] = "object";
  if (j["summary"].contains("running_max_at")) out["summary"]["running_max_at"] = "object";
  return out;
}

}  // namespace

TEST_CASE("trial streams are independent and reproducible") {
  auto a = trial_rng(1, 0);
  auto b = trial_rng(1, 0);
  auto c = trial_rng(1, 1);
  auto d = trial_rng(2, 0);
  const auto va = a();
  CHECK(va == b());
  CHECK(va != c());
  CHECK(va != d());
}

TEST_CASE("zero trials give an empty report") {
  const auto b = default_boundary(2);
  for (const auto& r : {exp_lipschitz(b, 0, 1), exp_cancellation(b, 0, 1), exp_basis_change(b, 0, 1)}) {
    CHECK(r.records.empty());
    CHECK(r.violations == 0);
  }
  const auto f = exp_fzero_fiber(b, w2("x"), 1, 0);
  CHECK(f.records.empty());
}

TEST_CASE("small lipschitz runs") {
  for (int n : {2, 3}) {
    const auto r = exp_lipschitz(default_boundary(n), 60, 7);
    CHECK(r.records.size() == 60);
    CHECK(r.violations == 0);
    CHECK(r.summary["errors"] == 0);
    CHECK(r.summary["max_delta"].get<long>() <= (n == 2 ? 2 : 1));
    CHECK(r.parameters["bound"] == (n == 2 ? 2 : 1));
  }
}

TEST_CASE("cancellation examples") {
  const auto b = default_boundary(2);
  auto c = check_cancellation(b, w2("x"));
  CHECK(c.retained);
  CHECK(c.index == 3);
  CHECK(c.reduced_length == 25);
  c = check_cancellation(b, w2("yxY"));
  CHECK(c.retained);
  CHECK(c.index >= 1);
  const auto r = exp_cancellation(b, 50, 3);
  CHECK(r.violations == 0);
  CHECK(r.summary["tested"].get<long>() + r.caveats["skipped_trials"].get<long>() == 50);
  CHECK(exp_cancellation(default_boundary(3), 30, 3).violations == 0);
}

TEST_CASE("zero fiber examples") {
  const auto b = default_boundary(2);
  const auto r = exp_fzero_fiber(b, w2("x"), -10, 10);
  CHECK(r.records.size() == 21);
  CHECK(r.violations == 0);
  CHECK(r.summary["zero_fiber_size"].get<long>() <= 3);
  CHECK(r.summary["injective_off_zero"] == true);
  for (long k = -10; k <= 10; ++k) {
    const Word w = w2("x").conjugated_by(b.word().power(k));
    CHECK(r.summary["values"][static_cast<std::size_t>(k + 10)] == oracle::brute_b_index(w, b.word()));
  }
  CHECK(r.summary["values"][12] == 2);

  // yxY has index 0 and b yxY b^-1 cancels, so the fiber grows
  const auto s = exp_fzero_fiber(b, w2("yxY"), -10, 10);
  CHECK(s.violations == 0);
  CHECK(s.summary["zero_fiber_size"].get<long>() >= 2);
  CHECK_THROWS_AS(exp_fzero_fiber(b, w2("xx"), 0, 1), DomainError);
}

TEST_CASE("basis change") {
  const auto b = default_boundary(2);
  const Automorphism id = Automorphism::identity(2);
  const auto same = exp_basis_change(b, SecondBasis{{}, id, b.word()}, 30, 1);
  CHECK(same.summary["K"] == 0);

  const Automorphism swap({w2("y"), w2("x")});
  const auto swapped = exp_basis_change(b, SecondBasis{{}, swap, swap(b.word())}, 30, 1);
  CHECK(swapped.summary["K"].get<long>() >= 0);
  CHECK(swapped.violations == 0);

  const SecondBasis basis = find_second_basis(b, 1);
  CHECK(basis.rewritten_b.length() == 4);
  CHECK(basis.beta(b.word()) == basis.rewritten_b);
  CHECK(classify(basis.rewritten_b) == WordClass::Filling);
  const auto r = exp_basis_change(b, basis, 120, 1);
  CHECK(r.summary["running_max_at"].contains("100"));
  CHECK(r.summary["running_max_at"]["120"] == r.summary["K"]);
}

TEST_CASE("boundary automorphism") {
  const auto psi = build_boundary_pA();
  CHECK(psi.phi(w2("x")) == w2("xy"));
  CHECK(psi.phi(w2("y")) == w2("yxy"));
  CHECK(psi.phi(psi.b) == psi.b);
  CHECK(psi.phi.then(psi.inverse) == Automorphism::identity(2));
  CHECK(psi.homology[0][0] == 1);
  CHECK(psi.homology[0][1] == 1);
  CHECK(psi.homology[1][0] == 1);
  CHECK(psi.homology[1][1] == 2);
}

TEST_CASE("explicit paths in AF_2") {
  const auto path = af2_path(w2("x"), w2("y"), w2("xy"), 3);
  REQUIRE(path.has_value());
  CHECK(path->front() == w2("x"));
  CHECK(path->size() == 2);
  for (std::size_t i = 0; i + 1 < path->size(); ++i) CHECK(is_basis_pair((*path)[i], (*path)[i + 1]));
  const auto same = af2_path(w2("x"), w2("y"), w2("X"), 3);
  REQUIRE(same.has_value());
  CHECK(same->size() == 1);
}

TEST_CASE("quasiflat at small radius") {
  const auto r = exp_quasiflat(2, 1);
  const long points = 5 * 5;
  CHECK(r.records.size() == static_cast<std::size_t>(points * (points - 1) / 2));
  CHECK(r.summary["fit_positive"] == true);
  CHECK(r.summary["below_fit"] == 0);
  CHECK(r.summary["pure_psi_increasing"] == true);
  CHECK(r.summary["c0"].is_number());
  CHECK(r.violations == 0);
}

TEST_CASE("displacement stability at radius 0") {
  const auto r = exp_displacement_stability(0, 1);
  CHECK(r.summary["M_A"] == 0);
  CHECK(r.summary["k0_settles_by"] == 0);
  CHECK(r.violations == 0);
  const auto r3 = exp_displacement_stability(3, 1);
  CHECK(r3.violations == 0);
}

TEST_CASE("boundary length") {
  const auto r = exp_boundary_length({2, 3});
  CHECK(r.records.size() == 2);
  CHECK(r.violations == 0);
  CHECK(r.records[0]["minimized_length"] == 4);
  CHECK(r.records[1]["minimized_length"] == 6);
  CHECK(r.records[1]["verdict"] == "Filling");
}

TEST_CASE("reports are deterministic and seed sensitive") {
  const auto b = default_boundary(3);
  CHECK(exp_lipschitz(b, 40, 5).dump() == exp_lipschitz(b, 40, 5).dump());
  CHECK(exp_lipschitz(b, 40, 5).dump() != exp_lipschitz(b, 40, 6).dump());
  CHECK(exp_cancellation(b, 20, 5).dump() == exp_cancellation(b, 20, 5).dump());
  CHECK(exp_quasiflat(2, 5).dump() == exp_quasiflat(2, 5).dump());
}

TEST_CASE("report JSON shape matches the golden file") {
  const auto b = default_boundary(2);
  Json shapes = Json::object();
  for (const auto& r : {exp_lipschitz(b, 5, 1), exp_cancellation(b, 5, 1), exp_fzero_fiber(b, w2("x"), -2, 2),
                        exp_basis_change(b, 5, 1), exp_quasiflat(1, 1), exp_boundary_length({2}),
                        exp_displacement_stability(1, 1)}) {
    shapes[r.name] = report_shape(r);
  }
  const std::string path = std::string(FFG_GOLDEN_DIR) + "/report_shape.json";
  if (std::getenv("FFG_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path) << shapes.dump(2) << "\n";
  }
  std::ifstream in(path);
  REQUIRE(in.good());
  const Json golden = Json::parse(in);
  CHECK(golden == shapes);
  CHECK(exp_lipschitz(b, 1, 1).to_json()["schema_version"] == kReportSchemaVersion);
}

TEST_CASE("CSV export") {
  const auto r = exp_fzero_fiber(default_boundary(2), w2("x"), -2, 2);
  const std::string csv = r.csv();
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "k,value,violation");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 5);
  CHECK(csv.find("\n2,2,false\n") != std::string::npos);

  ExperimentReport q;
  q.add({{"s", "a,b"}, {"violation", true}});
  CHECK(q.violations == 1);
  CHECK(q.csv() == "s,violation\n\"a,b\",true\n");
}
