#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "qha/io.hpp"

using namespace qha;

TEST_CASE("phase function JSON round trip") {
  const auto model = build_model(ModelKind::SampledLine, 6, 3.0);
  const PhaseFunction f = random_function(model, 1);
  const PhaseFunction back = io::phase_function_from_json(io::to_json(f));
  CHECK(back.model() == model);
  CHECK((back.values() - f.values()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("phase function CSV has one row per lattice point") {
  const auto model = build_model(ModelKind::FiniteCyclic, 3);
  const std::string csv = io::to_csv(constant_function(model, 2.0));
  CHECK(csv.rfind("m,k,x,omega,re,im\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
  CHECK(csv.find("2,1,-1,1,2,0\n") != std::string::npos);
}

TEST_CASE("operator and state JSON round trips") {
  const auto model = build_model(ModelKind::FiniteCyclic, 4);
  const Op a = random_operator(model, 2);
  CHECK(max_abs_diff(io::op_from_json(io::to_json(a), model), a) == 0.0);
  const StateVector v = random_state(model, 3);
  CHECK((io::state_from_json(io::to_json(v), model).values() - v.values()).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(io::op_from_json(io::to_json(a), build_model(ModelKind::FiniteCyclic, 5)), ConfigError);
  CHECK_THROWS_AS(io::op_from_json(nlohmann::json{{"N", 4}}, model), ConfigError);
  CHECK_THROWS_AS(io::state_from_json(nlohmann::json{{"N", 4}, {"re", {1, 2}}}, model), ConfigError);
}

TEST_CASE("report serialization") {
  const VerificationReport r{"commutativity", "FiniteCyclic", 4, 9, "abc", 1e-15, 1e-10, true, 0.5};
  const auto j = io::to_json(r);
  CHECK(j.at("identity") == "commutativity");
  CHECK(j.at("passed") == true);
  CHECK(j.at("N") == 4);

  const auto model = build_model(ModelKind::FiniteCyclic, 4);
  const ZeroSetReport z = zero_set(Op(model), 1e-12);
  const auto jz = io::to_json(z);
  CHECK(jz.at("classification") == "everywhere");
  CHECK(jz.at("zero_points").size() == 16);
  const std::string csv = io::zero_points_csv(z);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
}

TEST_CASE("atomic write replaces the target") {
  const auto dir = std::filesystem::temp_directory_path() / "qha_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.json").string();
  io::atomic_write(path, "first");
  io::atomic_write(path, "{\"x\": 1}");
  CHECK(io::read_json_file(path).at("x") == 1);
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  std::ofstream(dir / "bad.json") << "{not json";
  CHECK_THROWS_AS(io::read_json_file((dir / "bad.json").string()), ConfigError);
  CHECK_THROWS_AS(io::read_json_file((dir / "missing.json").string()), ConfigError);
  std::filesystem::remove_all(dir);
}
