#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "pca/config_space.hpp"
#include "pca/report.hpp"

namespace pca {
namespace {

using nlohmann::json;

TEST(Format, Numbers) {
  EXPECT_EQ(format_number(0.1875), "0.1875");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
  EXPECT_EQ(format_number(make_rational(6, 32)), "3/16");
  EXPECT_EQ(format_number(Rational(2)), "2/1");
}

TEST(Report, FdRows) {
  std::ostringstream os;
  write_fd_header(os);
  FluxPoint p;
  p.model = Model::Pbca;
  p.length = 4;
  p.alpha = 0.5;
  p.rho = 0.5;
  p.flux = 0.1875;
  p.provenance = Provenance::ClosedForm;
  write_fd_row(os, p);
  p.length = 0;
  p.provenance = Provenance::Limit;
  write_fd_row(os, p);
  EXPECT_EQ(os.str(),
            "model,L,alpha,beta,rho,rhoA,rhoB,flux,provenance\n"
            "pbca,4,0.5,0.0,0.5,0.0,0.0,0.1875,closed-form\n"
            "pbca,inf,0.5,0.0,0.5,0.0,0.0,0.1875,limit\n");
}

TEST(Report, MatrixAndStationaryCsv) {
  auto space = std::make_shared<const ConfigSpace>(enumerate_binary(4, 2));
  const auto mat = build_matrix(space, RationalParams{Model::Pbca, make_rational(1, 2), 0});
  std::ostringstream os;
  write_matrix_csv(os, mat);
  const auto text = os.str();
  EXPECT_EQ(text.rfind("row,col,prob\n0,0,1/2\n0,5,1/2\n", 0), 0u);
  std::ostringstream st;
  write_stationary_csv(st, mat.labels, stationary(mat).probabilities);
  EXPECT_EQ(st.str(),
            "state,probability\n0011,1/8\n0110,1/8\n1100,1/8\n1001,1/8\n0101,1/4\n1010,1/4\n");
}

TEST(Report, SimStatsJson) {
  RunOptions o;
  o.steps = 100;
  o.seed = 4;
  const auto s = run(RingConfig::parse("A0B000"), {Model::Epbca2, 0.5, 0.25}, o);
  const auto j = json::parse(sim_stats_json(s));
  EXPECT_EQ(j["model"], "epbca2");
  EXPECT_EQ(j["L"], 6);
  EXPECT_EQ(j["mA"], 1);
  EXPECT_EQ(j["mB"], 1);
  EXPECT_FALSE(j.contains("m"));
  EXPECT_EQ(j["steps"], 100);
  EXPECT_EQ(j["burn_in"], 0);
  EXPECT_EQ(j["moves"], s.total_moves);
  for (const char* k : {"alpha", "beta", "seed", "flux", "flux_std_error", "density"})
    EXPECT_TRUE(j.contains(k)) << k;
}

TEST(Report, VerificationJson) {
  VerificationReport r;
  r.model = Model::Epbca1;
  r.length = 8;
  r.m = 4;
  r.alpha = 0.3;
  r.beta = 0.6;
  r.states = 70;
  r.argmax_state = "00001111";
  const auto j = json::parse(verification_json({r}));
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0]["counts"]["m"], 4);
  EXPECT_EQ(j[0]["params"]["beta"], 0.6);
  EXPECT_EQ(j[0]["argmax_state"], "00001111");
  EXPECT_FALSE(j[0].contains("exact_match"));
}

}  // namespace
}  // namespace pca
