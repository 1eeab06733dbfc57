#include <gtest/gtest.h>

#include "stabdiv/errors.hpp"
#include "stabdiv/job.hpp"

using namespace stabdiv;

namespace {

JobConfig divide_job() {
  JobConfig c;
  c.task = "divide";
  c.variables = {"x", "y"};
  c.order = "grlex:x>y";
  c.generators = {"x^2+2xy", "y^2"};
  c.dividend = "x^5";
  return c;
}

TEST(JobConfig, JsonRoundTrip) {
  JobConfig c = divide_job();
  c.window_start = 4;
  c.tolerance = 1e-7;
  c.schatten_p = 1.5;
  const nlohmann::json j = c;
  EXPECT_EQ(j.get<JobConfig>(), c);
  const JobConfig back = nlohmann::json::parse(j.dump()).get<JobConfig>();
  EXPECT_EQ(back, c);
}

TEST(JobConfig, UnknownKeysRejected) {
  nlohmann::json j = divide_job();
  j["colour"] = "blue";
  EXPECT_THROW(j.get<JobConfig>(), ValidationError);
}

TEST(JobConfig, Validation) {
  EXPECT_NO_THROW(validate(divide_job()));
  auto bad = divide_job();
  bad.task = "factor";
  EXPECT_THROW(validate(bad), ValidationError);
  bad = divide_job();
  bad.strategy = "GREEDY";
  EXPECT_THROW(validate(bad), ValidationError);
  bad = divide_job();
  bad.dividend.clear();
  EXPECT_THROW(validate(bad), ValidationError);
  bad = divide_job();
  bad.task = "stability-scan";
  bad.degree_min = 5;
  bad.degree_max = 3;
  EXPECT_THROW(validate(bad), ValidationError);
}

TEST(RunJob, ExitCodes) {
  EXPECT_EQ(run_job(divide_job()).code, ExitCode::ok);

  auto parse_fail = divide_job();
  parse_fail.generators = {"x^"};
  const auto out = run_job(parse_fail);
  EXPECT_EQ(out.code, ExitCode::parse);
  EXPECT_NE(out.message.find("column"), std::string::npos);

  auto usage = divide_job();
  usage.order = "grlex:x>z";
  EXPECT_EQ(run_job(usage).code, ExitCode::usage);
}

TEST(RunJob, DivideIsDeterministic) {
  const auto a = run_job(divide_job());
  const auto b = run_job(divide_job());
  ASSERT_EQ(a.code, ExitCode::ok);
  EXPECT_EQ(a.files, b.files);
  ASSERT_TRUE(a.files.count("trace.jsonl"));
  const auto& trace = a.files.at("trace.jsonl");
  const auto first = nlohmann::json::parse(trace.substr(0, trace.find('\n')));
  EXPECT_EQ(first.at("step"), 1);
  EXPECT_EQ(first.at("divisor"), 1);
  const auto result = nlohmann::json::parse(a.files.at("result.json"));
  EXPECT_EQ(result.at("remainder"), "0");
}

TEST(RunJob, StabilityScanHasPositiveConstants) {
  JobConfig c;
  c.task = "stability-scan";
  c.variables = {"w", "x", "y"};
  c.order = "grlex:x>w>y";
  c.generators = {"x^2+w*y", "y^2"};
  c.degree_min = 4;
  c.degree_max = 9;
  const auto out = run_job(c);
  ASSERT_EQ(out.code, ExitCode::ok) << out.message;
  const std::string& csv = out.files.at("stability.csv");
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("n,dim_module,dim_ambient,c_n", 0), 0u);
  int rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    ASSERT_GE(cells.size(), 4u);
    EXPECT_GT(std::stod(cells[3]), 0.0);
    ++rows;
  }
  EXPECT_EQ(rows, 6);
}

TEST(RunJob, HilbertAndGroebner) {
  JobConfig c;
  c.task = "hilbert";
  c.variables = {"x", "y"};
  c.generators = {"x"};
  const auto out = run_job(c);
  ASSERT_EQ(out.code, ExitCode::ok) << out.message;
  EXPECT_EQ(nlohmann::json::parse(out.files.at("hilbert.json")).at("dimension"), 1);

  c.task = "groebner";
  c.generators = {"x^2+w*y", "y^2"};
  c.variables = {"w", "x", "y"};
  c.order = "lex:w>x>y";
  const auto gb = run_job(c);
  ASSERT_EQ(gb.code, ExitCode::ok) << gb.message;
  EXPECT_EQ(gb.files.at("basis.txt"), "w*y + x^2\nx^4\nx^2*y\ny^2\n");
}

}  // namespace
