#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "simplepaths/simplepaths.h"

namespace {

sp_graph* parse(const std::string& text, int directed, sp_ring ring = SP_RING_BIGINT) {
  sp_graph* g = nullptr;
  EXPECT_EQ(sp_graph_parse(text.data(), text.size(), directed, ring, &g), SP_OK) << sp_last_error();
  return g;
}

std::string take(sp_report* r) {
  std::string s(sp_report_text(r), sp_report_size(r));
  sp_report_free(r);
  return s;
}

}  // namespace

TEST(CApi, ParseAndCount) {
  sp_graph* g = parse("0 1\n1 2\n2 0\n", 1);
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(sp_graph_vertex_count(g), 3u);
  EXPECT_EQ(sp_graph_arc_count(g), 3u);
  sp_options o;
  sp_options_init(&o);
  o.timing = 0;
  sp_report* r = nullptr;
  ASSERT_EQ(sp_count(g, &o, &r), SP_OK);
  auto text = take(r);
  EXPECT_NE(text.find("\"command\": \"count\""), std::string::npos);
  sp_graph_free(g);
}

TEST(CApi, ErrorsAreReported) {
  sp_graph* g = nullptr;
  EXPECT_EQ(sp_graph_parse("0 1\n0 1\n", 8, 1, SP_RING_BIGINT, &g), SP_E_PARSE);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(sp_last_error()).find("line 2"), std::string::npos) << sp_last_error();
  EXPECT_EQ(sp_graph_load("/nonexistent/graph.txt", 1, SP_RING_BIGINT, &g), SP_E_IO);
  EXPECT_EQ(sp_graph_parse(nullptr, 5, 1, SP_RING_BIGINT, &g), SP_E_USAGE);

  sp_graph* w = parse("0 1\n1 2\n", 1, SP_RING_WORD);
  sp_options o;
  sp_options_init(&o);
  sp_report* r = nullptr;
  EXPECT_EQ(sp_hamiltonian(w, &o, &r), SP_E_CAPABILITY);
  EXPECT_EQ(r, nullptr);
  o.max_length = 9;
  EXPECT_EQ(sp_count(w, &o, &r), SP_E_USAGE);
  sp_graph_free(w);
  EXPECT_STREQ(sp_status_name(SP_E_LIMIT), "limit");
  EXPECT_NE(std::string(sp_version()), "");
}

TEST(CApi, BenchMismatchStillReports) {
  sp_graph* g = parse("0 1\n1 2\n2 0\n", 1);
  sp_options o;
  sp_options_init(&o);
  o.timing = 0;
  o.inject_mismatch = 1;
  sp_report* r = nullptr;
  EXPECT_EQ(sp_bench(g, &o, &r), SP_E_MISMATCH);
  ASSERT_NE(r, nullptr);
  EXPECT_NE(take(r).find("\"consistent\": false"), std::string::npos);
  sp_graph_free(g);
}

#ifdef SP_CLI_PATH
namespace {

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args, const std::string& input) {
  const std::string path = ::testing::TempDir() + "sp_cli_input.txt";
  std::ofstream(path) << input;
  const std::string cmd = std::string(SP_CLI_PATH) + " " + args + " --input " + path + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, p)) out.append(buf, k);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, ExitCodes) {
  const std::string tri = "0 1\n1 2\n2 0\n";
  EXPECT_EQ(run_cli("count --directed --no-timing", tri).code, 0);
  EXPECT_EQ(run_cli("count --directed --max-length 7", tri).code, 1);
  EXPECT_EQ(run_cli("count --bogus-flag", tri).code, 1);
  EXPECT_EQ(run_cli("count", "0 1\n0 x\n").code, 2);
  EXPECT_EQ(run_cli("count --method all-subsets --limit-n 2", tri).code, 3);
  EXPECT_EQ(run_cli("hamiltonian --ring word", tri).code, 1);
  EXPECT_EQ(run_cli("bench --inject-mismatch --no-timing", tri).code, 4);
  EXPECT_EQ(run_cli("bench --no-timing", tri).code, 0);
}

TEST(Cli, ConnectedAndAllSubsetsDifferOnlyInRunBlock) {
  const std::string g = "0 1\n1 2\n2 3\n3 0\n0 2\n";
  auto a = run_cli("count --no-timing", g).out;
  auto b = run_cli("count --no-timing --method all-subsets", g).out;
  auto strip = [](const std::string& s) { return s.substr(0, s.find("\"run\"")); };
  EXPECT_EQ(strip(a), strip(b));
  EXPECT_NE(a, b);
  EXPECT_EQ(run_cli("count --no-timing", g).out, a);
}
#endif
