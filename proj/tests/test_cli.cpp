#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "linkalg/cli.hpp"
#include "linkalg/errors.hpp"

using namespace linkalg;

namespace {

struct Result {
  int code;
  Json json;
  std::string text;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  Result r{code, Json(), out.str()};
  try {
    r.json = Json::parse(out.str());
  } catch (const std::exception&) {
  }
  return r;
}

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, LinkageCheck) {
  auto r = call({"linkage", "check", "--ring", "x,y", "--a", "x", "--b", "y", "--I", "x*y"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json["schema_version"], cli::kSchemaVersion);
  EXPECT_EQ(r.json["linked"], true);
  EXPECT_EQ(r.json["geometric"], true);
  auto z = call({"linkage", "check", "--ring", "x,y", "--a", "x", "--b", "y", "--I", "0", "--module", "x*y"});
  EXPECT_EQ(z.json["linked"], true);
  auto f = call({"linkage", "check", "--ring", "x,y", "--a", "x", "--b", "x", "--I", "x*y"});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.json["linked"], false);
}

TEST(Cli, DepthExample) {
  auto r = call({"depth", "--ring", "a,b,c,d", "--ideal", "a*c,a*d,b*c,b*d"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json["depth"], 1);
  EXPECT_EQ(r.json["dim"], 2);
  EXPECT_EQ(r.json["cm"], false);
}

TEST(Cli, AlgebraCommands) {
  EXPECT_EQ(call({"member", "--ring", "x,y", "--ideal", "x^2, y", "--poly", "x^2*y + y^3"}).json["member"], true);
  EXPECT_EQ(call({"colon", "--ring", "x,y", "--ideal", "x^2, y", "--by", "x, y"}).json["colon"], Json({"y", "x"}));
  EXPECT_EQ(call({"ass", "--ring", "x,y", "--ideal", "x^2, x*y"}).json["ass"], Json::parse(R"([["x"],["x","y"]])"));
  EXPECT_EQ(call({"radical", "--ring", "x,y", "--ideal", "x^2*y^3"}).json["radical"], Json({"x*y"}));
  EXPECT_EQ(call({"decompose", "--ring", "x,y", "--ideal", "x^2, x*y"}).json["components"].size(), 2u);
  auto e = call({"eliminate", "--ring", "t,x,y", "--ideal", "x - t^2, y - t^3", "--vars", "t"});
  EXPECT_EQ(e.json["elimination"], Json({"x^3 - y^2"}));
  EXPECT_EQ(call({"grade", "--ring", "x,y", "--a", "x, y", "--module", "x*y"}).json["grade"], 1);
  auto rs = call({"regseq", "--ring", "x,y,z", "--seq", "x, y*(1-x), z*(1-x)", "--all-permutations"});
  EXPECT_EQ(rs.json["regular"], true);
  EXPECT_EQ(rs.json["permutation_consistent"], false);
  EXPECT_EQ(call({"att-top", "--ring", "x,y", "--a", "x", "--module", "x*y"}).json["att"], Json::parse(R"([["y"]])"));
  EXPECT_EQ(call({"htm", "--ring", "x,y", "--prime", "x,y", "--module", "x*y"}).json["ht"], 1);
  EXPECT_EQ(call({"ext1", "--ring", "x,y", "--a", "x", "--module", "x*y"}).json["zero"], true);
  EXPECT_EQ(call({"assmember", "--ring", "x", "--prime", "x", "--module", "x^2", "--ext", "x"}).json["member"], true);
  EXPECT_EQ(call({"cd", "--ring", "a,b,c,d", "--ideal", "a*c,a*d,b*c,b*d"}).json["cd"], 3);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, 1);
  EXPECT_EQ(call({"frobnicate"}).code, 1);
  EXPECT_EQ(call({"gb", "--ideal", "x"}).code, 1);
  auto bad = call({"gb", "--ring", "x", "--ideal", "x+*"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.json["error"]["kind"], "input");
  EXPECT_EQ(call({"ass", "--ring", "x,y", "--ideal", "x+y"}).code, 1);
  auto budget = call({"gb", "--ring", "x,y,z,w", "--ideal", "x^3-y*z*w, y^3-x*z^2, z^3-x^2*w, w^3-x*y^2", "--max-spairs", "2"});
  EXPECT_EQ(budget.code, 2);
  EXPECT_EQ(budget.json["error"]["kind"], "budget");
  EXPECT_EQ(call({"verify", "nonsense"}).code, 1);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, VerifyIsStable) {
  std::vector<std::string> args{"verify", "l08", "--random", "30", "--vars", "3", "--maxdeg", "2", "--seed", "7"};
  auto a = call(args), b = call(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.text, b.text);
  EXPECT_EQ(a.json["passes"], 30);
  args.insert(args.end(), {"--jobs", "4"});
  EXPECT_EQ(call(args).text, a.text);
}

TEST(Session, ParsesAndRuns) {
  const std::string text =
      "# classic pair\n"
      "ring x, y\n"
      "ideal a = x\n"
      "ideal b = y\n"
      "ideal I = x*y\n"
      "ideal Z = 0\n"
      "module F = R\n"
      "module M = R / I\n"
      "task linkage check a b I over F\n"
      "task linkage check a b Z over M   # zero link\n"
      "task depth M\n"
      "task att-top a over M\n";
  auto s = cli::parse_session_text(text);
  EXPECT_EQ(s.vars, (std::vector<std::string>{"x", "y"}));
  ASSERT_EQ(s.tasks.size(), 4u);
  EXPECT_EQ(s.tasks[1].line, 10);
  auto out = cli::run_session(s);
  EXPECT_EQ(out["results"][0]["result"]["linked"], true);
  EXPECT_EQ(out["results"][1]["result"]["linked"], true);
  EXPECT_EQ(out["results"][2]["result"]["depth"], 1);
  EXPECT_EQ(out["results"][3]["line"], 12);

  const std::string canon = cli::emit_session(s);
  EXPECT_EQ(cli::emit_session(cli::parse_session_text(canon)), canon);

  auto path = temp_file("session.txt", text);
  auto r = call({"session", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json["results"].size(), 4u);
  EXPECT_EQ(call({"session", path, "--emit"}).text, canon);
}

TEST(Session, Errors) {
  auto message = [](const std::string& text) {
    try {
      cli::parse_session_text(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_EQ(message("ring x\nmodule M = R / q\n"), "line 2: unknown ideal 'q'");
  EXPECT_EQ(message("ring x\nideal a = x\ntask depth N\n"), "line 3: unknown module 'N'");
  EXPECT_EQ(message("ideal a = x\n"), "line 1: 'ideal' before the ring declaration");
  EXPECT_EQ(message("ring x\nideal a = x\nideal a = x^2\n"), "line 3: name 'a' already defined");
  EXPECT_NE(message("ring x\nideal a = x +\n").find("line 2:"), std::string::npos);
  EXPECT_EQ(message("ring x\nfoo\n"), "line 2: unknown statement 'foo'");
  EXPECT_EQ(message("# nothing\n"), "session has no ring declaration");
  EXPECT_EQ(message("ring x\n"), "");
  EXPECT_EQ(call({"session", "/nonexistent/file"}).code, 1);
}
