#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kindex_cli/app.hpp"
#include "kindex_cli/gallery.hpp"
#include "kindex_cli/report.hpp"

namespace kindex::cli {
namespace {

Outcome json_run(std::vector<std::string> args) {
  args.emplace_back("--format");
  args.emplace_back("json");
  return run(args);
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("kindex_cli_test_" + name);
  std::ofstream(p) << content;
  return p;
}

TEST(Cli, DolbeaultOnGenusThree) {
  const Outcome o = json_run({"index", "dolbeault", "--space", "riemann_surface", "--genus", "3"});
  EXPECT_EQ(o.exit_code, kExitOk);
  EXPECT_EQ(o.report.at("result").at("value"), "-2");
  EXPECT_EQ(o.report.at("command"), "index dolbeault");
}

TEST(Cli, CircleIndexOfSquare) {
  const Outcome o = json_run({"circle", "index", "--symbol", "z^2"});
  EXPECT_EQ(o.exit_code, kExitOk);
  EXPECT_EQ(o.report.at("result").at("value"), "-2");
}

TEST(Cli, AhssOnRealProjectiveFive) {
  const Outcome o = json_run({"ahss", "run", "--space", "rp", "--n", "5"});
  ASSERT_EQ(o.exit_code, kExitOk);
  const Json& r = o.report.at("result");
  EXPECT_EQ(r.at("extension_ambiguous"), true);
  EXPECT_EQ(r.at("k0_pieces"), "Z + Z/2 + Z/2");
  EXPECT_EQ(r.at("k1_pieces"), "Z");
  EXPECT_EQ(r.at("known_answer").at("k0").at("text"), "Z + Z/4");
}

TEST(Cli, ExactNumbersAreStrings) {
  const Outcome o = json_run({"alg", "todd-series", "--order", "6"});
  ASSERT_EQ(o.exit_code, kExitOk);
  const std::string text = render(o);
  EXPECT_NE(text.find("\"-1/720\""), std::string::npos);
  std::function<void(const Json&)> walk = [&](const Json& j) {
    EXPECT_FALSE(j.is_number_float()) << j.dump();
    if (j.is_structured()) {
      for (const auto& v : j) walk(v);
    }
  };
  walk(o.report);
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  const std::vector<std::vector<std::string>> commands{
      {"index", "dolbeault", "--space", "cp", "--n", "2"},
      {"circle", "winding", "--symbol", "2 + z"},
      {"ahss", "run", "--space", "rp", "--n", "4"},
      {"rep", "induce", "--embedding", "z2_in_z4", "--x", "w0"},
      {"charclass", "todd", "--space", "cp", "--n", "3", "--roots", "x,x"},
      {"rep", "homogeneous", "--symbol", "i xi"},
      {"gallery", "--module", "repring"},
  };
  for (const auto& c : commands) {
    const Outcome o = json_run(c);
    ASSERT_EQ(o.exit_code, kExitOk) << c[0] << " " << c[1] << "\n" << render(o);
    const std::string once = render(o);
    Outcome again = o;
    again.report = Json::parse(once);
    EXPECT_EQ(render(again), once);
    EXPECT_EQ(again.report, o.report);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(json_run({"circle", "index", "--symbol", "z-1"}).exit_code, kExitDomain);
  EXPECT_EQ(json_run({"circle", "index", "--symbol", "z-1"}).report.at("error").at("code"), "SymbolVanishesOnCircle");
  EXPECT_EQ(json_run({"circle", "foo"}).exit_code, kExitParse);
  EXPECT_EQ(json_run({"circle", "foo"}).report.at("error").at("code"), "UnknownCommand");
  EXPECT_EQ(json_run({"nonsense"}).exit_code, kExitParse);
  EXPECT_EQ(json_run({"circle", "index", "--symbol", "z +"}).exit_code, kExitParse);
  EXPECT_EQ(json_run({"index", "odd", "--dim", "2"}).report.at("error").at("code"), "DimensionNotOdd");
  EXPECT_EQ(json_run({"index", "odd", "--dim", "2"}).exit_code, kExitDomain);
  EXPECT_EQ(json_run({"rep", "induce", "--embedding", "z3_in_circle", "--x", "w1"}).report.at("error").at("code"),
            "InfiniteSupport");
}

TEST(Cli, MalformedFileReportsLine) {
  const auto p = temp_file("bad.json", "{\n  \"cells\": [1, 0,\n}\n");
  const Outcome o = json_run({"ahss", "run", "--file", p.string()});
  EXPECT_EQ(o.exit_code, kExitParse);
  EXPECT_EQ(o.report.at("error").at("code"), "ParseError");
  const std::string msg = o.report.at("error").at("message");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  std::filesystem::remove(p);
}

TEST(Cli, CwFromFile) {
  const auto p = temp_file("rp2.json",
                           R"({"name": "rp2", "cells": [1, 1, 1], "coboundaries": [[[0]], [[2]]]})");
  const Outcome o = json_run({"ahss", "run", "--file", p.string()});
  ASSERT_EQ(o.exit_code, kExitOk) << render(o);
  EXPECT_EQ(o.report.at("result").at("k0_pieces"), "Z + Z/2");
  std::filesystem::remove(p);
}

TEST(Cli, GroupFromFile) {
  const auto p = temp_file("z2.json", R"({"name": "c2", "classes": [{"name": "e", "size": 1, "order": 1},
      {"name": "g", "size": 1, "order": 2}], "irreps": ["one", "sgn"], "table": [["1", "1"], ["1", "-1"]]})");
  const Outcome o = json_run({"rep", "inner", "--file", p.string(), "--x", "one + sgn", "--y", "one + sgn"});
  ASSERT_EQ(o.exit_code, kExitOk) << render(o);
  EXPECT_EQ(o.report.at("result").at("value"), "2");
  std::filesystem::remove(p);
}

TEST(Cli, OutputFlagWritesFile) {
  const auto p = std::filesystem::temp_directory_path() / "kindex_cli_test_out.json";
  std::filesystem::remove(p);
  const Outcome o = json_run({"ks2", "alpha", "--class", "b", "--output", p.string()});
  ASSERT_TRUE(o.output.has_value());
  EXPECT_EQ(*o.output, p.string());
  std::ofstream(p) << render(o);
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(Json::parse(ss.str()).at("result").at("value"), "1");
  std::filesystem::remove(p);
}

TEST(Cli, TableFormat) {
  const Outcome o = run({"index", "dolbeault", "--space", "cp", "--n", "2"});
  EXPECT_EQ(o.format, "table");
  const std::string text = render(o);
  EXPECT_NE(text.find("result.value"), std::string::npos) << text;
}

TEST(Cli, GlobalFlagsAffectComputation) {
  const Outcome shallow = json_run({"circle", "winding", "--symbol", "z - 1001/1000", "--grid-depth", "1"});
  EXPECT_EQ(shallow.report.at("error").at("code"), "SymbolVanishesOnCircle");
  EXPECT_EQ(json_run({"circle", "winding", "--symbol", "z - 1001/1000"}).report.at("result").at("value"), "0");
  const Outcome bounded = json_run({"rep", "induce", "--embedding", "z3_in_circle", "--x", "w1", "--mode-bound", "4"});
  ASSERT_EQ(bounded.exit_code, kExitOk) << render(bounded);
  EXPECT_EQ(bounded.report.at("result").at("value"), "z^-2 + z + z^4");
}

TEST(Gallery, AllEntriesPass) {
  const Json g = run_gallery(std::nullopt);
  EXPECT_EQ(g.at("all_pass"), true);
  for (const auto& e : g.at("entries")) {
    EXPECT_TRUE(e.at("pass").get<bool>()) << e.at("id") << ": expected " << e.at("expected") << ", got "
                                          << e.at("computed");
  }
  EXPECT_EQ(g.at("entries").size(), gallery_entries().size());
}

TEST(Gallery, EntriesAreSortedAndUnique) {
  const Json g = run_gallery(std::nullopt);
  std::string prev;
  for (const auto& e : g.at("entries")) {
    const std::string id = e.at("id");
    EXPECT_LT(prev, id);
    prev = id;
  }
}

TEST(Gallery, ModuleFilterSelectsSubset) {
  const Outcome o = json_run({"gallery", "--module", "circleop"});
  ASSERT_EQ(o.exit_code, kExitOk);
  const Json& r = o.report.at("result");
  EXPECT_GT(r.at("entries").size(), 0u);
  EXPECT_LT(r.at("entries").size(), gallery_entries().size());
  for (const auto& e : r.at("entries")) EXPECT_EQ(e.at("module"), "circleop");
  EXPECT_EQ(json_run({"gallery", "--module", "nope"}).exit_code, kExitDomain);
}

}  // namespace
}  // namespace kindex::cli
