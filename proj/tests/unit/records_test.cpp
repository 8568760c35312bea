#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "arcsys/error.hpp"
#include "arcsys/render.hpp"
#include "helpers.hpp"

using namespace arcsys;
using namespace arcsys::test;

namespace {
std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}
}

TEST_SUITE("records") {

TEST_CASE("json round trip") {
  const auto& refs = references();
  REQUIRE(refs.size() == 15);
  std::string text = systems_to_json(refs);
  auto back = systems_from_json(text);
  REQUIRE(back.size() == refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) {
    CHECK(back[i].system == refs[i].system);
    CHECK(back[i].label == refs[i].label);
    CHECK(back[i].name == refs[i].name);
    CHECK(back[i].tags == refs[i].tags);
  }
  CHECK(systems_to_json(back) == text);
}

TEST_CASE("empty documents") {
  CHECK(systems_from_json("").empty());
  CHECK(systems_from_json("  \n").empty());
  CHECK(systems_from_json("[]").empty());
}

TEST_CASE("schema violations") {
  std::string text = systems_to_json({{"x", ArcSystem({seg(A, B, 1, 0)}, 0), "", {}}});
  CHECK_NOTHROW(systems_from_json(text));
  auto tampered = text;
  tampered.replace(tampered.find("\"schema_version\": 1"), 19, "\"schema_version\": 9");
  CHECK_THROWS_AS(systems_from_json(tampered), SchemaError);
  tampered = text;
  tampered.replace(tampered.find("\"j_size\": 1"), 11, "\"j_size\": 2");
  CHECK_THROWS_AS(systems_from_json(tampered), SchemaError);
  CHECK_THROWS_AS(systems_from_json("{"), SchemaError);
  CHECK_THROWS_AS(systems_from_json("[{\"schema_version\": 1}]"), SchemaError);
}

TEST_CASE("atomic write") {
  auto dir = std::filesystem::temp_directory_path() / "arcsys_records_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "out.json").string();
  write_text_file_atomic(path, "first");
  write_text_file_atomic(path, "second");
  CHECK(read_text_file(path) == "second");
  std::filesystem::remove_all(dir);
  CHECK_THROWS(read_text_file(path));
}

TEST_CASE("render") {
  std::string j0 = render_svg({{"J_0", reference("J_0")}}, View::pillowcase);
  CHECK(occurrences(j0, "class=\"arc\"") == 12);
  CHECK(occurrences(j0, "j-arc") == 0);
  std::string j3 = render_svg({{"J_3a", reference("J_3a")}}, View::pillowcase);
  CHECK(occurrences(j3, "class=\"arc j-arc\"") == 3);
  CHECK(occurrences(j3, "class=\"arc\"") == 9);
  for (View v : {View::pillowcase, View::disk}) {
    std::string empty = render_svg({}, v);
    CHECK(empty.rfind("<?xml", 0) == 0);
    CHECK(occurrences(empty, "class=\"puncture\"") == 4);
    CHECK(occurrences(empty, "<path") == 0);
    CHECK(empty.find("</svg>") != std::string::npos);
  }
  CHECK(render_svg({{"a<b & c", reference("J_0")}}, View::disk).find("a&lt;b &amp; c") != std::string::npos);
}

}
