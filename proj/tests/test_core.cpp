#include <doctest.h>

#include <set>

#include "stancelab/core/csv.hpp"
#include "stancelab/core/error.hpp"
#include "stancelab/core/io.hpp"
#include "stancelab/core/log.hpp"
#include "stancelab/core/rng.hpp"
#include "stancelab/core/strings.hpp"
#include "support/helpers.hpp"

using namespace stancelab;

TEST_SUITE("core") {

TEST_CASE("sha256 known vectors") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  // multi-block input
  CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("rng determinism and uniform bounds") {
  Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) {
    uint64_t n = 1 + i;
    CHECK(a.uniform(n) == b.uniform(n));
  }
  Rng c(7);
  for (int i = 0; i < 1000; ++i) CHECK(c.uniform(13) < 13);
  CHECK(derive_seed(1, "x") != derive_seed(1, "y"));
  CHECK(derive_seed(1, "x") != derive_seed(2, "x"));
  CHECK(derive_seed(1, "x") == derive_seed(1, "x"));
}

TEST_CASE("rng shuffle deterministic") {
  std::vector<int> v1{1, 2, 3, 4, 5, 6, 7, 8}, v2 = v1;
  Rng a(99), b(99);
  a.shuffle(v1);
  b.shuffle(v2);
  CHECK(v1 == v2);
}

TEST_CASE("sample without replacement distinct") {
  Rng r(5);
  auto s = r.sample_without_replacement(20, 10);
  std::set<size_t> uniq(s.begin(), s.end());
  CHECK(uniq.size() == 10);
  for (size_t x : s) CHECK(x < 20);
  CHECK_THROWS_AS((void)r.sample_without_replacement(3, 4), Error);
}

TEST_CASE("string helpers") {
  CHECK(trim("  hi \t\n") == "hi");
  CHECK(to_lower("HeLLo") == "hello");
  CHECK(word_count(" a  bb\tccc ") == 3);
  CHECK(word_count("") == 0);
  CHECK(is_blank("  \t "));
  CHECK(!is_blank(" a "));
  CHECK(split("a,b,,c", ',') == std::vector<std::string>{"a", "b", "", "c"});
  CHECK(fmt_double(1.0 / 3.0, 4) == "0.3333");
  CHECK(replace_all("a-b-c", "-", "+") == "a+b+c");
}

TEST_CASE("csv writer/parser round trip") {
  CsvWriter w({"id", "text", "n"});
  w.add_row({"1", "plain", "2"});
  w.add_row({"2", "has,comma and \"quote\"", "3"});
  w.add_row({"3", "multi\nline", "4"});
  auto rows = parse_csv(w.str());
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"id", "text", "n"});
  CHECK(rows[2][1] == "has,comma and \"quote\"");
  CHECK(rows[3][1] == "multi\nline");
  CHECK_THROWS_AS(w.add_row({"too", "short"}), Error);
}

TEST_CASE("log capture") {
  LogCapture cap;
  log_warn("something odd happened");
  CHECK(cap.contains(LogLevel::warn, "odd"));
  CHECK(!cap.contains(LogLevel::error, "odd"));
}

TEST_CASE("write_file then read_file round trip") {
  testsupport::TempDir tmp("core");
  auto p = tmp.path() / "nested" / "file.txt";
  write_file(p, "payload\n");
  CHECK(read_file(p) == "payload\n");
  CHECK(sha256_file(p) == sha256_hex("payload\n"));
}

}  // TEST_SUITE
