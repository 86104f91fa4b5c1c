#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "camcom/model.hpp"
#include "table_data.hpp"

using namespace camcom;

TEST_CASE("builtin EU27 matches the published dataset") {
  Roster eu = builtin_eu27();
  REQUIRE(eu.size() == 27);
  CHECK(eu.total_population() == 501103425);
  CHECK(eu[0].code == "DE");
  CHECK(eu[2].code == "UK");
  CHECK(eu[2].population == 62008048);
  CHECK(eu[26].code == "MT");
  for (std::size_t i = 0; i < eu.size(); ++i)
    CHECK(eu[i].population == golden::kPopulations[i]);
  for (std::size_t i = 0; i + 1 < eu.size(); ++i)
    CHECK(eu[i].population > eu[i + 1].population);
}

TEST_CASE("load_roster sorts by population regardless of input order") {
  const std::string forward =
      "code,name,population\nAA,Alpha,3000\nBB,Beta,2000\nCC,Gamma,1000\n";
  const std::string backward =
      "code,name,population\nCC,Gamma,1000\nBB,Beta,2000\nAA,Alpha,3000\n";
  std::istringstream a(forward), b(backward);
  Roster ra = load_roster(a);
  Roster rb = load_roster(b);
  CHECK(ra == rb);
  CHECK(ra[0].code == "AA");
  CHECK(ra[2].code == "CC");
}

TEST_CASE("load_roster accepts a single row") {
  std::istringstream in("code,name,population\nXX,X,1000\n");
  Roster r = load_roster(in);
  REQUIRE(r.size() == 1);
  CHECK(r[0].population == 1000);
}

TEST_CASE("population ties are ordered by code") {
  Roster r(std::vector<MemberState>{{"ZZ", "Z", 500}, {"AA", "A", 500}, {"MM", "M", 900}});
  CHECK(r[0].code == "MM");
  CHECK(r[1].code == "AA");
  CHECK(r[2].code == "ZZ");
}

TEST_CASE("load_roster rejects malformed input") {
  auto load = [](const std::string& text) {
    std::istringstream in(text);
    return load_roster(in);
  };
  CHECK_THROWS_AS(load(""), ParseError);
  CHECK_THROWS_AS(load("code,name,population\n"), ParseError);
  CHECK_THROWS_AS(load("wrong,header,line\nAA,A,1\n"), ParseError);
  CHECK_THROWS_AS(load("code,name,population\nAA,A,1\nAA,B,2\n"), ParseError);
  CHECK_THROWS_AS(load("code,name,population\nAA,A,0\n"), ParseError);
  CHECK_THROWS_AS(load("code,name,population\nAA,A,-5\n"), ParseError);
  CHECK_THROWS_AS(load("code,name,population\nAA,A,12x3\n"), ParseError);
  CHECK_THROWS_AS(load("code,name,population\nAA,A,1 000\n"), ParseError);
  CHECK_THROWS_AS(load("code,name,population\nAA,A\n"), ParseError);
  CHECK_THROWS_AS(load("code,name,population\n,A,10\n"), ParseError);
}

TEST_CASE("roster files load with CRLF line endings and a BOM") {
  std::istringstream in("\xEF\xBB\xBF" "code,name,population\r\nAA,Alpha,200\r\nBB,Beta,100\r\n");
  Roster r = load_roster(in);
  REQUIRE(r.size() == 2);
  CHECK(r[0].population == 200);
}

TEST_CASE("load_roster_file reports unreadable paths") {
  CHECK_THROWS_AS(load_roster_file("/does/not/exist.csv"), ParseError);
}

TEST_CASE("roster sort preserves the population multiset") {
  std::mt19937_64 rng(7);
  std::vector<MemberState> states;
  std::vector<std::int64_t> pops;
  for (int i = 0; i < 40; ++i) {
    std::int64_t p = 1 + static_cast<std::int64_t>(rng() % 1000000);
    pops.push_back(p);
    states.push_back({"S" + std::to_string(i), "s", p});
  }
  Roster r(states);
  std::vector<std::int64_t> sorted_pops;
  for (const auto& s : r.states()) sorted_pops.push_back(s.population);
  std::sort(pops.begin(), pops.end(), std::greater<>());
  CHECK(pops == sorted_pops);
}

TEST_CASE("problem validation") {
  Roster eu = builtin_eu27();
  ApportionmentProblem ok{eu};
  CHECK_NOTHROW(ok.validate());

  ApportionmentProblem tight{eu, 27 * 6 - 1};
  CHECK_THROWS_AS(tight.validate(), DomainError);

  ApportionmentProblem low_cap{eu, 751, 5, 5};
  CHECK_THROWS_AS(low_cap.validate(), DomainError);

  ApportionmentProblem exact{eu, 27 * 6};
  CHECK_NOTHROW(exact.validate());
}

TEST_CASE("seat vector totals") {
  SeatVector v(std::vector<int>{3, 1, 4});
  CHECK(v.total() == 8);
  CHECK(v[2] == 4);
  CHECK_THROWS_AS(SeatVector(std::vector<int>{1, -1}), DomainError);
}
