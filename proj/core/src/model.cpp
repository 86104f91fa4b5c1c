#include "camcom/model.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <unordered_set>

namespace camcom {

Roster::Roster(std::vector<MemberState> states) : states_(std::move(states)) {
  if (states_.empty()) throw DomainError("roster must contain at least one state");
  for (const auto& s : states_) {
    if (s.code.empty()) throw ParseError("state code must not be empty");
    if (s.population < 1)
      throw ParseError("state '" + s.code + "' has non-positive population");
  }
  std::sort(states_.begin(), states_.end(), [](const MemberState& a, const MemberState& b) {
    if (a.population != b.population) return a.population > b.population;
    return a.code < b.code;
  });
  std::unordered_set<std::string> seen;
  for (const auto& s : states_) {
    if (!seen.insert(s.code).second)
      throw ParseError("duplicate state code '" + s.code + "'");
    total_population_ += s.population;
  }
}

SeatVector::SeatVector(std::vector<int> seats) : seats_(std::move(seats)) {
  for (int s : seats_) {
    if (s < 0) throw DomainError("seat counts must be nonnegative");
    total_ += s;
  }
}

void ApportionmentProblem::validate() const {
  const auto n = static_cast<long long>(roster.size());
  if (house_size < 1) throw DomainError("house size must be positive");
  if (base_seats < 0) throw DomainError("base seats must be nonnegative");
  if (cap < base_seats + 1)
    throw DomainError("cap must leave room above the base allocation");
  if (house_size < n * (base_seats + 1))
    throw DomainError("house size too small: every state needs base+1 seats");
}

namespace {

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t parse_population(const std::string& text, std::size_t lineno) {
  if (text.empty())
    throw ParseError("line " + std::to_string(lineno) + ": empty population");
  for (char c : text) {
    if (c < '0' || c > '9')
      throw ParseError("line " + std::to_string(lineno) +
                       ": population must be a plain digit string, got '" + text + "'");
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("line " + std::to_string(lineno) + ": population out of range");
  if (value < 1)
    throw ParseError("line " + std::to_string(lineno) + ": population must be positive");
  return value;
}

}  // namespace

Roster load_roster(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty roster input");
  strip_cr(line);
  if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
  if (line != "code,name,population")
    throw ParseError("expected header 'code,name,population', got '" + line + "'");

  std::vector<MemberState> states;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != 3)
      throw ParseError("line " + std::to_string(lineno) + ": expected 3 fields, got " +
                       std::to_string(fields.size()));
    if (fields[0].empty())
      throw ParseError("line " + std::to_string(lineno) + ": empty state code");
    states.push_back({fields[0], fields[1], parse_population(fields[2], lineno)});
  }
  if (states.empty()) throw ParseError("roster has no states");
  return Roster(std::move(states));
}

Roster load_roster_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open roster file '" + path + "'");
  return load_roster(in);
}

Roster builtin_eu27() {
  static const MemberState kStates[] = {
      {"DE", "Germany", 81802257},        {"FR", "France", 64714074},
      {"UK", "United Kingdom", 62008048}, {"IT", "Italy", 60340328},
      {"ES", "Spain", 45989016},          {"PL", "Poland", 38167329},
      {"RO", "Romania", 21462186},        {"NL", "Netherlands", 16574989},
      {"EL", "Greece", 11305118},         {"BE", "Belgium", 10839905},
      {"PT", "Portugal", 10637713},       {"CZ", "Czech Republic", 10506813},
      {"HU", "Hungary", 10014324},        {"SE", "Sweden", 9340682},
      {"AT", "Austria", 8375290},         {"BG", "Bulgaria", 7563710},
      {"DK", "Denmark", 5534738},         {"SK", "Slovakia", 5424925},
      {"FI", "Finland", 5351427},         {"IE", "Ireland", 4467854},
      {"LT", "Lithuania", 3329039},       {"LV", "Latvia", 2248374},
      {"SI", "Slovenia", 2046976},        {"EE", "Estonia", 1340127},
      {"CY", "Cyprus", 803147},           {"LU", "Luxembourg", 502066},
      {"MT", "Malta", 412970},
  };
  return Roster(std::vector<MemberState>(std::begin(kStates), std::end(kStates)));
}

}  // namespace camcom
