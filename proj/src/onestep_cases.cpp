// The 64-case table ships as data with a pinned checksum; the verifier in
// onestep.cpp is the executable check of this data.
//
// Line format:  index  upA dnA  upB dnB  upC dnC  kind r1 r2 r3 word
// A term is a variable X, Y or Z with an optional "+k" offset. kind is T or
// I; r1 r2 r3 are the beat-pattern codes for the comparisons A:B, B:C, C:A;
// the word names the dominance order (kind T, "CBA" means C>B>A) or the
// cycle (kind I, "ACB" means A>C>B>A).
#include "dicelab/onestep.hpp"

#include <charconv>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dicelab {

namespace {

constexpr const char kTableText[] =
    "# one-step parametric case table, version 1\n"
    "1  X   X+2 X   Z   X+1 Y   T 2 3 3 CBA\n"
    "2  X   X+2 X+1 Z   X+2 Y   I 3 3 1 ACB\n"
    "3  X   X+4 X+1 Z   X+2 Y   T 3 3 2 CBA\n"
    "4  X   Y   X   Y+1 X+1 Z   T 4 3 3 CBA\n"
    "5  X   Y   X+1 X+3 X+1 Z   T 3 2 3 CBA\n"
    "6  X   Y   X+1 Z   X+1 Z+1 T 3 4 3 CBA\n"
    "7  X   Y   X+1 Z   X+2 X   T 3 3 1 CBA\n"
    "8  X   Y   X+1 Z   X+2 Y+1 T 3 3 4 CBA\n"
    "9  X   Y   Y   Y+2 Y   Z   T 1 2 1 ACB\n"
    "10 X   Y   Y   Z   Y   Z+1 T 1 4 1 ACB\n"
    "11 X   Y   Y   Z   Y+1 X   T 1 3 1 CAB\n"
    "12 X   Y   Y   Z   Y+1 X+2 T 1 3 2 ACB\n"
    "13 X   Y   Y   Z   Z   X   I 1 1 1 ABC\n"
    "14 X   Y   Z   X   Z+1 X   T 1 3 1 CBA\n"
    "15 X   Y   Z   X   Z+1 X+2 I 1 3 2 ACB\n"
    "16 X   Y   Z   X   Z+1 Y+1 T 1 3 4 CBA\n"
    "17 X   Y+1 X+1 Y+1 Z   Y   T 3 4 4 BAC\n"
    "18 X   Y+1 X+1 Z   X+2 Y   I 3 3 4 ACB\n"
    "19 X   Y+1 X+1 Z   Z   Y   T 3 1 4 BAC\n"
    "20 X   Y+1 X+1 Z+2 Z   Y   I 3 2 4 ACB\n"
    "21 X   Y+1 Y   X   Y+1 Z   I 1 3 1 ACB\n"
    "22 X   Y+1 Y   X   Z   Y   I 1 1 4 ACB\n"
    "23 X   Y+1 Y   Y+2 Y+1 Z   I 4 3 1 ACB\n"
    "24 X   Y+1 Y   Y+2 Z   Y   I 4 1 4 ACB\n"
    "25 X   Y+1 Y+1 Z   Y+2 Y   T 1 3 4 ACB\n"
    "26 X   Y+1 Y+1 Z   Z   Y   T 1 1 4 ABC\n"
    "27 X   Y+1 Y+1 Z+2 Z   Y   T 1 2 4 ACB\n"
    "28 X   Y+1 Z   X   Z+1 Y   I 1 3 4 ACB\n"
    "29 X   Y+1 Z   Y   Z+1 X   T 4 3 1 CAB\n"
    "30 X   Y+1 Z   Y   Z+1 X+2 T 4 3 2 ACB\n"
    "31 X   Y+1 Z   Y   Z+1 Y   T 4 3 4 ACB\n"
    "32 X   Y+1 Z   Y   Z+1 Y+2 T 4 3 4 CAB\n"
    "33 X   Y+2 X+1 Y   Y   Z   T 3 1 2 BCA\n"
    "34 X   Y+2 X+1 Y   Z   Y+1 I 3 4 4 ACB\n"
    "35 X   Y+2 X+1 Y+2 Y   Z   T 3 2 2 CBA\n"
    "36 X   Y+2 X+1 Z   Y   X+1 T 3 1 2 CBA\n"
    "37 X   Y+2 X+1 Z   Y   Z+1 T 3 4 2 CBA\n"
    "38 X   Y+2 X+1 Z+1 Y   Z   T 3 4 2 BCA\n"
    "39 X   Y+2 Y   X+1 Z   X   T 2 4 1 BCA\n"
    "40 X   Y+2 Y   Y+2 Y   Z   T 2 2 2 CBA\n"
    "41 X   Y+2 Y   Y+2 Y+2 Z   T 2 1 1 BAC\n"
    "42 X   Y+2 Y   Y+2 Z   Y+1 T 2 4 4 BAC\n"
    "43 X   Y+2 Y   Y+4 Y+2 Z   I 2 2 1 ACB\n"
    "44 X   Y+2 Y   Z   Y   Z+1 T 2 4 2 CBA\n"
    "45 X   Y+2 Y   Z   Y+1 X   T 2 3 1 CBA\n"
    "46 X   Y+2 Y   Z   Y+1 X+2 I 2 3 2 ACB\n"
    "47 X   Y+2 Y   Z   Y+1 Y+3 T 2 3 4 CBA\n"
    "48 X   Y+2 Y   Z   Y+2 Y   I 2 1 1 ACB\n"
    "49 X   Y+2 Y   Z   Y+2 Z+1 I 2 4 1 ACB\n"
    "50 X   Y+2 Y   Z   Z   X   T 2 1 1 BCA\n"
    "51 X   Y+2 Y   Z   Z   Y+1 T 2 1 4 BAC\n"
    "52 X   Y+2 Y   Z+1 Y+2 Z   T 2 4 1 BAC\n"
    "53 X   Y+2 Y   Z+2 Z   X   T 2 2 1 CBA\n"
    "54 X   Y+2 Y   Z+2 Z   X+2 I 2 2 2 ACB\n"
    "55 X   Y+2 Y   Z+2 Z   Y+1 I 2 2 4 ACB\n"
    "56 X   Y+2 Y+2 Y   Z   Y+1 T 1 4 4 ACB\n"
    "57 X   Y+3 Y   X   Y+1 Z   T 1 3 2 CBA\n"
    "58 X   Y+3 Y   X   Z   Y+2 T 1 2 4 BAC\n"
    "59 X   Y+3 Y   X+2 Y+1 Z   T 2 3 2 CAB\n"
    "60 X   Y+3 Y   X+2 Z   Y+2 T 2 2 4 ABC\n"
    "61 X   Y+3 Y   Y+2 Y+1 Z   T 4 3 2 CAB\n"
    "62 X   Y+3 Y   Y+2 Z   Y+2 T 4 2 4 ABC\n"
    "63 X   Y+3 Y   Y+4 Y+1 Z   T 4 3 2 CBA\n"
    "64 X   Y+3 Y   Y+4 Z   Y+2 T 4 2 4 BAC\n";

// pinned over kTableText; any edit to the table must update this
constexpr std::uint32_t kTableCrc = 0x68609793;

CaseTerm parse_term(std::string_view tok, int line_no) {
  if (tok.empty()) throw std::invalid_argument("case table: empty term");
  CaseVar var;
  switch (tok[0]) {
    case 'X': var = CaseVar::X; break;
    case 'Y': var = CaseVar::Y; break;
    case 'Z': var = CaseVar::Z; break;
    default:
      throw std::invalid_argument("case table line " + std::to_string(line_no) +
                                  ": bad variable in term '" + std::string(tok) + "'");
  }
  int offset = 0;
  if (tok.size() > 1) {
    if (tok[1] != '+')
      throw std::invalid_argument("case table line " + std::to_string(line_no) +
                                  ": bad term '" + std::string(tok) + "'");
    auto rest = tok.substr(2);
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), offset);
    if (ec != std::errc() || p != rest.data() + rest.size() || offset < 0 || offset > 4)
      throw std::invalid_argument("case table line " + std::to_string(line_no) +
                                  ": bad offset in term '" + std::string(tok) + "'");
  }
  return CaseTerm{var, offset};
}

}  // namespace

std::uint32_t crc32(std::string_view data) {
  std::uint32_t crc = ~0u;
  for (unsigned char byte : data) {
    crc ^= byte;
    for (int k = 0; k < 8; ++k) crc = (crc >> 1) ^ (0xedb88320u & (~(crc & 1u) + 1u));
  }
  return ~crc;
}

std::string_view case_table_text() { return kTableText; }

std::uint32_t case_table_crc() { return crc32(kTableText); }

std::vector<ParametricCase> parse_case_table(std::string_view text) {
  std::vector<ParametricCase> cases;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.size() != 12)
      throw std::invalid_argument("case table line " + std::to_string(line_no) +
                                  ": expected 12 fields, got " + std::to_string(tok.size()));
    ParametricCase c;
    c.index = std::stoi(tok[0]);
    for (int d = 0; d < 3; ++d)
      c.dice[static_cast<std::size_t>(d)] =
          CaseDieSpec{parse_term(tok[1 + 2 * static_cast<std::size_t>(d)], line_no),
                      parse_term(tok[2 + 2 * static_cast<std::size_t>(d)], line_no)};
    if (tok[7] == "T")
      c.intransitive = false;
    else if (tok[7] == "I")
      c.intransitive = true;
    else
      throw std::invalid_argument("case table line " + std::to_string(line_no) +
                                  ": kind must be T or I");
    for (int r = 0; r < 3; ++r) {
      const int code = std::stoi(tok[8 + static_cast<std::size_t>(r)]);
      if (code < 1 || code > 4)
        throw std::invalid_argument("case table line " + std::to_string(line_no) +
                                    ": reason codes are 1..4");
      c.reasons[static_cast<std::size_t>(r)] = code;
    }
    const std::string& word = tok[11];
    if (word.size() != 3)
      throw std::invalid_argument("case table line " + std::to_string(line_no) +
                                  ": order word must have three letters");
    bool seen[3] = {false, false, false};
    for (int i = 0; i < 3; ++i) {
      const char ch = word[static_cast<std::size_t>(i)];
      if (ch < 'A' || ch > 'C')
        throw std::invalid_argument("case table line " + std::to_string(line_no) +
                                    ": order word letters are A, B, C");
      c.order[static_cast<std::size_t>(i)] = ch - 'A';
      seen[ch - 'A'] = true;
    }
    if (!(seen[0] && seen[1] && seen[2]))
      throw std::invalid_argument("case table line " + std::to_string(line_no) +
                                  ": order word must be a permutation of ABC");
    cases.push_back(c);
  }
  if (cases.size() != 64)
    throw std::invalid_argument("case table: expected 64 cases, got " +
                                std::to_string(cases.size()));
  for (std::size_t i = 0; i < cases.size(); ++i)
    if (cases[i].index != static_cast<int>(i) + 1)
      throw std::invalid_argument("case table: indices must run 1..64 in order");
  // the two cyclically self-similar triples carry weight 1/3
  for (auto& c : cases) c.weight_thirds = (c.index == 13 || c.index == 54) ? 1 : 3;
  return cases;
}

const std::vector<ParametricCase>& case_table() {
  static std::once_flag once;
  static std::vector<ParametricCase> table;
  std::call_once(once, [] {
    if (case_table_crc() != kTableCrc)
      throw std::runtime_error("one-step case table is corrupted (crc mismatch)");
    table = parse_case_table(kTableText);
  });
  return table;
}

std::array<int, 3> ParametricCase::expected_winners() const {
  // beats[i][j]: die i beats die j
  bool beats[3][3] = {};
  const int w0 = order[0], w1 = order[1], w2 = order[2];
  if (intransitive) {
    beats[w0][w1] = beats[w1][w2] = beats[w2][w0] = true;
  } else {
    beats[w0][w1] = beats[w0][w2] = beats[w1][w2] = true;
  }
  constexpr int pair_first[3] = {0, 1, 2};
  constexpr int pair_second[3] = {1, 2, 0};
  std::array<int, 3> winners{};
  for (int p = 0; p < 3; ++p) {
    const int a = pair_first[p], b = pair_second[p];
    winners[static_cast<std::size_t>(p)] = beats[a][b] ? a : b;
  }
  return winners;
}

}  // namespace dicelab
